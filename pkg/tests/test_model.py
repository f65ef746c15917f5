import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobi_bands.bands import estimate_spectrum
from jacobi_bands.errors import NonFiniteEntry, ShapeMismatch, UnsupportedPeriod, ValidationError
from jacobi_bands.model import (
    OperatorClass,
    PeriodicCoefficients,
    load_coefficients,
    new_periodic_coefficients,
    save_coefficients,
    schroedinger_potential,
    shift_entries,
)

from conftest import coefficient_sets


def test_checkerboard_is_schroedinger():
    ones = np.ones((2, 2))
    x = new_periodic_coefficients(2, 2, ones, np.zeros((2, 2)), [[3, -3], [-3, 3]], ones)
    assert x.classify() is OperatorClass.SCHROEDINGER
    assert x.p == 4


def test_zero_operator_is_partial_difference():
    z = np.zeros((2, 2))
    assert new_periodic_coefficients(2, 2, z, z, z, z).classify() is OperatorClass.PARTIAL_DIFFERENCE


def test_nonzero_alpha_is_general_class():
    z = np.zeros((2, 3))
    alpha = z.astype(complex)
    alpha[1, 2] = 0.5j
    x = new_periodic_coefficients(2, 3, z, alpha, z, z)
    assert x.classify() is OperatorClass.JACOBI_BLOCK_JACOBI


@pytest.mark.parametrize("p1,p2", [(2, 1), (1, 2), (0, 3)])
def test_period_one_rejected(p1, p2):
    z = np.zeros((max(p1, 1), max(p2, 1)))
    with pytest.raises(UnsupportedPeriod):
        new_periodic_coefficients(p1, p2, z, z, z, z)


def test_shape_mismatch():
    z = np.zeros((2, 2))
    with pytest.raises(ShapeMismatch):
        new_periodic_coefficients(2, 3, z, z, z, z)


def test_non_finite_entry():
    z = np.zeros((2, 2))
    bad = z.copy()
    bad[0, 1] = np.nan
    with pytest.raises(NonFiniteEntry):
        new_periodic_coefficients(2, 2, z, z, bad, z)


def test_complex_diagonal_rejected():
    z = np.zeros((2, 2))
    with pytest.raises(ValidationError):
        new_periodic_coefficients(2, 2, z + 1j, z, z, z)


def test_arrays_are_read_only():
    x = schroedinger_potential(2, 2, np.zeros((2, 2)))
    with pytest.raises(ValueError):
        x.c[0, 0] = 1.0


def test_schroedinger_free_laplacian():
    x = schroedinger_potential(2, 2, np.zeros((2, 2)))
    assert np.all(x.a == 1) and np.all(x.b == 1) and np.all(x.alpha == 0) and np.all(x.c == 0)


def test_schroedinger_checkerboard_and_staircase():
    i, j = np.meshgrid(np.arange(1, 3), np.arange(1, 3), indexing="ij")
    x = schroedinger_potential(2, 2, (-1.0) ** (i + j) * 3)
    assert np.array_equal(x.c, [[3, -3], [-3, 3]])
    i, j = np.meshgrid(np.arange(1, 4), np.arange(1, 4), indexing="ij")
    st = schroedinger_potential(3, 3, ((i - 1) * 3 + j) / 0.1)
    assert np.allclose(st.c, [[10, 20, 30], [40, 50, 60], [70, 80, 90]])
    assert st.classify() is OperatorClass.SCHROEDINGER


def test_shift_identity_and_full_period(rng):
    from jacobi_bands.model import random_coefficients

    x = random_coefficients(3, 4, rng)
    assert shift_entries(x, 0, 0) == x
    assert shift_entries(x, 3, 4) == x
    assert shift_entries(x, -6, 8) == x


def test_shift_index_map(rng):
    from jacobi_bands.model import random_coefficients

    x = random_coefficients(3, 4, rng)
    y = shift_entries(x, 1, 2)
    for q in range(3):
        for r in range(4):
            assert y.alpha[q, r] == x.alpha[(q + 1) % 3, (r + 2) % 4]
            assert y.c[q, r] == x.c[(q + 1) % 3, (r + 2) % 4]


def test_checkerboard_shift_keeps_spectrum():
    x = schroedinger_potential(2, 2, [[3, -3], [-3, 3]])
    y = shift_entries(x, 1, 0)
    assert np.array_equal(y.c, [[-3, 3], [3, -3]])
    ex, ey = estimate_spectrum(x, 32), estimate_spectrum(y, 32)
    assert np.allclose(ex.components, ey.components, atol=1e-12)


@settings(max_examples=50, deadline=None)
@given(coefficient_sets(), st.integers(-7, 7), st.integers(-7, 7))
def test_shift_inverse(x, m, n):
    assert shift_entries(shift_entries(x, m, n), -m, -n) == x


@settings(max_examples=50, deadline=None)
@given(coefficient_sets())
def test_json_round_trip(x):
    again = PeriodicCoefficients.from_dict(json.loads(json.dumps(x.to_dict())))
    assert again == x


def test_file_round_trip_and_shorthand(tmp_path, rng):
    from jacobi_bands.model import random_coefficients

    x = random_coefficients(2, 3, rng)
    path = tmp_path / "model.json"
    save_coefficients(x, path)
    assert load_coefficients(path) == x

    short = tmp_path / "schr.json"
    short.write_text(json.dumps({"p1": 2, "p2": 2, "schroedinger": True, "c": [[1, 2], [3, 4]]}))
    y = load_coefficients(short)
    assert y.classify() is OperatorClass.SCHROEDINGER
    assert np.array_equal(y.c, [[1, 2], [3, 4]])


def test_missing_field(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"p1": 2, "p2": 2, "c": [[0, 0], [0, 0]]}))
    with pytest.raises(ValidationError):
        load_coefficients(path)
