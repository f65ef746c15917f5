import csv

import numpy as np
import pytest
from hypothesis import given, settings

from jacobi_bands.bands import (
    BandInterval,
    band_intervals,
    enclosure_padding,
    estimate_spectrum,
    lipschitz_constants,
    refine_spectrum,
    sample_bands,
    spectrum_from_bands,
    write_bands_csv,
)
from jacobi_bands.cases import checkerboard_reference, gen_example_blockdiag, gen_example_staircase
from jacobi_bands.errors import BudgetExceeded, ValidationError
from jacobi_bands.model import new_periodic_coefficients, random_coefficients, schroedinger_potential, shift_entries
from jacobi_bands.oracle import oracle_spectrum
from jacobi_bands.symbol import TWO_PI, build_symbol

from conftest import coefficient_sets

CHECKER = schroedinger_potential(2, 2, [[3, -3], [-3, 3]])


def flat_model(rng):
    z = np.zeros((2, 3))
    return new_periodic_coefficients(2, 3, z, z, rng.normal(size=(2, 3)), z)


def test_free_laplacian_origin_node():
    grid = sample_bands(schroedinger_potential(2, 2, np.zeros((2, 2))), 4, 4)
    assert np.allclose(grid.lam[0, 0], [4, 0, 0, -4], atol=1e-12)


def test_flat_bands(rng):
    x = flat_model(rng)
    grid = sample_bands(x, 5, 3)
    expected = np.sort(x.c.ravel())[::-1]
    assert np.allclose(grid.lam, expected, atol=1e-14)
    for iv in band_intervals(grid):
        assert iv.l == pytest.approx(expected[iv.index], abs=1e-14)
        assert iv.r == pytest.approx(expected[iv.index], abs=1e-14)


def test_checkerboard_nodes_match_closed_form():
    grid = sample_bands(CHECKER, 12, 10)
    x1, x2 = np.meshgrid(*grid.momenta(), indexing="ij")
    assert np.allclose(grid.lam, checkerboard_reference(3.0, (x1, x2)), rtol=0, atol=1e-10)


def test_grid_is_descending_and_deterministic(rng):
    x = random_coefficients(3, 3, rng)
    g1 = sample_bands(x, 8, 6)
    assert np.all(np.diff(g1.lam, axis=-1) <= 0)
    assert np.array_equal(g1.lam, sample_bands(x, 8, 6).lam)
    s = build_symbol(x, (TWO_PI * 5 / 8, TWO_PI * 2 / 6))
    assert np.allclose(g1.lam[5, 2], np.linalg.eigvalsh(s)[::-1], atol=1e-12)


def test_checkerboard_band_intervals():
    ivs = band_intervals(sample_bands(CHECKER, 256, 256))
    s13 = np.sqrt(13)
    expected = [(3, 5), (3, s13), (-s13, -3), (-5, -3)]
    for iv, (l, r) in zip(ivs, expected):
        assert iv.l == pytest.approx(l, abs=1e-3)
        assert iv.r == pytest.approx(r, abs=1e-3)


def test_staircase_bands_in_windows():
    ivs = band_intervals(sample_bands(gen_example_staircase(2, 2, 0.1), 64, 64))
    for iv in ivs:
        k = 4 - iv.index  # ascending level number
        assert 10 * k - 4 <= iv.l <= iv.r <= 10 * k + 4


def test_merge_checkerboard_bands():
    s13 = np.sqrt(13)
    ivs = [BandInterval(0, 3, 5), BandInterval(1, 3, s13),
           BandInterval(2, -s13, -3), BandInterval(3, -5, -3)]
    est = spectrum_from_bands(ivs)
    assert est.components == [(-5, -3), (3, 5)]
    assert est.measure == pytest.approx(4)
    assert est.gaps == [(-3, 3)] and est.gap_count == 1


def test_merge_single_interval():
    est = spectrum_from_bands([BandInterval(0, 0.0, 1.0)])
    assert est.components == [(0.0, 1.0)] and est.measure == 1.0 and est.gap_count == 0


def test_merge_respects_gap_tol():
    ivs = [BandInterval(0, 1.05, 2.0), BandInterval(1, 0.0, 1.0)]
    assert spectrum_from_bands(ivs, gap_tol=0.1).gap_count == 0
    assert spectrum_from_bands(ivs, gap_tol=0.01).gap_count == 1
    with pytest.raises(ValidationError):
        spectrum_from_bands([])


def test_blockdiag_touching_bands_merge():
    est = estimate_spectrum(gen_example_blockdiag(2), 64)
    assert len(est.components) == 1
    assert est.components[0] == pytest.approx((2, 10), abs=1e-12)
    assert est.measure == pytest.approx(8, abs=1e-12)


def test_refine_checkerboard():
    est = refine_spectrum(CHECKER, 1e-4)
    flat = np.array(est.components).ravel()
    assert np.allclose(flat, [-5, -3, 3, 5], atol=1e-4)


def test_refine_flat_converges_after_one_doubling(rng):
    est = refine_spectrum(flat_model(rng), 1e-6)
    assert est.grid == (64, 64)


def test_refine_free_laplacian_against_supercell():
    free = schroedinger_potential(2, 2, np.zeros((2, 2)))
    big = oracle_spectrum(free, 16, 16)
    assert big.max() == pytest.approx(4, abs=1e-12) and big.min() == pytest.approx(-4, abs=1e-12)
    est = refine_spectrum(free, 1e-6)
    assert est.components == [pytest.approx((-4, 4), abs=1e-9)]
    assert est.measure == pytest.approx(8, abs=1e-9)


def test_refine_budget(rng):
    x = random_coefficients(3, 3, rng)
    with pytest.raises(BudgetExceeded) as info:
        refine_spectrum(x, 1e-15, start=8, cap=32)
    assert info.value.estimate.grid == (32, 32)
    with pytest.raises(ValidationError):
        refine_spectrum(x, 0.0)


@settings(max_examples=25, deadline=None)
@given(coefficient_sets(max_period=4))
def test_gap_count_bounded(x):
    est = estimate_spectrum(x, 16)
    assert est.gap_count <= x.p - 1
    assert est.gap_count == len(est.components) - 1
    assert est.measure == pytest.approx(sum(r - l for l, r in est.components))


@settings(max_examples=20, deadline=None)
@given(coefficient_sets(max_period=4))
def test_monotone_refinement(x):
    coarse = band_intervals(sample_bands(x, 8, 6))
    fine = band_intervals(sample_bands(x, 16, 18))
    for c, f in zip(coarse, fine):
        assert f.l <= c.l + 1e-13 and f.r >= c.r - 1e-13


@pytest.mark.parametrize("m,n", [(1, 0), (0, 1), (2, 3), (-1, 5)])
def test_shift_invariance(rng, m, n):
    x = random_coefficients(3, 4, rng)
    a = band_intervals(sample_bands(x, 16, 16))
    b = band_intervals(sample_bands(shift_entries(x, m, n), 16, 16))
    for u, v in zip(a, b):
        assert u.l == pytest.approx(v.l, abs=1e-9) and u.r == pytest.approx(v.r, abs=1e-9)


def test_checkerboard_symmetric():
    lam = sample_bands(CHECKER, 32, 32).lam
    assert np.allclose(lam, -lam[..., ::-1], atol=1e-10)


def test_lipschitz_constants_bound_derivatives(rng):
    for p1, p2 in [(2, 2), (2, 3), (3, 2), (4, 5)]:
        x = random_coefficients(p1, p2, rng)
        l1, l2 = lipschitz_constants(x)
        h = 1e-6
        for x1, x2 in rng.uniform(0, TWO_PI, (5, 2)):
            d1 = (build_symbol(x, (x1 + h, x2)) - build_symbol(x, (x1 - h, x2))) / (2 * h)
            d2 = (build_symbol(x, (x1, x2 + h)) - build_symbol(x, (x1, x2 - h))) / (2 * h)
            assert np.linalg.norm(d1, 2) <= l1 * (1 + 1e-6)
            assert np.linalg.norm(d2, 2) <= l2 * (1 + 1e-6)


def test_enclosure_contains_dense_samples(rng):
    x = random_coefficients(2, 3, rng)
    outer = band_intervals(sample_bands(x, 8, 8), enclosure_padding(x, 8, 8))
    dense = band_intervals(sample_bands(x, 128, 128))
    for o, d in zip(outer, dense):
        assert o.l <= d.l and d.r <= o.r


def test_csv_export(tmp_path):
    grid = sample_bands(CHECKER, 3, 2)
    path = tmp_path / "bands.csv"
    write_bands_csv(grid, path)
    rows = list(csv.reader(open(path)))
    assert rows[0] == ["j", "k", "x1", "x2", "lambda_1", "lambda_2", "lambda_3", "lambda_4"]
    assert len(rows) == 1 + 6
    j, k = int(rows[3][0]), int(rows[3][1])
    assert (j, k) == (1, 0)
    assert float(rows[3][2]) == TWO_PI / 3
    assert [float(v) for v in rows[3][4:]] == list(grid.lam[1, 0])
