"""Model generators with closed-form spectra.

* ``blockdiag``      no inter-cell coupling, shifted 1D Laplacians per row
* ``diagpotential``  unit coupling over a column-wise staircase potential
* ``checkerboard``   (2,2) Schroedinger operator with potential +-c
* ``twoparam``       (2,2) Schroedinger family with potentials c1, c2
* ``staircase``      Schroedinger operator with well separated levels k/eps

The first two saturate ``bound_theorem``; the last one has the largest
possible number of gaps, ``p - 1``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .errors import ValidationError
from .model import OperatorClass, new_periodic_coefficients, schroedinger_potential
from .symbol import build_block_B, build_symbol, phase

__all__ = [
    "TwoParamGapReport",
    "gen_example_blockdiag",
    "gen_example_diagpotential",
    "gen_checkerboard",
    "checkerboard_reference",
    "checkerboard_spectrum",
    "gen_two_param",
    "two_param_z",
    "two_param_reference",
    "gen_example_staircase",
    "schur_charpoly_check",
    "EXAMPLES",
    "generate_example",
]


def tau(x):
    return 1.0 + phase(x)


def gen_example_blockdiag(p1, p2=2):
    """``A_q = 0`` and ``B_q`` the free 1D Jacobi matrix shifted by ``4(q+1)``.

    The row spectra ``[4q+2, 4q+6]`` touch end to end, so the spectrum is
    ``[2, 2 + 4 p1]``.
    """
    shape = (p1, p2)
    c = 4.0 * (np.arange(p1)[:, None] + 1) * np.ones(shape)
    return new_periodic_coefficients(p1, p2, np.zeros(shape), np.zeros(shape), c, np.ones(shape))


def gen_example_diagpotential(p2, p1=2):
    """``A_q = I`` and diagonal ``B`` with entries ``4(r+1)``; spectrum ``[2, 2 + 4 p2]``."""
    shape = (p1, p2)
    c = 4.0 * (np.arange(p2)[None, :] + 1) * np.ones(shape)
    return new_periodic_coefficients(p1, p2, np.ones(shape), np.zeros(shape), c, np.zeros(shape))


def gen_checkerboard(c):
    if not c > 0:
        raise ValidationError("checkerboard potential needs c > 0")
    return schroedinger_potential(2, 2, [[c, -c], [-c, c]])


def checkerboard_reference(c, momentum):
    """Symbol eigenvalues of the checkerboard model, largest first.

    With ``t_i = |1 + exp(i x_i)|`` they are
    ``+-sqrt(c^2 + (t2 + t1)^2)`` and ``+-sqrt(c^2 + (t2 - t1)^2)``.
    """
    x1, x2 = (momentum.x1, momentum.x2) if hasattr(momentum, "x1") else momentum
    t1, t2 = np.abs(tau(x1)), np.abs(tau(x2))
    l1 = np.sqrt(c * c + (t2 + t1) ** 2)
    l2 = np.sqrt(c * c + (t2 - t1) ** 2)
    return np.stack([l1, l2, -l2, -l1], axis=-1)


def checkerboard_spectrum(c):
    """``[-sqrt(c^2+16), -c] U [c, sqrt(c^2+16)]`` and the four band intervals."""
    top = float(np.sqrt(c * c + 16.0))
    mid = float(np.sqrt(c * c + 4.0))
    bands = [(c, top), (c, mid), (-mid, -c), (-top, -c)]
    return [(-top, -c), (c, top)], bands


def gen_two_param(c1, c2):
    if not (c1 > 0 and c2 > 0):
        raise ValidationError("two-parameter family needs c1, c2 > 0")
    return schroedinger_potential(2, 2, [[c1, c2], [-c2, -c1]])


def two_param_z(c1, c2, x1, x2):
    """Roots ``(z_minus, z_plus)`` of the biquadratic; eigenvalues are ``+-sqrt(z)``."""
    s1 = np.abs(tau(x1)) ** 2
    s2 = np.abs(tau(x2)) ** 2
    A = 0.5 * (c1 * c1 + c2 * c2) + s1 + s2
    D = (0.5 * (c1 - c2) ** 2 + 2.0 * s2) * (0.5 * (c1 + c2) ** 2 + 2.0 * s1)
    root = np.sqrt(D)
    return A - root, A + root


@dataclass(frozen=True)
class TwoParamGapReport:
    c1: float
    c2: float
    interior_gap_open: bool
    exterior_gaps_open: bool
    z_minus_max: float
    z_plus_min: float
    sufficient_condition_holds: bool

    @property
    def gap_count(self) -> int:
        return int(self.interior_gap_open) + 2 * int(self.exterior_gaps_open)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["gap_count"] = self.gap_count
        return d


def two_param_reference(c1, c2) -> TwoParamGapReport:
    """Gap structure of the two-parameter family from its closed forms.

    The interior gap at 0 is open iff ``c1 c2 > 4``. The two exterior gaps
    are open iff ``max z_minus < min z_plus``, where ``min z_plus`` is taken
    at ``(pi, pi)`` and ``max z_minus`` at ``(0, pi)``.
    """
    if not (c1 > 0 and c2 > 0):
        raise ValidationError("two-parameter family needs c1, c2 > 0")
    z_plus_min = max(c1 * c1, c2 * c2)
    z_minus_max = (0.5 * (c1 * c1 + c2 * c2) + 4.0
                   - 0.5 * abs(c1 - c2) * np.sqrt((c1 + c2) ** 2 + 16.0))
    return TwoParamGapReport(
        c1=float(c1),
        c2=float(c2),
        interior_gap_open=bool(c1 * c2 > 4.0),
        exterior_gaps_open=bool(z_minus_max < z_plus_min),
        z_minus_max=float(z_minus_max),
        z_plus_min=float(z_plus_min),
        sufficient_condition_holds=bool(c1 * c1 > c2 * c2 + 8.0),
    )


def gen_example_staircase(p1, p2, eps):
    """Potential ``(q p2 + r + 1) / eps``: levels ``1/eps, 2/eps, ..., p/eps``.

    For ``eps < 1/8`` the Gershgorin intervals around the levels are
    disjoint, so every band is isolated and there are ``p - 1`` gaps.
    """
    if not 0 < eps < 0.125:
        raise ValidationError(f"staircase needs 0 < eps < 1/8, got {eps}")
    q = np.arange(p1)[:, None]
    r = np.arange(p2)[None, :]
    return schroedinger_potential(p1, p2, (q * p2 + r + 1) / eps)


def schur_charpoly_check(coeffs, momentum, lam) -> float:
    """``|det(S - lam) - det((B1 - lam)(B2 - lam) - |tau(x1)|^2 I)|``.

    For a (2,2) Schroedinger operator the coupling block is ``tau(x1) I``,
    which commutes with everything, so the 4x4 determinant reduces to a
    2x2 one.
    """
    if (coeffs.p1, coeffs.p2) != (2, 2) or coeffs.classify() is not OperatorClass.SCHROEDINGER:
        raise ValidationError("Schur reduction needs a (2,2)-periodic Schroedinger operator")
    x1, x2 = (momentum.x1, momentum.x2) if hasattr(momentum, "x1") else momentum
    eye2 = np.eye(2)
    full = np.linalg.det(build_symbol(coeffs, (x1, x2)) - lam * np.eye(4))
    b1 = build_block_B(coeffs, 0, x2) - lam * eye2
    b2 = build_block_B(coeffs, 1, x2) - lam * eye2
    reduced = np.linalg.det(b1 @ b2 - abs(tau(x1)) ** 2 * eye2)
    return float(abs(full - reduced))


def _blockdiag_ref(p1, p2=2):
    return {"spectrum": [[2.0, 2.0 + 4.0 * p1]], "measure": 4.0 * p1}


def _diagpotential_ref(p2, p1=2):
    return {"spectrum": [[2.0, 2.0 + 4.0 * p2]], "measure": 4.0 * p2}


def _checkerboard_ref(c):
    comps, bands = checkerboard_spectrum(c)
    return {
        "spectrum": [list(x) for x in comps],
        "bands": [list(x) for x in bands],
        "measure": 2.0 * (np.sqrt(c * c + 16.0) - c),
        "gap_count": 1,
    }


def _staircase_ref(p1, p2, eps):
    return {
        "gap_count": p1 * p2 - 1,
        "levels": [(k + 1) / eps for k in range(p1 * p2)],
    }


EXAMPLES = {
    "blockdiag": (gen_example_blockdiag, _blockdiag_ref),
    "diagpotential": (gen_example_diagpotential, _diagpotential_ref),
    "checkerboard": (gen_checkerboard, _checkerboard_ref),
    "twoparam": (gen_two_param, lambda c1, c2: two_param_reference(c1, c2).to_dict()),
    "staircase": (gen_example_staircase, _staircase_ref),
}


def generate_example(name, **params):
    """Return ``(coeffs, reference)`` for a named example."""
    try:
        gen, ref = EXAMPLES[name]
    except KeyError:
        raise ValidationError(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}") from None
    return gen(**params), ref(**params)
