"""Upper bounds for the Lebesgue measure of the spectrum.

``bound_theorem`` is the sharp bound: the minimum over the period cell of

    R[m, n] = 4 * sum_j (|b[j, n]| + 2 |alpha[j, n]|)
            + 4 * sum_k (|a[m, k]| + 2 |alpha[m, k]|) - 8 |alpha[m, n]|

which never involves the potential ``c``. It comes from splitting the
symbol into a momentum-independent part plus a handful of sparse Hermitian
pieces and bounding each piece by its absolute value;
:func:`trace_identity_check` redoes that computation numerically.

The cruder bounds (operator norm, Gershgorin, Krueger) are here for
comparison.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import IndexOutOfRange, NotSchroedinger, UnsupportedPeriod
from .linalg import matrix_abs
from .model import OperatorClass, shift_entries
from .symbol import jacobi_ring, phase, phase_mul

__all__ = [
    "BoundsReport",
    "SymbolDecomposition",
    "R_matrix",
    "bound_Rmn",
    "bound_theorem",
    "bound_case2",
    "bound_trivial",
    "gershgorin_intervals",
    "gershgorin_union_measure",
    "bound_gershgorin",
    "bound_kruger",
    "kruger_band_bound",
    "decompose_symbol",
    "trace_identity_check",
    "bounds_report",
]


def R_matrix(coeffs) -> np.ndarray:
    """All ``R[m, n]`` over the period cell, shape ``(p1, p2)``."""
    a = np.abs(coeffs.a)
    al = np.abs(coeffs.alpha)
    b = np.abs(coeffs.b)
    col = 4.0 * (b + 2.0 * al).sum(axis=0)  # depends on n only
    row = 4.0 * (a + 2.0 * al).sum(axis=1)  # depends on m only
    return row[:, None] + col[None, :] - 8.0 * al


def bound_Rmn(coeffs, m, n) -> float:
    if not (0 <= m < coeffs.p1 and 0 <= n < coeffs.p2):
        raise IndexOutOfRange(f"(m, n) = ({m}, {n}) outside the period cell")
    return float(R_matrix(coeffs)[m, n])


def bound_case2(coeffs) -> float:
    """Closed form for ``p1 = p2 = 2`` taken over all four cyclic shifts."""
    if (coeffs.p1, coeffs.p2) != (2, 2):
        raise UnsupportedPeriod("the (2, 2) closed form needs p1 = p2 = 2")

    def one(x):
        a, al, b = np.abs(x.a), np.abs(x.alpha), np.abs(x.b)
        return 4.0 * (a[1, 0] + a[1, 1] + b[0, 1] + b[1, 1]
                      + 2.0 * (al[0, 1] + al[1, 0] + al[1, 1]))

    return float(min(one(shift_entries(coeffs, m, n)) for m in range(2) for n in range(2)))


def bound_theorem(coeffs) -> float:
    """``min R[m, n]``; for period (2, 2) the shift-minimised closed form."""
    if (coeffs.p1, coeffs.p2) == (2, 2):
        return bound_case2(coeffs)
    return float(R_matrix(coeffs).min())


def bound_trivial(coeffs) -> float:
    """Twice the norm bound ``2 max||A_n|| + max||B_n||``; uses every entry."""
    a, al = np.abs(coeffs.a), np.abs(coeffs.alpha)
    b, c = np.abs(coeffs.b), np.abs(coeffs.c)
    first = np.max(8.0 * al.max(axis=1) + 4.0 * a.max(axis=1))
    second = np.max(4.0 * b.max(axis=1) + 2.0 * c.max(axis=1))
    return float(first + second)


def _magnitude_symbol(coeffs):
    # Entry (i, j) of the symbol is a sum of phase * coefficient terms; the
    # symbol of the absolute coefficients at zero momentum adds their
    # magnitudes, which is |s_ij| exactly when both periods are >= 3 and an
    # upper bound for sup_x |s_ij(x)| otherwise.
    p1 = coeffs.p1
    one = np.ones((), dtype=complex)
    blocks_a = [jacobi_ring(np.abs(coeffs.a[n]), np.abs(coeffs.alpha[n]), one) for n in range(p1)]
    blocks_b = [jacobi_ring(np.abs(coeffs.c[n]), np.abs(coeffs.b[n]), one) for n in range(p1)]
    p2 = coeffs.p2
    out = np.zeros((coeffs.p, coeffs.p))
    for n in range(p1):
        out[n * p2:(n + 1) * p2, n * p2:(n + 1) * p2] = blocks_b[n].real
        m = (n + 1) % p1
        out[n * p2:(n + 1) * p2, m * p2:(m + 1) * p2] += blocks_a[n].real
        out[m * p2:(m + 1) * p2, n * p2:(n + 1) * p2] += blocks_a[n].real
    return out


def gershgorin_intervals(coeffs):
    """Momentum-independent Gershgorin intervals, one per symbol row.

    Returns ``(intervals, exact)``. ``exact`` is False for a period equal
    to 2, where the radii are sup-over-momenta upper bounds.
    """
    mag = _magnitude_symbol(coeffs)
    radius = mag.sum(axis=1) - np.diag(mag)
    centre = coeffs.c.reshape(-1)
    intervals = [(float(s - r), float(s + r)) for s, r in zip(centre, radius)]
    return intervals, min(coeffs.p1, coeffs.p2) >= 3


def gershgorin_union_measure(intervals) -> float:
    total = 0.0
    cur = None
    for l, r in sorted(intervals):
        if cur is None or l > cur[1]:
            if cur is not None:
                total += cur[1] - cur[0]
            cur = [l, r]
        else:
            cur[1] = max(cur[1], r)
    return total + (cur[1] - cur[0] if cur else 0.0)


def bound_gershgorin(coeffs) -> float:
    """Twice the sum of all off-diagonal symbol magnitudes."""
    a, al, b = np.abs(coeffs.a), np.abs(coeffs.alpha), np.abs(coeffs.b)
    return float(2.0 * np.sum(4.0 * al + 2.0 * a + 2.0 * b))


def _require_schroedinger(coeffs):
    if coeffs.classify() is not OperatorClass.SCHROEDINGER:
        raise NotSchroedinger("Krueger's bound applies to discrete Schroedinger operators only")


def bound_kruger(coeffs) -> float:
    """``4 pi (p1 + p2)``, from the per-band bound summed over all bands."""
    _require_schroedinger(coeffs)
    return 4.0 * np.pi * (coeffs.p1 + coeffs.p2)


def kruger_band_bound(coeffs) -> float:
    _require_schroedinger(coeffs)
    return 4.0 * np.pi * (1.0 / coeffs.p1 + 1.0 / coeffs.p2)


@dataclass
class SymbolDecomposition:
    """``S = S1 + S3 + S4p + S4pp + S4ppp + sum(E)``.

    ``S1`` is the symbol with every ring-closing term removed and does not
    depend on momentum. ``S3`` holds the corners of the on-site blocks,
    ``E[j]`` the corners of the coupling block between cells ``j`` and
    ``j + 1``, and the three ``S4`` parts split the outer corner block
    ``A_{p1-1}`` into its lower-cyclic part, upper-cyclic part and diagonal.
    """

    S1: np.ndarray
    S3: np.ndarray
    S4p: np.ndarray
    S4pp: np.ndarray
    S4ppp: np.ndarray
    E: list = field(default_factory=list)

    def parts(self):
        return [self.S3, self.S4p, self.S4pp, self.S4ppp, *self.E]

    def reconstruct(self):
        out = self.S1 + self.S3 + self.S4p + self.S4pp + self.S4ppp
        for e in self.E:
            out = out + e
        return out


def decompose_symbol(coeffs, momentum) -> SymbolDecomposition:
    p1, p2 = coeffs.p1, coeffs.p2
    if p1 < 3 or p2 < 3:
        raise UnsupportedPeriod("the decomposition is defined for p1, p2 >= 3")
    x1, x2 = (momentum.x1, momentum.x2) if hasattr(momentum, "x1") else momentum
    ph1, ph2 = phase(x1), phase(x2)
    p = p1 * p2

    def tri(diag, off):
        m = np.diag(np.asarray(diag, dtype=complex))
        for r in range(p2 - 1):
            m[r, r + 1] = off[r]
            m[r + 1, r] = np.conj(off[r])
        return m

    def corner(off):
        m = np.zeros((p2, p2), dtype=complex)
        m[0, p2 - 1] = phase_mul(ph2, np.conj(off[p2 - 1]))
        m[p2 - 1, 0] = np.conj(m[0, p2 - 1])
        return m

    def empty():
        return np.zeros((p, p), dtype=complex)

    def blk(i):
        return slice(i * p2, (i + 1) * p2)

    S1, S3 = empty(), empty()
    E = []
    for n in range(p1):
        S1[blk(n), blk(n)] = tri(coeffs.c[n], coeffs.b[n])
        S3[blk(n), blk(n)] = corner(coeffs.b[n])
    for j in range(p1 - 1):
        S1[blk(j), blk(j + 1)] = tri(coeffs.a[j], coeffs.alpha[j])
        S1[blk(j + 1), blk(j)] = S1[blk(j), blk(j + 1)]
        e = empty()
        e[blk(j), blk(j + 1)] = corner(coeffs.alpha[j])
        e[blk(j + 1), blk(j)] = e[blk(j), blk(j + 1)]
        E.append(e)

    al = coeffs.alpha[p1 - 1]
    g1 = np.zeros((p2, p2), dtype=complex)
    for r in range(p2 - 1):
        g1[r + 1, r] = np.conj(al[r])
    g1[0, p2 - 1] = phase_mul(ph2, np.conj(al[p2 - 1]))
    g1h = np.conj(g1.T)
    g2 = np.diag(coeffs.a[p1 - 1].astype(complex))

    def outer(top, bottom):
        m = empty()
        m[blk(0), blk(p1 - 1)] = phase_mul(ph1, top)
        m[blk(p1 - 1), blk(0)] = phase_mul(np.conj(ph1), bottom)
        return m

    return SymbolDecomposition(
        S1=S1,
        S3=S3,
        S4p=outer(g1, g1h),
        S4pp=outer(g1h, g1),
        S4ppp=outer(g2, g2),
        E=E,
    )


def trace_identity_check(coeffs, momentum) -> float:
    """``2 tr D`` with ``D`` the sum of the absolute values of the sparse parts.

    Computed through :func:`matrix_abs`, not through closed forms, so
    agreement with ``R[p1-1, p2-1]`` is a genuine check.
    """
    dec = decompose_symbol(coeffs, momentum)
    return float(2.0 * sum(np.trace(matrix_abs(part)).real for part in dec.parts()))


@dataclass
class BoundsReport:
    p1: int
    p2: int
    operator_class: str
    R: list
    theorem_bound: float
    trivial_bound: float
    gershgorin_bound: float
    gershgorin_intervals: list
    gershgorin_union_measure: float
    gershgorin_exact: bool
    kruger_bound: float | None
    kruger_band_bound: float | None
    trace_identity_value: float | None
    case2_bound: float | None
    notes: dict = field(default_factory=dict)
    comparison: dict | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


# generic point of the torus; the trace identity does not depend on it
_TRACE_MOMENTUM = (0.7, 2.3)


def bounds_report(coeffs, measured=None) -> BoundsReport:
    """Every bound for ``coeffs``. If ``measured`` (a spectrum measure) is
    given, a comparison block is attached."""
    R = R_matrix(coeffs)
    intervals, exact = gershgorin_intervals(coeffs)
    periodic3 = min(coeffs.p1, coeffs.p2) >= 3
    is_schr = coeffs.classify() is OperatorClass.SCHROEDINGER
    case2 = bound_case2(coeffs) if (coeffs.p1, coeffs.p2) == (2, 2) else None
    notes = {
        "symbol_regime": f"p1={'2' if coeffs.p1 == 2 else '>=3'}, p2={'2' if coeffs.p2 == 2 else '>=3'}",
        "theorem_bound": "min over (m,n) of R" if case2 is None
        else "(2,2) closed form minimised over cyclic shifts",
        "gershgorin": "exact constant radii" if exact
        else "period-2 fallback: radii are sup over momenta",
        "trace_identity": "evaluated at momentum (0.7, 2.3)" if periodic3
        else "not defined for a period equal to 2",
    }
    report = BoundsReport(
        p1=coeffs.p1,
        p2=coeffs.p2,
        operator_class=coeffs.classify().value,
        R=R.tolist(),
        theorem_bound=bound_theorem(coeffs),
        trivial_bound=bound_trivial(coeffs),
        gershgorin_bound=bound_gershgorin(coeffs),
        gershgorin_intervals=[list(iv) for iv in intervals],
        gershgorin_union_measure=gershgorin_union_measure(intervals),
        gershgorin_exact=exact,
        kruger_bound=bound_kruger(coeffs) if is_schr else None,
        kruger_band_bound=kruger_band_bound(coeffs) if is_schr else None,
        trace_identity_value=trace_identity_check(coeffs, _TRACE_MOMENTUM) if periodic3 else None,
        case2_bound=case2,
        notes=notes,
    )
    if measured is not None:
        report.comparison = {
            "measured": float(measured),
            "measured_le_theorem": bool(measured <= report.theorem_bound),
            "measured_le_trivial": bool(measured <= report.trivial_bound),
            "measured_le_gershgorin": bool(measured <= report.gershgorin_bound),
            "theorem_over_measured": float(report.theorem_bound / measured) if measured > 0 else None,
        }
    return report
