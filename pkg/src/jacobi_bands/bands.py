"""Band functions on a momentum grid and the spectrum they sweep out.

The ``k``-th band is the range of the ``k``-th largest symbol eigenvalue
over the torus. Sampling on a uniform grid gives an inner approximation of
every band; padding by a Lipschitz bound for the eigenvalues turns it into
a rigorous outer enclosure.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceeded, ValidationError
from .linalg import eigenvalues_hermitian
from .symbol import grid_momenta, symbol_on_grid

__all__ = [
    "BandGrid",
    "BandInterval",
    "SpectrumEstimate",
    "sample_bands",
    "band_intervals",
    "lipschitz_constants",
    "enclosure_padding",
    "spectrum_from_bands",
    "estimate_spectrum",
    "refine_spectrum",
    "write_bands_csv",
    "DEFAULT_GRID",
]

log = logging.getLogger(__name__)

DEFAULT_GRID = 64
# complex entries held in memory per chunk of the batched eigensolve
_CHUNK_ENTRIES = 1 << 22


@dataclass(frozen=True)
class BandGrid:
    """Eigenvalues ``lam[j, k, :]`` of the symbol at ``(2 pi j/N1, 2 pi k/N2)``,
    largest first."""

    N1: int
    N2: int
    lam: np.ndarray

    @property
    def p(self) -> int:
        return self.lam.shape[-1]

    def momenta(self):
        return grid_momenta(self.N1), grid_momenta(self.N2)


@dataclass(frozen=True)
class BandInterval:
    index: int  # 0-based: index 0 is the top band
    l: float
    r: float

    @property
    def length(self) -> float:
        return self.r - self.l


@dataclass
class SpectrumEstimate:
    components: list
    measure: float
    gaps: list
    gap_count: int
    gap_tol: float
    grid: tuple | None = None
    enclosure: bool = False
    bands: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "components": [[float(l), float(r)] for l, r in self.components],
            "measure": float(self.measure),
            "gaps": [[float(l), float(r)] for l, r in self.gaps],
            "gap_count": int(self.gap_count),
            "gap_tol": float(self.gap_tol),
            "grid": list(self.grid) if self.grid else None,
            "enclosure": self.enclosure,
            "bands": [
                {"index": b.index, "l": float(b.l), "r": float(b.r)} for b in self.bands
            ],
        }


def sample_bands(coeffs, N1, N2) -> BandGrid:
    """Diagonalise the symbol at every node of an ``N1 x N2`` grid."""
    if N1 < 2 or N2 < 2:
        raise ValidationError(f"grid must be at least 2x2, got {N1}x{N2}")
    p = coeffs.p
    lam = np.empty((N1, N2, p))
    rows_per_chunk = max(1, _CHUNK_ENTRIES // (N2 * p * p))
    for start in range(0, N1, rows_per_chunk):
        rows = np.arange(start, min(N1, start + rows_per_chunk))
        lam[rows] = eigenvalues_hermitian(symbol_on_grid(coeffs, (rows, N1), N2))
    lam.setflags(write=False)
    return BandGrid(N1, N2, lam)


def band_intervals(grid: BandGrid, padding: float = 0.0) -> list[BandInterval]:
    """Per-band ``[min, max]`` over the grid, widened by ``padding`` on both sides."""
    lo = grid.lam.min(axis=(0, 1)) - padding
    hi = grid.lam.max(axis=(0, 1)) + padding
    return [BandInterval(k, float(lo[k]), float(hi[k])) for k in range(grid.p)]


def lipschitz_constants(coeffs):
    """Upper bounds for ``sup ||dS/dx1||`` and ``sup ||dS/dx2||``.

    Only the ring-closing blocks depend on the momenta: the last coupling
    block ``A_{p1-1}`` carries ``exp(i x1)`` and every corner entry carries
    ``exp(i x2)``. Each derivative is Hermitian, so its spectral norm is
    bounded by its largest absolute row sum.
    """
    a = np.abs(coeffs.a)
    al = np.abs(coeffs.alpha)
    b = np.abs(coeffs.b)
    last = coeffs.p1 - 1
    l1 = np.max(a[last] + al[last] + np.roll(al[last], 1))
    l2 = np.max(b[:, -1] + al[:, -1] + np.roll(al[:, -1], 1))
    return float(l1), float(l2)


def enclosure_padding(coeffs, N1, N2) -> float:
    """Eigenvalue slack covering the torus between grid nodes.

    Every momentum lies within ``pi/N_i`` of a node along each axis, and
    eigenvalues move no faster than the symbol (Weyl), so each sampled
    band extended by ``L1 pi/N1 + L2 pi/N2`` contains the true band.
    """
    l1, l2 = lipschitz_constants(coeffs)
    return l1 * np.pi / N1 + l2 * np.pi / N2


def spectrum_from_bands(intervals, gap_tol=None) -> SpectrumEstimate:
    """Merge band intervals into connected components.

    Intervals separated by less than ``gap_tol`` are treated as touching.
    The default tolerance is ``1e-8`` times the total spectral width.
    """
    intervals = list(intervals)
    if not intervals:
        raise ValidationError("no band intervals given")
    spans = sorted((iv.l, iv.r) for iv in intervals)
    if gap_tol is None:
        width = max(r for _, r in spans) - spans[0][0]
        gap_tol = 1e-8 * width
    comps = [list(spans[0])]
    for l, r in spans[1:]:
        if l - comps[-1][1] < gap_tol:
            comps[-1][1] = max(comps[-1][1], r)
        else:
            comps.append([l, r])
    components = [(l, r) for l, r in comps]
    gaps = [(components[i][1], components[i + 1][0]) for i in range(len(components) - 1)]
    measure = float(sum(r - l for l, r in components))
    return SpectrumEstimate(
        components=components,
        measure=measure,
        gaps=gaps,
        gap_count=len(gaps),
        gap_tol=float(gap_tol),
        bands=sorted(intervals, key=lambda iv: iv.index),
    )


def estimate_spectrum(coeffs, N1=DEFAULT_GRID, N2=None, enclosure=False, gap_tol=None):
    """Sample, extract bands and merge in one call."""
    N2 = N1 if N2 is None else N2
    grid = sample_bands(coeffs, N1, N2)
    pad = enclosure_padding(coeffs, N1, N2) if enclosure else 0.0
    est = spectrum_from_bands(band_intervals(grid, pad), gap_tol)
    est.grid = (N1, N2)
    est.enclosure = enclosure
    return est


def refine_spectrum(coeffs, target_tol, start=32, cap=2048, gap_tol=None) -> SpectrumEstimate:
    """Double the grid until no band edge moves by ``target_tol`` or more.

    Raises
    ------
    BudgetExceeded
        When the ``cap x cap`` grid is reached first; the last estimate is
        attached as ``exc.estimate``.
    """
    if not target_tol > 0:
        raise ValidationError("target_tol must be positive")
    n = start
    prev = band_intervals(sample_bands(coeffs, n, n))
    while True:
        if 2 * n > cap:
            est = spectrum_from_bands(prev, gap_tol)
            est.grid = (n, n)
            raise BudgetExceeded(f"band edges not settled at grid {n}x{n}", est)
        n *= 2
        cur = band_intervals(sample_bands(coeffs, n, n))
        moved = max(max(abs(a.l - b.l), abs(a.r - b.r)) for a, b in zip(prev, cur))
        log.debug("grid %d: max edge movement %.3e", n, moved)
        prev = cur
        if moved < target_tol:
            est = spectrum_from_bands(cur, gap_tol)
            est.grid = (n, n)
            return est


def write_bands_csv(grid: BandGrid, path) -> None:
    """One row per node: ``j,k,x1,x2,lambda_1,...,lambda_p``."""
    x1s, x2s = grid.momenta()
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["j", "k", "x1", "x2"] + [f"lambda_{i + 1}" for i in range(grid.p)])
        for j in range(grid.N1):
            for k in range(grid.N2):
                vals = [x1s[j], x2s[k], *grid.lam[j, k]]
                w.writerow([j, k] + [format(float(v), ".17g") for v in vals])

