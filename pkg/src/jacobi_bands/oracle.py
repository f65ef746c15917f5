"""Brute-force check of the Bloch reduction.

The operator restricted to a torus of ``N1 x N2`` period cells (periodic
boundary conditions) is a finite Hermitian matrix. Its eigenvalues are
exactly the symbol eigenvalues at the momenta ``(2 pi j/N1, 2 pi k/N2)``,
so comparing the two multisets tests the symbol construction end to end.
The supercell is assembled site by site from the lattice couplings and
shares no code with :mod:`jacobi_bands.symbol`.
"""

from __future__ import annotations

import numpy as np

from .errors import UnsupportedSize
from .linalg import eigenvalues_hermitian
from .symbol import build_symbol, grid_momenta

__all__ = ["MAX_SUPERCELL_ORDER", "supercell_matrix", "oracle_spectrum", "functional_model_check"]

MAX_SUPERCELL_ORDER = 4096


def supercell_matrix(coeffs, N1, N2) -> np.ndarray:
    """Dense matrix of the operator on ``Z/(p1 N1) x Z/(p2 N2)``.

    Sites are ordered lexicographically, outer index ``i`` major. Site
    ``(i, k)`` carries potential ``c[i, k]`` and couples to

    * ``(i, k+1)`` with ``b[i, k]``
    * ``(i+1, k)`` with ``a[i, k]``
    * ``(i+1, k+1)`` with ``alpha[i, k]``
    * and site ``(i, k+1)`` couples to ``(i+1, k)`` with ``conj(alpha[i, k])``

    plus the Hermitian conjugate of every hop (coefficient indices mod the
    periods).
    """
    if N1 < 1 or N2 < 1:
        raise UnsupportedSize("supercell multipliers must be positive")
    L1, L2 = coeffs.p1 * N1, coeffs.p2 * N2
    if L1 < 3 or L2 < 3:
        raise UnsupportedSize(f"torus {L1}x{L2} too small: wrap-around neighbours coincide")
    order = L1 * L2
    if order > MAX_SUPERCELL_ORDER:
        raise UnsupportedSize(f"supercell order {order} exceeds {MAX_SUPERCELL_ORDER}")

    i, k = np.meshgrid(np.arange(L1), np.arange(L2), indexing="ij")
    i, k = i.ravel(), k.ravel()
    qi, rk = i % coeffs.p1, k % coeffs.p2

    def site(ii, kk):
        return (ii % L1) * L2 + (kk % L2)

    here = site(i, k)
    h = np.zeros((order, order), dtype=complex)
    h[here, here] = coeffs.c[qi, rk]

    def hop(src, dst, w):
        h[src, dst] = w
        h[dst, src] = np.conj(w)

    hop(here, site(i, k + 1), coeffs.b[qi, rk])
    hop(here, site(i + 1, k), coeffs.a[qi, rk])
    hop(here, site(i + 1, k + 1), coeffs.alpha[qi, rk])
    hop(site(i, k + 1), site(i + 1, k), np.conj(coeffs.alpha[qi, rk]))
    return h


def oracle_spectrum(coeffs, N1, N2) -> np.ndarray:
    """Eigenvalues of the supercell, largest first."""
    return eigenvalues_hermitian(supercell_matrix(coeffs, N1, N2))


def functional_model_check(coeffs, N1, N2) -> float:
    """Largest gap between the sorted supercell spectrum and the sorted
    union of symbol spectra over the ``N1 x N2`` lattice momenta."""
    direct = np.sort(oracle_spectrum(coeffs, N1, N2))
    x1 = grid_momenta(N1)[:, None]
    x2 = grid_momenta(N2)[None, :]
    via_symbol = np.sort(eigenvalues_hermitian(build_symbol(coeffs, (x1, x2))).ravel())
    return float(np.max(np.abs(direct - via_symbol)))
