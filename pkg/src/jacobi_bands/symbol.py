"""Bloch symbol of a periodic Jacobi-block-Jacobi operator.

For momenta ``(x1, x2)`` on the torus the symbol is a Hermitian matrix of
order ``p = p1 * p2``: block tridiagonal in the outer index with blocks
``B_n(x2)`` on the diagonal and ``A_n(x2)`` off the diagonal, closed into a
ring by the phase ``exp(i x1)``. Each block is itself a ``p2 x p2``
periodic Jacobi matrix closed by ``exp(i x2)``.

A period equal to 2 is special: both wrap-around neighbours coincide, so
the corner term adds to the ordinary off-diagonal instead of sitting in a
separate corner.

All builders broadcast over arrays of momenta; the result has shape
``x.shape + (order, order)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange

__all__ = [
    "TWO_PI",
    "Momentum",
    "reduce_angle",
    "phase",
    "phase_mul",
    "jacobi_ring",
    "build_block_A",
    "build_block_B",
    "build_symbol",
    "symbol_on_grid",
    "grid_momenta",
]

TWO_PI = 2.0 * np.pi


def reduce_angle(x):
    """Map angles into ``[0, 2 pi)``."""
    r = np.mod(x, TWO_PI)
    # np.mod can round up to exactly 2 pi for tiny negative inputs
    return np.where(r >= TWO_PI, 0.0, r)


def phase(x):
    return np.exp(1j * reduce_angle(x))


def phase_mul(ph, z):
    """``ph * z`` in explicit real arithmetic.

    numpy's complex multiply may round differently depending on the loop it
    dispatches to (scalar, broadcast, SIMD); spelling out the real parts
    makes every caller produce bit-identical entries.
    """
    ph = np.asarray(ph, dtype=complex)
    z = np.asarray(z, dtype=complex)
    re, im = np.broadcast_arrays(ph.real * z.real - ph.imag * z.imag,
                                 ph.real * z.imag + ph.imag * z.real)
    out = np.empty(re.shape, dtype=complex)
    out.real = re
    out.imag = im
    return out


@dataclass(frozen=True)
class Momentum:
    """Point of the Brillouin torus, stored reduced to ``[0, 2 pi)``."""

    x1: float
    x2: float

    def __post_init__(self):
        object.__setattr__(self, "x1", float(reduce_angle(self.x1)))
        object.__setattr__(self, "x2", float(reduce_angle(self.x2)))


def _momentum_pair(momentum):
    if isinstance(momentum, Momentum):
        return momentum.x1, momentum.x2
    x1, x2 = momentum
    return x1, x2


def jacobi_ring(diag, off, ph):
    """Periodic Jacobi matrix of order ``len(diag)`` closed by phase ``ph``.

    ``off[r]`` couples site ``r`` to ``r + 1``; the last one, ``off[-1]``,
    wraps from the final site back to site 0 and carries the phase:
    entry ``(0, n-1)`` is ``ph * conj(off[-1])``. For order 2 that term is
    added to ``off[0]``.

    ``ph`` may be an array; the result then has shape ``ph.shape + (n, n)``.
    """
    diag = np.asarray(diag)
    off = np.asarray(off, dtype=complex)
    ph = np.asarray(ph, dtype=complex)
    n = diag.shape[-1]
    out = np.zeros(ph.shape + (n, n), dtype=complex)
    idx = np.arange(n)
    out[..., idx, idx] = diag
    if n == 2:
        top = off[0] + phase_mul(ph, np.conj(off[1]))
        out[..., 0, 1] = top
        out[..., 1, 0] = np.conj(top)
        return out
    for r in range(n - 1):
        out[..., r, r + 1] = off[r]
        out[..., r + 1, r] = np.conj(off[r])
    corner = phase_mul(ph, np.conj(off[n - 1]))
    out[..., 0, n - 1] = corner
    out[..., n - 1, 0] = np.conj(corner)
    return out


def _check_block_index(coeffs, n):
    if not 0 <= n < coeffs.p1:
        raise IndexOutOfRange(f"block index {n} outside [0, {coeffs.p1})")


def build_block_A(coeffs, n, x2):
    """Order-``p2`` coupling block ``A_n(x2)`` built from ``a`` and ``alpha``."""
    _check_block_index(coeffs, n)
    return jacobi_ring(coeffs.a[n], coeffs.alpha[n], phase(x2))


def build_block_B(coeffs, n, x2):
    """Order-``p2`` on-site block ``B_n(x2)`` built from ``c`` and ``b``."""
    _check_block_index(coeffs, n)
    return jacobi_ring(coeffs.c[n], coeffs.b[n], phase(x2))


def _assemble(coeffs, ph1, ph2):
    p1, p2 = coeffs.p1, coeffs.p2
    ph1 = np.asarray(ph1, dtype=complex)
    ph2 = np.broadcast_to(np.asarray(ph2, dtype=complex), ph1.shape)
    out = np.zeros(ph1.shape + (p1 * p2, p1 * p2), dtype=complex)
    blocks_a = [jacobi_ring(coeffs.a[n], coeffs.alpha[n], ph2) for n in range(p1)]

    def put(i, j, blk):
        out[..., i * p2:(i + 1) * p2, j * p2:(j + 1) * p2] = blk

    for n in range(p1):
        put(n, n, jacobi_ring(coeffs.c[n], coeffs.b[n], ph2))
    ph1 = ph1[..., None, None]
    if p1 == 2:
        top = blocks_a[0] + phase_mul(ph1, blocks_a[1])
        put(0, 1, top)
        put(1, 0, np.conj(np.swapaxes(top, -1, -2)))
        return out
    for n in range(p1 - 1):
        put(n, n + 1, blocks_a[n])
        put(n + 1, n, blocks_a[n])
    last = blocks_a[p1 - 1]
    put(0, p1 - 1, phase_mul(ph1, last))
    put(p1 - 1, 0, phase_mul(np.conj(ph1), last))
    return out


def build_symbol(coeffs, momentum):
    """Symbol ``S(x1, x2)`` of order ``p1 * p2``.

    Parameters
    ----------
    coeffs : PeriodicCoefficients
    momentum : Momentum or (x1, x2)
        Angles in radians; arrays broadcast to a stack of symbols.

    Returns
    -------
    ndarray, complex
        Shape ``(p, p)`` for scalar momenta, otherwise
        ``broadcast(x1, x2).shape + (p, p)``.
    """
    x1, x2 = _momentum_pair(momentum)
    x1, x2 = np.broadcast_arrays(np.asarray(x1, dtype=float), np.asarray(x2, dtype=float))
    return _assemble(coeffs, phase(x1), phase(x2))


def grid_momenta(n):
    """Uniform nodes ``2 pi j / n``, ``j = 0..n-1``."""
    return TWO_PI * np.arange(n) / n


def symbol_on_grid(coeffs, rows, n2):
    """Symbols at ``(2 pi j / n1, 2 pi k / n2)`` for ``j`` given by ``rows``.

    ``rows`` is a pair ``(j_values, n1)``. Returns shape
    ``(len(j_values), n2, p, p)``.
    """
    j_values, n1 = rows
    x1 = TWO_PI * np.asarray(j_values)[:, None] / n1
    x2 = grid_momenta(n2)[None, :]
    return build_symbol(coeffs, (x1, x2))
