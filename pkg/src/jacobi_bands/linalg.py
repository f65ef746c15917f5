"""Dense Hermitian eigenvalues and the matrix absolute value.

Both routines accept stacks of matrices with shape ``(..., n, n)`` so the
band sampler can diagonalise a whole momentum grid in one LAPACK sweep.
"""

from __future__ import annotations

import numpy as np

from .errors import ConvergenceFailure, NonHermitianInput

__all__ = [
    "HERMITIAN_RTOL",
    "hermiticity_defect",
    "check_hermitian",
    "eigenvalues_hermitian",
    "matrix_abs",
]

HERMITIAN_RTOL = 1e-13


def hermiticity_defect(m):
    """Return ``max |M - M^*|`` scaled by ``1 + max |M|`` (per matrix in a stack)."""
    m = np.asarray(m)
    diff = np.abs(m - np.conj(np.swapaxes(m, -1, -2))).max(axis=(-2, -1))
    return diff / (1.0 + np.abs(m).max(axis=(-2, -1)))


def check_hermitian(m, rtol=HERMITIAN_RTOL):
    m = np.asarray(m)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise NonHermitianInput(f"expected square matrices, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonHermitianInput("matrix has non-finite entries")
    defect = np.max(hermiticity_defect(m)) if m.size else 0.0
    if defect > rtol:
        raise NonHermitianInput(f"Hermiticity defect {defect:.3e} exceeds {rtol:.1e}")
    return m


def eigenvalues_hermitian(m) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, sorted non-increasing.

    Parameters
    ----------
    m : array_like, shape (..., n, n)
        Hermitian matrix or stack of them.

    Returns
    -------
    ndarray, shape (..., n)
        Real eigenvalues, largest first.
    """
    m = check_hermitian(m)
    try:
        w = np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return w[..., ::-1].copy()


def matrix_abs(m) -> np.ndarray:
    """``|M| = U diag(|lambda|) U^*`` for Hermitian ``M``."""
    m = check_hermitian(m)
    try:
        w, u = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    out = (u * np.abs(w)[..., None, :]) @ np.conj(np.swapaxes(u, -1, -2))
    # exact Hermitian symmetry; rounding otherwise leaves ~1e-16 skew part
    return 0.5 * (out + np.conj(np.swapaxes(out, -1, -2)))
