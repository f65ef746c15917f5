"""Coefficient data for (p1, p2)-periodic Jacobi-block-Jacobi operators.

The operator acts on sequences ``u[q][r]`` indexed by the lattice Z^2 and is
built from four doubly periodic arrays:

* ``a[q, r]``     real diagonal of the coupling block ``A_q``
* ``alpha[q, r]`` complex superdiagonal of ``A_q``
* ``c[q, r]``     real diagonal of the on-site block ``B_q``
* ``b[q, r]``     complex superdiagonal of ``B_q``

Indices are 0-based here; entry ``(q, r)`` is the 1-based ``(q+1, r+1)``
entry in the usual mathematical numbering.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import NonFiniteEntry, ShapeMismatch, UnsupportedPeriod, ValidationError

__all__ = [
    "OperatorClass",
    "PeriodicCoefficients",
    "new_periodic_coefficients",
    "schroedinger_potential",
    "shift_entries",
    "random_coefficients",
    "load_coefficients",
    "save_coefficients",
]


class OperatorClass(enum.Enum):
    JACOBI_BLOCK_JACOBI = "JacobiBlockJacobi"
    PARTIAL_DIFFERENCE = "PartialDifference"
    SCHROEDINGER = "Schroedinger"


def _frozen(arr):
    arr = np.array(arr, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PeriodicCoefficients:
    """Validated, immutable coefficient set. Build with
    :func:`new_periodic_coefficients` rather than directly."""

    p1: int
    p2: int
    a: np.ndarray
    alpha: np.ndarray
    c: np.ndarray
    b: np.ndarray

    @property
    def p(self) -> int:
        return self.p1 * self.p2

    def classify(self) -> OperatorClass:
        if np.any(self.alpha != 0):
            return OperatorClass.JACOBI_BLOCK_JACOBI
        if np.all(self.a == 1) and np.all(self.b == 1):
            return OperatorClass.SCHROEDINGER
        return OperatorClass.PARTIAL_DIFFERENCE

    def max_abs_entry(self) -> float:
        return float(max(np.max(np.abs(x)) for x in (self.a, self.alpha, self.c, self.b)))

    def __eq__(self, other):
        if not isinstance(other, PeriodicCoefficients):
            return NotImplemented
        return (
            self.p1 == other.p1
            and self.p2 == other.p2
            and all(
                np.array_equal(getattr(self, k), getattr(other, k))
                for k in ("a", "alpha", "c", "b")
            )
        )

    __hash__ = None

    def to_dict(self) -> dict:
        def cpair(z):
            return [[[float(v.real), float(v.imag)] for v in row] for row in z]

        return {
            "p1": self.p1,
            "p2": self.p2,
            "a": self.a.tolist(),
            "alpha": cpair(self.alpha),
            "c": self.c.tolist(),
            "b": cpair(self.b),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "PeriodicCoefficients":
        try:
            p1, p2 = int(doc["p1"]), int(doc["p2"])
            if doc.get("schroedinger", False):
                return schroedinger_potential(p1, p2, doc["c"])
            alpha = _complex_from_pairs(doc["alpha"])
            b = _complex_from_pairs(doc["b"])
            return new_periodic_coefficients(p1, p2, doc["a"], alpha, doc["c"], b)
        except KeyError as exc:
            raise ValidationError(f"missing field {exc.args[0]!r} in coefficient document") from None


def _complex_from_pairs(pairs):
    arr = np.asarray(pairs, dtype=float)
    if arr.ndim != 3 or arr.shape[-1] != 2:
        raise ShapeMismatch("complex entries must be given as [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def _as_array(name, values, shape, dtype):
    arr = np.asarray(values)
    if arr.shape != shape:
        raise ShapeMismatch(f"{name} has shape {arr.shape}, expected {shape}")
    if dtype is float:
        if np.iscomplexobj(arr):
            if np.any(arr.imag != 0):
                raise ValidationError(f"{name} must be real-valued")
            arr = arr.real
        arr = arr.astype(float)
    else:
        arr = arr.astype(complex)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntry(f"{name} contains non-finite entries")
    return arr


def new_periodic_coefficients(p1, p2, a, alpha, c, b) -> PeriodicCoefficients:
    """Validate raw arrays of shape ``(p1, p2)`` and wrap them.

    Raises
    ------
    UnsupportedPeriod
        If either period is below 2.
    ShapeMismatch, NonFiniteEntry
        On malformed arrays.
    """
    if int(p1) != p1 or int(p2) != p2:
        raise ValidationError("periods must be integers")
    p1, p2 = int(p1), int(p2)
    if p1 < 2 or p2 < 2:
        raise UnsupportedPeriod(f"periods must be >= 2, got ({p1}, {p2})")
    shape = (p1, p2)
    return PeriodicCoefficients(
        p1=p1,
        p2=p2,
        a=_frozen(_as_array("a", a, shape, float)),
        alpha=_frozen(_as_array("alpha", alpha, shape, complex)),
        c=_frozen(_as_array("c", c, shape, float)),
        b=_frozen(_as_array("b", b, shape, complex)),
    )


def schroedinger_potential(p1, p2, c) -> PeriodicCoefficients:
    """Discrete Schroedinger operator: unit hoppings, potential ``c``."""
    if p1 < 2 or p2 < 2:
        raise UnsupportedPeriod(f"periods must be >= 2, got ({p1}, {p2})")
    ones = np.ones((p1, p2))
    return new_periodic_coefficients(p1, p2, ones, np.zeros_like(ones), c, ones)


def shift_entries(coeffs: PeriodicCoefficients, m: int, n: int) -> PeriodicCoefficients:
    """Cyclically relabel the period cell.

    Entry ``(q, r)`` of the result is entry ``((q+m) % p1, (r+n) % p2)`` of
    the input. This is conjugation by a lattice translation, so the
    spectrum is unchanged.
    """
    roll = lambda x: np.roll(x, (-m, -n), axis=(0, 1))  # noqa: E731
    return PeriodicCoefficients(
        p1=coeffs.p1,
        p2=coeffs.p2,
        a=_frozen(roll(coeffs.a)),
        alpha=_frozen(roll(coeffs.alpha)),
        c=_frozen(roll(coeffs.c)),
        b=_frozen(roll(coeffs.b)),
    )


def random_coefficients(p1, p2, rng, scale=2.0, operator_class=OperatorClass.JACOBI_BLOCK_JACOBI):
    """Uniform random model with real and imaginary parts in ``[-scale, scale]``."""
    shape = (p1, p2)

    def cplx():
        return rng.uniform(-scale, scale, shape) + 1j * rng.uniform(-scale, scale, shape)

    c = rng.uniform(-scale, scale, shape)
    if operator_class is OperatorClass.SCHROEDINGER:
        return schroedinger_potential(p1, p2, c)
    a = rng.uniform(-scale, scale, shape)
    b = cplx()
    alpha = cplx() if operator_class is OperatorClass.JACOBI_BLOCK_JACOBI else np.zeros(shape)
    return new_periodic_coefficients(p1, p2, a, alpha, c, b)


def load_coefficients(path) -> PeriodicCoefficients:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: invalid JSON ({exc})") from None
    # accept the envelope written by the ``example`` command
    if isinstance(doc, dict) and "coefficients" in doc:
        doc = doc["coefficients"]
    return PeriodicCoefficients.from_dict(doc)


def save_coefficients(coeffs: PeriodicCoefficients, path) -> None:
    Path(path).write_text(json.dumps(coeffs.to_dict(), indent=2) + "\n", encoding="utf-8")
