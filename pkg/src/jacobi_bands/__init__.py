"""Spectra of periodic Jacobi-block-Jacobi operators and 2D difference operators.

The spectrum of a (p1, p2)-periodic operator is the union of the ranges of
the eigenvalues of a ``p1*p2``-dimensional Hermitian symbol over the
Brillouin torus. This package builds that symbol, samples its bands,
bounds the measure of the spectrum and checks everything against
brute-force supercells and closed-form examples.
"""

from .bands import (
    BandGrid,
    BandInterval,
    SpectrumEstimate,
    band_intervals,
    enclosure_padding,
    estimate_spectrum,
    refine_spectrum,
    sample_bands,
    spectrum_from_bands,
)
from .bounds import (
    BoundsReport,
    bound_gershgorin,
    bound_kruger,
    bound_Rmn,
    bound_theorem,
    bound_trivial,
    bounds_report,
    decompose_symbol,
    gershgorin_intervals,
    trace_identity_check,
)
from .linalg import eigenvalues_hermitian, matrix_abs
from .model import (
    OperatorClass,
    PeriodicCoefficients,
    new_periodic_coefficients,
    random_coefficients,
    schroedinger_potential,
    shift_entries,
)
from .oracle import functional_model_check, oracle_spectrum, supercell_matrix
from .symbol import Momentum, build_block_A, build_block_B, build_symbol

__version__ = "0.1.0"
