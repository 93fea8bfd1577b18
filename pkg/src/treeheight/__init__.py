"""Exact and Monte Carlo statistics for the total height of rooted labeled trees."""

from ._kernels import BACKEND
from .algebra import Jet, YPolynomial
from .enumerator import (
    EnumeratorResult,
    J_polynomial,
    compute_factorial_moments,
    compute_J_polynomials,
    factorial_moment_sweep,
)
from .moments import MomentReport, Source, limit_constants, standardized_moments
from .series import TruncatedSeries

__all__ = [
    "BACKEND",
    "EnumeratorResult",
    "J_polynomial",
    "Jet",
    "MomentReport",
    "Source",
    "TruncatedSeries",
    "YPolynomial",
    "compute_J_polynomials",
    "compute_factorial_moments",
    "factorial_moment_sweep",
    "limit_constants",
    "standardized_moments",
]

__version__ = "0.1.0"
