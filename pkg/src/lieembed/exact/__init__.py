"""Exact scalar arithmetic used throughout the engine."""

from .gaussian import I, ExactDivisionError, GaussianRational
from .laurent import (
    LaurentPoly,
    RationalFunction,
    evaluate_at,
    laurent_gcd,
    q_number,
)
from .quartic import QuarticElement, QuarticField, quartic_is_irreducible

__all__ = [
    "I",
    "ExactDivisionError",
    "GaussianRational",
    "LaurentPoly",
    "RationalFunction",
    "evaluate_at",
    "laurent_gcd",
    "q_number",
    "QuarticElement",
    "QuarticField",
    "quartic_is_irreducible",
]
