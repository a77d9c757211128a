"""Enveloping-algebra arithmetic with PBW normal ordering."""

from .kernel import BACKEND, TermLimitError, select_kernel
from .polynomial import NCPolynomial
from .presentation import (
    DEFAULT_MAX_TERMS,
    AlgebraPresentation,
    Generator,
    PresentationError,
    adjoin_central_root,
    check_jacobi,
    commutator,
    normal_order,
    substitute,
)

__all__ = [
    "BACKEND",
    "DEFAULT_MAX_TERMS",
    "AlgebraPresentation",
    "Generator",
    "NCPolynomial",
    "PresentationError",
    "TermLimitError",
    "adjoin_central_root",
    "check_jacobi",
    "commutator",
    "normal_order",
    "select_kernel",
    "substitute",
]
