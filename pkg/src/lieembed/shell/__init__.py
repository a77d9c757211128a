"""Numeric oracle: the spinless Poincare representation on a momentum shell."""

from .jet import ComplexJet, ExactField, FloatField, Jet, JetOrderError
from .realization import (
    ShellRealization,
    cross_check_closure,
    cross_check_products,
    measure_tilde_condition,
    product_residual,
    symbolic_zero_annihilates,
    verify_condition32,
    verify_lemma31_numeric,
)

__all__ = ["ComplexJet", "ExactField", "FloatField", "Jet", "JetOrderError", "ShellRealization",
           "cross_check_closure", "cross_check_products", "measure_tilde_condition", "product_residual",
           "symbolic_zero_annihilates",
           "verify_condition32", "verify_lemma31_numeric"]
