"""Exact verification engine for deformations of Poincare algebras.

Builds Poincare and (anti-)de Sitter enveloping algebras, normal-orders
noncommutative polynomials in them, and checks the deformation and
anti-deformation identities exactly, with numeric jet oracles and a
q-deformed banded-operator model as independent cross-checks.
"""

__version__ = "0.1.0"
