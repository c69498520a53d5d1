"""
Arithmétique du corps premier GF(p) : scalaires, matrices et formes.
"""

from .field import FieldCtx, QuadClass, quadratic_character, is_prime, MAX_PRIME
from .matrix import FpMatrix, product
from .forms import FormInvariants, radical_basis, form_invariants, witt_epsilon

__all__ = [
    "FieldCtx",
    "QuadClass",
    "quadratic_character",
    "is_prime",
    "MAX_PRIME",
    "FpMatrix",
    "product",
    "FormInvariants",
    "radical_basis",
    "form_invariants",
    "witt_epsilon",
]
