"""
Énumération de classes latérales de Todd–Coxeter et certification des
présentations par l'oracle matriciel.
"""

from .presentation import (
    Presentation,
    parse_presentation,
    load_presentation,
    coxeter_presentation,
    normalize_relators,
)
from .todd_coxeter import CosetTable, enumerate, enumerate_table, is_closed, DEFAULT_MAX_COSETS
from .validate import certification_status, validate_against_matrix, matrix_order, reference_of, load_presentations

__all__ = [
    "Presentation",
    "parse_presentation",
    "load_presentation",
    "coxeter_presentation",
    "normalize_relators",
    "CosetTable",
    "enumerate",
    "enumerate_table",
    "is_closed",
    "DEFAULT_MAX_COSETS",
    "validate_against_matrix",
    "certification_status",
    "matrix_order",
    "reference_of",
    "load_presentations",
]
