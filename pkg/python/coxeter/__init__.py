"""
Diagrammes de Coxeter en chaîne cristallographiques et leurs réductions modulo p.
"""

from .diagram import INF, LAMBDA, StringDiagram, BasicSystem, validate, branch_text
from .cartan import (
    CartanMatrix,
    GenericityReport,
    cartan,
    twice_gram,
    gram_mod_p,
    reflection_generators,
    is_generic,
)
from .systems import (
    enumerate_basic_systems,
    equivalent_mod_p,
    diagonal_class,
    census_classes,
    all_rank4_diagrams,
)
from .grammar import parse_diagram, parse_schlafli, parse_system

__all__ = [
    "INF",
    "LAMBDA",
    "StringDiagram",
    "BasicSystem",
    "validate",
    "branch_text",
    "CartanMatrix",
    "GenericityReport",
    "cartan",
    "twice_gram",
    "gram_mod_p",
    "reflection_generators",
    "is_generic",
    "enumerate_basic_systems",
    "equivalent_mod_p",
    "diagonal_class",
    "census_classes",
    "all_rank4_diagrams",
    "parse_diagram",
    "parse_schlafli",
    "parse_system",
]
