"""
Moteur de groupes de matrices finis sur GF(p).
"""

from .words import Word, parse_word, evaluate_word
from .bsgs import BsgsGroup, build_bsgs, DEFAULT_ELEMENT_THRESHOLD
from .operations import (
    subgroup,
    subgroup_generators,
    intersect_small,
    graph_subgroup_order,
    restrict_action,
    matrix_order,
    brute_force_closure,
)

__all__ = [
    "Word",
    "parse_word",
    "evaluate_word",
    "BsgsGroup",
    "build_bsgs",
    "DEFAULT_ELEMENT_THRESHOLD",
    "subgroup",
    "subgroup_generators",
    "intersect_small",
    "graph_subgroup_order",
    "restrict_action",
    "matrix_order",
    "brute_force_closure",
]
