"""
Polytopes réguliers abstraits associés aux groupes réduits : test de
C-groupe, combinatoire, cartes de rang 3, dualité et mélanges.
"""

from .cgroup import (
    CGroupReport,
    check_polyhedral,
    is_string_cgroup,
    schlafli_realized,
    face_counts,
    translation_witness_word,
)
from .maps import MapInvariants, map_invariants, petrial, identify_map, map_label, load_map_catalog
from .duality import DualityVerdict, self_dual
from .mixing import MixingResult, mixing, resolve_recipe, RECIPES
from .screen import ScreenVerdict, intersection_screen
from .report import PolytopeReport, polytope_report

__all__ = [
    "CGroupReport",
    "check_polyhedral",
    "is_string_cgroup",
    "schlafli_realized",
    "face_counts",
    "translation_witness_word",
    "MapInvariants",
    "map_invariants",
    "petrial",
    "identify_map",
    "map_label",
    "load_map_catalog",
    "DualityVerdict",
    "self_dual",
    "MixingResult",
    "mixing",
    "resolve_recipe",
    "RECIPES",
    "ScreenVerdict",
    "intersection_screen",
    "PolytopeReport",
    "polytope_report",
]
