"""
Identification des groupes réduits : groupes orthogonaux finis, variantes
singulières et groupes de Coxeter sphériques.
"""

from .orders import order_orthogonal, order_reflection_subgroup, order_singular, check_epsilon
from .catalog import load_spherical_catalog, spherical_names, spherical_coxeter_order
from .identify import (
    SpinorProfile,
    GroupFamily,
    NamedGroup,
    spinor_profile,
    identify,
    identify_by_invariants,
    EXCLUSIONS,
)

__all__ = [
    "order_orthogonal",
    "order_reflection_subgroup",
    "order_singular",
    "check_epsilon",
    "load_spherical_catalog",
    "spherical_names",
    "spherical_coxeter_order",
    "SpinorProfile",
    "GroupFamily",
    "NamedGroup",
    "spinor_profile",
    "identify",
    "identify_by_invariants",
    "EXCLUSIONS",
]
