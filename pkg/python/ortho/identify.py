"""
Identification du groupe réduit parmi les groupes orthogonaux finis et
le catalogue sphérique.

L'identification se fait par l'ordre et les invariants seulement :
O si l'ordre est |O|, O1/O2 si c'est |O|/2 et que toutes les normes
spinorielles des générateurs sont des carrés / des non-carrés, Ô et Ô1
par rapport 1 et 1/2 dans le cas singulier, puis le catalogue sphérique ;
tout le reste est « unidentified », jamais deviné.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from fp import FieldCtx, FormInvariants, QuadClass, quadratic_character
from coxeter import BasicSystem

from .catalog import spherical_names
from .orders import order_orthogonal, order_singular

# Exceptions de la liste de classification : annotations, pas des erreurs
EXCLUSIONS = {
    ("O1", 3, 3, 0): "O1(3,3,0) is an exception of the reflection-group classification",
    ("O2", 3, 5, 0): "O2(3,5,0) is an exception of the reflection-group classification",
    ("O2", 5, 3, 0): "O2(5,3,0) is an exception of the reflection-group classification",
    ("O1", 4, 3, -1): "Oj(4,3,-1) is an exception of the reflection-group classification",
    ("O2", 4, 3, -1): "Oj(4,3,-1) is an exception of the reflection-group classification",
}


@dataclass(frozen=True)
class SpinorProfile:
    """Classe de carré de b_i² = c_i pour chaque générateur."""
    classes: Tuple[QuadClass, ...]

    @property
    def nonzero(self) -> Tuple[QuadClass, ...]:
        return tuple(c for c in self.classes if c != QuadClass.ZERO)

    @property
    def has_zero(self) -> bool:
        return len(self.nonzero) != len(self.classes)

    @property
    def all_square(self) -> bool:
        return not self.has_zero and all(c == QuadClass.SQUARE for c in self.classes)

    @property
    def all_nonsquare(self) -> bool:
        return not self.has_zero and all(c == QuadClass.NONSQUARE for c in self.classes)

    @property
    def text(self) -> str:
        return "".join(c.symbol for c in self.classes)


class GroupFamily(Enum):
    O = "O"
    O1 = "O1"
    O2 = "O2"
    O_HAT = "O-hat"
    O1_HAT = "O1-hat"
    SPHERICAL = "spherical"
    UNIDENTIFIED = "unidentified"


@dataclass(frozen=True)
class NamedGroup:
    """
    Groupe identifié.

    params vaut (n, p, ε) pour O/O1/O2, (n, p, r, ε) pour Ô/Ô1, (nom,)
    pour le catalogue sphérique et () sinon.
    """
    family: GroupFamily
    params: Tuple
    order: int
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def label(self) -> str:
        if self.family in (GroupFamily.O, GroupFamily.O1, GroupFamily.O2):
            n, p, eps = self.params
            return f"{self.family.value}({n},{p},{eps})"
        if self.family in (GroupFamily.O_HAT, GroupFamily.O1_HAT):
            n, p, r, eps = self.params
            head = "Ohat" if self.family == GroupFamily.O_HAT else "O1hat"
            return f"{head}({n},{p},r={r},{eps})"
        if self.family == GroupFamily.SPHERICAL:
            return "/".join(self.params)
        return "unidentified"

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "params": list(self.params),
            "order": self.order,
            "label": self.label,
            "notes": list(self.notes),
        }


def spinor_profile(system: BasicSystem, ctx: FieldCtx) -> SpinorProfile:
    return SpinorProfile(tuple(quadratic_character(c, ctx) for c in system.node_labels))


def _catalog_notes(rank: int, order: int, data_dir: Optional[str]) -> Tuple[str, ...]:
    return tuple(f"order coincides with spherical {name}" for name in spherical_names(rank, order, data_dir))


def _orthogonal(family: GroupFamily, invariants: FormInvariants, p: int, order: int,
                data_dir: Optional[str]) -> NamedGroup:
    n, eps = invariants.dim, invariants.epsilon
    notes = _catalog_notes(n, order, data_dir)
    exclusion = EXCLUSIONS.get((family.value, n, p, eps))
    if exclusion:
        notes += (exclusion,)
    return NamedGroup(family, (n, p, eps), order, notes)


def identify(group_order: int, invariants: FormInvariants, profile: SpinorProfile,
             ctx: FieldCtx, data_dir: Optional[str] = None) -> NamedGroup:
    """
    Identifie le groupe d'ordre group_order agissant sur la forme donnée.

    Args:
        group_order: Ordre exact (BSGS)
        invariants: Invariants de la forme agie
        profile: Normes spinorielles des générateurs
        ctx: Contexte du corps
        data_dir: Répertoire du catalogue sphérique

    Returns:
        NamedGroup: famille identifiée, ou UNIDENTIFIED
    """
    p = ctx.p
    n, r, eps = invariants.dim, invariants.rad_dim, invariants.epsilon
    notes: Tuple[str, ...] = ()
    if r == 0:
        full = order_orthogonal(n, p, eps)
        if group_order == full:
            return _orthogonal(GroupFamily.O, invariants, p, group_order, data_dir)
        if 2 * group_order == full:
            if profile.all_square:
                return _orthogonal(GroupFamily.O1, invariants, p, group_order, data_dir)
            if profile.all_nonsquare:
                return _orthogonal(GroupFamily.O2, invariants, p, group_order, data_dir)
            notes = (f"order is |O({n},{p},{eps})|/2 with mixed spinor profile {profile.text}",)
    else:
        full = order_singular(n, p, r, eps)
        if group_order == full:
            return NamedGroup(GroupFamily.O_HAT, (n, p, r, eps), group_order)
        if 2 * group_order == full:
            return NamedGroup(GroupFamily.O1_HAT, (n, p, r, eps), group_order)
    names = spherical_names(n, group_order, data_dir)
    if names:
        return NamedGroup(GroupFamily.SPHERICAL, tuple(names), group_order, notes)
    return NamedGroup(GroupFamily.UNIDENTIFIED, (), group_order, notes)


def identify_by_invariants(invariants: FormInvariants, profile: SpinorProfile,
                           ctx: FieldCtx, data_dir: Optional[str] = None) -> NamedGroup:
    """
    Famille prédite par les seuls invariants (sans calcul d'ordre).

    Profil uniforme : sous-groupe de réflexions O1 (carrés) ou O2 (non-carrés)
    d'indice 2 ; profil mixte : groupe orthogonal complet. Sert au-delà du
    budget BSGS ; ne prévoit jamais un groupe sphérique.
    """
    p = ctx.p
    n, r, eps = invariants.dim, invariants.rad_dim, invariants.epsilon
    nonzero = profile.nonzero
    uniform_square = bool(nonzero) and all(c == QuadClass.SQUARE for c in nonzero)
    uniform_nonsquare = bool(nonzero) and all(c == QuadClass.NONSQUARE for c in nonzero)
    if r == 0:
        full = order_orthogonal(n, p, eps)
        if profile.has_zero:
            return NamedGroup(GroupFamily.UNIDENTIFIED, (), 0, ("zero spinor norm on a nonsingular space",))
        if uniform_square:
            return _orthogonal(GroupFamily.O1, invariants, p, full // 2, data_dir)
        if uniform_nonsquare:
            return _orthogonal(GroupFamily.O2, invariants, p, full // 2, data_dir)
        return _orthogonal(GroupFamily.O, invariants, p, full, data_dir)
    full = order_singular(n, p, r, eps)
    if uniform_square or uniform_nonsquare:
        return NamedGroup(GroupFamily.O1_HAT, (n, p, r, eps), full // 2)
    return NamedGroup(GroupFamily.O_HAT, (n, p, r, eps), full)
