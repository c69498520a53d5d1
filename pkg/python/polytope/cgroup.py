"""
Test de C-groupe en chaîne.

⟨r_0, ..., r_{n-1}⟩ est un C-groupe en chaîne ssi G_0 et G_{n-1} le sont
et G_0 ∩ G_{n-1} = G_{0,n-1}. Le test est récursif sur les intervalles
de générateurs ; une section dont l'ordre est celui du groupe de Coxeter
sphérique de son symbole réalisé est acceptée sans récursion.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from core.config import EngineConfig
from core.exceptions import NotPolyhedral
from fp import FpMatrix
from matgroup import Word, intersect_small, matrix_order
from ortho import spherical_coxeter_order

from .engine import engine_or_default, group_of

logger = logging.getLogger(__name__)


@dataclass
class CGroupReport:
    """
    Verdict du test de C-groupe.

    Un verdict négatif porte toujours un témoin vérifié : élément de
    G_0 ∩ G_{n-1} (de la section fautive) hors de G_{0,n-1}.
    """
    is_cgroup: bool
    failing_level: Optional[int] = None
    failing_range: Optional[Tuple[int, int]] = None
    witness: Optional[FpMatrix] = None
    intersection_order: Optional[int] = None
    middle_order: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "is_cgroup": self.is_cgroup,
            "failing_level": self.failing_level,
            "failing_range": list(self.failing_range) if self.failing_range else None,
            "witness": self.witness.to_list() if self.witness is not None else None,
            "intersection_order": self.intersection_order,
            "middle_order": self.middle_order,
        }


def check_polyhedral(gens: Sequence[FpMatrix]):
    """
    Involutions et commutation des générateurs non voisins.

    Raises:
        NotPolyhedral: si une relation de chaîne est violée
    """
    for i, g in enumerate(gens):
        if g.is_identity() or not (g @ g).is_identity():
            raise NotPolyhedral(f"generator {i} is not an involution")
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            if not ((gens[i] @ gens[j]) ** 2).is_identity():
                raise NotPolyhedral(f"generators {i} and {j} do not commute")


def schlafli_realized(gens: Sequence[FpMatrix], limit: int = 1_000_000) -> List[int]:
    """Ordres des produits r_i·r_{i+1}."""
    return [matrix_order(gens[i] @ gens[i + 1], limit) for i in range(len(gens) - 1)]


def translation_witness_word(p: int) -> Word:
    """
    Témoin d'échec pour les diagrammes [6,3,m] :
    (r0r1)³·(r1r2(r1r0)²)^ℓ·(r2r1(r0r1)²)^ℓ avec 3ℓ ≡ -2 (mod p).

    Raises:
        ValueError: pour p = 3 (3 non inversible)
    """
    if p % 3 == 0:
        raise ValueError("3 is not invertible mod 3")
    ell = (-2 * pow(3, -1, p)) % p
    head = Word((0, 1)) ** 3
    first = Word((1, 2)) + Word((1, 0)) ** 2
    second = Word((2, 1)) + Word((0, 1)) ** 2
    return head + first ** ell + second ** ell


class _CGroupSearch:
    """Test récursif mémoïsé par intervalle [lo, hi) de générateurs."""

    def __init__(self, gens: Sequence[FpMatrix], engine: EngineConfig):
        self.gens = list(gens)
        self.engine = engine
        self.verdicts: Dict[Tuple[int, int], Optional[CGroupReport]] = {}

    def _group(self, lo: int, hi: int):
        return group_of(self.gens[lo:hi], self.engine, n=self.gens[0].n, p=self.gens[0].p)

    def _spherical(self, lo: int, hi: int) -> bool:
        if not self.engine.spherical_shortcut:
            return False
        symbol = schlafli_realized(self.gens[lo:hi], self.engine.max_matrix_order)
        expected = spherical_coxeter_order(symbol)
        if expected is None:
            return False
        return self._group(lo, hi).order() == expected

    def failure(self, lo: int, hi: int) -> Optional[CGroupReport]:
        """Premier échec trouvé dans la section [lo, hi), None si c'est un C-groupe."""
        if (lo, hi) in self.verdicts:
            return self.verdicts[(lo, hi)]
        verdict = self._evaluate(lo, hi)
        self.verdicts[(lo, hi)] = verdict
        return verdict

    def _evaluate(self, lo: int, hi: int) -> Optional[CGroupReport]:
        if hi - lo <= 2:
            return None
        if self._spherical(lo, hi):
            logger.debug("section [%d,%d) accepted as spherical", lo, hi)
            return None
        inner = self.failure(lo + 1, hi) or self.failure(lo, hi - 1)
        if inner is not None:
            return inner
        upper = self._group(lo + 1, hi)
        lower = self._group(lo, hi - 1)
        middle = self._group(lo + 1, hi - 1)
        common = intersect_small(upper, lower, self.engine.element_threshold)
        if len(common) == middle.order():
            return None
        witness = next(g for g in common if not middle.contains(g))
        logger.debug("section [%d,%d) fails: |G0 ∩ Gn| = %d, |G0n| = %d",
                     lo, hi, len(common), middle.order())
        return CGroupReport(
            is_cgroup=False,
            failing_level=hi - lo,
            failing_range=(lo, hi),
            witness=witness,
            intersection_order=len(common),
            middle_order=middle.order())


def is_string_cgroup(gens: Sequence[FpMatrix], engine: Optional[EngineConfig] = None) -> CGroupReport:
    """
    Décide si ⟨gens⟩ est un C-groupe en chaîne.

    Args:
        gens: Réflexions r_0, ..., r_{n-1}
        engine: Seuils du moteur (intersection, mémoire)

    Returns:
        CGroupReport: verdict exact, avec témoin en cas d'échec

    Raises:
        NotPolyhedral: générateurs non involutifs ou non voisins qui ne commutent pas
        TooLarge: intersection au-delà du seuil d'énumération
    """
    engine = engine_or_default(engine)
    check_polyhedral(gens)
    failure = _CGroupSearch(gens, engine).failure(0, len(gens))
    return failure if failure is not None else CGroupReport(is_cgroup=True)


def face_counts(gens: Sequence[FpMatrix], engine: Optional[EngineConfig] = None) -> List[int]:
    """Nombre de faces de chaque rang : |G| / |G_i| avec G_i = ⟨r_j : j ≠ i⟩."""
    engine = engine_or_default(engine)
    n = len(gens)
    total = group_of(gens, engine).order()
    counts = []
    for i in range(n):
        sub = group_of([g for j, g in enumerate(gens) if j != i], engine, n=gens[0].n, p=gens[0].p)
        counts.append(total // sub.order())
    return counts
