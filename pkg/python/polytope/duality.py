"""
Auto-dualité des polytopes réguliers.

Chemin rapide : une matrice de Cartan palindrome donne la dualité par
renversement de la base. Sinon, r_i ↦ r_{n-1-i} se prolonge en un
automorphisme ssi le sous-groupe graphe ⟨(r_i, r_{n-1-i})⟩ a l'ordre |G|.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from coxeter import CartanMatrix
from core.config import EngineConfig
from core.exceptions import TooLarge
from fp import FpMatrix
from matgroup import graph_subgroup_order

from .engine import budget_for, engine_or_default, group_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualityVerdict:
    """value vaut None quand le calcul est décliné (budget)."""
    value: Optional[bool]
    method: str
    reason: str = ""

    @property
    def text(self) -> str:
        if self.value is None:
            return "unresolved"
        return "true" if self.value else "false"

    def to_dict(self) -> dict:
        return {"self_dual": self.value, "method": self.method, "reason": self.reason}


def self_dual(gens: Sequence[FpMatrix], cartan_matrix: Optional[CartanMatrix] = None,
              engine: Optional[EngineConfig] = None, force_graph: bool = False) -> DualityVerdict:
    """
    Décide l'auto-dualité du polytope de groupe ⟨gens⟩.

    Args:
        gens: Générateurs r_0, ..., r_{n-1}
        cartan_matrix: Matrice de Cartan du système (active le chemin rapide)
        engine: Seuils (duality_order_limit pour le chemin lent)
        force_graph: Ignorer le chemin rapide

    Returns:
        DualityVerdict: vrai/faux, ou non résolu si |G| dépasse le budget
    """
    engine = engine_or_default(engine)
    if cartan_matrix is not None and not force_graph and cartan_matrix.is_palindromic():
        return DualityVerdict(True, "palindromic")
    order = group_of(gens, engine).order()
    if order > engine.duality_order_limit:
        return DualityVerdict(None, "declined", f"|G| = {order} exceeds {engine.duality_order_limit}")
    reversed_gens = list(reversed(gens))
    try:
        graph_order = graph_subgroup_order(gens, reversed_gens, order_limit=order, budget=budget_for(engine))
    except TooLarge as e:
        if e.context.get("limit") == "order":
            # le sous-groupe graphe dépasse |G| : pas d'isomorphisme
            return DualityVerdict(False, "graph")
        return DualityVerdict(None, "declined", e.message)
    logger.debug("graph subgroup order %d against |G| = %d", graph_order, order)
    return DualityVerdict(graph_order == order, "graph")
