"""
Certification d'une présentation par l'oracle matriciel.
"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple

from core.config import EngineConfig
from core.exceptions import DimensionMismatch
from coxeter import BasicSystem, parse_system, reflection_generators
from fp import FieldCtx
from helper.cache import cached_bsgs
from core.memory_manager import get_memory_budget

from .presentation import Presentation, load_presentation
from .todd_coxeter import DEFAULT_MAX_COSETS, enumerate

logger = logging.getLogger(__name__)


def matrix_order(pres: Presentation, system: BasicSystem, ctx: FieldCtx,
                 engine: Optional[EngineConfig] = None) -> int:
    """
    Ordre de ⟨r_0, ..., r_{N-1}⟩, les N premières réflexions du système.

    Raises:
        DimensionMismatch: le système a moins de générateurs que la présentation
    """
    if system.rank < pres.ngens:
        raise DimensionMismatch(
            f"presentation has {pres.ngens} generators but {system.text} has rank {system.rank}")
    engine = engine if engine is not None else EngineConfig()
    gens = reflection_generators(system, ctx)[:pres.ngens]
    group = cached_bsgs(gens, n=system.rank, p=ctx.p, budget=get_memory_budget(engine.memory_budget_mb))
    return group.order()


def validate_against_matrix(pres: Presentation, system: BasicSystem, ctx: FieldCtx,
                            max_cosets: int = DEFAULT_MAX_COSETS,
                            engine: Optional[EngineConfig] = None) -> bool:
    """
    Compare l'ordre énuméré (sous-groupe trivial) à l'ordre BSGS.

    Args:
        pres: Présentation à certifier
        system: Système de base dont les premières réflexions réalisent les générateurs
        ctx: Contexte du corps
        max_cosets: Limite de Todd–Coxeter

    Returns:
        bool: True si les deux ordres coïncident

    Raises:
        EnumerationOverflow: propagée depuis l'énumération
    """
    enumerated = enumerate(pres, [], max_cosets)
    expected = matrix_order(pres, system, ctx, engine)
    logger.info("%s: coset enumeration %d, matrix group %d at p=%d",
                pres.name or "presentation", enumerated, expected, ctx.p)
    return enumerated == expected


def reference_of(pres: Presentation) -> Optional[Tuple[BasicSystem, FieldCtx]]:
    """Système et premier de référence déclarés dans les métadonnées, s'il y en a."""
    if "system" not in pres.metadata or "prime" not in pres.metadata:
        return None
    return parse_system(pres.metadata["system"]), FieldCtx(int(pres.metadata["prime"]))


def load_presentations(directory: Path) -> List[Presentation]:
    """Toutes les présentations `*.pres` du répertoire, par nom de fichier."""
    return [load_presentation(path) for path in sorted(Path(directory).glob("*.pres"))]


def certification_status(pres: Presentation, max_cosets: int = DEFAULT_MAX_COSETS,
                         engine: Optional[EngineConfig] = None) -> str:
    """
    Statut calculé : certified, mismatch, ou uncertified sans référence.

    La valeur déclarée par la ligne `status` d'un .pres n'est pas lue ici.
    """
    reference = reference_of(pres)
    if reference is None:
        return "uncertified"
    system, ctx = reference
    return "certified" if validate_against_matrix(pres, system, ctx, max_cosets, engine) else "mismatch"
