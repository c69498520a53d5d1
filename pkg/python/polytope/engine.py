"""
Accès partagé au moteur de groupes pour le module polytope : seuils de
configuration, budget mémoire et constructions BSGS mémoïsées.
"""

from typing import Optional, Sequence

from core.config import EngineConfig
from core.memory_manager import MemoryBudget, get_memory_budget
from fp import FpMatrix
from helper.cache import cached_bsgs
from matgroup import BsgsGroup


def engine_or_default(engine: Optional[EngineConfig]) -> EngineConfig:
    return engine if engine is not None else EngineConfig()


def budget_for(engine: EngineConfig) -> MemoryBudget:
    return get_memory_budget(engine.memory_budget_mb)


def group_of(gens: Sequence[FpMatrix], engine: EngineConfig, n: Optional[int] = None,
             p: Optional[int] = None) -> BsgsGroup:
    """BSGS mémoïsé de ⟨gens⟩ sous le budget mémoire de la configuration."""
    return cached_bsgs(list(gens), n=n, p=p, budget=budget_for(engine))


def section(gens: Sequence[FpMatrix], indices: Sequence[int], engine: EngineConfig) -> BsgsGroup:
    """Sous-groupe standard ⟨r_j : j ∈ indices⟩."""
    return group_of([gens[j] for j in indices], engine, n=gens[0].n, p=gens[0].p)
