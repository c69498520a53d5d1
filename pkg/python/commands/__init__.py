"""
Sous-commandes de la ligne de commande coxmod.

L'import de ce paquet enregistre chaque sous-commande dans le registry
global (core.registry).
"""

from . import analyze, census, basic_systems, tc, dual_check
from .analyze import AnalysisReport, analyze_system
from .census import run_census

__all__ = [
    "analyze",
    "census",
    "basic_systems",
    "tc",
    "dual_check",
    "AnalysisReport",
    "analyze_system",
    "run_census",
]
