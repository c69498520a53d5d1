"""
Budget mémoire des calculs de groupes.

Ce module surveille la mémoire résidente du processus (psutil) pendant
les constructions BSGS et les énumérations : dépasser le budget lève
TooLarge, qui devient une erreur de ligne dans le recensement plutôt
qu'un arrêt du processus.
"""

import time
from dataclasses import dataclass
from typing import Dict, Optional

import psutil

from .exceptions import TooLarge


@dataclass
class MemoryMetrics:
    """Métriques d'utilisation mémoire."""
    baseline_mb: float = 0.0
    peak_usage_mb: float = 0.0
    checks: int = 0
    refusals: int = 0
    last_check_time: float = 0.0


class MemoryBudget:
    """
    Budget mémoire d'un processus de calcul.

    Le budget porte sur la mémoire résidente totale du processus ; les
    appelants vérifient périodiquement (tous les quelques milliers de
    points d'orbite ou de classes latérales), pas à chaque opération.
    """

    def __init__(self, max_memory_mb: int = 4096):
        """
        Initialise le budget.

        Args:
            max_memory_mb: Limite de mémoire résidente en MB (défaut: 4 GiB)
        """
        self.max_memory_mb = max_memory_mb
        self.process = psutil.Process()
        self.metrics = MemoryMetrics(baseline_mb=self.current_usage_mb())
        self.metrics.peak_usage_mb = self.metrics.baseline_mb

    def current_usage_mb(self) -> float:
        return self.process.memory_info().rss / 1024 / 1024

    def check(self, what: str = "computation", size: Optional[int] = None):
        """
        Vérifie le budget.

        Args:
            what: Description du calcul en cours (pour le message d'erreur)
            size: Taille courante de la structure (points, classes)

        Raises:
            TooLarge: si la mémoire résidente dépasse la limite
        """
        usage = self.current_usage_mb()
        self.metrics.checks += 1
        self.metrics.last_check_time = time.time()
        self.metrics.peak_usage_mb = max(self.metrics.peak_usage_mb, usage)
        if usage > self.max_memory_mb:
            self.metrics.refusals += 1
            raise TooLarge(
                f"memory budget of {self.max_memory_mb}MB exceeded during {what}",
                size=size, bound=self.max_memory_mb,
                details=f"resident memory {usage:.1f}MB")

    def get_memory_stats(self) -> Dict:
        """
        Retourne les statistiques d'utilisation mémoire.

        Returns:
            Dict: Statistiques du budget et du système
        """
        system_memory = psutil.virtual_memory()
        return {
            "budget": {
                "max_memory_mb": self.max_memory_mb,
                "baseline_mb": self.metrics.baseline_mb,
                "peak_usage_mb": self.metrics.peak_usage_mb,
                "checks": self.metrics.checks,
                "refusals": self.metrics.refusals,
            },
            "system": {
                "total_memory_mb": system_memory.total / 1024 / 1024,
                "available_memory_mb": system_memory.available / 1024 / 1024,
                "memory_percentage": system_memory.percent,
                "process_memory_mb": self.current_usage_mb(),
            },
        }

    def print_memory_summary(self):
        """Affiche un résumé de l'utilisation mémoire."""
        stats = self.get_memory_stats()

        print("\n" + "=" * 60)
        print("MEMORY SUMMARY")
        print("=" * 60)

        budget = stats["budget"]
        print(f"Budget: {budget['max_memory_mb']}MB, peak {budget['peak_usage_mb']:.1f}MB")
        print(f"Checks: {budget['checks']} ({budget['refusals']} refused)")

        system = stats["system"]
        print(f"System memory: {system['memory_percentage']:.1f}% used")
        print(f"Process: {system['process_memory_mb']:.1f}MB")
        print("=" * 60)


# Instance globale du budget mémoire
_memory_budget: Optional[MemoryBudget] = None


def get_memory_budget(max_memory_mb: Optional[int] = None) -> MemoryBudget:
    """
    Retourne l'instance globale du budget mémoire.

    Args:
        max_memory_mb: Nouvelle limite (remplace l'instance si elle diffère)

    Returns:
        MemoryBudget: Instance du budget
    """
    global _memory_budget
    if _memory_budget is None:
        _memory_budget = MemoryBudget(max_memory_mb if max_memory_mb is not None else 4096)
    elif max_memory_mb is not None and max_memory_mb != _memory_budget.max_memory_mb:
        _memory_budget = MemoryBudget(max_memory_mb)
    return _memory_budget


def print_memory_summary():
    """Fonction utilitaire pour afficher le résumé mémoire."""
    get_memory_budget().print_memory_summary()
