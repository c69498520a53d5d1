"""
Métriques d'exécution des analyses et du recensement.

Chaque tâche (système de base × premier) produit un JobMetrics ; RunMetrics
les agrège pour le résumé affiché en fin de recensement. Les métriques ne
sont jamais écrites dans les tables TSV/JSON du recensement.
"""

import json
import time
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional


@dataclass
class JobMetrics:
    """Métriques d'une tâche d'analyse."""
    system: str
    prime: int
    start_time: float
    end_time: Optional[float] = None
    success: bool = True
    error_message: Optional[str] = None
    group_order: Optional[int] = None
    memory_usage_mb: float = 0.0

    @property
    def duration_seconds(self) -> float:
        return (self.end_time or time.time()) - self.start_time

    def to_dict(self) -> Dict[str, Any]:
        return {
            'system': self.system,
            'prime': self.prime,
            'start_time': self.start_time,
            'end_time': self.end_time,
            'duration_seconds': self.duration_seconds,
            'success': self.success,
            'error_message': self.error_message,
            'group_order': self.group_order,
            'memory_usage_mb': self.memory_usage_mb
        }


class RunMetrics:
    """
    Agrégation des métriques d'une exécution (une commande analyze ou un
    recensement complet).
    """

    def __init__(self):
        self.start_time = time.time()
        self.jobs: List[JobMetrics] = []

    def record(self, metrics: JobMetrics) -> None:
        """Ajoute une tâche mesurée dans un worker."""
        self.jobs.append(metrics)

    def get_summary(self) -> Dict[str, Any]:
        """
        Génère le résumé des métriques.

        Returns:
            Dict: Résumé (durées, succès, ordre maximal, erreurs par type)
        """
        total = len(self.jobs)
        successful = sum(1 for job in self.jobs if job.success)
        durations = [job.duration_seconds for job in self.jobs]
        orders = [job.group_order for job in self.jobs if job.group_order is not None]
        memory = [job.memory_usage_mb for job in self.jobs]
        return {
            'summary': {
                'total_duration_seconds': time.time() - self.start_time,
                'total_jobs': total,
                'successful_jobs': successful,
                'failed_jobs': total - successful,
                'success_rate': successful / total if total > 0 else 0
            },
            'performance': {
                'average_duration_seconds': sum(durations) / len(durations) if durations else 0,
                'max_duration_seconds': max(durations) if durations else 0,
                'largest_group_order': max(orders) if orders else 0,
                'peak_memory_mb': max(memory) if memory else 0
            },
            'jobs_by_prime': self._group_by_prime(),
            'error_summary': self._group_errors()
        }

    def export_metrics(self, output_path: Path) -> Path:
        """Exporte les métriques au format JSON."""
        export_data = {
            'summary': self.get_summary(),
            'jobs': [job.to_dict() for job in self.jobs]
        }
        with open(output_path, 'w', encoding='utf-8') as f:
            json.dump(export_data, f, indent=2, ensure_ascii=False)
        return output_path

    def print_summary(self) -> None:
        """Affiche un résumé des métriques dans la console."""
        summary = self.get_summary()

        print("\n" + "=" * 70)
        print("RÉSUMÉ DU RECENSEMENT")
        print("=" * 70)
        print(f"Durée totale: {summary['summary']['total_duration_seconds']:.2f} secondes")
        print(f"Tâches: {summary['summary']['successful_jobs']}/{summary['summary']['total_jobs']} réussies "
              f"({summary['summary']['success_rate'] * 100:.1f}%)")
        print(f"Plus grand ordre calculé: {summary['performance']['largest_group_order']:,}")
        print(f"Durée max d'une tâche: {summary['performance']['max_duration_seconds']:.2f}s")

        print("\nPAR PREMIER:")
        for prime, data in sorted(summary['jobs_by_prime'].items()):
            print(f"   - p={prime}: {data['success']}/{data['total']} ({data['total_duration']:.2f}s)")

        if summary['error_summary']:
            print("\nERREURS:")
            for error, count in summary['error_summary'].items():
                print(f"   - {error}: {count} occurrence(s)")

        print("=" * 70)

    def _group_by_prime(self) -> Dict[int, Dict[str, Any]]:
        result: Dict[int, Dict[str, Any]] = defaultdict(lambda: {'total': 0, 'success': 0, 'total_duration': 0.0})
        for job in self.jobs:
            result[job.prime]['total'] += 1
            result[job.prime]['total_duration'] += job.duration_seconds
            if job.success:
                result[job.prime]['success'] += 1
        return dict(result)

    def _group_errors(self) -> Dict[str, int]:
        """Groupe les erreurs par type (préfixe avant ':')."""
        errors: Dict[str, int] = defaultdict(int)
        for job in self.jobs:
            if not job.success and job.error_message:
                errors[job.error_message.split(":", 1)[0]] += 1
        return dict(errors)


# Instance globale du système de métriques
_metrics: Optional[RunMetrics] = None


def get_metrics() -> RunMetrics:
    global _metrics
    if _metrics is None:
        _metrics = RunMetrics()
    return _metrics


def reset_metrics() -> None:
    """Réinitialise les métriques globales."""
    global _metrics
    _metrics = None


def print_summary() -> None:
    get_metrics().print_summary()
