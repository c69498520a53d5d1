"""
Orchestrateur du recensement.

Construit la liste des tâches (diagramme → classes de systèmes de base →
premier), les exécute en parallèle dans un pool de processus, puis produit
les tables TSV/JSON dans un ordre déterministe, indépendant du nombre de
workers.
"""

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from coxeter import BasicSystem, StringDiagram, all_rank4_diagrams, census_classes, parse_system
from fp import FieldCtx
from helper.cache import cache_size, clear_cache
from helper.context import AnalysisContext

from .config import CoxmodConfig
from .metrics import JobMetrics, get_metrics, print_summary as print_metrics_summary

logger = logging.getLogger(__name__)

CENSUS_COLUMNS = ["schlafli", "labels", "p", "generic", "rad_dim", "epsilon", "order", "named",
                  "cgroup", "self_dual", "f0", "f1", "f2", "f3", "facet_id", "vfig_id", "error"]


@dataclass
class JobResult:
    """Résultat d'une tâche (système, p) : rapport sans minutage et métriques."""
    system: str
    p: int
    report: Dict[str, Any]
    metrics: JobMetrics

    @property
    def success(self) -> bool:
        return self.report.get("error") is None

    def sort_key(self) -> Tuple:
        return (parse_system(self.system).sort_key(), self.p)


def _run_job(system_text: str, p: int, config: CoxmodConfig, data_dir: Optional[str]) -> JobResult:
    """Exécutée dans un worker : une analyse complète."""
    # Import local : commands dépend de core
    from commands.analyze import analyze_system

    # un worker enchaîne des tâches : le cache ne survit pas à la tâche précédente
    dropped = cache_size()
    clear_cache()
    logger.debug("job %s p=%d: dropped %d cached groups", system_text, p, dropped)
    metrics = JobMetrics(system=system_text, prime=p, start_time=time.time())
    report = analyze_system(parse_system(system_text), p, config, data_dir)
    metrics.end_time = time.time()
    metrics.success = report.ok
    metrics.error_message = report.error
    metrics.group_order = report.order
    return JobResult(system_text, p, report.to_dict(with_timing=False), metrics)


class JobExecutor:
    """Exécuteur des tâches de recensement."""

    def __init__(self, config: CoxmodConfig, threads: int = 0, data_dir: Optional[str] = None):
        self.config = config
        self.threads = threads if threads > 0 else (os.cpu_count() or 1)
        self.data_dir = data_dir

    def execute(self, jobs: Sequence[Tuple[BasicSystem, int]]) -> List[JobResult]:
        """
        Exécute les tâches et retourne les résultats dans l'ordre des tâches.

        Args:
            jobs: Couples (système, p)

        Returns:
            List[JobResult]: un résultat par tâche
        """
        texts = [(system.text, p) for system, p in jobs]
        if self.threads == 1 or len(texts) <= 1:
            return [_run_job(text, p, self.config, self.data_dir) for text, p in texts]
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            futures = [pool.submit(_run_job, text, p, self.config, self.data_dir) for text, p in texts]
            return [future.result() for future in futures]


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def census_row(report: Dict[str, Any]) -> Dict[str, Any]:
    """Ligne de recensement (colonnes CENSUS_COLUMNS) d'un rapport d'analyse."""
    system = parse_system(report["system"])
    invariants = report.get("invariants") or {}
    polytope = report.get("polytope") or {}
    faces = list(polytope.get("face_counts") or [])
    faces += [None] * (4 - len(faces))
    named = report.get("named")
    cgroup = report.get("cgroup")
    return {
        "schlafli": system.diagram.text,
        "labels": system.labels_text,
        "p": report["p"],
        "generic": report["genericity"]["generic"],
        "rad_dim": invariants.get("rad_dim"),
        "epsilon": invariants.get("epsilon"),
        "order": report.get("order"),
        "named": named["label"] if named else None,
        "cgroup": cgroup["is_cgroup"] if cgroup else None,
        "self_dual": polytope["self_dual"]["self_dual"] if polytope else None,
        "f0": faces[0], "f1": faces[1], "f2": faces[2], "f3": faces[3],
        "facet_id": polytope.get("facet_id"),
        "vfig_id": polytope.get("vfig_id"),
        "error": report.get("error"),
    }


class ReportManager:
    """Gestionnaire des tables de recensement."""

    def __init__(self):
        self.results: List[JobResult] = []

    def add_results(self, results: Sequence[JobResult]) -> None:
        self.results.extend(results)

    def sorted_results(self) -> List[JobResult]:
        return sorted(self.results, key=JobResult.sort_key)

    def rows(self) -> List[Dict[str, Any]]:
        return [census_row(r.report) for r in self.sorted_results()]

    def to_dataframe(self) -> pd.DataFrame:
        rows = [{col: _cell(row[col]) for col in CENSUS_COLUMNS} for row in self.rows()]
        return pd.DataFrame(rows, columns=CENSUS_COLUMNS)

    def to_tsv(self) -> str:
        return self.to_dataframe().to_csv(sep="\t", index=False, lineterminator="\n")

    def to_json(self) -> str:
        return json.dumps(self.rows(), indent=2, ensure_ascii=False)

    def write(self, output_dir: Path, stem: str) -> Tuple[Path, Path]:
        """
        Écrit `<stem>.tsv` et `<stem>.json`.

        Returns:
            Tuple[Path, Path]: chemins écrits
        """
        output_dir.mkdir(parents=True, exist_ok=True)
        tsv_path = output_dir / f"{stem}.tsv"
        json_path = output_dir / f"{stem}.json"
        tsv_path.write_text(self.to_tsv(), encoding="utf-8")
        json_path.write_text(self.to_json() + "\n", encoding="utf-8")
        return tsv_path, json_path

    def error_count(self) -> int:
        return sum(1 for r in self.results if not r.success)

    def print_census_summary(self) -> None:
        if not self.results:
            print("No census rows.")
            return
        failed = [r for r in self.sorted_results() if not r.success]
        print("\n--- Census Summary ---")
        print(f"  - Rows : {len(self.results)}")
        print(f"  - Errors : {len(failed)}")
        print(f"  - Duration : {sum(r.metrics.duration_seconds for r in self.results):.2f} seconds (cumulated)")
        for result in failed:
            print(f"  - {result.system} p={result.p}: {result.report['error']}")


class CensusOrchestrator:
    """
    Orchestrateur principal du recensement.

    Coordonne :
    - la construction des tâches (diagrammes, classes à p, premiers)
    - l'exécution parallèle
    - la production des tables et du résumé
    """

    def __init__(self, context: AnalysisContext):
        self.context = context
        self.config = context.config
        self.report_manager = ReportManager()

    def diagrams(self, schlafli: Optional[Sequence[StringDiagram]]) -> List[StringDiagram]:
        """Diagrammes demandés, ou tous ceux de rang 4, dans l'ordre canonique."""
        chosen = list(schlafli) if schlafli else all_rank4_diagrams()
        return sorted(chosen, key=StringDiagram.sort_key)

    def build_jobs(self, diagrams: Sequence[StringDiagram], primes: Sequence[int]) -> List[Tuple[BasicSystem, int]]:
        census = self.config.census
        jobs = []
        for diagram in diagrams:
            for p in primes:
                ctx = FieldCtx(p)
                for system in census_classes(diagram, ctx, census.identify_reversal, census.infinity_ratio_one):
                    jobs.append((system, p))
        jobs.sort(key=lambda job: (job[0].sort_key(), job[1]))
        logger.info("census: %d jobs over %d diagrams", len(jobs), len(diagrams))
        return jobs

    def run(self, schlafli: Optional[Sequence[StringDiagram]] = None,
            primes: Optional[Sequence[int]] = None, threads: Optional[int] = None) -> ReportManager:
        """
        Exécute le recensement.

        Args:
            schlafli: Diagrammes (défaut : tous les diagrammes de rang 4)
            primes: Premiers (défaut : configuration)
            threads: Workers (défaut : configuration ; 0 = parallélisme disponible)

        Returns:
            ReportManager: résultats triés prêts à écrire
        """
        primes = list(primes) if primes else list(self.config.census.primes)
        threads = self.config.census.threads if threads is None else threads
        jobs = self.build_jobs(self.diagrams(schlafli), primes)
        executor = JobExecutor(self.config, threads, str(self.context.data_dir()))
        results = executor.execute(jobs)
        metrics = get_metrics()
        for result in results:
            metrics.record(result.metrics)
        self.report_manager.add_results(results)
        return self.report_manager

    def print_summaries(self) -> None:
        self.report_manager.print_census_summary()
        print_metrics_summary()
