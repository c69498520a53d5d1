"""
Sous-commande census : recensement des systèmes de base d'un ou de tous
les diagrammes de rang 4 sur une liste de premiers.
"""

import logging
from typing import List, Optional

from core.memory_manager import print_memory_summary
from core.metrics import get_metrics
from core.orchestrator import CensusOrchestrator, ReportManager
from core.registry import register_command
from coxeter import StringDiagram, parse_schlafli
from helper.context import AnalysisContext, field_contexts

logger = logging.getLogger(__name__)


def run_census(context: AnalysisContext, schlafli: Optional[List[StringDiagram]] = None,
               primes: Optional[List[int]] = None, threads: Optional[int] = None) -> ReportManager:
    """
    Recensement programmatique.

    Args:
        context: Contexte (configuration, répertoires)
        schlafli: Diagrammes ; None pour tous les diagrammes de rang 4
        primes: Premiers ; None pour ceux de la configuration
        threads: Workers ; None pour la configuration

    Returns:
        ReportManager: lignes triées (diagramme, étiquettes, p)
    """
    return CensusOrchestrator(context).run(schlafli, primes, threads)


def configure_parser(parser) -> None:
    parser.add_argument("schlafli", nargs="+", help="Symboles, ex: [6,6,3] ; ALL pour tout le rang 4")
    parser.add_argument("-p", "--primes", type=int, nargs="+", help="Premiers (défaut : configuration)")
    parser.add_argument("--infinity-ratio-one", action="store_true",
                        help="Inclure le rapport 1 pour les branches infinies")
    parser.add_argument("--no-reversal", action="store_true",
                        help="Ne pas identifier un diagramme palindromique avec son renversé")
    parser.add_argument("--stem", default="census", help="Nom des fichiers TSV/JSON écrits")


@register_command("census", configure_parser, help="Recenser les systèmes de base de diagrammes")
def run_census_command(context: AnalysisContext) -> int:
    """
    Sous-commande census.

    Returns:
        int: 0 si toutes les lignes aboutissent, 2 sinon
    """
    args = context.args
    if args.infinity_ratio_one:
        context.config.census.infinity_ratio_one = True
    if args.no_reversal:
        context.config.census.identify_reversal = False
    if args.primes:
        field_contexts(args.primes)
    everything = [s for s in args.schlafli if s.upper() == "ALL"]
    diagrams = None if everything else [parse_schlafli(s) for s in args.schlafli]

    orchestrator = CensusOrchestrator(context)
    manager = orchestrator.run(diagrams, args.primes, args.threads)
    tsv_path, json_path = manager.write(context.output_dir(), args.stem)
    metrics_path = get_metrics().export_metrics(context.output_dir() / f"{args.stem}_metrics.json")
    logger.info("census: %d rows, %d errors, written to %s", len(manager.rows()), manager.error_count(), tsv_path)
    if args.json:
        print(manager.to_json())
    else:
        print(manager.to_tsv(), end="")
        print(f"\nCensus written to : {tsv_path} and {json_path}")
        print(f"Metrics written to : {metrics_path}")
        orchestrator.print_summaries()
        if args.verbose:
            print_memory_summary()
    return 0 if manager.error_count() == 0 else 2
