"""
Analyse complète d'un système de base à un premier p : généricité,
invariants de la forme, ordre et identification du groupe, test de
C-groupe et combinatoire du polytope.
"""

import json
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from core.config import CoxmodConfig
from core.exceptions import CoxmodException, TooLarge, handle_analysis_exceptions
from core.memory_manager import get_memory_budget
from core.registry import register_command
from coxeter import BasicSystem, cartan, gram_mod_p, is_generic, parse_system, reflection_generators
from fp import FieldCtx, form_invariants
from helper.cache import cached_bsgs
from helper.context import AnalysisContext, field_contexts
from ortho import identify, identify_by_invariants, spinor_profile
from polytope import intersection_screen, is_string_cgroup, polytope_report

logger = logging.getLogger(__name__)

REPORT_FIELDS = ("system", "p", "genericity", "invariants", "order", "named", "screen",
                 "cgroup", "polytope", "error", "timing_seconds")


@dataclass
class AnalysisReport:
    """
    Rapport d'analyse, en sections prêtes pour JSON.

    L'ordre des champs est fixe ; from_dict(to_dict()) redonne le rapport.
    """
    system: str
    p: int
    genericity: Dict[str, Any]
    invariants: Dict[str, Any]
    order: Optional[int] = None
    named: Optional[Dict[str, Any]] = None
    screen: Optional[Dict[str, Any]] = None
    cgroup: Optional[Dict[str, Any]] = None
    polytope: Optional[Dict[str, Any]] = None
    error: Optional[str] = None
    timing_seconds: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_dict(self, with_timing: bool = True) -> Dict[str, Any]:
        data = {name: getattr(self, name) for name in REPORT_FIELDS}
        if not with_timing:
            del data["timing_seconds"]
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AnalysisReport":
        return cls(**{name: data[name] for name in REPORT_FIELDS if name in data})

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_dict(with_timing), indent=2, ensure_ascii=False)


def _screen_dict(system: BasicSystem, ctx: FieldCtx) -> Optional[Dict[str, Any]]:
    verdict = intersection_screen(system, ctx)
    if not verdict.applicable:
        return None
    return {"predicts_failure": verdict.predicts_failure, "threshold": verdict.threshold}


@handle_analysis_exceptions
def _analyze(system: BasicSystem, ctx: FieldCtx, config: CoxmodConfig, data_dir: Optional[str],
             report: AnalysisReport) -> None:
    engine = config.engine
    gens = reflection_generators(system, ctx)
    invariants = form_invariants(gram_mod_p(system, ctx), ctx)
    profile = spinor_profile(system, ctx)
    report.invariants = invariants.to_dict()
    report.screen = _screen_dict(system, ctx)
    try:
        group = cached_bsgs(gens, n=system.rank, p=ctx.p,
                            budget=get_memory_budget(engine.memory_budget_mb))
    except TooLarge:
        predicted = identify_by_invariants(invariants, profile, ctx, data_dir)
        report.named = predicted.to_dict()
        raise
    report.order = group.order()
    report.named = identify(report.order, invariants, profile, ctx, data_dir).to_dict()
    verdict = is_string_cgroup(gens, engine)
    report.cgroup = verdict.to_dict()
    if verdict.is_cgroup:
        report.polytope = polytope_report(gens, cartan(system), engine, data_dir).to_dict()


def analyze_system(system: BasicSystem, p: int, config: Optional[CoxmodConfig] = None,
                   data_dir: Optional[str] = None) -> AnalysisReport:
    """
    Analyse un système de base à p.

    Les erreurs du moteur (TooLarge, NotPolyhedral, ...) ne sont pas levées :
    elles remplissent le champ `error` du rapport et l'analyse s'arrête là.

    Args:
        system: Système de base
        p: Premier impair
        config: Configuration (seuils du moteur)
        data_dir: Répertoire des catalogues

    Returns:
        AnalysisReport: rapport partiel en cas d'erreur
    """
    config = config if config is not None else CoxmodConfig()
    start = time.time()
    ctx = FieldCtx(p)
    report = AnalysisReport(system=system.text, p=p, genericity=is_generic(system, ctx).to_dict(),
                            invariants={})
    try:
        _analyze(system, ctx, config, data_dir, report)
    except CoxmodException as e:
        logger.info("%s at p=%d: %s", system.text, p, e.short())
        report.error = e.short()
    report.timing_seconds = time.time() - start
    return report


def print_report(report: AnalysisReport) -> None:
    """Affichage lisible d'un rapport."""
    print(f"--- {report.system} at p={report.p} ---")
    print(f"  - generic : {report.genericity['generic']}")
    if report.invariants:
        inv = report.invariants
        print(f"  - form : dim {inv['dim']}, radical {inv['rad_dim']}, epsilon {inv['epsilon']}")
    if report.order is not None:
        print(f"  - order : {report.order}")
    if report.named:
        print(f"  - group : {report.named['label']}")
        for note in report.named["notes"]:
            print(f"      ({note})")
    if report.screen:
        print(f"  - screen : threshold {report.screen['threshold']}, "
              f"predicts failure {report.screen['predicts_failure']}")
    if report.cgroup:
        print(f"  - C-group : {report.cgroup['is_cgroup']}")
        if not report.cgroup["is_cgroup"]:
            print(f"      failing range {report.cgroup['failing_range']}, "
                  f"|intersection| {report.cgroup['intersection_order']} > |middle| {report.cgroup['middle_order']}")
    if report.polytope:
        poly = report.polytope
        print(f"  - faces : {poly['face_counts']}")
        print(f"  - realized symbol : {poly['schlafli_realized']}, petrie {poly['petrie']}")
        print(f"  - self-dual : {poly['self_dual']['self_dual']} ({poly['self_dual']['method']})")
        if poly["facet_id"] or poly["vfig_id"]:
            print(f"  - facet : {poly['facet_id']}, vertex figure : {poly['vfig_id']}")
    if report.error:
        print(f"  - ERROR : {report.error}")
    print(f"  - duration : {report.timing_seconds:.2f}s")


def configure_parser(parser) -> None:
    parser.add_argument("system", help="Système de base, ex: [4,4,3]@1,2,1,1")
    parser.add_argument("-p", "--prime", type=int, nargs="+", required=True, help="Premier(s) impair(s)")


@register_command("analyze", configure_parser, help="Analyser un système de base à un ou plusieurs premiers")
def run_analyze(context: AnalysisContext) -> int:
    """
    Sous-commande analyze.

    Returns:
        int: 0 si toutes les analyses aboutissent, 2 sinon
    """
    system = parse_system(context.args.system)
    field_contexts(context.args.prime)
    reports = [analyze_system(system, p, context.config, str(context.data_dir()))
               for p in context.args.prime]
    if context.args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False))
    else:
        for report in reports:
            print_report(report)
    return 0 if all(r.ok for r in reports) else 2
