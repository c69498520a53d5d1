"""
Sous-commande dual-check : auto-dualité et opérations de mélange.
"""

import json

from core.registry import register_command
from coxeter import cartan, parse_system, reflection_generators
from helper.context import AnalysisContext, field_contexts
from polytope import mixing, self_dual


def configure_parser(parser) -> None:
    parser.add_argument("system", help="Système de base, ex: [6,3,6]@1,3,3,1")
    parser.add_argument("-p", "--prime", type=int, required=True, help="Premier impair")
    parser.add_argument("--force-graph", action="store_true",
                        help="Décider par le sous-groupe graphe même pour un diagramme palindromique")
    parser.add_argument("--recipe", help="Recette de mélange : nom (dual, great, ...) ou mots séparés par des virgules")


@register_command("dual-check", configure_parser, help="Tester l'auto-dualité et appliquer un mélange")
def run_dual_check(context: AnalysisContext) -> int:
    args = context.args
    system = parse_system(args.system)
    ctx = field_contexts([args.prime])[0]
    gens = reflection_generators(system, ctx)
    engine = context.config.engine
    verdict = self_dual(gens, cartan(system), engine, force_graph=args.force_graph)
    result = {"system": system.text, "p": ctx.p, "self_dual": verdict.to_dict()}
    if args.recipe:
        result["mixing"] = mixing(gens, args.recipe, engine).to_dict()

    if args.json:
        print(json.dumps(result, indent=2, ensure_ascii=False))
    else:
        print(f"--- {system.text} at p={ctx.p} ---")
        print(f"  - self-dual : {verdict.text} ({verdict.method}{', ' + verdict.reason if verdict.reason else ''})")
        if "mixing" in result:
            mix = result["mixing"]
            print(f"  - mixing {mix['recipe']} : order {mix['order']}, index {mix['index']}, "
                  f"symbol {mix['schlafli']}")
    return 0 if verdict.value is not None else 2
