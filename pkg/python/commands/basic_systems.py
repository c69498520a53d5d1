"""
Sous-commande basic-systems : systèmes de base d'un diagramme, et leurs
classes de recensement à un premier donné.
"""

import json

from core.registry import register_command
from coxeter import cartan, diagonal_class, enumerate_basic_systems, parse_schlafli
from helper.context import AnalysisContext, field_contexts


def configure_parser(parser) -> None:
    parser.add_argument("schlafli", help="Symbole, ex: [6,3,6]")
    parser.add_argument("-p", "--prime", type=int, help="Grouper en classes de recensement à p")
    parser.add_argument("--infinity-ratio-one", action="store_true",
                        help="Inclure le rapport 1 pour les branches infinies")
    parser.add_argument("--no-reversal", action="store_true",
                        help="Ne pas identifier un diagramme palindromique avec son renversé")


@register_command("basic-systems", configure_parser, help="Lister les systèmes de base d'un diagramme")
def run_basic_systems(context: AnalysisContext) -> int:
    args = context.args
    identify_reversal = not args.no_reversal
    diagram = parse_schlafli(args.schlafli)
    ctx = field_contexts([args.prime])[0] if args.prime else None
    systems = enumerate_basic_systems(diagram, identify_reversal, args.infinity_ratio_one)
    rows = []
    classes = {}
    for system in systems:
        row = {"system": system.text, "cartan": cartan(system).to_list()}
        if ctx is not None:
            key = diagonal_class(system, ctx, identify_reversal)
            row["class"] = classes.setdefault(key, len(classes))
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"--- {diagram.text}: {len(rows)} basic system(s) ---")
    for row in rows:
        suffix = f"  class {row['class']}" if "class" in row else ""
        print(f"  - {row['system']}{suffix}")
    if args.prime:
        print(f"  {len(classes)} census class(es) at p={args.prime}")
    return 0
