"""
Sous-commande tc : énumération de Todd–Coxeter d'un fichier .pres, avec
certification optionnelle par l'oracle matriciel.
"""

import json
import logging
from pathlib import Path

from core.exceptions import ConfigurationException
from core.registry import register_command
from coset import certification_status, enumerate_table, is_closed, load_presentation, reference_of
from helper.context import AnalysisContext
from matgroup import parse_word

logger = logging.getLogger(__name__)


def _resolve(context: AnalysisContext, name: str) -> Path:
    path = Path(name)
    if path.exists():
        return path
    candidate = context.presentations_dir() / name
    if candidate.suffix != ".pres":
        candidate = candidate.with_suffix(".pres")
    return candidate


def configure_parser(parser) -> None:
    parser.add_argument("presentation", help="Fichier .pres (chemin ou nom dans le répertoire des présentations)")
    parser.add_argument("--subgroup", nargs="*", help="Mots générateurs du sous-groupe (défaut : lignes sub)")
    parser.add_argument("--trivial", action="store_true", help="Sous-groupe trivial (ordre du groupe)")
    parser.add_argument("--validate", action="store_true",
                        help="Comparer à l'ordre du groupe matriciel du système de référence")


@register_command("tc", configure_parser, help="Énumérer les classes latérales d'une présentation")
def run_tc(context: AnalysisContext) -> int:
    args = context.args
    pres = load_presentation(_resolve(context, args.presentation))
    max_cosets = context.config.coset.max_cosets
    if args.trivial:
        words = []
    elif args.subgroup is not None:
        words = [parse_word(w) for w in args.subgroup]
    else:
        words = None
    table = enumerate_table(pres, words, max_cosets)
    result = {"name": pres.name, "index": table.index, "closed": is_closed(table, pres)}

    if args.validate:
        if reference_of(pres) is None:
            raise ConfigurationException(
                "presentation has no 'system' and 'prime' metadata to validate against",
                config_file=str(args.presentation))
        status = certification_status(pres, max_cosets, context.config.engine)
        declared = pres.metadata.get("status")
        result["validated"] = status == "certified"
        result["status"] = status
        result["declared_status"] = declared
        if declared is not None and declared != status:
            logger.warning("%s: declared status %r but computed %r", pres.name, declared, status)

    if args.json:
        print(json.dumps(result, indent=2, ensure_ascii=False))
    else:
        print(f"--- {pres.name or args.presentation} ---")
        print(f"  - index : {table.index}")
        print(f"  - closed : {result['closed']}")
        if "validated" in result:
            print(f"  - matches matrix group : {result['validated']}")
            print(f"  - status : {result['status']} (declared : {result['declared_status']})")
    return 0 if result.get("validated", True) else 2
