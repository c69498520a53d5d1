import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

import commands  # noqa: F401  (enregistre les sous-commandes)
from core.config import ConfigLoader
from core.exceptions import ConfigurationException, CoxmodException, DiagramException, ParseError
from core.registry import get_registry
from helper.context import AnalysisContext

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ROW_ERROR = 2


def main(argv: Optional[List[str]] = None) -> int:
    """
    Point d'entrée de la ligne de commande coxmod.

    Workflow :
    1. Parsing des arguments (sous-commande et options communes)
    2. Chargement du .env puis de la configuration YAML
    3. Construction du contexte et dispatch par le registry

    Returns:
        int: 0 = tout est correct, 2 = au moins une ligne en erreur, 1 = erreur d'usage ou de syntaxe

    Example:
        >>> coxmod analyze "[4,4,3]@1,2,1,1" -p 3
        >>> coxmod census "[6,6,3]" -p 3 --threads 4 --json
    """
    args = create_arg_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    for problem in get_registry().validate():
        logger.warning("command registry: %s", problem)

    load_dotenv()
    base_dir = Path(__file__).resolve().parent.parent
    try:
        config_path = resolve_config_path(base_dir, args.config or os.getenv("COXMOD_CONFIG", "dev"))
        config = ConfigLoader(config_path).load()
    except (FileNotFoundError, ValueError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE

    context = AnalysisContext(args=args, config=config, base_dir=base_dir)
    entry = get_registry().get(args.command)
    if entry is None:
        print(f"ERROR: unknown command {args.command!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return entry.handler(context)
    except (ParseError, DiagramException, ConfigurationException) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CoxmodException as e:
        print(f"ERROR: {e.short()}", file=sys.stderr)
        return EXIT_ROW_ERROR


def resolve_config_path(base_dir: Path, name: str) -> Path:
    """`dev` → <base>/dev.yaml ; un chemin .yaml est pris tel quel."""
    path = Path(name)
    if path.suffix in (".yaml", ".yml"):
        return path if path.is_absolute() else Path.cwd() / path
    return base_dir / f"{name}.yaml"


class _ArgumentParser(argparse.ArgumentParser):
    """Les erreurs d'usage sortent avec le code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def create_arg_parser() -> argparse.ArgumentParser:
    """
    Crée le parser : une sous-commande par entrée du registry, chacune
    avec les options communes (placées après le nom de la sous-commande).

    Returns:
        argparse.ArgumentParser: Parser configuré
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="Sortie JSON déterministe")
    common.add_argument('-t', '--threads', type=int, default=None,
                        help="Workers du recensement (0 = parallélisme disponible)")
    common.add_argument('-f', '--config', default=None,
                        help="Configuration : nom (dev, prod) ou chemin .yaml ; défaut COXMOD_CONFIG ou dev")
    common.add_argument('-v', '--verbose', action='store_true', help="Journalisation DEBUG")
    common.add_argument('-o', '--output', default=None, help="Répertoire de sortie des tables")

    parser = _ArgumentParser(description="Groupes de réflexions modulo p et polytopes réguliers abstraits")
    subparsers = parser.add_subparsers(dest="command", required=True)
    registry = get_registry()
    for name in registry.get_enabled_commands():
        entry = registry.get(name)
        sub = subparsers.add_parser(name, help=entry.help, parents=[common])
        if entry.configure_parser is not None:
            entry.configure_parser(sub)
    return parser


if __name__ == "__main__":
    sys.exit(main())
