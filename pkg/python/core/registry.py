"""
Registry des sous-commandes de la ligne de commande.

Chaque sous-commande (analyze, census, basic-systems, tc, dual-check) s'y
enregistre avec son gestionnaire et sa fonction de configuration du
sous-parseur ; coxmod.main dispatche à travers ce registry.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional


@dataclass
class RegistryEntry:
    """Entrée du registry pour une sous-commande."""
    handler: Callable
    configure_parser: Optional[Callable] = None
    help: str = ""
    enabled: bool = True


class CommandRegistry:
    """
    Registry des sous-commandes.

    Un gestionnaire reçoit un AnalysisContext et retourne le code de sortie.
    """

    def __init__(self):
        self._registry: Dict[str, RegistryEntry] = {}

    def register(self, name: str, handler: Callable, configure_parser: Optional[Callable] = None,
                 help: str = "", enabled: bool = True) -> None:
        """
        Enregistre une sous-commande.

        Args:
            name: Nom de la sous-commande (ex: "census")
            handler: Fonction (context) -> code de sortie
            configure_parser: Fonction (sous-parseur) -> None ajoutant les options
            help: Aide courte affichée par argparse
            enabled: Si la commande est proposée

        Raises:
            ValueError: si le nom est déjà enregistré
        """
        if name in self._registry:
            raise ValueError(f"Command '{name}' already registered")
        self._registry[name] = RegistryEntry(handler, configure_parser, help, enabled)

    def get(self, name: str) -> Optional[RegistryEntry]:
        return self._registry.get(name)

    def get_enabled_commands(self) -> List[str]:
        return [name for name, entry in self._registry.items() if entry.enabled]

    def is_registered(self, name: str) -> bool:
        return name in self._registry

    def validate(self) -> List[str]:
        """Retourne la liste des erreurs de validation du registry."""
        errors = []
        for name, entry in self._registry.items():
            if not callable(entry.handler):
                errors.append(f"gestionnaire non appelable pour la commande '{name}'")
            if not entry.help:
                errors.append(f"aide manquante pour la commande '{name}'")
        return errors


# Instance globale du registry
_global_registry = CommandRegistry()


def get_registry() -> CommandRegistry:
    """Récupère l'instance globale du registry."""
    return _global_registry


def register_command(name: str, configure_parser: Optional[Callable] = None, help: str = ""):
    """
    Décorateur enregistrant une sous-commande dans le registry global.

    Usage:
        @register_command("census", configure_parser=add_census_args, help="...")
        def run_census(context): ...
    """
    def decorator(handler: Callable) -> Callable:
        if not _global_registry.is_registered(name):
            _global_registry.register(name, handler, configure_parser, help)
        return handler
    return decorator
