import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Sequence

from core.config import CoxmodConfig
from core.exceptions import ConfigurationException, CoxmodException
from fp import FieldCtx


@dataclass
class AnalysisContext:
    """Objet contenant tout le contexte d'exécution d'une commande coxmod."""
    args: argparse.Namespace
    config: CoxmodConfig = field(default_factory=CoxmodConfig)
    base_dir: Path = field(default_factory=lambda: Path(__file__).resolve().parent.parent.parent)

    def data_dir(self) -> Path:
        return self.config.resolve(self.base_dir, self.config.data.data_dir)

    def output_dir(self) -> Path:
        """Répertoire de sortie : --output s'il est donné, sinon celui de la configuration."""
        output = getattr(self.args, "output", None)
        if output:
            return Path(output)
        return self.config.resolve(self.base_dir, self.config.census.output_dir)

    def presentations_dir(self) -> Path:
        return self.config.resolve(self.base_dir, self.config.coset.presentations_dir)


def field_contexts(primes: Sequence[int]) -> List[FieldCtx]:
    """
    Contextes de corps des premiers donnés en ligne de commande.

    Raises:
        ConfigurationException: si une valeur n'est pas un premier impair
    """
    try:
        return [FieldCtx(p) for p in primes]
    except CoxmodException as e:
        raise ConfigurationException(e.message, config_key="prime") from e
