"""
Module de configuration centralisée pour coxmod.

Ce module définit les structures de données pour la configuration
(moteur de groupes, recensement, énumération de classes latérales,
données) et fournit des utilitaires pour la charger et la valider.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List

import yaml


@dataclass
class EngineConfig:
    """Seuils du moteur de groupes de matrices."""
    element_threshold: int = 2_000_000
    memory_budget_mb: int = 4096
    duality_order_limit: int = 10_000_000
    max_matrix_order: int = 1_000_000
    spherical_shortcut: bool = True


@dataclass
class CensusConfig:
    """Configuration du recensement."""
    primes: List[int] = field(default_factory=lambda: [3, 5, 7, 11, 13])
    threads: int = 0  # 0 = parallélisme disponible
    infinity_ratio_one: bool = False
    identify_reversal: bool = True
    output_dir: str = "output"


@dataclass
class CosetConfig:
    """Configuration de l'énumération de Todd–Coxeter."""
    max_cosets: int = 10_000_000
    presentations_dir: str = "data/presentations"


@dataclass
class DataConfig:
    """Emplacement des données versionnées (catalogues, tables de référence)."""
    data_dir: str = "data"


@dataclass
class CoxmodConfig:
    """Configuration complète."""
    engine: EngineConfig = field(default_factory=EngineConfig)
    census: CensusConfig = field(default_factory=CensusConfig)
    coset: CosetConfig = field(default_factory=CosetConfig)
    data: DataConfig = field(default_factory=DataConfig)

    def validate(self) -> List[str]:
        """Valide la configuration et retourne une liste d'erreurs."""
        errors = []

        if self.engine.element_threshold < 1:
            errors.append("element-threshold doit être positif")
        if self.engine.memory_budget_mb < 1:
            errors.append("memory-budget-mb doit être positif")
        if self.engine.duality_order_limit < 1:
            errors.append("duality-order-limit doit être positif")
        if self.engine.max_matrix_order < 1:
            errors.append("max-matrix-order doit être positif")

        if not self.census.primes:
            errors.append("primes ne peut pas être vide")
        for p in self.census.primes:
            if not isinstance(p, int) or p < 3 or p % 2 == 0:
                errors.append(f"prime invalide : {p!r}")
        if self.census.threads < 0:
            errors.append("threads ne peut pas être négatif")
        if not self.census.output_dir:
            errors.append("output-dir ne peut pas être vide")

        if self.coset.max_cosets < 1:
            errors.append("max-cosets doit être positif")
        if not self.data.data_dir:
            errors.append("data-dir ne peut pas être vide")

        return errors

    def resolve(self, base_dir: Path, relative: str) -> Path:
        """Chemin absolu d'un répertoire de configuration relatif à base_dir."""
        path = Path(relative)
        return path if path.is_absolute() else base_dir / path


class ConfigLoader:
    """Chargeur de configuration depuis les fichiers YAML."""

    def __init__(self, config_path: Path):
        self.config_path = config_path

    def load(self) -> CoxmodConfig:
        """Charge la configuration depuis le fichier YAML."""
        if not self.config_path.exists():
            raise FileNotFoundError(f"Fichier de configuration non trouvé : {self.config_path}")

        with self.config_path.open('r', encoding='utf-8') as config_file:
            config_data = yaml.safe_load(config_file) or {}

        return config_from_dict(config_data)


def config_from_dict(config_data: Dict[str, Any]) -> CoxmodConfig:
    """Construit et valide une configuration à partir d'un dictionnaire au format YAML."""
    engine = config_data.get("engine", {}) or {}
    census = config_data.get("census", {}) or {}
    coset = config_data.get("coset", {}) or {}
    data = config_data.get("data", {}) or {}

    engine_config = EngineConfig(
        element_threshold=int(engine.get("element-threshold", 2_000_000)),
        memory_budget_mb=int(engine.get("memory-budget-mb", 4096)),
        duality_order_limit=int(engine.get("duality-order-limit", 10_000_000)),
        max_matrix_order=int(engine.get("max-matrix-order", 1_000_000)),
        spherical_shortcut=bool(engine.get("spherical-shortcut", True))
    )

    census_config = CensusConfig(
        primes=list(census.get("primes", [3, 5, 7, 11, 13])),
        threads=int(census.get("threads", 0)),
        infinity_ratio_one=bool(census.get("infinity-ratio-one", False)),
        identify_reversal=bool(census.get("identify-reversal", True)),
        output_dir=census.get("output-dir", "output")
    )

    coset_config = CosetConfig(
        max_cosets=int(coset.get("max-cosets", 10_000_000)),
        presentations_dir=coset.get("presentations-dir", "data/presentations")
    )

    data_config = DataConfig(data_dir=data.get("data-dir", "data"))

    config = CoxmodConfig(
        engine=engine_config,
        census=census_config,
        coset=coset_config,
        data=data_config
    )

    # Validation de la configuration
    errors = config.validate()
    if errors:
        raise ValueError(f"Configuration invalide : {'; '.join(errors)}")

    return config


def create_default_config() -> Dict[str, Any]:
    """Crée une configuration par défaut."""
    return {
        "engine": {
            "element-threshold": 2_000_000,
            "memory-budget-mb": 4096,
            "duality-order-limit": 10_000_000,
            "max-matrix-order": 1_000_000,
            "spherical-shortcut": True
        },
        "census": {
            "primes": [3, 5, 7, 11, 13],
            "threads": 0,
            "infinity-ratio-one": False,
            "identify-reversal": True,
            "output-dir": "output"
        },
        "coset": {
            "max-cosets": 10_000_000,
            "presentations-dir": "data/presentations"
        },
        "data": {
            "data-dir": "data"
        }
    }
