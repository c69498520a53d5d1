"""
Module core de coxmod.

Ce module contient les composants transverses :
- Configuration centralisée
- Exceptions personnalisées
- Registry des sous-commandes
- Budget mémoire et métriques

L'orchestrateur du recensement (core.orchestrator) s'importe explicitement.
"""

from .config import (
    CoxmodConfig,
    EngineConfig,
    CensusConfig,
    CosetConfig,
    DataConfig,
    ConfigLoader,
    config_from_dict,
    create_default_config
)
from .registry import (
    CommandRegistry,
    RegistryEntry,
    get_registry,
    register_command
)
from .memory_manager import (
    MemoryBudget,
    MemoryMetrics,
    get_memory_budget,
    print_memory_summary
)
from .metrics import (
    JobMetrics,
    RunMetrics,
    get_metrics,
    reset_metrics,
    print_summary
)
from .exceptions import (
    CoxmodException,
    DiagramException,
    BadBranchLabel,
    NonCrystallographic,
    ParseError,
    GroupException,
    DimensionMismatch,
    TooLarge,
    NotInvariant,
    NotInvolution,
    BadEpsilon,
    NotPolyhedral,
    Unresolved,
    EnumerationOverflow,
    ConfigurationException,
    handle_analysis_exceptions
)

__all__ = [
    # Configuration
    "CoxmodConfig",
    "EngineConfig",
    "CensusConfig",
    "CosetConfig",
    "DataConfig",
    "ConfigLoader",
    "config_from_dict",
    "create_default_config",

    # Registry
    "CommandRegistry",
    "RegistryEntry",
    "get_registry",
    "register_command",

    # Memory
    "MemoryBudget",
    "MemoryMetrics",
    "get_memory_budget",
    "print_memory_summary",

    # Metrics
    "JobMetrics",
    "RunMetrics",
    "get_metrics",
    "reset_metrics",
    "print_summary",

    # Exceptions
    "CoxmodException",
    "DiagramException",
    "BadBranchLabel",
    "NonCrystallographic",
    "ParseError",
    "GroupException",
    "DimensionMismatch",
    "TooLarge",
    "NotInvariant",
    "NotInvolution",
    "BadEpsilon",
    "NotPolyhedral",
    "Unresolved",
    "EnumerationOverflow",
    "ConfigurationException",
    "handle_analysis_exceptions",
]
