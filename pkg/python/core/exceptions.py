"""
Exceptions personnalisées pour coxmod.

Ce module définit la hiérarchie d'exceptions du projet : erreurs de
diagrammes, de groupes matriciels, de formes quadratiques, d'énumération
de classes latérales et de configuration. Chaque exception sait se
sérialiser (to_dict) pour alimenter la colonne `error` du recensement.
"""

import functools
from typing import Optional, Dict, Any, Sequence


class CoxmodException(Exception):
    """
    Exception de base pour toutes les erreurs du projet.

    Cette classe sert de point d'entrée commun : le recensement attrape
    CoxmodException pour transformer une erreur en ligne de rapport.
    """

    def __init__(self, message: str, details: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        """
        Initialise l'exception.

        Args:
            message: Message d'erreur principal
            details: Détails supplémentaires de l'erreur (optionnel)
            context: Contexte supplémentaire (optionnel)
        """
        super().__init__(message)
        self.message = message
        self.details = details
        self.context = context or {}

    def __str__(self) -> str:
        """Retourne une représentation string de l'exception."""
        if self.details:
            return f"{self.message} - Details: {self.details}"
        return self.message

    def short(self) -> str:
        """Forme compacte utilisée dans la colonne `error` des rapports."""
        return f"{self.__class__.__name__}: {self.message}"

    def to_dict(self) -> Dict[str, Any]:
        """Convertit l'exception en dictionnaire pour la sérialisation."""
        return {
            "type": self.__class__.__name__,
            "message": self.message,
            "details": self.details,
            "context": self.context
        }


class DiagramException(CoxmodException):
    """Erreur liée à un diagramme de Coxeter ou à ses étiquettes."""


class BadBranchLabel(DiagramException):
    """
    Étiquette de branche hors de l'ensemble cristallographique {2,3,4,6,∞}.
    """

    def __init__(self, label: Any, position: Optional[int] = None,
                 details: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(f"Branch label {label!r} is not crystallographic", details, context)
        self.label = label
        self.position = position

    def to_dict(self) -> Dict[str, Any]:
        base_dict = super().to_dict()
        base_dict.update({
            "label": str(self.label),
            "position": self.position
        })
        return base_dict


class NonCrystallographic(DiagramException):
    """
    Étiquettes de sommets incompatibles avec des entiers de Cartan entiers.
    """

    def __init__(self, message: str, branch_index: Optional[int] = None,
                 labels: Optional[Sequence[int]] = None,
                 details: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, context)
        self.branch_index = branch_index
        self.labels = tuple(labels) if labels is not None else None

    def to_dict(self) -> Dict[str, Any]:
        base_dict = super().to_dict()
        base_dict.update({
            "branch_index": self.branch_index,
            "labels": list(self.labels) if self.labels is not None else None
        })
        return base_dict


class ParseError(CoxmodException):
    """
    Erreur de syntaxe dans un texte (diagramme, mot, présentation).

    La position est l'indice du caractère fautif dans le texte d'origine.
    """

    def __init__(self, message: str, text: str = "", position: Optional[int] = None,
                 details: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, context)
        self.text = text
        self.position = position

    def __str__(self) -> str:
        if self.position is None:
            return super().__str__()
        return f"{self.message} at position {self.position} in {self.text!r}"

    def to_dict(self) -> Dict[str, Any]:
        base_dict = super().to_dict()
        base_dict.update({
            "text": self.text,
            "position": self.position
        })
        return base_dict


class GroupException(CoxmodException):
    """Erreur du moteur de groupes matriciels."""


class DimensionMismatch(GroupException):
    """Générateurs de dimensions ou de caractéristiques différentes."""


class TooLarge(GroupException):
    """
    Dépassement d'un seuil (ordre, énumération d'éléments, mémoire).

    Jamais une réponse fausse : le calcul est abandonné et le seuil signalé.
    """

    def __init__(self, message: str, size: Optional[int] = None, bound: Optional[int] = None,
                 details: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, context)
        self.size = size
        self.bound = bound

    def to_dict(self) -> Dict[str, Any]:
        base_dict = super().to_dict()
        base_dict.update({
            "size": self.size,
            "bound": self.bound
        })
        return base_dict


class NotInvariant(GroupException):
    """Le sous-espace n'est pas stable sous les générateurs."""


class NotInvolution(GroupException):
    """Un mot de mélange n'est pas une involution."""

    def __init__(self, message: str, word: Optional[str] = None,
                 details: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, context)
        self.word = word

    def to_dict(self) -> Dict[str, Any]:
        base_dict = super().to_dict()
        base_dict["word"] = self.word
        return base_dict


class BadEpsilon(CoxmodException):
    """ε incompatible avec la parité de la dimension."""

    def __init__(self, n: int, epsilon: int,
                 details: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(f"epsilon {epsilon} is not valid in dimension {n}", details, context)
        self.n = n
        self.epsilon = epsilon

    def to_dict(self) -> Dict[str, Any]:
        base_dict = super().to_dict()
        base_dict.update({
            "n": self.n,
            "epsilon": self.epsilon
        })
        return base_dict


class NotPolyhedral(CoxmodException):
    """Le groupe n'est pas un C-groupe de chaîne (pas de polytope associé)."""


class Unresolved(CoxmodException):
    """
    Recherche aléatoire non concluante.

    Signalée explicitement, jamais convertie silencieusement en `False`.
    """

    def __init__(self, message: str, trials: Optional[int] = None,
                 details: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, details, context)
        self.trials = trials

    def to_dict(self) -> Dict[str, Any]:
        base_dict = super().to_dict()
        base_dict["trials"] = self.trials
        return base_dict


class EnumerationOverflow(CoxmodException):
    """Limite de classes latérales atteinte pendant Todd–Coxeter."""

    def __init__(self, limit: int, live: Optional[int] = None,
                 details: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(f"coset limit {limit} reached", details, context)
        self.limit = limit
        self.live = live

    def to_dict(self) -> Dict[str, Any]:
        base_dict = super().to_dict()
        base_dict.update({
            "limit": self.limit,
            "live": self.live
        })
        return base_dict


class ConfigurationException(CoxmodException):
    """
    Exception levée lors d'erreurs de configuration.

    Cette exception est utilisée quand la configuration est invalide
    ou manquante.
    """

    def __init__(self, message: str, config_key: Optional[str] = None,
                 config_file: Optional[str] = None, details: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        """
        Initialise l'exception de configuration.

        Args:
            message: Message d'erreur principal
            config_key: Clé de configuration problématique (optionnel)
            config_file: Fichier de configuration (optionnel)
            details: Détails supplémentaires (optionnel)
            context: Contexte supplémentaire (optionnel)
        """
        super().__init__(message, details, context)
        self.config_key = config_key
        self.config_file = config_file

    def to_dict(self) -> Dict[str, Any]:
        """Convertit l'exception en dictionnaire avec les informations de configuration."""
        base_dict = super().to_dict()
        base_dict.update({
            "config_key": self.config_key,
            "config_file": self.config_file
        })
        return base_dict


def handle_analysis_exceptions(func):
    """
    Décorateur pour les tâches d'analyse : toute exception inattendue
    devient une CoxmodException portant le nom de la fonction.

    Args:
        func: Fonction à wrapper

    Returns:
        Fonction wrapper avec gestion d'exceptions
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CoxmodException:
            raise
        except Exception as e:
            raise CoxmodException(
                message=f"Unexpected error in analysis: {str(e)}",
                details=type(e).__name__,
                context={"function": func.__name__, "args": str(args), "kwargs": str(kwargs)}
            ) from e
    return wrapper
