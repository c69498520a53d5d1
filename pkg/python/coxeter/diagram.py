"""
Diagrammes de Coxeter en chaîne et systèmes de base.

Un diagramme [p1, ..., p_{n-1}] porte des étiquettes de branches dans
{2, 3, 4, 6, ∞} (∞ = math.inf). Un système de base ajoute des étiquettes
de sommets c_i = b_i² entières et positives, normalisées au pgcd 1.
"""

import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence, Tuple

from core.exceptions import BadBranchLabel, CoxmodException, NonCrystallographic

INF = math.inf

# λ = 4cos²(π/m) pour chaque étiquette cristallographique
LAMBDA = {2: 0, 3: 1, 4: 2, 6: 3, INF: 4}

CRYSTALLOGRAPHIC_LABELS = tuple(LAMBDA)


def branch_text(label) -> str:
    return "inf" if label == INF else str(int(label))


def _check_label(label, position: int):
    if isinstance(label, bool) or label not in LAMBDA:
        raise BadBranchLabel(label, position)
    return INF if label == INF else int(label)


@dataclass(frozen=True)
class StringDiagram:
    """Diagramme en chaîne : rang n ≥ 2 et n-1 étiquettes de branches."""
    branches: Tuple

    def __post_init__(self):
        checked = tuple(_check_label(b, i) for i, b in enumerate(self.branches))
        if not checked:
            raise CoxmodException("a string diagram needs at least one branch (rank >= 2)")
        object.__setattr__(self, "branches", checked)

    @property
    def rank(self) -> int:
        return len(self.branches) + 1

    def reverse(self) -> "StringDiagram":
        return StringDiagram(tuple(reversed(self.branches)))

    def is_palindromic(self) -> bool:
        return self.branches == tuple(reversed(self.branches))

    def sort_key(self) -> Tuple:
        return self.branches

    @property
    def text(self) -> str:
        return "[" + ",".join(branch_text(b) for b in self.branches) + "]"

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class BasicSystem:
    """
    Système de base : diagramme et étiquettes de sommets canonisées.

    Construit uniquement par validate() ; l'intégralité des entiers de
    Cartan est garantie.
    """
    diagram: StringDiagram
    node_labels: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.diagram.rank

    @property
    def branches(self) -> Tuple:
        return self.diagram.branches

    def reverse(self) -> "BasicSystem":
        return validate(self.diagram.reverse(), tuple(reversed(self.node_labels)))

    def sort_key(self) -> Tuple:
        return (self.diagram.sort_key(), self.node_labels)

    @property
    def labels_text(self) -> str:
        return ",".join(str(c) for c in self.node_labels)

    @property
    def text(self) -> str:
        return f"{self.diagram.text}@{self.labels_text}"

    def __str__(self) -> str:
        return self.text


def branch_square_root(label, ci: int, cj: int) -> int:
    """
    s = √(λ·c_i·c_j) pour une branche d'étiquette label.

    Raises:
        NonCrystallographic: si λ·c_i·c_j n'est pas un carré parfait
    """
    value = LAMBDA[label] * ci * cj
    s = math.isqrt(value)
    if s * s != value:
        raise NonCrystallographic(
            f"{LAMBDA[label]}*{ci}*{cj} is not a perfect square for branch {branch_text(label)}",
            labels=(ci, cj))
    return s


def canonical_labels(labels: Sequence[int]) -> Tuple[int, ...]:
    g = reduce(math.gcd, labels)
    return tuple(c // g for c in labels)


def validate(diagram: StringDiagram, node_labels: Sequence[int]) -> BasicSystem:
    """
    Valide un système de base et le canonise (division par le pgcd).

    Pour chaque branche (i, i+1) : λ·c_i·c_{i+1} = s² avec c_i | s et
    c_{i+1} | s, soit les rapports {1} pour 3, {2, 1/2} pour 4,
    {3, 1/3} pour 6 et {4, 1/4, 1} pour ∞.

    Args:
        diagram: Diagramme en chaîne
        node_labels: n entiers positifs

    Returns:
        BasicSystem: système canonisé

    Raises:
        NonCrystallographic: rang incohérent ou entiers de Cartan non entiers
    """
    labels = tuple(int(c) for c in node_labels)
    if len(labels) != diagram.rank:
        raise NonCrystallographic(
            f"{len(labels)} node labels given for a rank {diagram.rank} diagram", labels=labels)
    if any(c <= 0 for c in labels):
        raise NonCrystallographic("node labels must be positive integers", labels=labels)
    labels = canonical_labels(labels)
    for i, branch in enumerate(diagram.branches):
        ci, cj = labels[i], labels[i + 1]
        try:
            s = branch_square_root(branch, ci, cj)
        except NonCrystallographic as e:
            raise NonCrystallographic(e.message, branch_index=i, labels=labels) from e
        if s % ci or s % cj:
            raise NonCrystallographic(
                f"Cartan integers of branch {i} ({branch_text(branch)}) are not integral "
                f"for labels {ci},{cj}", branch_index=i, labels=labels)
    return BasicSystem(diagram, labels)
