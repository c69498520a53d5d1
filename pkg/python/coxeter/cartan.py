"""
Matrices de Cartan, de Gram et générateurs de réflexion modulo p.

Conventions : M[i][j] = 2(b_i·b_j)/(b_j·b_j) = -s/c_j avec s = √(λ c_i c_j),
la matrice 2B est entière (diagonale 2c_i, hors diagonale -s) et
B = inv2·2B mod p. Les réflexions agissent sur les vecteurs colonnes :
r_i(b_j) = b_j - M[j][i]·b_i.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from fp import FieldCtx, FpMatrix

from .diagram import BasicSystem, branch_square_root


@dataclass(frozen=True)
class CartanMatrix:
    """Matrice de Cartan entière d'un système de base."""
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def pair(self, i: int) -> Tuple[int, int]:
        """(m_{i,i+1}, m_{i+1,i}) pour la branche i."""
        return self.entries[i][i + 1], self.entries[i + 1][i]

    def reverse(self) -> "CartanMatrix":
        n = self.n
        return CartanMatrix(tuple(
            tuple(self.entries[n - 1 - i][n - 1 - j] for j in range(n)) for i in range(n)))

    def is_palindromic(self) -> bool:
        return self.reverse() == self

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


def _branch_roots(system: BasicSystem) -> List[int]:
    c = system.node_labels
    return [branch_square_root(b, c[i], c[i + 1]) for i, b in enumerate(system.branches)]


def cartan(system: BasicSystem) -> CartanMatrix:
    """
    Entiers de Cartan du système : m_{i,i+1} = -s/c_{i+1}, m_{i+1,i} = -s/c_i.
    """
    n = system.rank
    c = system.node_labels
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, s in enumerate(_branch_roots(system)):
        rows[i][i + 1] = -s // c[i + 1]
        rows[i + 1][i] = -s // c[i]
    return CartanMatrix(tuple(tuple(r) for r in rows))


def twice_gram(system: BasicSystem) -> np.ndarray:
    """Matrice entière 2B (diagonale 2c_i, hors diagonale -s)."""
    n = system.rank
    out = np.zeros((n, n), dtype=object)
    for i, c in enumerate(system.node_labels):
        out[i, i] = 2 * c
    for i, s in enumerate(_branch_roots(system)):
        out[i, i + 1] = -s
        out[i + 1, i] = -s
    return out


def gram_mod_p(system: BasicSystem, ctx: FieldCtx) -> FpMatrix:
    """Matrice de Gram B = inv2·(2B) réduite modulo p."""
    return FpMatrix(twice_gram(system) * ctx.inv2, ctx.p)


def reflection_generators(system: BasicSystem, ctx: FieldCtx) -> List[FpMatrix]:
    """
    Réflexions R_0, ..., R_{n-1} modulo p.

    R_i est l'identité sauf sa ligne i : R_i[i][j] = δ_ij - M[j][i]. La
    construction ne divise jamais par c_i et reste valide quand b_i² ≡ 0.
    """
    m = cartan(system)
    n = system.rank
    gens = []
    for i in range(n):
        rows = np.eye(n, dtype=object)
        for j in range(n):
            rows[i, j] = (1 if i == j else 0) - m[j, i]
        gens.append(FpMatrix(rows, ctx.p))
    return gens


@dataclass(frozen=True)
class GenericityReport:
    """p est générique si p ≥ 5, ou p = 3 sans branche 6, et aucun c_i ≡ 0."""
    generic: bool
    zero_labels_mod_p: Tuple[int, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {"generic": self.generic, "zero_labels_mod_p": list(self.zero_labels_mod_p)}


def is_generic(system: BasicSystem, ctx: FieldCtx) -> GenericityReport:
    zeros = tuple(i for i, c in enumerate(system.node_labels) if c % ctx.p == 0)
    prime_ok = ctx.p >= 5 or (ctx.p == 3 and 6 not in system.branches)
    return GenericityReport(generic=prime_ok and not zeros, zero_labels_mod_p=zeros)
