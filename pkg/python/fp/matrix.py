"""
Matrices carrées sur GF(p).

FpMatrix est immuable : le tableau numpy sous-jacent est en lecture seule,
l'égalité et le hachage passent par la sérialisation canonique en octets.
Les éléments de groupe agissent sur des vecteurs colonnes.
"""

from typing import Iterable, List, Optional, Sequence

import numpy as np

from .linalg import as_array, det_mod_p, dtype_for, inverse_mod_p, rank_mod_p


class FpMatrix:
    """Matrice n×n à coefficients dans [0, p)."""

    __slots__ = ("p", "data", "_key")

    def __init__(self, data, p: int):
        arr = as_array(data, p)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"FpMatrix must be square, got shape {arr.shape}")
        arr.setflags(write=False)
        self.p = p
        self.data = arr
        self._key: Optional[bytes] = None

    @classmethod
    def _wrap(cls, arr: np.ndarray, p: int) -> "FpMatrix":
        # arr déjà réduit, dtype correct
        obj = cls.__new__(cls)
        arr.setflags(write=False)
        obj.p = p
        obj.data = arr
        obj._key = None
        return obj

    @classmethod
    def identity(cls, n: int, p: int) -> "FpMatrix":
        return cls._wrap(np.eye(n, dtype=dtype_for(p, n)), p)

    @classmethod
    def block_diagonal(cls, a: "FpMatrix", b: "FpMatrix") -> "FpMatrix":
        if a.p != b.p:
            raise ValueError("block_diagonal over different primes")
        n, m = a.n, b.n
        out = np.zeros((n + m, n + m), dtype=dtype_for(a.p, n + m))
        out[:n, :n] = a.data
        out[n:, n:] = b.data
        return cls._wrap(out, a.p)

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def key(self) -> bytes:
        """Sérialisation canonique (contenu seul : p et n sont implicites dans un groupe)."""
        if self._key is None:
            self._key = np.ascontiguousarray(self.data, dtype=np.int64).tobytes() \
                if self.data.dtype != object else repr(self.data.tolist()).encode()
        return self._key

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix._wrap((self.data @ other.data) % self.p, self.p)

    def __pow__(self, k: int) -> "FpMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = FpMatrix.identity(self.n, self.p)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.data.shape == other.data.shape and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, {self.to_list()})"

    def apply(self, vector: np.ndarray) -> np.ndarray:
        """Image d'un vecteur colonne."""
        return (self.data @ vector) % self.p

    def transpose(self) -> "FpMatrix":
        return FpMatrix._wrap(self.data.T.copy(), self.p)

    def inverse(self) -> "FpMatrix":
        return FpMatrix._wrap(inverse_mod_p(self.data, self.p), self.p)

    def det(self) -> int:
        return det_mod_p(self.data, self.p)

    def rank(self) -> int:
        return rank_mod_p(self.data, self.p)

    def is_identity(self) -> bool:
        n = self.n
        return bool(np.array_equal(self.data, np.eye(n, dtype=self.data.dtype)))

    def order(self, limit: Optional[int] = None) -> int:
        """
        Ordre multiplicatif par multiplications successives.

        Args:
            limit: Borne de sécurité (défaut : p^n, qui majore l'ordre dans GL(n,p))
        """
        bound = limit if limit is not None else self.p ** self.n
        identity = FpMatrix.identity(self.n, self.p)
        power = self
        k = 1
        while power != identity:
            power = power @ self
            k += 1
            if k > bound:
                raise ValueError(f"matrix order exceeds {bound}")
        return k

    def restrict(self, rows: Sequence[int], cols: Sequence[int]) -> np.ndarray:
        return self.data[np.ix_(list(rows), list(cols))]

    def to_list(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self.data]


def product(matrices: Iterable[FpMatrix], n: int, p: int) -> FpMatrix:
    """Produit de gauche à droite ; l'identité pour une suite vide."""
    result = FpMatrix.identity(n, p)
    for m in matrices:
        result = result @ m
    return result
