"""
Algèbre linéaire dense sur GF(p) : forme échelonnée réduite, rang,
déterminant, noyau, inverse et résolution de systèmes.

Les tableaux sont des numpy.ndarray d'entiers dans [0, p). Le dtype est
int64 tant que n·(p-1)² tient sur 63 bits, object (entiers Python) sinon.
"""

from typing import List, Optional, Tuple

import numpy as np

_INT64_LIMIT = 1 << 63


def dtype_for(p: int, n: int):
    """Choisit le dtype permettant un produit matriciel n×n exact avant réduction."""
    if (p - 1) * (p - 1) * max(n, 1) < _INT64_LIMIT:
        return np.int64
    return object


def as_array(data, p: int) -> np.ndarray:
    """Convertit des données quelconques en tableau réduit mod p."""
    arr = np.array(data, dtype=object)
    n = max(arr.shape) if arr.ndim else 1
    return (arr % p).astype(dtype_for(p, n))


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def rref(a: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """
    Forme échelonnée réduite de a modulo p.

    Returns:
        (R, pivots): matrice réduite (copie) et colonnes pivots dans l'ordre
    """
    m = as_array(a, p)
    if m.ndim != 2:
        raise ValueError("rref expects a 2-dimensional array")
    rows, cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(m[r:, c])[0]
        if candidates.size == 0:
            continue
        k = r + int(candidates[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        for i in np.nonzero(m[:, c])[0]:
            if i != r:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank_mod_p(a: np.ndarray, p: int) -> int:
    return len(rref(a, p)[1])


def det_mod_p(a: np.ndarray, p: int) -> int:
    """Déterminant par élimination de Gauss, signe suivi à chaque échange."""
    m = as_array(a, p)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    det = 1
    for c in range(n):
        candidates = np.nonzero(m[c:, c])[0]
        if candidates.size == 0:
            return 0
        k = c + int(candidates[0])
        if k != c:
            m[[c, k]] = m[[k, c]]
            det = -det
        pivot = int(m[c, c])
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        for i in range(c + 1, n):
            if m[i, c]:
                factor = m[i, c] * inv % p
                m[i] = (m[i] - factor * m[c]) % p
    return det % p


def kernel_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    """
    Base échelonnée (forme réduite) du noyau {x : a·x = 0}.

    Returns:
        np.ndarray: k×n, une ligne par vecteur de base (k = 0 si a injective)
    """
    r, pivots = rref(a, p)
    cols = r.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    dtype = dtype_for(p, cols)
    if not free:
        return np.zeros((0, cols), dtype=dtype)
    basis = np.zeros((len(free), cols), dtype=dtype)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, pc in enumerate(pivots):
            basis[k, pc] = (-r[row, f]) % p
    echelon, piv = rref(basis, p)
    return echelon[:len(piv)]


def inverse_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    """Inverse par Gauss–Jordan sur [a | I] ; ValueError si a est singulière."""
    m = as_array(a, p)
    n = m.shape[0]
    augmented = np.concatenate([m, np.eye(n, dtype=m.dtype)], axis=1)
    r, pivots = rref(augmented, p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular mod p")
    return r[:, n:].copy()


def solve_mod_p(a: np.ndarray, b: np.ndarray, p: int) -> Optional[np.ndarray]:
    """Une solution de a·x = b, ou None si le système est incompatible."""
    m = as_array(a, p)
    rhs = as_array(b, p).reshape(-1, 1)
    cols = m.shape[1]
    r, pivots = rref(np.concatenate([m, rhs.astype(m.dtype)], axis=1), p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=r.dtype)
    for row, pc in enumerate(pivots):
        x[pc] = r[row, cols]
    return x
