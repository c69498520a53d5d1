"""
Opérations sur les groupes de matrices : sous-groupes engendrés,
intersections de petits groupes, sous-groupe graphe, restriction à un
sous-espace invariant, ordre d'un élément et fermeture brute.
"""

import logging
from typing import List, Optional, Sequence, Union

import numpy as np

from core.exceptions import DimensionMismatch, GroupException, NotInvariant, TooLarge
from core.memory_manager import MemoryBudget
from fp import FpMatrix
from fp.linalg import as_array, rank_mod_p, solve_mod_p

from .bsgs import DEFAULT_ELEMENT_THRESHOLD, BsgsGroup, build_bsgs
from .words import Word, evaluate_word, parse_word

logger = logging.getLogger(__name__)

SubsetItem = Union[int, Word, str]


def subgroup_generators(gens: Sequence[FpMatrix], subset: Sequence[SubsetItem]) -> List[FpMatrix]:
    """Matrices désignées par des indices, des mots ou des textes de mots."""
    out = []
    for item in subset:
        if isinstance(item, str):
            item = parse_word(item)
        if isinstance(item, Word):
            out.append(evaluate_word(gens, item))
        else:
            out.append(gens[int(item)])
    return out


def subgroup(gens: Sequence[FpMatrix], subset: Sequence[SubsetItem],
             order_limit: Optional[int] = None, budget: Optional[MemoryBudget] = None) -> BsgsGroup:
    """
    BSGS du sous-groupe engendré par une partie des générateurs.

    Args:
        gens: Générateurs du groupe ambiant
        subset: Indices (G_J = ⟨r_j : j ∈ subset⟩) ou mots
    """
    if not gens:
        raise DimensionMismatch("cannot take a subgroup of an empty generator list")
    chosen = subgroup_generators(gens, subset)
    return build_bsgs(chosen, n=gens[0].n, p=gens[0].p, order_limit=order_limit, budget=budget)


def intersect_small(a: BsgsGroup, b: BsgsGroup, threshold: int = DEFAULT_ELEMENT_THRESHOLD) -> List[FpMatrix]:
    """
    Liste exacte des éléments de A ∩ B.

    Le plus petit des deux groupes est énuméré et chaque élément est tamisé
    dans l'autre.

    Raises:
        TooLarge: si min(|A|, |B|) dépasse threshold
    """
    if (a.n, a.p) != (b.n, b.p):
        raise DimensionMismatch("intersection of groups acting on different spaces")
    small, large = (a, b) if a.order() <= b.order() else (b, a)
    out = [g for g in small.elements(threshold) if large.contains(g)]
    logger.debug("intersection of orders %d and %d has %d elements", a.order(), b.order(), len(out))
    return out


def graph_subgroup_order(gens_a: Sequence[FpMatrix], gens_b: Sequence[FpMatrix],
                         order_limit: Optional[int] = None, budget: Optional[MemoryBudget] = None) -> int:
    """
    Ordre de ⟨(a_i, b_i)⟩ agissant par blocs diagonaux sur GF(p)^{2n}.

    a_i ↦ b_i se prolonge en un isomorphisme ⟨a_i⟩ → ⟨b_i⟩ ssi cet ordre
    est égal à |⟨a_i⟩| (= |⟨b_i⟩|).

    Raises:
        TooLarge: si l'ordre dépasse order_limit
    """
    if len(gens_a) != len(gens_b):
        raise DimensionMismatch(f"{len(gens_a)} generators paired with {len(gens_b)}")
    paired = [FpMatrix.block_diagonal(x, y) for x, y in zip(gens_a, gens_b)]
    return build_bsgs(paired, order_limit=order_limit, budget=budget).order()


def restrict_action(gens: Sequence[FpMatrix], subspace_basis: Sequence[np.ndarray]) -> List[FpMatrix]:
    """
    Matrices de l'action restreinte à un sous-espace invariant.

    Args:
        gens: Générateurs agissant sur GF(p)^n
        subspace_basis: k vecteurs indépendants engendrant le sous-espace

    Returns:
        List[FpMatrix]: matrices k×k dans cette base (colonnes = images)

    Raises:
        NotInvariant: si un générateur ne stabilise pas le sous-espace
    """
    if not gens:
        return []
    p = gens[0].p
    basis = as_array(np.array([list(v) for v in subspace_basis], dtype=object).T, p)
    k = basis.shape[1]
    if rank_mod_p(basis, p) != k:
        raise GroupException("subspace basis vectors are linearly dependent")
    out = []
    for index, g in enumerate(gens):
        columns = []
        for j in range(k):
            image = g.apply(basis[:, j])
            coords = solve_mod_p(basis, image, p)
            if coords is None:
                raise NotInvariant(f"generator {index} moves basis vector {j} out of the subspace")
            columns.append(coords)
        out.append(FpMatrix(np.array(columns, dtype=object).T, p))
    return out


def matrix_order(g: FpMatrix, limit: int = 1_000_000) -> int:
    """Ordre multiplicatif de g, TooLarge au-delà de limit."""
    try:
        return g.order(limit)
    except ValueError as e:
        raise TooLarge(f"element order exceeds {limit}", bound=limit) from e


def brute_force_closure(gens: Sequence[FpMatrix], limit: int = 100_000) -> int:
    """
    Ordre de ⟨gens⟩ par parcours en largeur des produits (oracle de test).

    Raises:
        TooLarge: au-delà de limit éléments
    """
    if not gens:
        return 1
    identity = FpMatrix.identity(gens[0].n, gens[0].p)
    seen = {identity.key}
    frontier = [identity]
    while frontier:
        following = []
        for x in frontier:
            for s in gens:
                y = x @ s
                if y.key not in seen:
                    seen.add(y.key)
                    following.append(y)
                    if len(seen) > limit:
                        raise TooLarge(f"closure exceeds {limit} elements", size=len(seen), bound=limit)
        frontier = following
    return len(seen)
