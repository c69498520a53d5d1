"""
Énumération et comparaison des systèmes de base d'un diagramme.

enumerate_basic_systems parcourt les choix de rapports c_{i+1}/c_i
autorisés branche par branche (c_0 = 1), chasse les dénominateurs et
déduplique par matrice de Cartan. equivalent_mod_p décide la conjugaison
simultanée des réflexions dans GL(n, p) ; diagonal_class donne la classe
de recensement (conjugaison par une matrice diagonale).
"""

import itertools
import logging
import math
import random
from fractions import Fraction
from functools import reduce
from typing import Dict, List, Sequence, Tuple

import numpy as np

from core.exceptions import DimensionMismatch, Unresolved
from fp import FieldCtx, FpMatrix
from fp.linalg import det_mod_p, kernel_mod_p

from .cartan import CartanMatrix, cartan, reflection_generators
from .diagram import INF, BasicSystem, StringDiagram, validate

logger = logging.getLogger(__name__)

RANK4_BRANCHES = (3, 4, 6, INF)

EXHAUSTIVE_SOLUTION_DIM = 4
RANDOM_TRIALS = 1000


def ratio_choices(branch, infinity_ratio_one: bool = False) -> List[Fraction]:
    """Rapports c_{i+1}/c_i retenus pour une branche."""
    if branch == 3 or branch == 2:
        return [Fraction(1)]
    if branch == 4:
        return [Fraction(2), Fraction(1, 2)]
    if branch == 6:
        return [Fraction(3), Fraction(1, 3)]
    choices = [Fraction(4), Fraction(1, 4)]
    if infinity_ratio_one:
        choices.append(Fraction(1))
    return choices


def _clear_denominators(values: Sequence[Fraction]) -> Tuple[int, ...]:
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), (v.denominator for v in values), 1)
    ints = [int(v * lcm) for v in values]
    g = reduce(math.gcd, ints)
    return tuple(c // g for c in ints)


def enumerate_basic_systems(diagram: StringDiagram, identify_reversal: bool = False,
                            infinity_ratio_one: bool = False) -> List[BasicSystem]:
    """
    Liste complète, sans doublon, des systèmes de base du diagramme.

    Args:
        diagram: Diagramme en chaîne
        identify_reversal: Identifier un système et son renversé (diagramme palindrome)
        infinity_ratio_one: Inclure le rapport 1 sur les branches ∞

    Returns:
        List[BasicSystem]: triée par étiquettes de sommets
    """
    per_branch = [ratio_choices(b, infinity_ratio_one) for b in diagram.branches]
    seen: Dict[CartanMatrix, BasicSystem] = {}
    for ratios in itertools.product(*per_branch):
        values = [Fraction(1)]
        for r in ratios:
            values.append(values[-1] * r)
        system = validate(diagram, _clear_denominators(values))
        seen.setdefault(cartan(system), system)

    systems = sorted(seen.values(), key=lambda s: s.node_labels)
    if identify_reversal and diagram.is_palindromic():
        kept: List[BasicSystem] = []
        keys = set()
        for system in systems:
            key = min(system.node_labels, tuple(reversed(system.node_labels)))
            if key not in keys:
                keys.add(key)
                kept.append(system)
        systems = kept
    logger.debug("%s: %d basic systems", diagram, len(systems))
    return systems


def _commutant_basis(gens_a: List[FpMatrix], gens_b: List[FpMatrix], p: int) -> np.ndarray:
    """Base de {X : X·A_i = B_i·X pour tout i} (X aplatie ligne par ligne)."""
    n = gens_a[0].n
    identity = np.eye(n, dtype=object)
    blocks = []
    for a, b in zip(gens_a, gens_b):
        left = np.kron(identity, a.data.astype(object).T)
        right = np.kron(b.data.astype(object), identity)
        blocks.append(left - right)
    return kernel_mod_p(np.concatenate(blocks, axis=0), p)


def _combination(basis: np.ndarray, coeffs: Sequence[int], n: int, p: int) -> np.ndarray:
    flat = np.zeros(basis.shape[1], dtype=object)
    for c, row in zip(coeffs, basis):
        if c:
            flat = flat + c * row.astype(object)
    return (flat % p).reshape(n, n)


def equivalent_mod_p(sys_a: BasicSystem, sys_b: BasicSystem, ctx: FieldCtx,
                     seed: int = 0) -> bool:
    """
    Vrai ssi les réflexions des deux systèmes sont simultanément conjuguées
    dans GL(n, p).

    La recherche d'un X inversible dans l'espace des solutions est exhaustive
    quand cet espace est de dimension ≤ 4, aléatoire (1000 essais) au-delà.

    Raises:
        DimensionMismatch: diagrammes différents
        Unresolved: recherche aléatoire non concluante
    """
    if sys_a.diagram != sys_b.diagram:
        raise DimensionMismatch(f"cannot compare systems of {sys_a.diagram} and {sys_b.diagram}")
    if sys_a == sys_b:
        return True
    p, n = ctx.p, sys_a.rank
    basis = _commutant_basis(reflection_generators(sys_a, ctx), reflection_generators(sys_b, ctx), p)
    dim = basis.shape[0]
    logger.debug("commutant of %s and %s at p=%d has dimension %d", sys_a, sys_b, p, dim)
    if dim == 0:
        return False
    if dim <= EXHAUSTIVE_SOLUTION_DIM:
        for coeffs in itertools.product(range(p), repeat=dim):
            if any(coeffs) and det_mod_p(_combination(basis, coeffs, n, p), p):
                return True
        return False
    rng = random.Random(seed)
    for _ in range(RANDOM_TRIALS):
        coeffs = [rng.randrange(p) for _ in range(dim)]
        if det_mod_p(_combination(basis, coeffs, n, p), p):
            return True
    raise Unresolved(
        f"no invertible intertwiner found for {sys_a} and {sys_b} at p={p}",
        trials=RANDOM_TRIALS, context={"solution_dim": dim})


def _edge_key(pair: Tuple[int, int], p: int) -> Tuple[int, bool, bool]:
    a, b = pair
    return (a * b % p, a % p == 0, b % p == 0)


def diagonal_class(system: BasicSystem, ctx: FieldCtx, identify_reversal: bool = True) -> Tuple:
    """
    Clé de classe de recensement.

    Deux systèmes de même clé ont des matrices de Cartan égales modulo p
    à conjugaison diagonale près, donc des réflexions simultanément
    conjuguées : seul compte, par branche, le produit m_ij·m_ji et la
    position des entiers nuls.
    """
    m = cartan(system)
    p = ctx.p
    key = tuple(_edge_key(m.pair(i), p) for i in range(system.rank - 1))
    if identify_reversal and system.diagram.is_palindromic():
        mirrored = tuple((prod, zb, za) for prod, za, zb in reversed(key))
        key = min(key, mirrored)
    return (system.diagram.branches, key)


def census_classes(diagram: StringDiagram, ctx: FieldCtx, identify_reversal: bool = True,
                   infinity_ratio_one: bool = False) -> List[BasicSystem]:
    """Un représentant (le premier par étiquettes) de chaque classe de recensement à p."""
    reps: Dict[Tuple, BasicSystem] = {}
    for system in enumerate_basic_systems(diagram, identify_reversal, infinity_ratio_one):
        reps.setdefault(diagonal_class(system, ctx, identify_reversal), system)
    return list(reps.values())


def all_rank4_diagrams() -> List[StringDiagram]:
    """Triplets sur {3, 4, 6, ∞} à renversement près (représentant lexicographiquement maximal)."""
    out = []
    for triple in itertools.product(RANK4_BRANCHES, repeat=3):
        if triple >= tuple(reversed(triple)):
            out.append(StringDiagram(triple))
    return out

