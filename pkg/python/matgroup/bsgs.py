"""
Schreier–Sims déterministe pour les groupes de matrices sur GF(p).

Le groupe agit sur les vecteurs colonnes de GF(p)^n. Chaque niveau de la
chaîne de stabilisateurs porte un point de base, ses générateurs, l'orbite
du point (vecteur → transversale u et son inverse, u·base = point) et le
niveau du stabilisateur. L'ajout d'un générateur étend l'orbite puis
fait tamiser tous les générateurs de Schreier u_{sx}⁻¹·s·u_x non encore
traités dans le niveau suivant.

Règle de choix des points de base : premier vecteur de base standard
déplacé par le générateur qui ouvre le niveau.
"""

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from core.exceptions import DimensionMismatch, GroupException, TooLarge
from core.memory_manager import MemoryBudget
from fp import FpMatrix

logger = logging.getLogger(__name__)

DEFAULT_ELEMENT_THRESHOLD = 2_000_000

# vérification du budget mémoire tous les N nouveaux points d'orbite
_MEMORY_CHECK_EVERY = 4096


def _vkey(vec: np.ndarray) -> bytes:
    if vec.dtype == object:
        return repr([int(x) for x in vec]).encode()
    return vec.tobytes()


class _Build:
    """Paramètres partagés par les niveaux pendant une construction."""

    def __init__(self, n: int, p: int, order_limit: Optional[int], budget: Optional[MemoryBudget]):
        self.n = n
        self.p = p
        self.order_limit = order_limit
        self.budget = budget
        self.identity = FpMatrix.identity(n, p)
        self.root: Optional["_Level"] = None
        self.new_points = 0

    def grew(self):
        self.new_points += 1
        if self.budget is not None and self.new_points % _MEMORY_CHECK_EVERY == 0:
            self.budget.check("BSGS construction", size=self.new_points)
        if self.order_limit is not None and self.root is not None:
            bound = self.root.order()
            if bound > self.order_limit:
                raise TooLarge(f"group order exceeds {self.order_limit}",
                               size=bound, bound=self.order_limit, context={"limit": "order"})


class _Level:
    """Un niveau de la chaîne de stabilisateurs."""

    def __init__(self, build: _Build):
        self.build = build
        self.base: Optional[np.ndarray] = None
        self.gens: List[Tuple[FpMatrix, FpMatrix]] = []
        self.orbit: Dict[bytes, Tuple[np.ndarray, FpMatrix, FpMatrix]] = {}
        self.checked: Set[Tuple[bytes, int]] = set()
        self.stab: Optional["_Level"] = None

    def order(self) -> int:
        if self.base is None:
            return 1
        return len(self.orbit) * self.stab.order()

    def sift(self, g: FpMatrix) -> Tuple[FpMatrix, "_Level"]:
        """Tamise g ; renvoie le résidu et le niveau où le tamisage s'arrête."""
        level = self
        while level.base is not None:
            image = g.apply(level.base)
            entry = level.orbit.get(_vkey(image))
            if entry is None:
                return g, level
            g = entry[2] @ g
            level = level.stab
        return g, level

    def contains(self, g: FpMatrix) -> bool:
        residue, _ = self.sift(g)
        return residue.is_identity()

    def add(self, g: FpMatrix):
        """Ajoute g au groupe de ce niveau s'il n'y appartient pas déjà."""
        if self.contains(g):
            return
        if self.base is None:
            moved = [j for j in range(self.build.n) if not np.array_equal(g.data[:, j], self.build.identity.data[:, j])]
            self.base = self.build.identity.data[:, moved[0]].copy()
            self.orbit[_vkey(self.base)] = (self.base, self.build.identity, self.build.identity)
            self.stab = _Level(self.build)
            logger.debug("new BSGS level with base e_%d", moved[0])
        self.gens.append((g, g.inverse()))
        self._close()

    def _close(self):
        # BFS : chaque point rencontre chaque générateur une fois
        queue = list(self.orbit.keys())
        head = 0
        while head < len(queue):
            key = queue[head]
            head += 1
            point, u, u_inv = self.orbit[key]
            for index in range(len(self.gens)):
                if (key, index) in self.checked:
                    continue
                self.checked.add((key, index))
                s, s_inv = self.gens[index]
                image = s.apply(point)
                image_key = _vkey(image)
                target = self.orbit.get(image_key)
                if target is None:
                    su = s @ u
                    self.orbit[image_key] = (image, su, u_inv @ s_inv)
                    queue.append(image_key)
                    self.build.grew()
                    continue
                schreier = target[2] @ s @ u
                if not schreier.is_identity():
                    self.stab.add(schreier)

    def strong_generators(self) -> List[FpMatrix]:
        out = [g for g, _ in self.gens]
        if self.stab is not None:
            out.extend(self.stab.strong_generators())
        return out


class BsgsGroup:
    """
    Groupe de matrices muni d'une base et d'un système fort de générateurs.

    Immuable après construction (build_bsgs) ; partageable entre tâches.
    """

    def __init__(self, generators: Sequence[FpMatrix], n: int, p: int, root: _Level):
        self.generators: Tuple[FpMatrix, ...] = tuple(generators)
        self.n = n
        self.p = p
        self._root = root
        self._order: Optional[int] = None

    def _levels(self) -> List[_Level]:
        out = []
        level = self._root
        while level is not None and level.base is not None:
            out.append(level)
            level = level.stab
        return out

    @property
    def base(self) -> List[np.ndarray]:
        return [level.base for level in self._levels()]

    @property
    def strong_generators(self) -> List[FpMatrix]:
        return self._root.strong_generators()

    @property
    def transversal_sizes(self) -> List[int]:
        return [len(level.orbit) for level in self._levels()]

    def order(self) -> int:
        if self._order is None:
            self._order = self._root.order()
        return self._order

    def contains(self, matrix: FpMatrix) -> bool:
        """Appartenance exacte par tamisage."""
        if matrix.n != self.n or matrix.p != self.p:
            raise DimensionMismatch(
                f"matrix of size {matrix.n} mod {matrix.p} tested against a group of size {self.n} mod {self.p}")
        return self._root.contains(matrix)

    def elements(self, threshold: int = DEFAULT_ELEMENT_THRESHOLD) -> Iterator[FpMatrix]:
        """
        Chaque élément exactement une fois, dans un ordre déterministe :
        les produits u_0·u_1·…·u_k des transversales.

        Raises:
            TooLarge: si l'ordre dépasse threshold
        """
        order = self.order()
        if order > threshold:
            raise TooLarge(f"element iteration over a group of order {order}", size=order, bound=threshold)
        transversals = [[entry[1] for entry in level.orbit.values()] for level in self._levels()]
        identity = FpMatrix.identity(self.n, self.p)

        def walk(depth: int, prefix: FpMatrix) -> Iterator[FpMatrix]:
            if depth == len(transversals):
                yield prefix
                return
            for u in transversals[depth]:
                yield from walk(depth + 1, prefix @ u)

        return walk(0, identity)

    def __repr__(self) -> str:
        return f"BsgsGroup(n={self.n}, p={self.p}, order={self.order()})"


def build_bsgs(gens: Sequence[FpMatrix], n: Optional[int] = None, p: Optional[int] = None,
               order_limit: Optional[int] = None, budget: Optional[MemoryBudget] = None) -> BsgsGroup:
    """
    Construit la chaîne de stabilisateurs de ⟨gens⟩.

    Args:
        gens: Générateurs inversibles, même dimension et même p
        n, p: Obligatoires si gens est vide (groupe trivial)
        order_limit: Abandon (TooLarge) dès que l'ordre dépasse cette borne
        budget: Budget mémoire consulté pendant la construction

    Returns:
        BsgsGroup: groupe vérifié, résultat déterministe pour une entrée fixée

    Raises:
        DimensionMismatch: générateurs incompatibles
        TooLarge: borne d'ordre ou budget mémoire dépassé
    """
    gens = list(gens)
    if gens:
        n = gens[0].n if n is None else n
        p = gens[0].p if p is None else p
    if n is None or p is None:
        raise DimensionMismatch("dimension and prime are required for an empty generator set")
    for index, g in enumerate(gens):
        if g.n != n or g.p != p:
            raise DimensionMismatch(f"generator {index} is {g.n}x{g.n} mod {g.p}, expected {n}x{n} mod {p}")
        if g.det() == 0:
            raise GroupException(f"generator {index} is singular mod {p}")
    build = _Build(n, p, order_limit, budget)
    root = _Level(build)
    build.root = root
    for g in gens:
        if not g.is_identity():
            root.add(g)
    group = BsgsGroup(gens, n, p, root)
    logger.debug("BSGS built: order %d, orbits %s", group.order(), group.transversal_sizes)
    return group
