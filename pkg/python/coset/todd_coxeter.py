"""
Énumération de classes latérales de Todd–Coxeter (stratégie HLT avec lookahead).

Le graphe de Schreier est tenu par une structure union-find : chaque
classe a une étiquette, les coïncidences fusionnent les étiquettes et
leurs voisinages. Une colonne par générateur, plus une colonne inverse
pour chaque générateur non involutif.

Quand la table dépasse max_cosets, les classes mortes sont compactées ;
si cela ne suffit pas, un lookahead parcourt chaque relateur depuis chaque
classe vivante sans définir de classe (coïncidences et déductions à une
lacune), puis compacte de nouveau. Le dépassement n'est signalé que si
plus de max_cosets classes restent vivantes.
"""

import builtins
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import EnumerationOverflow
from matgroup import Word

from .presentation import Presentation

logger = logging.getLogger(__name__)

SENTINEL = -1
DEFAULT_MAX_COSETS = 10_000_000


def _columns(pres: Presentation) -> Tuple[Dict[int, int], List[int]]:
    """
    Colonnes de la table.

    Returns:
        (lettre → colonne, colonne → lettre)
    """
    col_of: Dict[int, int] = {}
    letters: List[int] = []
    for g in range(pres.ngens):
        col_of[g] = len(letters)
        letters.append(g)
        if pres.involutory[g]:
            col_of[~g] = col_of[g]
        else:
            col_of[~g] = len(letters)
            letters.append(~g)
    return col_of, letters


@dataclass
class CosetTable:
    """Table standardisée : rows[c][colonne] est l'image de la classe c."""
    rows: List[List[int]]
    letters: List[int]
    status: str = "complete"

    @property
    def index(self) -> int:
        return len(self.rows)

    def act(self, coset: int, word: Word) -> int:
        """Suit le mot de droite à gauche, comme lors de la construction."""
        col_of = {x: k for k, x in builtins.enumerate(self.letters)}
        for x in reversed(word.letters):
            col = col_of.get(x)
            if col is None:
                # inverse d'une involution
                col = col_of[~x]
            coset = self.rows[coset][col]
        return coset


class _SchreierGraph:

    def __init__(self, pres: Presentation, max_cosets: int):
        self.col_of, self.letters = _columns(pres)
        self.ncols = len(self.letters)
        self.max_cosets = max_cosets
        self.labels: List[int] = []
        self.neighbors: List[List[int]] = []
        self.live = 0
        self.relators = [self._cols(w) for w in pres.relators]
        for g in range(pres.ngens):
            if not pres.involutory[g]:
                self.relators.append([self.col_of[g], self.col_of[~g]])
                self.relators.append([self.col_of[~g], self.col_of[g]])

    def _cols(self, word: Word) -> List[int]:
        return [self.col_of[x] for x in word.letters]

    def add_vertex(self) -> int:
        idx = len(self.labels)
        self.labels.append(idx)
        self.neighbors.append([SENTINEL] * self.ncols)
        self.live += 1
        return idx

    def get_label(self, idx: int) -> int:
        labels = self.labels
        root = idx
        while labels[root] != root:
            root = labels[root]
        while labels[idx] != root:
            labels[idx], idx = root, labels[idx]
        return root

    def unify(self, a: int, b: int) -> None:
        to_unify = [(a, b)]
        while to_unify:
            a, b = to_unify.pop()
            a, b = self.get_label(a), self.get_label(b)
            if a == b:
                continue
            a, b = min(a, b), max(a, b)
            self.labels[b] = a
            self.live -= 1
            row_a, row_b = self.neighbors[a], self.neighbors[b]
            for col in range(self.ncols):
                if row_b[col] == SENTINEL:
                    continue
                if row_a[col] == SENTINEL:
                    row_a[col] = row_b[col]
                else:
                    to_unify.append((row_a[col], row_b[col]))

    def follow_step(self, idx: int, col: int) -> int:
        idx = self.get_label(idx)
        nxt = self.neighbors[idx][col]
        if nxt == SENTINEL:
            nxt = self.add_vertex()
            self.neighbors[idx][col] = nxt
            return nxt
        return self.get_label(nxt)

    def follow_path(self, idx: int, cols: Sequence[int]) -> int:
        for col in reversed(cols):
            idx = self.follow_step(idx, col)
        return idx

    def scan(self, idx: int, cols: Sequence[int]) -> Tuple[int, Optional[int], bool]:
        """
        Suit cols sans définir de classe.

        Returns:
            (classe atteinte, colonne de la première lacune ou None, lacune sur la dernière lettre)
        """
        path = list(reversed(cols))
        for k, col in builtins.enumerate(path):
            idx = self.get_label(idx)
            nxt = self.neighbors[idx][col]
            if nxt == SENTINEL:
                return idx, col, k == len(path) - 1
            idx = nxt
        return self.get_label(idx), None, False

    def lookahead(self) -> int:
        """
        Parcourt chaque relateur depuis chaque classe vivante.

        Returns:
            int: nombre de classes libérées
        """
        before = self.live
        for idx in range(len(self.labels)):
            for rel in self.relators:
                if self.labels[idx] != idx:
                    break
                end, gap, last = self.scan(idx, rel)
                if gap is None:
                    self.unify(end, idx)
                elif last:
                    self.neighbors[end][gap] = idx
        logger.debug("lookahead freed %d cosets", before - self.live)
        return before - self.live

    def compact(self, position: int) -> int:
        """
        Renumérote les classes vivantes dans l'ordre et libère les autres.

        Returns:
            int: nouvelle position de la boucle de visite
        """
        remap: Dict[int, int] = {}
        for idx in range(len(self.labels)):
            if self.labels[idx] == idx:
                remap[idx] = len(remap)
        new_position = sum(1 for idx in remap if idx < position)
        rows = []
        for idx in remap:
            row = [SENTINEL if x == SENTINEL else remap[self.get_label(x)]
                   for x in self.neighbors[idx]]
            rows.append(row)
        self.neighbors = rows
        self.labels = list(range(len(rows)))
        self.live = len(rows)
        logger.debug("compacted coset table to %d live cosets", self.live)
        return new_position

    def build(self, subgroup: Sequence[Word]) -> None:
        start = self.add_vertex()
        for word in subgroup:
            self.unify(self.follow_path(start, self._cols(word)), start)
        position = 0
        while position < len(self.labels):
            if self.labels[position] == position:
                for rel in self.relators:
                    self.unify(self.follow_path(position, rel), position)
                    if self.labels[position] != position:
                        break
            position += 1
            if len(self.labels) > self.max_cosets:
                position = self.compact(position)
                if self.live > self.max_cosets:
                    self.lookahead()
                    position = self.compact(position)
                if self.live > self.max_cosets:
                    raise EnumerationOverflow(self.max_cosets, self.live)

    def standardized(self) -> List[List[int]]:
        """Renumérotation en largeur depuis la classe du sous-groupe."""
        start = self.get_label(0)
        order = {start: 0}
        queue = [start]
        for idx in queue:
            for col in range(self.ncols):
                nxt = self.get_label(self.neighbors[idx][col])
                if nxt not in order:
                    order[nxt] = len(queue)
                    queue.append(nxt)
        return [[order[self.get_label(self.neighbors[idx][col])] for col in range(self.ncols)]
                for idx in queue]


def enumerate_table(pres: Presentation, subgroup_words: Optional[Sequence[Word]] = None,
                    max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """
    Table des classes latérales de H = ⟨subgroup_words⟩ dans le groupe présenté.

    Args:
        pres: Présentation finie
        subgroup_words: Générateurs de H (par défaut ceux de la présentation)
        max_cosets: Nombre maximal de classes définies simultanément

    Returns:
        CosetTable: table complète et standardisée

    Raises:
        EnumerationOverflow: la limite est atteinte, même après compactage
    """
    words = pres.subgroup if subgroup_words is None else [
        w.invert_involutions(pres.involutory).free_reduce() for w in subgroup_words]
    graph = _SchreierGraph(pres, max_cosets)
    graph.build(words)
    table = CosetTable(graph.standardized(), graph.letters)
    logger.debug("%s: index %d (%d cosets defined)", pres.name or "presentation",
                 table.index, len(graph.labels))
    return table


def enumerate(pres: Presentation, subgroup_words: Optional[Sequence[Word]] = None,
              max_cosets: int = DEFAULT_MAX_COSETS) -> int:
    """Indice [G : H] ; pour H trivial, l'ordre du groupe présenté."""
    return enumerate_table(pres, subgroup_words, max_cosets).index


def is_closed(table: CosetTable, pres: Presentation) -> bool:
    """Chaque relateur ramène chaque classe sur elle-même."""
    for coset in range(table.index):
        for rel in pres.relators:
            if table.act(coset, rel) != coset:
                return False
    return True
