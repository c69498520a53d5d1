"""
Présentations finies de groupes et format de fichier .pres.

Format (une directive par ligne, `#` pour les commentaires) :

    name   <texte>                 nom de la présentation
    system [4,4,3]@1,2,1,1         système de base de référence (optionnel)
    prime  3                       premier de référence (optionnel)
    status certified               statut de validation
    gens   4                       nombre de générateurs
    inv    0 1 2 3                 générateurs involutifs
    rel    (0 1 2 1)^3             relateur
    sub    (1 2 3)                 sous-groupe ⟨g_1, g_2, g_3⟩ (une lettre par générateur)
    sub    0 1 2 1                 sous-groupe engendré par un mot (sans parenthèses)
"""

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import ParseError
from matgroup import Word, parse_word

_DIRECTIVES = ("name", "system", "prime", "status", "gens", "inv", "rel", "sub")


@dataclass
class Presentation:
    """
    ⟨g_0, ..., g_{N-1} | relateurs⟩.

    Les relateurs sont librement réduits ; chaque générateur involutif
    apparaît aussi comme relateur g².
    """
    ngens: int
    involutory: Tuple[bool, ...]
    relators: List[Word]
    subgroup: List[Word] = field(default_factory=list)
    metadata: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.involutory) != self.ngens:
            raise ValueError(f"{len(self.involutory)} involution flags for {self.ngens} generators")
        for word in list(self.relators) + list(self.subgroup):
            if word.max_generator() >= self.ngens:
                raise ValueError(f"word {word} uses a generator beyond {self.ngens - 1}")
        self.relators = normalize_relators(self.relators, self.involutory)
        self.subgroup = [w.invert_involutions(self.involutory).free_reduce() for w in self.subgroup]

    @property
    def name(self) -> str:
        return self.metadata.get("name", "")

    def with_relators(self, extra: Sequence[Word]) -> "Presentation":
        return Presentation(self.ngens, self.involutory, list(self.relators) + list(extra),
                            list(self.subgroup), dict(self.metadata))

    def to_text(self) -> str:
        lines = [f"{key} {self.metadata[key]}" for key in ("name", "system", "prime", "status")
                 if key in self.metadata]
        lines.append(f"gens {self.ngens}")
        invs = [str(i) for i, flag in enumerate(self.involutory) if flag]
        if invs:
            lines.append("inv " + " ".join(invs))
        for rel in self.relators:
            if not _is_square_of_involution(rel, self.involutory):
                lines.append("rel (" + " ".join(_letter(x) for x in rel.letters) + ")")
        if self.subgroup and all(len(sub) == 1 for sub in self.subgroup):
            lines.append("sub (" + " ".join(_letter(sub.letters[0]) for sub in self.subgroup) + ")")
        else:
            lines.extend("sub " + " ".join(_letter(x) for x in sub.letters) for sub in self.subgroup)
        return "\n".join(lines) + "\n"


def _letter(x: int) -> str:
    return str(x) if x >= 0 else f"{~x}'"


def _is_square_of_involution(word: Word, involutory: Sequence[bool]) -> bool:
    return len(word) == 2 and word.letters[0] == word.letters[1] and word.letters[0] >= 0 \
        and involutory[word.letters[0]]


def _subgroup_generators(value: str) -> List[Word]:
    """`(i j ...)` liste des générateurs g_i ; tout autre texte est un seul mot."""
    word = parse_word(value)
    if value.startswith("(") and value.endswith(")"):
        return [Word((x,)) for x in word.letters]
    return [word]


def normalize_relators(relators: Sequence[Word], involutory: Sequence[bool]) -> List[Word]:
    """Réduction libre, ajout des g² des involutions, sans doublon ni mot vide."""
    out: List[Word] = []
    seen = set()
    squares = [Word((i, i)) for i, flag in enumerate(involutory) if flag]
    for word in list(squares) + list(relators):
        reduced = word.invert_involutions(involutory).free_reduce()
        if reduced.letters and reduced.letters not in seen:
            seen.add(reduced.letters)
            out.append(reduced)
    return out


def parse_presentation(text: str, source: str = "<text>") -> Presentation:
    """
    Analyse le format .pres.

    Raises:
        ParseError: directive inconnue ou valeur invalide (ligne dans le contexte)
    """
    metadata: Dict[str, str] = {}
    ngens: Optional[int] = None
    inv: List[int] = []
    relators: List[Word] = []
    subgroup: List[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition(" ")
        value = value.strip()
        if key not in _DIRECTIVES:
            raise ParseError(f"unknown directive {key!r} in {source}", raw, None, context={"line": lineno})
        try:
            if key == "gens":
                ngens = int(value)
            elif key == "inv":
                inv.extend(int(x) for x in value.split())
            elif key == "rel":
                relators.append(parse_word(value))
            elif key == "sub":
                subgroup.extend(_subgroup_generators(value))
            else:
                metadata[key] = value
        except (ValueError, ParseError) as e:
            raise ParseError(f"invalid {key} value {value!r} in {source}", raw, None, context={"line": lineno}) from e
    if ngens is None:
        raise ParseError(f"missing 'gens' directive in {source}", text, None)
    flags = tuple(i in inv for i in range(ngens))
    try:
        return Presentation(ngens, flags, relators, subgroup, metadata)
    except ValueError as e:
        raise ParseError(f"{e} in {source}", text, None) from e


def load_presentation(path: Path) -> Presentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"), source=str(path))


def coxeter_presentation(branches: Sequence, extra: Sequence[Word] = (), name: str = "") -> Presentation:
    """
    Présentation de Coxeter du symbole en chaîne [b_1, ..., b_{n-1}],
    plus des relateurs supplémentaires. Les branches ∞ n'imposent rien.
    """
    n = len(branches) + 1
    relators: List[Word] = []
    for i, b in enumerate(branches):
        if b != math.inf:
            relators.append(Word((i, i + 1)) ** int(b))
    for i in range(n):
        for j in range(i + 2, n):
            relators.append(Word((i, j)) ** 2)
    metadata = {"name": name} if name else {}
    return Presentation(n, (True,) * n, relators + list(extra), [], metadata)
