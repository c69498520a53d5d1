"""
Mots en les générateurs et leur évaluation matricielle.

Une lettre est un indice de générateur i ≥ 0 ; l'inverse du générateur i
est codé ~i (soit -i-1). Syntaxe textuelle :

    "101"              lettres d'un chiffre, sans espace
    "0 1 2 1"          lettres séparées par des espaces (indices ≥ 10 admis)
    "(0 1 2 1)^3"      groupes parenthésés avec exposant (négatif admis)
    "1'"               inverse d'une lettre
"""

import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from core.exceptions import ParseError
from fp import FpMatrix

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<sym>[()^'])|(?P<exp>-?\d+)|(?P<bad>\S))")


def letter_text(letter: int) -> str:
    return f"{letter}" if letter >= 0 else f"{~letter}'"


@dataclass(frozen=True)
class Word:
    """Suite de lettres ; le produit se lit de gauche à droite."""
    letters: Tuple[int, ...] = ()

    @classmethod
    def of(cls, letters: Iterable[int]) -> "Word":
        return cls(tuple(int(x) for x in letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, e: int) -> "Word":
        if e < 0:
            return self.inverse() ** (-e)
        return Word(self.letters * e)

    def inverse(self) -> "Word":
        return Word(tuple(~x for x in reversed(self.letters)))

    def generators(self) -> List[int]:
        return sorted({x if x >= 0 else ~x for x in self.letters})

    def max_generator(self) -> int:
        return max(self.generators(), default=-1)

    def free_reduce(self) -> "Word":
        """Réduction libre (suppression des paires x x⁻¹)."""
        out: List[int] = []
        for x in self.letters:
            if out and out[-1] == ~x:
                out.pop()
            else:
                out.append(x)
        return Word(tuple(out))

    def cyclic_rotations(self) -> List["Word"]:
        n = len(self.letters)
        return [Word(self.letters[i:] + self.letters[:i]) for i in range(n)]

    def invert_involutions(self, involutory: Sequence[bool]) -> "Word":
        """Remplace g⁻¹ par g pour les générateurs involutifs."""
        return Word(tuple(~x if x < 0 and involutory[~x] else x for x in self.letters))

    @property
    def text(self) -> str:
        if all(0 <= x < 10 for x in self.letters):
            return "".join(str(x) for x in self.letters)
        return " ".join(letter_text(x) for x in self.letters)

    def __str__(self) -> str:
        return self.text or "1"


class _WordParser:

    def __init__(self, text: str):
        self.text = text
        self.compact = not any(ch.isspace() for ch in text.strip())
        self.tokens = []
        for m in _TOKEN.finditer(text):
            kind = m.lastgroup
            if kind is None:
                continue
            value, start = m.group(kind), m.start(kind)
            if kind == "num" and self.compact and not (self.tokens and self.tokens[-1][:2] == ("sym", "^")):
                # sans espace, chaque chiffre est une lettre
                self.tokens.extend(("num", ch, start + k) for k, ch in enumerate(value))
            else:
                self.tokens.append((kind, value, start))
        self.index = 0

    def peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of word", self.text, len(self.text))
        self.index += 1
        return tok

    def parse(self) -> Word:
        word = self._sequence()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return word

    def _sequence(self) -> Word:
        letters: List[int] = []
        while True:
            tok = self.peek()
            if tok is None or (tok[0] == "sym" and tok[1] == ")"):
                return Word(tuple(letters))
            letters.extend(self._item().letters)

    def _item(self) -> Word:
        kind, value, pos = self.take()
        if kind == "num":
            item = Word((int(value),))
        elif kind == "sym" and value == "(":
            item = self._sequence()
            closing = self.take()
            if closing[1] != ")":
                raise ParseError("expected ')'", self.text, closing[2])
        else:
            raise ParseError(f"unexpected {value!r}", self.text, pos)
        return self._postfix(item)

    def _postfix(self, item: Word) -> Word:
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "sym" or tok[1] not in "^'":
                return item
            self.take()
            if tok[1] == "'":
                item = item.inverse()
                continue
            kind, value, epos = self.take()
            if kind == "exp" or kind == "num":
                item = item ** int(value)
            else:
                raise ParseError("expected an exponent after '^'", self.text, epos)


def parse_word(text: str) -> Word:
    """
    Analyse un mot.

    Raises:
        ParseError: syntaxe invalide (avec position)
    """
    return _WordParser(text).parse()


def evaluate_word(gens: Sequence[FpMatrix], word: Word) -> FpMatrix:
    """
    Produit des matrices des lettres, de gauche à droite.

    Args:
        gens: Générateurs (les lettres indexent cette liste)
        word: Mot à évaluer

    Returns:
        FpMatrix: l'identité pour le mot vide
    """
    if not gens:
        raise ValueError("cannot evaluate a word without generators")
    n, p = gens[0].n, gens[0].p
    inverses: Dict[int, FpMatrix] = {}
    result = FpMatrix.identity(n, p)
    for x in word.letters:
        index = x if x >= 0 else ~x
        if index >= len(gens):
            raise IndexError(f"letter {letter_text(x)} out of range for {len(gens)} generators")
        if x >= 0:
            result = result @ gens[x]
        else:
            if index not in inverses:
                inverses[index] = gens[index].inverse()
            result = result @ inverses[index]
    return result
