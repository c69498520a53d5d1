"""
Grammaire textuelle des diagrammes : `[b1,...,bk]@c0,...,ck`.

Les branches sont des entiers de {2, 3, 4, 6} ou `inf` (ou `∞`) ; les
espaces sont ignorés. Les positions d'erreur se réfèrent au texte d'origine.
"""

import re
from typing import List, Optional, Tuple

from core.exceptions import BadBranchLabel, ParseError

from .diagram import INF, BasicSystem, StringDiagram, validate

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<inf>inf|∞)|(?P<sym>[\[\],@])|(?P<bad>\S))", re.IGNORECASE)


class _Scanner:
    """Lecteur de jetons avec position dans le texte source."""

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        for m in _TOKEN.finditer(text):
            kind = m.lastgroup
            if kind is None:
                continue
            self.tokens.append((kind, m.group(kind), m.start(kind)))
        self.index = 0

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def position(self) -> int:
        tok = self.peek()
        return tok[2] if tok else len(self.text)

    def take(self) -> Tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.text, len(self.text))
        self.index += 1
        return tok

    def expect(self, symbol: str):
        kind, value, pos = self.take()
        if kind != "sym" or value != symbol:
            raise ParseError(f"expected {symbol!r}, found {value!r}", self.text, pos)

    def accept(self, symbol: str) -> bool:
        tok = self.peek()
        if tok and tok[0] == "sym" and tok[1] == symbol:
            self.index += 1
            return True
        return False


def _branch(scanner: _Scanner, index: int):
    kind, value, pos = scanner.take()
    if kind == "inf":
        return INF
    if kind != "num":
        raise ParseError(f"expected a branch label, found {value!r}", scanner.text, pos)
    label = int(value)
    if label not in (2, 3, 4, 6):
        raise BadBranchLabel(label, index, context={"text": scanner.text, "position": pos})
    return label


def _branches(scanner: _Scanner) -> StringDiagram:
    scanner.expect("[")
    branches = [_branch(scanner, 0)]
    while scanner.accept(","):
        branches.append(_branch(scanner, len(branches)))
    scanner.expect("]")
    return StringDiagram(tuple(branches))


def _labels(scanner: _Scanner) -> Tuple[int, ...]:
    labels = []
    while True:
        kind, value, pos = scanner.take()
        if kind != "num" or int(value) <= 0:
            raise ParseError(f"expected a positive node label, found {value!r}", scanner.text, pos)
        labels.append(int(value))
        if not scanner.accept(","):
            return tuple(labels)


def _finish(scanner: _Scanner):
    if scanner.peek() is not None:
        _, value, pos = scanner.peek()
        raise ParseError(f"unexpected {value!r}", scanner.text, pos)


def parse_diagram(text: str) -> Tuple[StringDiagram, Tuple[int, ...]]:
    """
    Analyse `[b1,...,bk]@c0,...,ck`.

    Returns:
        (StringDiagram, étiquettes de sommets)

    Raises:
        ParseError: syntaxe invalide (avec position)
        BadBranchLabel: étiquette de branche non cristallographique
    """
    scanner = _Scanner(text)
    diagram = _branches(scanner)
    at = scanner.position()
    scanner.expect("@")
    labels = _labels(scanner)
    _finish(scanner)
    if len(labels) != diagram.rank:
        raise ParseError(f"{len(labels)} node labels for a rank {diagram.rank} diagram", text, at)
    return diagram, labels


def parse_schlafli(text: str) -> StringDiagram:
    """Analyse un diagramme sans étiquettes de sommets, `[b1,...,bk]`."""
    scanner = _Scanner(text)
    diagram = _branches(scanner)
    _finish(scanner)
    return diagram


def parse_system(text: str) -> BasicSystem:
    """Analyse et valide un système de base."""
    diagram, labels = parse_diagram(text)
    return validate(diagram, labels)
