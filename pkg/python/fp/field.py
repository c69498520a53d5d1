"""
Corps premier GF(p), p impair.

FieldCtx porte le module p et l'inverse de 2 ; QuadClass code les classes
de carrés (carré, non-carré, zéro) et quadratic_character évalue le
symbole de Legendre par exponentiation a^((p-1)/2).
"""

from dataclasses import dataclass, field
from enum import Enum

from core.exceptions import CoxmodException

# p ≤ 2^61 : les produits intermédiaires restent dans les entiers Python
MAX_PRIME = 1 << 61

_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


def is_prime(n: int) -> bool:
    """Miller–Rabin déterministe pour n < 2^64."""
    if n < 2:
        return False
    if n in (2, 3):
        return True
    if n % 2 == 0:
        return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class QuadClass(Enum):
    """Classe d'un élément de GF(p) modulo les carrés non nuls."""
    SQUARE = 1
    NONSQUARE = -1
    ZERO = 0

    def __mul__(self, other: "QuadClass") -> "QuadClass":
        return QuadClass(self.value * other.value)

    @property
    def symbol(self) -> str:
        return {1: "+", -1: "-", 0: "0"}[self.value]


@dataclass(frozen=True)
class FieldCtx:
    """Contexte du corps premier : p et inv2 = 2^-1 mod p."""
    p: int
    inv2: int = field(init=False)

    def __post_init__(self):
        p = self.p
        if not isinstance(p, int) or p < 3 or p % 2 == 0 or p > MAX_PRIME or not is_prime(p):
            raise CoxmodException(f"p must be an odd prime below 2^61, got {p!r}")
        object.__setattr__(self, "inv2", (p + 1) // 2)

    def reduce(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return pow(a, -1, self.p)

    def neg(self, a: int) -> int:
        return (-a) % self.p


def quadratic_character(a: int, ctx: FieldCtx) -> QuadClass:
    """
    Symbole de Legendre de a modulo p.

    Args:
        a: Élément du corps (entier quelconque, réduit mod p)
        ctx: Contexte du corps

    Returns:
        QuadClass: ZERO si a ≡ 0, SQUARE si a est un carré non nul, NONSQUARE sinon
    """
    a %= ctx.p
    if a == 0:
        return QuadClass.ZERO
    return QuadClass.SQUARE if pow(a, (ctx.p - 1) // 2, ctx.p) == 1 else QuadClass.NONSQUARE
