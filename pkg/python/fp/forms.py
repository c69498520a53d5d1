"""
Invariants d'une forme bilinéaire symétrique sur GF(p).

Le radical est le noyau de la matrice de Gram ; le discriminant et le type
de Witt ε sont lus sur un supplémentaire du radical, formé des vecteurs
de base standard aux colonnes non pivots de la base échelonnée du radical.
"""

import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from .field import FieldCtx, QuadClass, quadratic_character
from .linalg import det_mod_p, kernel_mod_p
from .matrix import FpMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormInvariants:
    """
    Invariants (dim, dimension du radical, discriminant, ε).

    disc est la classe de carré du déterminant du quotient non singulier ;
    epsilon vaut 0 en dimension non singulière impaire.
    """
    dim: int
    rad_dim: int
    disc: QuadClass
    epsilon: int

    @property
    def nonsingular_dim(self) -> int:
        return self.dim - self.rad_dim

    @property
    def is_singular(self) -> bool:
        return self.rad_dim > 0

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "rad_dim": self.rad_dim,
            "disc": self.disc.symbol,
            "epsilon": self.epsilon,
        }


def radical_basis(B: FpMatrix, ctx: FieldCtx) -> List[np.ndarray]:
    """
    Base échelonnée du radical {x : Bx = 0}.

    Args:
        B: Matrice de Gram symétrique
        ctx: Contexte du corps

    Returns:
        List[np.ndarray]: vecteurs de base (liste vide si B est non singulière)
    """
    kernel = kernel_mod_p(B.data, ctx.p)
    return [row.copy() for row in kernel]


def _complement_indices(radical: List[np.ndarray], n: int) -> List[int]:
    pivots = set()
    for vec in radical:
        pivots.add(int(np.nonzero(vec)[0][0]))
    return [j for j in range(n) if j not in pivots]


def witt_epsilon(m: int, disc: QuadClass, ctx: FieldCtx) -> int:
    """ε d'un espace non singulier de dimension 2m et de discriminant disc."""
    sign = quadratic_character((-1) ** m, ctx)
    return 1 if disc * sign == QuadClass.SQUARE else -1


def form_invariants(B: FpMatrix, ctx: FieldCtx) -> FormInvariants:
    """
    Calcule (dim, rad_dim, disc, ε) de la forme de matrice B.

    Le déterminant d'une restriction vide vaut 1 : un espace totalement
    singulier a un discriminant carré et ε = +1.
    """
    n = B.n
    radical = radical_basis(B, ctx)
    keep = _complement_indices(radical, n)
    det = det_mod_p(B.restrict(keep, keep), ctx.p) if keep else 1
    disc = quadratic_character(det, ctx)
    if disc == QuadClass.ZERO:
        # impossible : la restriction à un supplémentaire du radical est non dégénérée
        raise ArithmeticError("restriction to a radical complement is singular")
    size = len(keep)
    epsilon = 0 if size % 2 else witt_epsilon(size // 2, disc, ctx)
    logger.debug("form invariants p=%d: dim=%d rad=%d disc=%s eps=%d",
                 ctx.p, n, len(radical), disc.symbol, epsilon)
    return FormInvariants(dim=n, rad_dim=len(radical), disc=disc, epsilon=epsilon)
