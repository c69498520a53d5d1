"""
Crible d'intersection en rang 4.

Pour [k, l, m] avec l fini, V, V_0 = ⟨b1,b2,b3⟩ et V_3 = ⟨b0,b1,b2⟩ non
singuliers et G_0, G_3 de type orthogonal (sous-diagrammes non
sphériques), G_0 ∩ G_3 est trop gros pour G_{0,3} dès que
p > 2l + ε(V_{0,3}) : le groupe n'est pas un C-groupe.
"""

import math
from dataclasses import dataclass
from typing import Optional

from coxeter import BasicSystem, gram_mod_p
from fp import FieldCtx, FpMatrix, form_invariants
from ortho import spherical_coxeter_order


@dataclass(frozen=True)
class ScreenVerdict:
    applicable: bool
    predicts_failure: bool = False
    threshold: Optional[int] = None
    reason: str = ""


def _sub_invariants(gram: FpMatrix, indices, ctx: FieldCtx):
    return form_invariants(FpMatrix(gram.restrict(indices, indices), ctx.p), ctx)


def intersection_screen(system: BasicSystem, ctx: FieldCtx) -> ScreenVerdict:
    """Prédiction d'échec du test de C-groupe sans calcul de groupe."""
    if system.rank != 4:
        return ScreenVerdict(False, reason="rank is not 4")
    k, l, m = system.branches
    if l == math.inf:
        return ScreenVerdict(False, reason="middle branch is infinite")
    if spherical_coxeter_order((k, l)) is not None or spherical_coxeter_order((l, m)) is not None:
        return ScreenVerdict(False, reason="a rank 3 section is spherical")
    gram = gram_mod_p(system, ctx)
    if form_invariants(gram, ctx).is_singular:
        return ScreenVerdict(False, reason="V is singular")
    if _sub_invariants(gram, [1, 2, 3], ctx).is_singular or _sub_invariants(gram, [0, 1, 2], ctx).is_singular:
        return ScreenVerdict(False, reason="V_0 or V_3 is singular")
    middle = _sub_invariants(gram, [1, 2], ctx)
    if middle.is_singular:
        return ScreenVerdict(False, reason="V_{0,3} is singular")
    threshold = 2 * int(l) + middle.epsilon
    return ScreenVerdict(True, ctx.p > threshold, threshold)
