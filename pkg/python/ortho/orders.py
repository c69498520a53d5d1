"""
Ordres des groupes orthogonaux finis O(n, p, ε) et de leurs variantes
singulières Ô = GF(p)^{r(n-r)} ⋊ O(n-r, p, ε).
"""

from math import prod

from core.exceptions import BadEpsilon


def check_epsilon(n: int, epsilon: int):
    if n % 2 == 0 and epsilon not in (1, -1):
        raise BadEpsilon(n, epsilon, details="even dimension needs epsilon in {+1, -1}")
    if n % 2 == 1 and epsilon != 0:
        raise BadEpsilon(n, epsilon, details="odd dimension needs epsilon 0")


def order_orthogonal(n: int, p: int, epsilon: int) -> int:
    """
    |O(n, p, ε)|.

    dim 2m : 2·p^{m(m-1)}·(p^m - ε)·∏_{i<m}(p^{2i} - 1)
    dim 2m+1 : 2·p^{m²}·∏_{i≤m}(p^{2i} - 1)

    Raises:
        BadEpsilon: ε incompatible avec la parité de n
    """
    if n == 0:
        return 1
    check_epsilon(n, epsilon)
    m = n // 2
    if n % 2 == 0:
        return 2 * p ** (m * (m - 1)) * (p ** m - epsilon) * prod(p ** (2 * i) - 1 for i in range(1, m))
    return 2 * p ** (m * m) * prod(p ** (2 * i) - 1 for i in range(1, m + 1))


def order_reflection_subgroup(n: int, p: int, epsilon: int) -> int:
    """|O_1| = |O_2| = |O| / 2."""
    return order_orthogonal(n, p, epsilon) // 2


def order_singular(n: int, p: int, rad_dim: int, epsilon: int) -> int:
    """
    |Ô(V)| pour un espace de dimension n de radical de dimension r.

    ε est celui du quotient non singulier V / rad V.
    """
    if not 0 <= rad_dim <= n:
        raise ValueError(f"radical dimension {rad_dim} outside [0, {n}]")
    return p ** (rad_dim * (n - rad_dim)) * order_orthogonal(n - rad_dim, p, epsilon)
