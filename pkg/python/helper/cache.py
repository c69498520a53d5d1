from typing import Any, Dict, Optional, Sequence, Tuple

from core.memory_manager import MemoryBudget
from fp import FpMatrix
from matgroup import BsgsGroup, build_bsgs


#
# Simple in-process cache of BSGS builds, so that the subgroups G_J used by the
# C-group test, face counts and map invariants of one analysis are built once.
# The cache key is the function name and the canonical bytes of the generators.
# Census workers clear it at the start of every job.
#
_GROUP_CACHE: Dict[Tuple[str, Tuple[Any, ...]], Any] = {}


def _make_cache_key(function_name: str, *parts: Any) -> Tuple[str, Tuple[Any, ...]]:
    return function_name, tuple(parts)


def get_from_cache(function_name: str, *parts: Any) -> Optional[Any]:
    return _GROUP_CACHE.get(_make_cache_key(function_name, *parts))


def set_in_cache(result: Any, function_name: str, *parts: Any) -> None:
    _GROUP_CACHE[_make_cache_key(function_name, *parts)] = result


def clear_cache() -> None:
    _GROUP_CACHE.clear()


def cache_size() -> int:
    return len(_GROUP_CACHE)


def generators_key(gens: Sequence[FpMatrix]) -> Tuple[Any, ...]:
    if not gens:
        return ()
    return (gens[0].n, gens[0].p) + tuple(g.key for g in gens)


def cached_bsgs(gens: Sequence[FpMatrix], n: Optional[int] = None, p: Optional[int] = None,
                order_limit: Optional[int] = None, budget: Optional[MemoryBudget] = None) -> BsgsGroup:
    """BSGS of ⟨gens⟩, built once per generator tuple until the next clear_cache()."""
    parts = generators_key(gens) or (n, p)
    cached = get_from_cache("build_bsgs", *parts)
    if cached is not None:
        return cached
    group = build_bsgs(gens, n=n, p=p, order_limit=order_limit, budget=budget)
    set_in_cache(group, "build_bsgs", *parts)
    return group
