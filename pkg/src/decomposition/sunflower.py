"""Families of small sets whose pairwise intersections fit in one small core."""

import logging
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

SunflowerResult = Tuple[FrozenSet[int], List[FrozenSet[int]]]


def _key(f: FrozenSet[int]) -> Tuple[int, ...]:
    return tuple(sorted(f))


def threshold(d: int, t: int) -> int:
    """Family size above which a core of size C(d+1, 2) with t petals always exists."""
    return 2 ** comb(d + 1, 2) * t**d


def minimal_member(family: Sequence[FrozenSet[int]]) -> FrozenSet[int]:
    """The inclusion-minimal member with the smallest sorted tuple."""
    pool = set(family)
    for f in sorted(family, key=_key):
        items = sorted(f)
        proper = (frozenset(c) for k in range(len(items)) for c in combinations(items, k))
        if not any(c in pool for c in proper):
            return f
    raise ValueError("empty family")


def _search(family: List[FrozenSet[int]], d: int, t: int) -> Optional[SunflowerResult]:
    if t <= 0:
        return frozenset(), []
    if not family:
        return None
    if t == 1:
        return frozenset(), [min(family, key=_key)]
    if d <= 1:
        # distinct sets of size at most one are pairwise disjoint
        if len(family) >= t:
            return frozenset(), sorted(family, key=_key)[:t]
        return None
    f0 = minimal_member(family)

    away = [f for f in family if f != f0 and not f & f0]
    found = _search(away, d, t - 1)
    if found is not None:
        core, petals = found
        return core, petals + [f0]

    traces: Dict[FrozenSet[int], FrozenSet[int]] = {}
    for f in sorted(family, key=_key):
        if f & f0:
            traces.setdefault(f - f0, f)
    found = _search(list(traces), d - 1, t)
    if found is not None:
        core, petals = found
        return core | f0, [traces[p] for p in petals]
    return None


def sunflower_subsets(family: Iterable[Iterable[int]], d: int, t: int) -> Optional[SunflowerResult]:
    """
    A core X with |X| ≤ C(d+1, 2) and t members whose pairwise
    intersections lie in X.

    Duplicates in ``family`` are collapsed first. Success is guaranteed
    once there are at least ``threshold(d, t)`` distinct sets.

    Args:
        family: Sets of size at most d
        d: Size bound of the members
        t: Number of members wanted

    Returns:
        (X, members) or None

    Raises:
        ValueError: negative parameters or a member larger than d
    """
    if d < 0 or t < 0:
        raise ValueError(f"d and t must be nonnegative, got d={d}, t={t}")
    distinct = sorted({frozenset(f) for f in family}, key=_key)
    big = [f for f in distinct if len(f) > d]
    if big:
        raise ValueError(f"member {sorted(big[0])} has more than {d} elements")
    result = _search(distinct, d, t)
    if result is None and d >= 1 and len(distinct) >= threshold(d, t):
        raise RuntimeError(f"no core found in {len(distinct)} sets above the threshold {threshold(d, t)}")
    if result is not None:
        logger.debug(f"sunflower: core of {len(result[0])} with {len(result[1])} members")
    return result


def explain_sunflower(
    family: Iterable[Iterable[int]], core: Iterable[int], members: Sequence[Iterable[int]], d: int, t: int
) -> Optional[str]:
    pool = {frozenset(f) for f in family}
    core = frozenset(core)
    members = [frozenset(f) for f in members]
    if len(core) > comb(d + 1, 2):
        return f"core has {len(core)} elements, more than C({d}+1, 2)"
    if len(set(members)) < t:
        return f"need {t} distinct members, got {len(set(members))}"
    for f in members:
        if f not in pool:
            return f"{sorted(f)} is not in the family"
    for i, f in enumerate(members):
        for g in members[i + 1 :]:
            if not f & g <= core:
                return f"{sorted(f)} and {sorted(g)} meet outside the core"
    return None


def verify_sunflower(
    family: Iterable[Iterable[int]], core: Iterable[int], members: Sequence[Iterable[int]], d: int, t: int
) -> bool:
    return explain_sunflower(family, core, members, d, t) is None
