"""Bumps and crosses in a society."""

import logging
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Set, Tuple

from src.graph.paths import Path, PathSystem, enumerate_paths, is_path, shortest_path
from src.society.society import Society
from src.utils.budget import Budget, as_budget

logger = logging.getLogger(__name__)


def is_bump(s: Society, p: Sequence[int]) -> bool:
    """A path with at least one edge, both ends in V(Ω) and no other Ω-vertex."""
    if len(p) < 2 or not is_path(s.graph, p):
        return False
    omega = s.omega.vertices
    return p[0] in omega and p[-1] in omega and not any(v in omega for v in p[1:-1])


def bump_between(
    s: Society, a: int, b: int, avoid: Iterable[int] = (), budget: Optional[Budget] = None
) -> Optional[Path]:
    """Shortest bump from a to b whose interior avoids ``avoid``."""
    if budget is not None:
        budget.tick()
    blocked = set(avoid)
    if a in blocked or b in blocked:
        return None
    allowed = (s.graph.vertices - s.omega.vertices - blocked) | {a, b}
    if s.graph.has_edge(a, b):
        return (a, b)
    return shortest_path(s.graph, [a], [b], allowed)


def bumps_from(
    s: Society, a: int, target: Iterable[int], budget: Optional[Budget] = None, chordless: bool = True
) -> Iterator[Path]:
    """Every (chordless) bump from a to a vertex of ``target``."""
    targets = set(target) - {a}
    omega = s.omega.vertices
    yield from enumerate_paths(
        s.graph,
        a,
        is_target=lambda v: v in targets,
        allowed=lambda v: v not in omega,
        budget=budget,
        chordless=chordless,
    )


def all_bumps(s: Society, budget: Optional[Budget] = None) -> Iterator[Path]:
    """Every chordless bump, listed once with its smaller end first."""
    for a in sorted(s.omega.vertices):
        bigger = {v for v in s.omega.vertices if v > a}
        yield from bumps_from(s, a, bigger, budget)


def has_bump(s: Society) -> bool:
    """True iff some bump exists (one BFS per Ω-vertex)."""
    omega = s.omega.vertices
    inner = s.graph.vertices - omega
    for a in omega:
        if any(u in omega for u in s.graph.neighbors(a)):
            return True
        reach = s.graph.bfs([u for u in s.graph.neighbors(a) if u in inner], inner)
        for v in reach:
            if any(u in omega and u != a for u in s.graph.neighbors(v)):
                return True
    return False


def interleaved_pairs(s: Society) -> Iterator[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """Every pair {a,c},{b,d} with (a,b,c,d) clockwise."""
    ring = s.omega.ring
    for i, j, k, l in combinations(range(len(ring)), 4):
        yield (ring[i], ring[k]), (ring[j], ring[l])


def disjoint_bump_pair(
    s: Society, first: Tuple[int, int], second: Tuple[int, int], budget: Optional[Budget] = None
) -> Optional[Tuple[Path, Path]]:
    """
    Two vertex-disjoint bumps joining the given end pairs.

    The first bump ranges over chordless bumps (shortcutting a bump only
    frees vertices), the second is found by BFS in what remains.
    """
    a, c = first
    b, d = second
    for p in bumps_from(s, a, {c}, budget):
        if b in p or d in p:
            continue
        q = bump_between(s, b, d, avoid=p, budget=budget)
        if q is not None:
            return p, q
    return None


def find_cross(s: Society, budget=None) -> Optional[PathSystem]:
    """
    Two disjoint bumps with interleaved ends, or None after exhaustive search.

    Raises:
        BudgetExceeded: when the search runs out of nodes
    """
    budget = as_budget(budget, where="find_cross")
    for first, second in interleaved_pairs(s):
        pair = disjoint_bump_pair(s, first, second, budget)
        if pair is not None:
            logger.debug(f"cross found on ends {first} / {second}")
            return PathSystem.of(pair)
    return None


def is_cross_free(s: Society, budget=None) -> bool:
    return find_cross(s, budget) is None


def is_cross(s: Society, p: Sequence[int], q: Sequence[int]) -> bool:
    """Disjoint bumps whose end pairs interleave on Ω."""
    if not (is_bump(s, p) and is_bump(s, q)) or set(p) & set(q):
        return False
    return s.omega.clockwise([p[0], q[0], p[-1], q[-1]]) or s.omega.clockwise([p[0], q[-1], p[-1], q[0]])


def bump_vertices(bumps: Iterable[Sequence[int]]) -> Set[int]:
    return {v for p in bumps for v in p}
