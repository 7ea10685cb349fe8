"""Linear and vortical decompositions, exact depth."""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from src.society.society import Society
from src.utils import config
from src.utils.budget import Budget, as_budget
from src.utils.errors import MalformedInputError, TooLarge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearDecomposition:
    """Clockwise enumeration t1..tn of V(Ω) with bags X1..Xn."""

    enumeration: Tuple[int, ...]
    bags: Tuple[FrozenSet[int], ...]

    @classmethod
    def of(cls, enumeration: Sequence[int], bags: Sequence[Sequence[int]]) -> "LinearDecomposition":
        return cls(tuple(enumeration), tuple(frozenset(b) for b in bags))

    @property
    def depth(self) -> int:
        return linear_depth(self)

    def adhesions(self) -> List[FrozenSet[int]]:
        """Y_i = X_i ∩ X_{i+1} for consecutive bags."""
        return [self.bags[i] & self.bags[i + 1] for i in range(len(self.bags) - 1)]

    def span(self, v: int) -> Optional[Tuple[int, int]]:
        """First and last bag index containing v."""
        hits = [i for i, b in enumerate(self.bags) if v in b]
        return (hits[0], hits[-1]) if hits else None

    def to_dict(self) -> Dict[str, object]:
        return {"enumeration": list(self.enumeration), "bags": [sorted(b) for b in self.bags]}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "LinearDecomposition":
        try:
            return cls.of(data["enumeration"], data["bags"])
        except (KeyError, TypeError) as e:
            raise MalformedInputError(f"invalid decomposition JSON: {e}") from e


def linear_depth(ld: LinearDecomposition) -> int:
    """max |X_i ∩ X_i'| over i < i'."""
    best = 0
    for i in range(len(ld.bags)):
        for j in range(i + 1, len(ld.bags)):
            best = max(best, len(ld.bags[i] & ld.bags[j]))
    return best


def explain_linear_decomposition(s: Society, ld: LinearDecomposition) -> Optional[str]:
    """First violated axiom, or None when ld is a linear decomposition of s."""
    n = len(ld.enumeration)
    if n != len(ld.bags):
        return "enumeration and bag counts differ"
    if set(ld.enumeration) != set(s.omega.vertices) or n != len(s.omega):
        return "enumeration does not list V(Ω) exactly once"
    if n >= 3 and not s.omega.clockwise(ld.enumeration):
        return "enumeration is not clockwise"
    covered: Set[int] = set()
    for b in ld.bags:
        covered |= b
    if covered - s.graph.vertices:
        return "bags name vertices outside G"
    if covered != s.graph.vertices:
        return "axiom (i): some vertex lies in no bag"
    for u, v in s.graph.simple_edges():
        if not any(u in b and v in b for b in ld.bags):
            return f"axiom (i): edge ({u}, {v}) lies in no bag"
    for i, t in enumerate(ld.enumeration):
        if t not in ld.bags[i]:
            return f"axiom (ii): t_{i + 1}={t} is not in its bag"
    for v in covered:
        first, last = ld.span(v)
        for k in range(first, last + 1):
            if v not in ld.bags[k]:
                return f"axiom (iii): vertex {v} leaves and re-enters the bags"
    return None


def verify_linear_decomposition(s: Society, ld: LinearDecomposition) -> bool:
    reason = explain_linear_decomposition(s, ld)
    if reason:
        logger.debug(f"Linear decomposition rejected: {reason}")
    return reason is None


# ----------------------------------------------------------------------
# exact depth
# ----------------------------------------------------------------------
class _DepthSearch:
    """
    Interval assignment for one fixed enumeration.

    Every vertex occupies a run of consecutive bags. There is an optimal
    assignment in which each vertex leaves as soon as all of its
    neighbours have entered (and, for t_i, not before bag i), and enters
    only at its own position or when a neighbour leaves. Under that normal
    form the state after bag i is the set of entered vertices.
    """

    def __init__(self, s: Society, enumeration: Sequence[int], vertices: List[int], budget: Budget) -> None:
        self.g = s.graph
        self.enumeration = list(enumeration)
        self.vertices = vertices
        self.bit = {v: 1 << k for k, v in enumerate(vertices)}
        self.nbr = {v: sum(self.bit[u] for u in self.g.neighbors(v) if u in self.bit) for v in vertices}
        self.pos = {t: i for i, t in enumerate(self.enumeration)}
        self.budget = budget
        self.full = (1 << len(vertices)) - 1

    def finished(self, started: int, i: int) -> int:
        done = 0
        for v in self.vertices:
            b = self.bit[v]
            if started & b and (self.nbr[v] & ~started) == 0 and self.pos.get(v, -1) <= i:
                done |= b
        return done

    def choices(self, started: int, i: int) -> List[int]:
        t = self.enumeration[i]
        forced = 0 if started & self.bit[t] else self.bit[t]
        # a new vertex needs a chain of new vertices back to the entered ones
        seeds = [v for v in self.vertices if started & self.bit[v]] + [t]
        unstarted = {v for v in self.vertices if not started & self.bit[v]}
        reach = self.g.bfs(seeds, unstarted | set(seeds))
        free = [v for v in self.vertices if v in unstarted and v in reach and v != t]
        out: List[int] = []
        for mask in range(1 << len(free)):
            new = forced
            for k, v in enumerate(free):
                if mask >> k & 1:
                    new |= self.bit[v]
            out.append(new)
        return out

    def justified(self, started: int, new: int, done_before: int, done_now: int, i: int) -> bool:
        leaving = done_now & ~done_before
        t = self.enumeration[i]
        for v in self.vertices:
            b = self.bit[v]
            if new & b and v != t and not (self.nbr[v] & leaving):
                return False
        return True

    def feasible(self, d: int) -> Optional[List[int]]:
        """Entered-sets after each bag, when depth d is achievable."""
        n = len(self.enumeration)
        failed: Set[Tuple[int, int]] = set()
        trail: List[int] = []

        def go(i: int, started: int, done: int) -> bool:
            self.budget.tick()
            if i == n:
                return started == self.full and done == self.full
            if (i, started) in failed:
                return False
            for new in self.choices(started, i):
                now = started | new
                done_now = self.finished(now, i)
                if not self.justified(started, new, done, done_now, i):
                    continue
                if i < n - 1 and bin(now & ~done_now).count("1") > d:
                    continue
                trail.append(now)
                if go(i + 1, now, done_now):
                    return True
                trail.pop()
            failed.add((i, started))
            return False

        return list(trail) if go(0, 0, 0) else None

    def bags(self, entered: List[int]) -> List[FrozenSet[int]]:
        n = len(self.enumeration)
        first: Dict[int, int] = {}
        last: Dict[int, int] = {}
        for i in range(n):
            done = self.finished(entered[i], i)
            for v in self.vertices:
                b = self.bit[v]
                if entered[i] & b and v not in first:
                    first[v] = i
                if done & b and v not in last:
                    last[v] = i
        return [frozenset(v for v in self.vertices if first[v] <= i <= last[v]) for i in range(n)]


def depth_exact(s: Society, limit: Optional[int] = None, budget=None) -> Tuple[int, LinearDecomposition]:
    """
    Minimum depth of a linear decomposition of s, with a witness.

    All rotations of Ω are tried; ties keep the earliest rotation.

    Args:
        s: Society with nonempty Ω
        limit: Largest accepted vertex count (default MINORFORGE_DEPTH_LIMIT)
        budget: Search node limit

    Raises:
        TooLarge: more than ``limit`` vertices
    """
    limit = config.DEPTH_LIMIT if limit is None else limit
    if s.graph.order() > limit:
        raise TooLarge(f"depth_exact accepts at most {limit} vertices, got {s.graph.order()}")
    if len(s.omega) == 0:
        raise MalformedInputError("depth is undefined for an empty Ω")
    budget = as_budget(budget, where="depth_exact")
    omega = s.omega.vertices
    # components without Ω-vertices sit entirely in the first bag
    floating: Set[int] = set()
    for comp in s.graph.components():
        if not omega & set(comp):
            floating |= set(comp)
    active = [v for v in s.graph.sorted_vertices() if v not in floating]

    best: Optional[Tuple[int, LinearDecomposition]] = None
    ring = s.omega.ring
    for r in range(len(ring)):
        enumeration = ring[r:] + ring[:r]
        search = _DepthSearch(s, enumeration, active, budget)
        top = len(active) if best is None else best[0] - 1
        for d in range(0, top + 1):
            entered = search.feasible(d)
            if entered is not None:
                bags = search.bags(entered)
                bags[0] = bags[0] | floating
                ld = LinearDecomposition(tuple(enumeration), tuple(bags))
                best = (linear_depth(ld), ld)
                break
        if best is not None and best[0] == 0:
            break
    logger.debug(f"depth_exact: depth {best[0]} after {budget.spent} nodes")
    return best


def depth_upper_bound(s: Society) -> LinearDecomposition:
    """A valid (not necessarily optimal) decomposition: every bag is V(G)."""
    ring = s.omega.ring
    return LinearDecomposition(tuple(ring), tuple(frozenset(s.graph.vertices) for _ in ring))


# ----------------------------------------------------------------------
# vortical decompositions
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class VorticalDecomposition:
    """Zones Z_v for v in V(Ω)."""

    zones: Dict[int, FrozenSet[int]]

    def to_dict(self) -> Dict[str, object]:
        return {"zones": {str(v): sorted(z) for v, z in sorted(self.zones.items())}}


def explain_vortical_decomposition(s: Society, vd: VorticalDecomposition) -> Optional[str]:
    if set(vd.zones) != set(s.omega.vertices):
        return "zones must be indexed by V(Ω)"
    covered: Set[int] = set()
    for v, z in vd.zones.items():
        if v not in z:
            return f"vertex {v} is not in its own zone"
        covered |= z
    if covered != s.graph.vertices:
        return "zones do not cover V(G)"
    for a, b in s.graph.simple_edges():
        if not any(a in z and b in z for z in vd.zones.values()):
            return f"edge ({a}, {b}) lies in no zone"
    ring = s.omega.ring
    n = len(ring)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    v1, v2, v3, v4 = ring[i], ring[j], ring[k], ring[l]
                    z = vd.zones
                    if not (z[v1] & z[v3]) <= (z[v2] | z[v4]):
                        return f"zones of {v1} and {v3} meet outside the zones of {v2} and {v4}"
                    if not (z[v2] & z[v4]) <= (z[v3] | z[v1]):
                        return f"zones of {v2} and {v4} meet outside the zones of {v3} and {v1}"
    return None


def verify_vortical_decomposition(s: Society, vd: VorticalDecomposition) -> bool:
    reason = explain_vortical_decomposition(s, vd)
    if reason:
        logger.debug(f"Vortical decomposition rejected: {reason}")
    return reason is None


def vortical_from_linear(ld: LinearDecomposition) -> VorticalDecomposition:
    """Z_{t_i} = X_i."""
    return VorticalDecomposition({t: ld.bags[i] for i, t in enumerate(ld.enumeration)})
