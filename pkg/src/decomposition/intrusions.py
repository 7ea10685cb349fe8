"""
Bases, intrusions, longitudes, invasions and meridians.

An intrusion is a separation (A, B) with X ⊆ A and Y ⊆ B for a base
(X, Y) together with disjoint X-Y paths, one through each vertex of A∩B.
Every intrusion therefore has the minimum X-Y separation order, and a
minimal intrusion is the one whose A side is the X-closest.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from src.graph.flows import closest_separation
from src.graph.graph import Separation
from src.graph.paths import Path, PathSystem, shortest_path
from src.society.depth import LinearDecomposition, verify_linear_decomposition
from src.society.society import Society
from src.utils.errors import InvalidWitnessError, MalformedInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Base:
    """A pair (X, Y) of closed arcs of Ω sharing exactly their two ends."""

    X: FrozenSet[int]
    Y: FrozenSet[int]

    @classmethod
    def of(cls, X: Sequence[int], Y: Sequence[int]) -> "Base":
        return cls(frozenset(X), frozenset(Y))

    @property
    def ends(self) -> FrozenSet[int]:
        return self.X & self.Y

    def to_dict(self) -> Dict[str, List[int]]:
        return {"X": sorted(self.X), "Y": sorted(self.Y)}


def explain_base(s: Society, base: Base) -> Optional[str]:
    omega = s.omega
    if not base.X | base.Y <= omega.vertices:
        return "X and Y must be subsets of V(Ω)"
    if base.X | base.Y != omega.vertices:
        return "X ∪ Y must be V(Ω)"
    if len(base.ends) != 2:
        return f"|X∩Y| must be 2, got {len(base.ends)}"
    a, b = sorted(base.ends)
    one = omega.interval(a, b) - {a, b}
    other = omega.interval(b, a) - {a, b}
    only_x, only_y = base.X - base.Y, base.Y - base.X
    if (only_x <= one and only_y <= other) or (only_x <= other and only_y <= one):
        return None
    return "X and Y interleave around Ω"


def verify_base(s: Society, base: Base) -> bool:
    reason = explain_base(s, base)
    if reason is not None:
        logger.debug(f"base rejected: {reason}")
    return reason is None


def base_from_arc(s: Society, u: int, v: int) -> Base:
    """The base (uΩv, vΩu)."""
    if u == v:
        raise ValueError("a base needs two distinct ends")
    return Base(s.omega.interval(u, v), s.omega.interval(v, u))


@dataclass(frozen=True)
class Intrusion:
    sep: Separation
    base: Base
    longitudes: PathSystem

    @property
    def A(self) -> FrozenSet[int]:
        return self.sep.A

    @property
    def B(self) -> FrozenSet[int]:
        return self.sep.B

    @property
    def order(self) -> int:
        return self.sep.order

    @property
    def cut(self) -> FrozenSet[int]:
        return self.sep.cut

    def longitude_at(self, v: int) -> Optional[Path]:
        return next((p for p in self.longitudes if v in p), None)

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"A": sorted(self.A), "B": sorted(self.B)}
        data.update(self.base.to_dict())
        data["longitudes"] = [list(p) for p in self.longitudes]
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "Intrusion":
        try:
            sep = Separation(frozenset(data["A"]), frozenset(data["B"]))
            base = Base.of(data["X"], data["Y"])
            longitudes = PathSystem.of(data.get("longitudes", []))
        except (KeyError, TypeError) as e:
            raise MalformedInputError(f"intrusion JSON needs A, B, X, Y and longitudes: {e}") from e
        return cls(sep, base, longitudes)


def explain_intrusion(s: Society, inv: Intrusion) -> Optional[str]:
    """First violated clause of the intrusion definition, or None."""
    reason = explain_base(s, inv.base)
    if reason is not None:
        return f"base: {reason}"
    g = s.graph
    if not inv.sep.is_valid(g):
        return "(A, B) is not a separation of G"
    if not inv.base.X <= inv.A:
        return "X must lie in A"
    if not inv.base.Y <= inv.B:
        return "Y must lie in B"
    if len(inv.longitudes) != inv.order:
        return f"expected {inv.order} longitudes, got {len(inv.longitudes)}"
    if not PathSystem.of(inv.longitudes).verify(g):
        return "longitudes must be pairwise disjoint paths of G"
    for p in inv.longitudes:
        if p[0] not in inv.base.X or p[-1] not in inv.base.Y:
            return f"longitude {list(p)} does not run from X to Y"
    for v in sorted(inv.cut):
        if inv.longitude_at(v) is None:
            return f"no longitude through cut vertex {v}"
    return None


def verify_intrusion(s: Society, inv: Intrusion) -> bool:
    reason = explain_intrusion(s, inv)
    if reason is not None:
        logger.debug(f"intrusion rejected: {reason}")
    return reason is None


def _longitudes(paths: PathSystem, cut: FrozenSet[int]) -> PathSystem:
    """Order the Menger paths by the cut vertex each one passes through."""
    by_vertex = {}
    for p in paths:
        hit = sorted(cut & set(p))
        if hit:
            by_vertex[hit[0]] = p
    return PathSystem.of(by_vertex[v] for v in sorted(by_vertex))


def find_intrusion(s: Society, base: Base, ld: Optional[LinearDecomposition] = None) -> Intrusion:
    """
    The minimal intrusion based at ``base``.

    The two ends of the base are forced cut members, so the order is at
    least two.

    Args:
        s: Society
        base: A valid base in Ω
        ld: Optional linear decomposition; when given the order is checked
            against 2·depth + 2

    Raises:
        InvalidWitnessError: the base or the decomposition does not verify
    """
    reason = explain_base(s, base)
    if reason is not None:
        raise InvalidWitnessError(f"invalid base: {reason}")
    sep, paths = closest_separation(s.graph, base.X, base.Y)
    inv = Intrusion(sep, base, _longitudes(paths, sep.cut))
    if ld is not None:
        if not verify_linear_decomposition(s, ld):
            raise InvalidWitnessError("the linear decomposition does not verify")
        bound = 2 * ld.depth + 2
        if inv.order > bound:
            raise RuntimeError(f"intrusion of order {inv.order} exceeds 2·depth + 2 = {bound}")
    logger.debug(f"find_intrusion: order {inv.order}, |A|={len(inv.A)}")
    return inv


def is_minimal_intrusion(s: Society, inv: Intrusion) -> bool:
    """A equals the X-closest side of a minimum X-Y separation."""
    if not verify_intrusion(s, inv):
        return False
    closest, _ = closest_separation(s.graph, inv.base.X, inv.base.Y)
    return closest.order == inv.order and closest.A == inv.A


def is_invasion(s: Society, inv: Intrusion) -> bool:
    return verify_intrusion(s, inv) and len(inv.cut & s.omega.vertices) == 2


def find_meridian(s: Society, inv: Intrusion) -> Optional[Path]:
    """A path in G[A] joining the two ends of the base."""
    a, b = sorted(inv.base.ends)
    return shortest_path(s.graph, [a], [b], set(inv.A))


def _exchange(mine: Intrusion, other: Intrusion) -> Intrusion:
    """(A_i ∩ B_j, A_j ∪ B_i) with the longitudes carried over."""
    sep = Separation(mine.A & other.B, other.A | mine.B)
    return Intrusion(sep, mine.base, _longitudes(mine.longitudes, sep.cut))


def _crossing(a: Intrusion, b: Intrusion) -> Optional[int]:
    bad = (a.A & b.A) - (a.B & b.B)
    return min(bad) if bad else None


def uncross_steps(s: Society, intrusions: Sequence[Intrusion]) -> Iterator[List[Intrusion]]:
    """
    Yield the family after every exchange step, starting with the input.

    Each step shrinks one A side, so Σ|A_i| strictly decreases.

    Raises:
        InvalidWitnessError: an input is not an intrusion, or the X sides
            of the bases are not pairwise disjoint
    """
    family = list(intrusions)
    for i, inv in enumerate(family):
        reason = explain_intrusion(s, inv)
        if reason is not None:
            raise InvalidWitnessError(f"intrusion {i}: {reason}")
    for i, a in enumerate(family):
        for b in family[i + 1 :]:
            if a.base.X & b.base.X:
                raise InvalidWitnessError("the X sides of the bases must be pairwise disjoint")
    yield list(family)
    while True:
        step = None
        for i, a in enumerate(family):
            for j in range(i + 1, len(family)):
                x = _crossing(a, family[j])
                if x is not None:
                    step = (i, j, x)
                    break
            if step is not None:
                break
        if step is None:
            return
        i, j, x = step
        if x in family[i].A - family[j].B:
            family[i] = _exchange(family[i], family[j])
        else:
            family[j] = _exchange(family[j], family[i])
        yield list(family)


def uncross_intrusions(s: Society, intrusions: Sequence[Intrusion]) -> List[Intrusion]:
    """
    Exchange crossing pairs until A_i ∩ A_j ⊆ B_i ∩ B_j for every pair.

    Bases and orders are preserved. Outputs are re-certified for
    minimality; failures are logged, not repaired.

    Raises:
        InvalidWitnessError: see ``uncross_steps``
    """
    history = list(uncross_steps(s, intrusions))
    family, steps = history[-1], len(history) - 1
    for i, inv in enumerate(family):
        if not verify_intrusion(s, inv):
            raise RuntimeError(f"exchange produced an invalid intrusion at index {i}")
        if not is_minimal_intrusion(s, inv):
            logger.warning(f"uncrossed intrusion {i} is not minimal")
    logger.debug(f"uncross_intrusions: {steps} exchanges")
    return family


def is_uncrossed(intrusions: Sequence[Intrusion]) -> bool:
    return all(
        _crossing(a, b) is None for i, a in enumerate(intrusions) for b in intrusions[i + 1 :]
    )


def side_sizes(intrusions: Sequence[Intrusion]) -> Tuple[int, ...]:
    return tuple(len(inv.A) for inv in intrusions)
