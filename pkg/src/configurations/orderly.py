"""Orderly transactions and their jumps, crosses and tunnels."""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from src.configurations.templates import safe_clockwise
from src.graph.graph import Graph
from src.graph.paths import Path, enumerate_paths, is_path, path_edges, subpath
from src.society.bumps import is_bump
from src.society.society import Society
from src.utils.budget import Budget, as_budget
from src.utils.errors import InvalidWitnessError, MalformedInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderlyTransaction:
    """
    Pairwise disjoint bumps P1..Pk, each stored from u_i to v_i, with
    u1, ..., uk, vk, ..., v1 clockwise.
    """

    bumps: Tuple[Path, ...]

    @classmethod
    def of(cls, bumps: Sequence[Sequence[int]]) -> "OrderlyTransaction":
        return cls(tuple(tuple(int(v) for v in p) for p in bumps))

    @property
    def k(self) -> int:
        return len(self.bumps)

    def u(self, i: int) -> int:
        return self.bumps[i - 1][0]

    def v(self, i: int) -> int:
        return self.bumps[i - 1][-1]

    def bump(self, i: int) -> Path:
        return self.bumps[i - 1]

    def vertices(self) -> Set[int]:
        return {v for p in self.bumps for v in p}

    def frame(self, s: Society) -> Graph:
        """Union of the bumps plus every Ω-vertex as an isolated vertex."""
        edges = [e for p in self.bumps for e in path_edges(p)]
        return Graph(s.graph.n, edges, self.vertices() | s.omega.vertices)

    def to_dict(self) -> Dict[str, object]:
        return {"bumps": [list(p) for p in self.bumps]}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "OrderlyTransaction":
        try:
            return cls.of(data["bumps"])
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInputError(f"invalid orderly transaction JSON: {e}") from e


def explain_orderly_transaction(s: Society, t: OrderlyTransaction) -> Optional[str]:
    if t.k == 0:
        return "an orderly transaction needs at least one bump"
    seen: Set[int] = set()
    for i, p in enumerate(t.bumps, start=1):
        if not is_bump(s, p):
            return f"P{i} is not a bump"
        if seen & set(p):
            return f"P{i} meets an earlier bump"
        seen |= set(p)
    order = [t.u(i) for i in range(1, t.k + 1)] + [t.v(i) for i in range(t.k, 0, -1)]
    if not safe_clockwise(s, order):
        return "u1, ..., uk, vk, ..., v1 is not clockwise"
    return None


def verify_orderly_transaction(s: Society, t: OrderlyTransaction) -> bool:
    reason = explain_orderly_transaction(s, t)
    if reason:
        logger.debug(f"orderly transaction rejected: {reason}")
    return reason is None


def _require(s: Society, t: OrderlyTransaction) -> None:
    reason = explain_orderly_transaction(s, t)
    if reason:
        raise InvalidWitnessError(f"not an orderly transaction: {reason}")


def _intersection_ok(q: Sequence[int], p: Sequence[int]) -> bool:
    common = set(q) & set(p)
    if not common:
        return True
    shared = {frozenset(e) for e in path_edges(q)} & {frozenset(e) for e in path_edges(p)}
    if len(shared) != len(common) - 1:
        return False
    g = Graph.from_edges([tuple(e) for e in shared], extra=common)
    if not g.is_connected(common):
        return False
    ends = [v for v in common if g.degree(v) <= 1]
    common_ends = {q[0], q[-1]} & {p[0], p[-1]}
    return any(v in common_ends for v in ends)


def is_coterminal(s: Society, t: OrderlyTransaction, q: Sequence[int]) -> bool:
    """
    Both ends of q in V(Ω), no other Ω-vertex, and q meets every bump in a
    subpath that starts at a common end.
    """
    if not is_bump(s, q):
        return False
    return all(_intersection_ok(q, p) for p in t.bumps)


def region(s: Society, t: OrderlyTransaction, i: int) -> FrozenSet[int]:
    """Ω-vertices of region i, 0 <= i <= k, between P_i and P_(i+1)."""
    omega = s.omega
    if i == 0:
        return omega.interval(t.v(1), t.u(1))
    if i == t.k:
        return omega.interval(t.u(t.k), t.v(t.k))
    return omega.interval(t.u(i), t.u(i + 1)) | omega.interval(t.v(i + 1), t.v(i))


# ----------------------------------------------------------------------
# checkers
# ----------------------------------------------------------------------
def explain_jump(s: Society, t: OrderlyTransaction, i: int, q: Sequence[int]) -> Optional[str]:
    if not 1 <= i <= t.k:
        return f"no bump P{i}"
    if not is_coterminal(s, t, q):
        return "the path is not coterminal"
    if set(q) & set(t.bump(i)):
        return f"the path meets P{i}"
    ui, vi = t.u(i), t.v(i)
    left, right = s.omega.interval(vi, ui), s.omega.interval(ui, vi)
    a, b = q[0], q[-1]
    if not ((a in left and b in right) or (b in left and a in right)):
        return f"the ends are not on opposite sides of P{i}"
    return None


_CROSS_MERGES = ((0, 1), (2, 3), (4, 5), (6, 7))


def _cross_sequence(t: OrderlyTransaction, i: int, x1: int, y1: int, x2: int, y2: int) -> Optional[List[int]]:
    u_i = x1 if i == 0 else t.u(i)
    v_i = y2 if i == 0 else t.v(i)
    u_next = x2 if i == t.k else t.u(i + 1)
    v_next = y1 if i == t.k else t.v(i + 1)
    seq = [u_i, x1, x2, u_next, v_next, y1, y2, v_i]
    out: List[int] = []
    for a, b in _CROSS_MERGES:
        out.append(seq[a])
        if seq[b] != seq[a]:
            out.append(seq[b])
    if len(set(out)) != len(out):
        return None
    return out


def explain_cross(
    s: Society, t: OrderlyTransaction, i: int, q1: Sequence[int], q2: Sequence[int]
) -> Optional[str]:
    if not 0 <= i <= t.k:
        return f"no region {i}"
    for name, q in (("Q1", q1), ("Q2", q2)):
        if not is_coterminal(s, t, q):
            return f"{name} is not coterminal"
    if set(q1) & set(q2):
        return "Q1 and Q2 intersect"
    for x1, y1 in ((q1[0], q1[-1]), (q1[-1], q1[0])):
        for x2, y2 in ((q2[0], q2[-1]), (q2[-1], q2[0])):
            seq = _cross_sequence(t, i, x1, y1, x2, y2)
            if seq is not None and safe_clockwise(s, seq):
                return None
    return f"the ends are not crossed inside region {i}"


def explain_tunnel(
    s: Society, t: OrderlyTransaction, i: int, q0: Sequence[int], q1: Sequence[int], q2: Sequence[int]
) -> Optional[str]:
    if not 1 <= i <= t.k:
        return f"no bump P{i}"
    p = t.bump(i)
    on_p = set(p)
    bumps = t.vertices()
    for name, q in (("Q0", q0), ("Q1", q1), ("Q2", q2)):
        if len(q) < 2 or not is_path(s.graph, q):
            return f"{name} is not a path"
        if set(q[1:-1]) & bumps:
            return f"{name} meets the transaction internally"
    x0, y0 = q0[0], q0[-1]
    if x0 not in on_p or y0 not in on_p:
        return "Q0 must have both ends on P_i"
    inner = set(subpath(p, x0, y0)[1:-1])
    ends = []
    for name, q, allowed in (("Q1", q1, region(s, t, i - 1)), ("Q2", q2, region(s, t, i))):
        x, y = (q[0], q[-1]) if q[0] in on_p else (q[-1], q[0])
        if x not in inner:
            return f"{name} must start inside x0 P_i y0"
        if y in on_p:
            return f"{name} must end off P_i"
        if y not in allowed:
            return f"{name} ends outside its region"
        ends.append(x)
    if set(q0) & set(q1) or set(q0) & set(q2):
        return "Q0 meets Q1 or Q2"
    common = set(q1) & set(q2)
    if common and not (ends[0] == ends[1] and common == {ends[0]}):
        return "Q1 and Q2 intersect"
    return None


# ----------------------------------------------------------------------
# search
# ----------------------------------------------------------------------
@dataclass
class ObstructionReport:
    """First witness per bump or region; empty lists when none exist."""

    jumps: List[Tuple[int, Path]] = field(default_factory=list)
    crosses: List[Tuple[int, Path, Path]] = field(default_factory=list)
    tunnels: List[Tuple[int, Path, Path, Path]] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not (self.jumps or self.crosses or self.tunnels)

    def to_dict(self) -> Dict[str, object]:
        return {
            "jumps": [{"over": i, "path": list(q)} for i, q in self.jumps],
            "crosses": [{"region": i, "paths": [list(a), list(b)]} for i, a, b in self.crosses],
            "tunnels": [{"under": i, "paths": [list(a), list(b), list(c)]} for i, a, b, c in self.tunnels],
        }


def coterminal_paths(s: Society, t: OrderlyTransaction, budget: Budget) -> List[Path]:
    """Every coterminal path, listed once from its smaller end."""
    omega = s.omega.vertices
    out: List[Path] = []
    for a in sorted(omega):
        for q in enumerate_paths(
            s.graph, a, is_target=lambda u: u in omega, allowed=lambda u: True, budget=budget
        ):
            if q[-1] > a and is_coterminal(s, t, q):
                out.append(q)
    return out


def _tunnel_under(s: Society, t: OrderlyTransaction, i: int, budget: Budget) -> Optional[Tuple[Path, Path, Path]]:
    g = s.graph
    p = t.bump(i)
    bumps = t.vertices()
    on_p = set(p)
    before, after = region(s, t, i - 1) - on_p, region(s, t, i) - on_p
    for x0 in p:
        for q0 in enumerate_paths(
            g, x0, is_target=lambda u: u in on_p, allowed=lambda u: u not in bumps, budget=budget, chordless=True
        ):
            inner = subpath(p, x0, q0[-1])[1:-1]
            if q0[-1] < x0 or not inner:
                continue
            used = set(q0)
            for x1 in inner:
                for q1 in enumerate_paths(
                    g,
                    x1,
                    is_target=lambda u: u in before and u not in used,
                    allowed=lambda u: u not in bumps and u not in used,
                    budget=budget,
                    chordless=True,
                ):
                    taken = used | set(q1)
                    for x2 in inner:
                        if x2 in taken and x2 != x1:
                            continue
                        for q2 in enumerate_paths(
                            g,
                            x2,
                            is_target=lambda u: u in after and u not in taken,
                            allowed=lambda u: u not in bumps and u not in taken,
                            budget=budget,
                            chordless=True,
                        ):
                            if explain_tunnel(s, t, i, q0, q1, q2) is None:
                                return q0, q1, q2
    return None


def t_obstructions(s: Society, t: OrderlyTransaction, budget=None) -> ObstructionReport:
    """
    Jumps over each bump, crosses in each region and tunnels under each bump.

    Raises:
        InvalidWitnessError: t is not an orderly transaction
        BudgetExceeded: when the search runs out of nodes
    """
    _require(s, t)
    budget = as_budget(budget, where="t_obstructions")
    report = ObstructionReport()
    paths = coterminal_paths(s, t, budget)
    for i in range(1, t.k + 1):
        q = next((q for q in paths if explain_jump(s, t, i, q) is None), None)
        if q is not None:
            report.jumps.append((i, q))
    for i in range(t.k + 1):
        found = None
        for a, q1 in enumerate(paths):
            for q2 in paths[a + 1 :]:
                budget.tick()
                if explain_cross(s, t, i, q1, q2) is None:
                    found = (i, q1, q2)
                    break
            if found:
                break
        if found:
            report.crosses.append(found)
    for i in range(1, t.k + 1):
        tunnel = _tunnel_under(s, t, i, budget)
        if tunnel is not None:
            report.tunnels.append((i,) + tunnel)
    logger.debug(
        f"t_obstructions: {len(report.jumps)} jumps, {len(report.crosses)} crosses, "
        f"{len(report.tunnels)} tunnels from {len(paths)} coterminal paths"
    )
    return report
