"""Bounded exhaustive finders for certificates."""

import logging
from itertools import permutations
from typing import Dict, Iterable, Iterator, Optional, Set

from src.configurations.certificate import KINDS, SEPARATED_DOUBLECROSS, SIZED_KINDS, TURTLE, Certificate
from src.configurations.checkers import doublecross_order, doublecross_end_sets, verify_certificate
from src.configurations.templates import (
    Template,
    explain_anchors,
    forbidden_anchor_vertices,
    layouts_for,
    placements,
    share_vertices,
    template_for,
)
from src.graph.paths import Path, enumerate_paths, shortest_path
from src.society.society import Society
from src.utils.budget import Budget, as_budget

logger = logging.getLogger(__name__)


def bump_paths(
    s: Society, a: int, b: int, blocked: Set[int], budget: Budget, chordless: bool = True
) -> Iterator[Path]:
    """Bumps from a to b whose vertices avoid ``blocked``."""
    if a in blocked or b in blocked:
        return
    omega = s.omega.vertices
    yield from enumerate_paths(
        s.graph,
        a,
        is_target=lambda u: u == b,
        allowed=lambda u: u not in omega and u not in blocked,
        budget=budget,
        chordless=chordless,
    )


class _Router:
    """Routes a template's demands one after another with backtracking."""

    def __init__(self, s: Society, t: Template, anchors: Dict[str, int], budget: Budget) -> None:
        self.s = s
        self.t = t
        self.anchors = anchors
        self.budget = budget
        self.by_name = {d.name: d for d in t.demands}

    def _blocked(self, i: int, routed: Dict[str, Path]) -> Set[int]:
        d = self.t.demands[i]
        out = set(forbidden_anchor_vertices(self.t, self.anchors, d))
        for name, p in routed.items():
            allowed = share_vertices(self.t, self.anchors, d, self.by_name[name])
            if allowed is not None:
                out |= set(p) - allowed
        return out

    def run(self) -> Optional[Dict[str, Path]]:
        return self._go(0, {})

    def _go(self, i: int, routed: Dict[str, Path]) -> Optional[Dict[str, Path]]:
        if i == len(self.t.demands):
            return dict(routed)
        self.budget.tick()
        d = self.t.demands[i]
        a, b = self.anchors[d.ends[0]], self.anchors[d.ends[1]]
        blocked = self._blocked(i, routed)
        if a in blocked or b in blocked:
            return None
        omega = self.s.omega.vertices

        def ok(u: int) -> bool:
            return u not in blocked and not (d.avoid_omega and u in omega)

        if i == len(self.t.demands) - 1:
            allowed = {v for v in self.s.graph.vertices if ok(v)} | {a, b}
            p = shortest_path(self.s.graph, [a], [b], allowed)
            if p is None or len(p) < 2:
                return None
            routed[d.name] = p
            return dict(routed)
        for p in enumerate_paths(
            self.s.graph, a, is_target=lambda u: u == b, allowed=ok, budget=self.budget, chordless=True
        ):
            routed[d.name] = p
            found = self._go(i + 1, routed)
            if found is not None:
                return found
            del routed[d.name]
        return None


def _hub_assignments(s: Society, t: Template, anchors: Dict[str, int]) -> Iterator[Dict[str, int]]:
    if not t.hubs:
        yield dict(anchors)
        return
    taken = set(anchors.values())
    need = {h: sum(1 for d in t.demands if h in d.ends) for h in t.hubs}
    pool = [v for v in s.graph.sorted_vertices() if v not in taken]
    for choice in permutations(pool, len(t.hubs)):
        if any(s.graph.degree(v) < need[h] for h, v in zip(t.hubs, choice)):
            continue
        full = dict(anchors)
        full.update(zip(t.hubs, choice))
        yield full


def find_with_template(s: Society, t: Template, budget: Budget) -> Optional[Certificate]:
    for anchors in layouts_for(s, t):
        budget.tick()
        for full in _hub_assignments(s, t, anchors):
            if explain_anchors(s, t, full) is not None:
                continue
            parts = _Router(s, t, full, budget).run()
            if parts is not None:
                return Certificate(t.kind, parts, full)
    return None


# ----------------------------------------------------------------------
# turtles
# ----------------------------------------------------------------------
def _body(
    s: Society, a: Dict[str, int], p1: Path, p2: Path, neck: Set[int], z: Set[int]
) -> Optional[Dict[str, object]]:
    """Pick q1, q2 and the body paths for fixed legs and neck."""
    g = s.graph
    u1, v2, u3, v3 = a["u1"], a["v2"], a["u3"], a["v3"]
    omega = s.omega.vertices
    free = g.vertices - set(p1) - set(p2) - neck - omega
    targets = set(s.omega.arc(u3, v3)) - z - {u3, v3}
    if not targets:
        return None
    pool = sorted(set(p1) | set(p2) | (s.omega.interval(v3, u3) - {u3, v3}))
    reach: Dict[int, Path] = {}
    for q in pool:
        p = shortest_path(g, [q], targets, free | {q} | targets)
        if p is not None and len(p) >= 2:
            reach[q] = p
    first = set(p1) | s.omega.interval(v3, u1)
    second = set(p2) | s.omega.interval(v2, u3)
    good = sorted(reach)
    for i, q1 in enumerate(good):
        for q2 in good[i + 1 :]:
            pair = {q1, q2}
            if pair <= first or pair <= second:
                continue
            return {"q1": q1, "q2": q2, "Q1": reach[q1], "Q2": reach[q2]}
    return None


def _necks(s: Society, a: Dict[str, int], blocked: Set[int], budget: Budget) -> Iterator[Dict[str, object]]:
    u3, v3 = a["u3"], a["v3"]
    for neck in bump_paths(s, u3, v3, blocked, budget):
        yield {"parts": {"L": neck}, "anchors": {}, "vertices": set(neck), "z": set()}
    arc = s.omega.arc(u3, v3)
    for x in arc[1:]:
        for y in arc[:-1]:
            for l1 in bump_paths(s, u3, x, blocked, budget):
                inner = blocked | set(l1[1:-1])
                for l2 in bump_paths(s, v3, y, inner, budget):
                    if set(l1[1:-1]) & set(l2):
                        continue
                    i, j = sorted((arc.index(x), arc.index(y)))
                    yield {
                        "parts": {"L1": l1, "L2": l2},
                        "anchors": {"x": x, "y": y},
                        "vertices": set(l1) | set(l2),
                        "z": set(arc[i : j + 1]),
                    }


def find_turtle(s: Society, budget: Budget) -> Optional[Certificate]:
    layout = [(x,) for x in ("u1", "u2", "v1", "v2", "u3", "v3")]
    for a in placements(s, [layout]):
        budget.tick()
        others = set(a.values())
        for p1 in bump_paths(s, a["u1"], a["v1"], others - {a["u1"], a["v1"]}, budget, chordless=False):
            for p2 in bump_paths(s, a["u2"], a["v2"], (others - {a["u2"], a["v2"]}) | set(p1), budget, chordless=False):
                blocked = set(p1) | set(p2) | (others - {a["u3"], a["v3"]})
                for neck in _necks(s, a, blocked, budget):
                    body = _body(s, a, p1, p2, neck["vertices"], neck["z"])
                    if body is None:
                        continue
                    anchors = dict(a)
                    anchors.update(neck["anchors"])
                    anchors.update({"q1": body["q1"], "q2": body["q2"]})
                    parts = {"P1": p1, "P2": p2, "Q1": body["Q1"], "Q2": body["Q2"]}
                    parts.update(neck["parts"])
                    return Certificate(TURTLE, parts, anchors)
    return None


# ----------------------------------------------------------------------
# separated doublecrosses
# ----------------------------------------------------------------------
def find_separated_doublecross(s: Society, budget: Budget) -> Optional[Certificate]:
    order = ["u1", "u2", "v1", "v2", "u3", "u4", "v3", "v4"]
    layouts = [[(x,) for x in order], [(x,) for x in reversed(order)]]
    g = s.graph
    for a in placements(s, layouts):
        budget.tick()
        omega = doublecross_order(s, a)
        if omega is None:
            continue
        others = set(a.values())

        def block(i: int, used: Iterable[int]) -> Set[int]:
            return (others - {a[f"u{i}"], a[f"v{i}"]}) | set(used)

        for p1 in bump_paths(s, a["u1"], a["v1"], block(1, ()), budget, chordless=False):
            for p3 in bump_paths(s, a["u3"], a["v3"], block(3, p1), budget, chordless=False):
                first, second = doublecross_end_sets(omega, a, p1, p3)
                for p2 in bump_paths(s, a["u2"], a["v2"], block(2, set(p1) | set(p3)), budget):
                    for p4 in bump_paths(s, a["u4"], a["v4"], block(4, set(p1) | set(p2) | set(p3)), budget):
                        taken = set(p1) | set(p2) | set(p3) | set(p4)
                        sources = [v for v in first if v not in taken or v in p1]
                        sinks = set(v for v in second if v not in taken or v in p3)
                        allowed = (g.vertices - taken) | set(sources) | sinks
                        p5 = shortest_path(g, sources, sinks, allowed)
                        if p5 is None or len(p5) < 2:
                            continue
                        parts = {"P1": p1, "P2": p2, "P3": p3, "P4": p4, "P5": p5}
                        return Certificate(SEPARATED_DOUBLECROSS, parts, dict(a))
    return None


def find_certificate(s: Society, kind: str, size: Optional[int] = None, budget=None) -> Optional[Certificate]:
    """
    Exhaustive search for a certificate of the given kind.

    Ω-anchors are placed first, in lexicographic order of positions, then
    hubs, then the paths are routed with backtracking.

    Raises:
        ValueError: unknown kind, or a sized kind without a size
        BudgetExceeded: when the search runs out of nodes
    """
    if kind not in KINDS:
        raise ValueError(f"unknown certificate kind {kind!r}")
    if kind in SIZED_KINDS and size is None:
        raise ValueError(f"{kind} needs a size")
    budget = as_budget(budget, where=f"find_certificate[{kind}]")
    if kind == TURTLE:
        found = find_turtle(s, budget)
    elif kind == SEPARATED_DOUBLECROSS:
        found = find_separated_doublecross(s, budget)
    else:
        found = find_with_template(s, template_for(kind, size or 0), budget)
    if found is not None and not verify_certificate(s, found):
        raise RuntimeError(f"{kind} finder produced an invalid certificate")
    logger.debug(f"find_certificate[{kind}]: {'found' if found else 'none'} after {budget.spent} nodes")
    return found


def find_any(s: Society, kinds: Iterable[str], budget=None) -> Optional[Certificate]:
    """First certificate among fixed-size kinds, in the order given."""
    budget = as_budget(budget, where="find_any")
    for kind in kinds:
        found = find_certificate(s, kind, budget=budget)
        if found is not None:
            return found
    return None
