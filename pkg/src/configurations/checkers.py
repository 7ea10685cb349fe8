"""Exact checkers for every certificate kind."""

import logging
from typing import Dict, FrozenSet, Optional, Sequence, Set

from src.configurations.certificate import SEPARATED_DOUBLECROSS, TURTLE, Certificate
from src.configurations.templates import (
    explain_anchors,
    forbidden_anchor_vertices,
    safe_clockwise,
    share_vertices,
    template_for,
)
from src.graph.paths import is_path
from src.society.bumps import is_bump
from src.society.cyclic import CyclicOrder
from src.society.society import Society

logger = logging.getLogger(__name__)


def bump_with_ends(s: Society, p: Sequence[int], a: int, b: int) -> bool:
    return is_bump(s, p) and {p[0], p[-1]} == {a, b}


def _need(c: Certificate, parts: Sequence[str], anchors: Sequence[str]) -> Optional[str]:
    missing = [name for name in parts if name not in c.parts]
    if missing:
        return f"missing parts {missing}"
    missing = [name for name in anchors if name not in c.anchors]
    if missing:
        return f"missing anchors {missing}"
    return None


def _pairwise_disjoint(sets: Dict[str, Set[int]]) -> Optional[str]:
    names = sorted(sets)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            if sets[a] & sets[b]:
                return f"{a} and {b} intersect"
    return None


def explain_turtle(s: Society, c: Certificate) -> Optional[str]:
    a = c.anchors
    two_bump_neck = "L" not in c.parts
    neck_parts = ["L1", "L2"] if two_bump_neck else ["L"]
    neck_anchors = ["x", "y"] if two_bump_neck else []
    reason = _need(
        c, ["P1", "P2", "Q1", "Q2"] + neck_parts, ["u1", "u2", "v1", "v2", "u3", "v3", "q1", "q2"] + neck_anchors
    )
    if reason:
        return reason
    u1, u2, v1, v2, u3, v3 = (a[k] for k in ("u1", "u2", "v1", "v2", "u3", "v3"))
    if not safe_clockwise(s, [u1, u2, v1, v2, u3, v3]):
        return "(u1, u2, v1, v2, u3, v3) is not clockwise"
    p1, p2 = c.parts["P1"], c.parts["P2"]
    if not bump_with_ends(s, p1, u1, v1):
        return "P1 is not a bump from u1 to v1"
    if not bump_with_ends(s, p2, u2, v2):
        return "P2 is not a bump from u2 to v2"
    neck_arc = s.omega.arc(u3, v3)
    if two_bump_neck:
        x, y = a["x"], a["y"]
        if x not in neck_arc or y not in neck_arc:
            return "x and y must lie in u3Ωv3"
        l1, l2 = c.parts["L1"], c.parts["L2"]
        if not bump_with_ends(s, l1, u3, x) or not bump_with_ends(s, l2, v3, y):
            return "neck bumps must join u3 to x and v3 to y"
        if set(l1[1:-1]) & set(l2) or set(l2[1:-1]) & set(l1):
            return "neck bumps are not internally disjoint"
        i, j = sorted((neck_arc.index(x), neck_arc.index(y)))
        z = set(neck_arc[i : j + 1])
        neck = set(l1) | set(l2)
    else:
        if not bump_with_ends(s, c.parts["L"], u3, v3):
            return "L is not a bump from u3 to v3"
        z = set()
        neck = set(c.parts["L"])
    reason = _pairwise_disjoint({"P1": set(p1), "P2": set(p2), "L": neck})
    if reason:
        return reason
    q1, q2 = a["q1"], a["q2"]
    if q1 == q2:
        return "q1 and q2 must be distinct"
    pool = set(p1) | set(p2) | (s.omega.interval(v3, u3) - {u3, v3})
    if q1 not in pool or q2 not in pool:
        return "q1 and q2 must lie on the legs or strictly inside v3Ωu3"
    first = set(p1) | s.omega.interval(v3, u1)
    second = set(p2) | s.omega.interval(v2, u3)
    if {q1, q2} <= first or {q1, q2} <= second:
        return "q1 and q2 fall on the same side of the turtle"
    targets = set(neck_arc) - z - {u3, v3}
    body_block = set(p1) | set(p2) | neck | s.omega.vertices
    for name, q in (("Q1", q1), ("Q2", q2)):
        path = c.parts[name]
        if len(path) < 2 or not is_path(s.graph, path):
            return f"{name} is not a path"
        ends = {path[0], path[-1]}
        if q not in ends or not (ends - {q}) & targets:
            return f"{name} must join {name.lower()} to u3Ωv3 outside Z"
        if set(path[1:-1]) & body_block:
            return f"{name} meets the legs, the neck or Ω internally"
    return None


def doublecross_order(s: Society, a: Dict[str, int]) -> Optional[CyclicOrder]:
    seq = [a[k] for k in ("u1", "u2", "v1", "v2", "u3", "u4", "v3", "v4")]
    if safe_clockwise(s, seq):
        return s.omega
    if safe_clockwise(s, list(reversed(seq))):
        return s.omega.reversed()
    return None


def doublecross_end_sets(omega: CyclicOrder, a: Dict[str, int], p1, p3) -> Sequence[FrozenSet[int]]:
    first = (set(p1) | omega.interval(a["v4"], a["u2"])) - {a["u2"], a["v1"], a["v4"]}
    second = (set(p3) | omega.interval(a["v2"], a["u4"])) - {a["v2"], a["v3"], a["u4"]}
    return frozenset(first), frozenset(second)


def explain_separated_doublecross(s: Society, c: Certificate) -> Optional[str]:
    labels = ["u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"]
    reason = _need(c, ["P1", "P2", "P3", "P4", "P5"], labels)
    if reason:
        return reason
    a = c.anchors
    omega = doublecross_order(s, a)
    if omega is None:
        return "(u1, u2, v1, v2, u3, u4, v3, v4) is neither clockwise nor counter-clockwise"
    bumps = {}
    for i in range(1, 5):
        p = c.parts[f"P{i}"]
        if not bump_with_ends(s, p, a[f"u{i}"], a[f"v{i}"]):
            return f"P{i} is not a bump from u{i} to v{i}"
        bumps[f"P{i}"] = set(p)
    reason = _pairwise_disjoint(bumps)
    if reason:
        return reason
    p5 = c.parts["P5"]
    if len(p5) < 2 or not is_path(s.graph, p5):
        return "P5 is not a path"
    first, second = doublecross_end_sets(omega, a, c.parts["P1"], c.parts["P3"])
    e, f = p5[0], p5[-1]
    if not ((e in first and f in second) or (f in first and e in second)):
        return "P5 does not join the two separated sides"
    union = set().union(*bumps.values())
    if set(p5[1:-1]) & union:
        return "P5 meets the bumps internally"
    for end in (e, f):
        hit = [name for name, vs in bumps.items() if end in vs]
        if hit and hit != ["P1"] and hit != ["P3"]:
            return f"P5 ends on {hit[0]}"
    return None


def explain_template_certificate(s: Society, c: Certificate) -> Optional[str]:
    try:
        t = template_for(c.kind, c.size)
    except ValueError as e:
        return str(e)
    reason = explain_anchors(s, t, c.anchors)
    if reason:
        return reason
    names = {d.name for d in t.demands}
    if set(c.parts) != names:
        return f"parts must be exactly {sorted(names)}"
    omega = s.omega.vertices
    for d in t.demands:
        p = c.parts[d.name]
        if len(p) < 2 or not is_path(s.graph, p):
            return f"{d.name} is not a path"
        a, b = c.anchors[d.ends[0]], c.anchors[d.ends[1]]
        if {p[0], p[-1]} != {a, b}:
            return f"{d.name} must join {d.ends[0]} and {d.ends[1]}"
        if d.avoid_omega and set(p[1:-1]) & omega:
            return f"{d.name} meets Ω internally"
        if forbidden_anchor_vertices(t, c.anchors, d) & set(p):
            return f"{d.name} passes through an anchor of another part"
    for i, d in enumerate(t.demands):
        for e in t.demands[i + 1 :]:
            allowed = share_vertices(t, c.anchors, d, e)
            if allowed is None:
                continue
            common = set(c.parts[d.name]) & set(c.parts[e.name])
            if common - allowed:
                return f"{d.name} and {e.name} intersect"
    return None


def explain_certificate(s: Society, c: Certificate) -> Optional[str]:
    """First violated clause of the certificate's definition, or None."""
    s.graph.check_vertices({v for p in c.parts.values() for v in p}, "certificate part")
    if c.kind == TURTLE:
        return explain_turtle(s, c)
    if c.kind == SEPARATED_DOUBLECROSS:
        return explain_separated_doublecross(s, c)
    return explain_template_certificate(s, c)


def verify_certificate(s: Society, c: Certificate) -> bool:
    """
    Raises:
        MalformedInputError: a part names a vertex outside G
    """
    reason = explain_certificate(s, c)
    if reason:
        logger.debug(f"{c.kind} certificate rejected: {reason}")
    return reason is None
