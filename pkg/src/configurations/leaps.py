"""Leaps: their Z-sets, exposed vertices and the outcomes a leap forces."""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from src.configurations.certificate import GRIDLET, LEAP, SEPARATED_DOUBLECROSS, THREE_CROSSED, TURTLE, Certificate
from src.configurations.checkers import verify_certificate
from src.configurations.finders import find_certificate
from src.configurations.orderly import OrderlyTransaction
from src.society.rural import is_nearly_rural, is_rural
from src.society.society import Society
from src.utils.budget import as_budget
from src.utils.errors import InvalidWitnessError

logger = logging.getLogger(__name__)

NEARLY_RURAL = "nearly_rural"
RURAL_AFTER_TRIANGLE = "rural_after_triangle"
LEAP_OUTCOMES = (NEARLY_RURAL, RURAL_AFTER_TRIANGLE, THREE_CROSSED, GRIDLET, SEPARATED_DOUBLECROSS, TURTLE)


@dataclass(frozen=True)
class LeapSets:
    z: FrozenSet[int]
    z1: FrozenSet[int]
    z2: FrozenSet[int]


def _require_leap(s: Society, leap: Certificate) -> int:
    if leap.kind != LEAP or not verify_certificate(s, leap):
        raise InvalidWitnessError("expected a verified leap")
    return leap.size


def leap_transaction(leap: Certificate) -> OrderlyTransaction:
    """The orderly transaction (P1, ..., Pk) of a leap, each bump from u_i."""
    bumps = []
    for i in range(1, leap.size + 1):
        p = leap.parts[f"P{i}"]
        bumps.append(p if p[0] == leap.anchors[f"u{i}"] else tuple(reversed(p)))
    return OrderlyTransaction(tuple(bumps))


def leap_sets(s: Society, leap: Certificate) -> LeapSets:
    """
    Raises:
        InvalidWitnessError: leap does not verify
    """
    k = _require_leap(s, leap)
    a = leap.anchors
    omega = s.omega
    u0, v0, u1, v1, uk, vk = a["u0"], a["v0"], a["u1"], a["v1"], a[f"u{k}"], a[f"v{k}"]
    z = set(omega.interval(u1, uk)) | set(omega.interval(vk, v1))
    for i in range(2, k):
        z |= set(leap.parts[f"P{i}"])
    z -= {u1, uk, v1, vk}
    z1 = omega.interval(v1, u1) - {u0, u1, v1}
    z2 = omega.interval(uk, vk) - {v0, uk, vk}
    return LeapSets(frozenset(z), frozenset(z1), frozenset(z2))


def exposed_vertices(s: Society, leap: Certificate) -> FrozenSet[int]:
    """
    Vertices v of P0 joined to Z by a path whose interior avoids P0, every
    other bump and V(Ω).

    Raises:
        InvalidWitnessError: leap does not verify
        ValueError: the leap is shorter than two
    """
    k = _require_leap(s, leap)
    if k < 2:
        raise ValueError(f"exposed vertices need a leap of length at least 2, got {k}")
    z = leap_sets(s, leap).z
    g = s.graph
    p0 = leap.parts["P0"]
    frame = set(s.omega.vertices).union(*(set(p) for p in leap.parts.values()))
    reach_z = set()
    for comp in g.components(g.vertices - frame):
        touches = {u for v in comp for u in g.neighbors(v)}
        if touches & z:
            reach_z |= touches
    out = {v for v in p0 if g.neighbors(v) & z or v in reach_z}
    logger.debug(f"exposed_vertices: {sorted(out)}")
    return frozenset(out)


def triangles(s: Society) -> List[Tuple[int, int, int]]:
    g = s.graph
    out = []
    for u, v in g.simple_edges():
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            if w > v:
                out.append((u, v, w))
    return out


@dataclass
class LeapOutcomeReport:
    """Every outcome of the leap dichotomy that holds, with its witness."""

    outcomes: Dict[str, object] = field(default_factory=dict)

    @property
    def detected(self) -> List[str]:
        return [name for name in LEAP_OUTCOMES if name in self.outcomes]

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {}
        for name, witness in self.outcomes.items():
            out[name] = witness.to_dict() if isinstance(witness, Certificate) else witness
        return {"detected": self.detected, "witnesses": out}


def classify_leap_outcomes(s: Society, budget=None, first_only: bool = False) -> LeapOutcomeReport:
    """
    Test nearly rural, rural after deleting a triangle's edges, and the four
    configuration kinds.

    Raises:
        BudgetExceeded: when a certificate search runs out of nodes
    """
    budget = as_budget(budget, where="classify_leap_outcomes")
    report = LeapOutcomeReport()
    ok, v = is_nearly_rural(s)
    if ok:
        report.outcomes[NEARLY_RURAL] = {"vertex": v}
        if first_only:
            return report
    for tri in triangles(s):
        budget.tick()
        u, v, w = tri
        if is_rural(s.with_graph(s.graph.delete_edges([(u, v), (v, w), (u, w)]))):
            report.outcomes[RURAL_AFTER_TRIANGLE] = {"triangle": list(tri)}
            break
    if first_only and report.outcomes:
        return report
    for kind in (THREE_CROSSED, GRIDLET, SEPARATED_DOUBLECROSS, TURTLE):
        found = find_certificate(s, kind, budget=budget)
        if found is not None:
            report.outcomes[kind] = found
            if first_only:
                break
    logger.info(f"leap outcomes: {report.detected or 'none'}")
    return report


def leap_outcome(s: Society, budget=None) -> Optional[str]:
    """Name of the first outcome that holds, or None."""
    report = classify_leap_outcomes(s, budget, first_only=True)
    return report.detected[0] if report.detected else None
