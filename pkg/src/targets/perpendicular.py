"""
Perpendicularity of a forest to a nest, and a best-effort normalizer that
reroutes a target until it crosses a sub-nest cleanly.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from src.graph.graph import Graph
from src.graph.paths import Path
from src.society.nest import Nest, explain_nest
from src.society.society import Neighborhood
from src.targets.target import RerouteStep, Target, explain_step, reroute
from src.utils.budget import as_budget
from src.utils.errors import BudgetExceeded, InvalidStepError, NotNormalized

logger = logging.getLogger(__name__)


def restrict_forest(f: Graph, nb: Neighborhood) -> Graph:
    """F ∩ G' for the neighborhood graph G'."""
    keep = f.vertices & nb.graph.vertices
    edges = [e for e in f.edges if e[0] in keep and e[1] in keep and nb.graph.has_edge(*e)]
    return Graph(f.n, edges, keep)


def _as_path(f: Graph, comp: Sequence[int]) -> Optional[Path]:
    """The component listed end to end, or None when it is not a path."""
    if len(comp) == 1:
        return (comp[0],)
    if any(f.degree(v) > 2 for v in comp):
        return None
    ends = [v for v in comp if f.degree(v) == 1]
    if len(ends) != 2:
        return None
    walk = [ends[0]]
    while walk[-1] != ends[1]:
        nxt = [u for u in f.neighbors(walk[-1]) if len(walk) < 2 or u != walk[-2]]
        walk.append(nxt[0])
    return tuple(walk)


def runs_on_cycle(p: Path, cycle: Sequence[int]) -> int:
    """Number of components of P ∩ C."""
    on = set(cycle)
    k = len(cycle)
    cyc_edges = {frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k)}
    runs = 0
    prev_in = False
    for i, v in enumerate(p):
        here = v in on
        if here and not (prev_in and frozenset((p[i - 1], v)) in cyc_edges):
            runs += 1
        prev_in = here
    return runs


@dataclass
class PerpendicularityReport:
    """Per component of F ∩ G', the number of pieces it has on each cycle."""

    paths: List[Path] = field(default_factory=list)
    crossings: List[List[int]] = field(default_factory=list)
    reason: Optional[str] = None

    @property
    def perpendicular(self) -> bool:
        return self.reason is None

    @property
    def crosses_every_cycle(self) -> bool:
        return self.perpendicular and all(c == 1 for row in self.crossings for c in row)

    def to_dict(self) -> Dict[str, object]:
        return {
            "perpendicular": self.perpendicular,
            "reason": self.reason,
            "crossings": self.crossings,
            "crosses_every_cycle": self.crosses_every_cycle,
        }


def nest_potential(f: Graph, nest: Nest) -> int:
    """Σ over nest cycles of the number of components of F ∩ C_i."""
    total = 0
    for i, cycle in enumerate(nest.cycles):
        on = set(cycle) & f.vertices
        edges = [e for e in nest.edges_of(i) if f.has_edge(*e)]
        total += len(Graph(f.n, edges, on).components()) if on else 0
    return total


def perpendicularity(f: Graph, nb: Neighborhood, nest: Nest) -> PerpendicularityReport:
    report = PerpendicularityReport()
    nest_reason = explain_nest(nb, nest)
    if nest_reason is not None:
        report.reason = f"nest: {nest_reason}"
        return report
    local = restrict_forest(f, nb)
    for comp in local.components():
        p = _as_path(local, comp)
        if p is None:
            report.reason = report.reason or f"component through {comp[0]} is not a path"
            continue
        report.paths.append(p)
        report.crossings.append([runs_on_cycle(p, c) for c in nest.cycles])
        a, b = p[0], p[-1]
        ok = (a in nb.omega and b in nb.omega0) or (b in nb.omega and a in nb.omega0)
        if not ok and report.reason is None:
            report.reason = f"path {a}..{b} does not join V(Ω) to V(Ω0)"
    if report.reason is None:
        for p, row in zip(report.paths, report.crossings):
            bad = [i for i, c in enumerate(row) if c > 1]
            if bad:
                report.reason = f"path {p[0]}..{p[-1]} meets C{bad[0] + 1} in {row[bad[0]]} pieces"
                break
    return report


def explain_perpendicular(f: Graph, nb: Neighborhood, nest: Nest) -> Optional[str]:
    return perpendicularity(f, nb, nest).reason


def is_perpendicular(f: Graph, nb: Neighborhood, nest: Nest) -> bool:
    """
    Every component of F ∩ G' is a path from V(Ω) to V(Ω0) meeting each
    nest cycle in a path. An empty or single-vertex meeting counts as a path.
    """
    reason = explain_perpendicular(f, nb, nest)
    if reason is not None:
        logger.debug(f"not perpendicular: {reason}")
    return reason is None


@dataclass
class Normalization:
    target: Target
    nest: Nest
    steps: List[RerouteStep] = field(default_factory=list)

    def to_dict(self) -> Dict[str, object]:
        return {
            "target": self.target.to_dict(),
            "nest": self.nest.to_dict(),
            "steps": [s.to_dict() for s in self.steps],
        }


def _perpendicular_sub_nest(f: Graph, nb: Neighborhood, nest: Nest, length: int) -> Optional[Nest]:
    for idx in combinations(range(len(nest)), length):
        sub = nest.sub_nest(idx)
        if is_perpendicular(f, nb, sub):
            return sub
    return None


def _cycle_arcs(cycle: Sequence[int], x: int, y: int) -> List[Path]:
    """Both arcs of the cycle from x to y."""
    k = len(cycle)
    i, j = cycle.index(x), cycle.index(y)
    forward = tuple(cycle[(i + s) % k] for s in range((j - i) % k + 1))
    backward = tuple(cycle[(i - s) % k] for s in range((i - j) % k + 1))
    return [forward, backward]


def _candidate_steps(t: Target, nb: Neighborhood, nest: Nest) -> List[Tuple[int, RerouteStep]]:
    """Detours along a nest cycle between consecutive pieces of one path, innermost cycle first."""
    local = restrict_forest(t.forest, nb)
    out: List[Tuple[int, RerouteStep]] = []
    for i, cycle in enumerate(nest.cycles):
        on = set(cycle)
        for comp in local.components():
            p = _as_path(local, comp)
            if p is None or runs_on_cycle(p, cycle) < 2:
                continue
            hits = [k for k, v in enumerate(p) if v in on]
            for a, b in zip(hits, hits[1:]):
                if b == a + 1:
                    continue
                for arc in _cycle_arcs(list(cycle), p[a], p[b]):
                    for side in (None, p[a], p[b]):
                        step = RerouteStep(arc, side)
                        if explain_step(t, step) is None:
                            out.append((i, step))
    return out


def normalize_perpendicular(
    t: Target, nb: Neighborhood, nest: Nest, length: Optional[int] = None, budget=None
) -> Normalization:
    """
    Reroute t along nest cycles, innermost first, until F ∩ G' is
    perpendicular to some sub-nest of ``length`` cycles.

    Each accepted step strictly lowers the total number of pieces the
    forest has on the nest cycles, and every intermediate forest is
    re-verified as a target.

    Raises:
        NotNormalized: no improving step remains, or the budget runs out
    """
    length = len(nest) if length is None else length
    if length > len(nest):
        raise ValueError(f"asked for {length} cycles from a nest of {len(nest)}")
    budget = as_budget(budget, where="normalize_perpendicular")
    steps: List[RerouteStep] = []
    current = t
    while True:
        sub = _perpendicular_sub_nest(current.forest, nb, nest, length)
        if sub is not None:
            logger.info(f"normalize_perpendicular: perpendicular after {len(steps)} reroutings")
            return Normalization(current, sub, steps)
        try:
            budget.tick()
        except BudgetExceeded as e:
            raise NotNormalized(f"budget ran out after {len(steps)} reroutings") from e
        before = nest_potential(restrict_forest(current.forest, nb), nest)
        moved = False
        for _, step in _candidate_steps(current, nb, nest):
            try:
                nxt = reroute(current, step)
            except InvalidStepError:
                continue
            if nest_potential(restrict_forest(nxt.forest, nb), nest) < before:
                current = nxt
                steps.append(step)
                moved = True
                break
        if not moved:
            raise NotNormalized(f"no improving rerouting after {len(steps)} steps")
