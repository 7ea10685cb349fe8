"""M-bridges, segments, stability and proper rerouting."""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from src.graph.graph import Edge, Graph
from src.graph.paths import Path, is_path, path_edges, shortest_path, subpath
from src.utils.budget import as_budget
from src.utils.errors import BudgetExceeded, InvalidStepError, MalformedInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bridge:
    """
    An M-bridge: one non-frame edge with both ends in M, or a component C
    of G - V(M) together with every edge touching C.
    """

    edges: FrozenSet[Edge]
    interior: FrozenSet[int]
    attachments: FrozenSet[int]
    segment: Optional[int] = None

    @property
    def stable(self) -> bool:
        return self.segment is None

    def vertices(self) -> FrozenSet[int]:
        return self.interior | self.attachments

    def to_dict(self) -> Dict[str, object]:
        return {
            "edges": [list(e) for e in sorted(self.edges)],
            "attachments": sorted(self.attachments),
            "stable": self.stable,
            "segment": self.segment,
        }


@dataclass
class BridgeReport:
    segments: List[Path] = field(default_factory=list)
    bridges: List[Bridge] = field(default_factory=list)

    def unstable(self) -> List[Bridge]:
        return [b for b in self.bridges if not b.stable]

    def potential(self) -> Tuple[int, int]:
        """(unstable bridges, total segment length), compared lexicographically."""
        return len(self.unstable()), sum(len(p) - 1 for p in self.segments)

    def to_dict(self) -> Dict[str, object]:
        return {
            "segments": [list(p) for p in self.segments],
            "bridges": [b.to_dict() for b in self.bridges],
        }


def _check_no_cycle_blocks(m: Graph) -> None:
    h = m.to_networkx()
    for block in nx.biconnected_components(h):
        if len(block) >= 3 and h.subgraph(block).number_of_edges() == len(block):
            raise MalformedInputError(f"frame has a cycle block on {sorted(block)}")


def segments(m: Graph) -> List[Path]:
    """
    Maximal subpaths of m whose internal vertices have degree two in m.

    Isolated vertices are one-vertex segments.

    Raises:
        MalformedInputError: some block of m is a cycle
    """
    _check_no_cycle_blocks(m)
    branch = [v for v in m.sorted_vertices() if m.degree(v) != 2]
    out: List[Path] = []
    seen = set()
    for b in branch:
        if m.degree(b) == 0:
            out.append((b,))
            continue
        for first in sorted(m.neighbors(b)):
            walk = [b, first]
            while m.degree(walk[-1]) == 2:
                nxt = next(u for u in m.neighbors(walk[-1]) if u != walk[-2])
                walk.append(nxt)
            key = frozenset(path_edges(walk))
            if key in seen:
                continue
            seen.add(key)
            out.append(tuple(walk))
    return out


def m_bridges(g: Graph, m: Graph) -> BridgeReport:
    """
    Partition the edges of g outside m into M-bridges and mark each one
    unstable when a single segment holds all its attachments.

    Raises:
        MalformedInputError: m is not a subgraph of g, or has a cycle block
    """
    g.check_vertices(m.vertices, "frame vertex")
    frame_edges = set(m.simple_edges())
    if not frame_edges <= set(g.simple_edges()):
        raise MalformedInputError("frame edges must be edges of the graph")
    segs = segments(m)
    seg_sets = [frozenset(p) for p in segs]
    in_m = m.vertices
    bridges: List[Bridge] = []
    for u, v in g.simple_edges():
        if u in in_m and v in in_m and (u, v) not in frame_edges:
            bridges.append(Bridge(frozenset({(u, v)}), frozenset(), frozenset({u, v})))
    for comp in g.components(g.vertices - in_m):
        inside = frozenset(comp)
        edges = set()
        attachments = set()
        for v in comp:
            for u in g.neighbors(v):
                edges.add((min(u, v), max(u, v)))
                if u in in_m:
                    attachments.add(u)
        bridges.append(Bridge(frozenset(edges), inside, frozenset(attachments)))
    marked = []
    for b in bridges:
        home = next((i for i, p in enumerate(seg_sets) if b.attachments <= p), None)
        marked.append(Bridge(b.edges, b.interior, b.attachments, home))
    report = BridgeReport(segs, marked)
    logger.debug(f"m_bridges: {len(marked)} bridges, {len(report.unstable())} unstable, {len(segs)} segments")
    return report


def proper_reroute(g: Graph, m: Graph, q: Sequence[int]) -> Graph:
    """
    Replace xPy by q, where P is the segment holding both ends of q.

    Raises:
        InvalidStepError: q is not a path with distinct ends on one segment of
            length at least two and otherwise off m, or the bridge containing
            q has an attachment off that segment
    """
    if len(q) < 2 or not is_path(g, q):
        raise InvalidStepError("the rerouting path is not a path of g")
    x, y = q[0], q[-1]
    if set(q[1:-1]) & m.vertices:
        raise InvalidStepError("the rerouting path meets the frame internally")
    if len(q) == 2 and m.has_edge(x, y):
        raise InvalidStepError("the rerouting path is a frame edge")
    report = m_bridges(g, m)
    homes = [p for p in report.segments if x in p and y in p and len(p) >= 3]
    if not homes:
        raise InvalidStepError("the ends of the rerouting path are not on one segment of length at least two")
    first = (min(q[0], q[1]), max(q[0], q[1]))
    bridge = next(b for b in report.bridges if first in b.edges)
    home = next((p for p in homes if bridge.attachments <= set(p)), None)
    if home is None:
        raise InvalidStepError("the bridge containing the rerouting path has an attachment off the segment")
    old = subpath(home, x, y)
    keep = m.vertices - set(old[1:-1])
    dropped = set(path_edges(old))
    edges = [e for e in m.simple_edges() if e not in dropped] + path_edges(q)
    return Graph(max(m.n, g.n), edges, keep | set(q))


def _reroute_candidates(g: Graph, m: Graph, report: BridgeReport) -> Iterator[Path]:
    """Paths through unstable bridges between their extreme attachments."""
    for b in report.unstable():
        seg = report.segments[b.segment]
        if len(seg) < 3:
            continue
        ordered = [v for v in seg if v in b.attachments]
        if len(ordered) < 2:
            continue
        x, y = ordered[0], ordered[-1]
        if seg.index(y) - seg.index(x) < 2:
            continue
        if not b.interior:
            yield (x, y)
            continue
        q = shortest_path(g, [x], [y], set(b.interior) | {x, y})
        if q is not None:
            yield q


def stabilize(g: Graph, m: Graph, budget=None) -> Tuple[Graph, int]:
    """
    Apply proper reroutings while one of them strictly lowers the potential.

    Unstable bridges that survive sit with a piece of their segment behind a
    two-vertex cut, where no rerouting helps.

    Returns:
        (final frame, number of reroutings)

    Raises:
        BudgetExceeded: more than |E(G)|^2 reroutings
    """
    budget = as_budget(budget, where="stabilize")
    cap = max(1, g.simple_edge_count() ** 2)
    steps = 0
    while True:
        report = m_bridges(g, m)
        before = report.potential()
        nxt = None
        for q in _reroute_candidates(g, m, report):
            budget.tick()
            candidate = proper_reroute(g, m, q)
            if m_bridges(g, candidate).potential() < before:
                nxt = candidate
                logger.debug(f"stabilize: rerouted along {list(q)}, potential was {before}")
                break
        if nxt is None:
            logger.debug(f"stabilize: done after {steps} reroutings, potential {before}")
            return m, steps
        if steps >= cap:
            raise BudgetExceeded(cap, steps, "stabilize")
        m = nxt
        steps += 1
