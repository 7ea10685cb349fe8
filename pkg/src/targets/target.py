"""
Targets: forests with leaves on Ω whose components interleave around Ω.

Also F-special and critical vertices, complexity, rerouting and
hypomorphism.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set

import networkx as nx

from src.configurations.certificate import GRIDLET, SEPARATED_DOUBLECROSS, THREE_CROSSED, TURTLE, Certificate
from src.graph.graph import Edge, Graph
from src.graph.paths import Path, is_path, path_edges, shortest_path, subpath
from src.society.society import Society
from src.utils.errors import InvalidStepError, InvalidWitnessError, MalformedInputError

logger = logging.getLogger(__name__)

TARGET_KINDS = (TURTLE, THREE_CROSSED, GRIDLET, SEPARATED_DOUBLECROSS)


@dataclass(frozen=True)
class Target:
    """A subgraph F of the host society's graph."""

    host: Society
    forest: Graph

    @classmethod
    def of(cls, host: Society, edges: Iterable[Sequence[int]], vertices: Iterable[int] = ()) -> "Target":
        edges = [tuple(e) for e in edges]
        vs = {v for e in edges for v in e} | set(vertices)
        return cls(host, Graph(host.graph.n, edges, vs))

    @property
    def omega(self):
        return self.host.omega

    def leaves(self) -> List[int]:
        return [v for v in self.forest.sorted_vertices() if self.forest.degree(v) == 1]

    def components(self) -> List[List[int]]:
        return self.forest.components()

    def to_dict(self) -> Dict[str, object]:
        return {
            "edges": [list(e) for e in self.forest.edges],
            "vertices": self.forest.sorted_vertices(),
            "host": self.host.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object], host: Optional[Society] = None) -> "Target":
        try:
            host = host if host is not None else Society.from_dict(data["host"])
            return cls.of(host, data["edges"], data.get("vertices", ()))
        except (KeyError, TypeError) as e:
            raise MalformedInputError(f"target JSON needs edges and a host: {e}") from e


def explain_target(t: Target) -> Optional[str]:
    """First violated target axiom, or None."""
    g, f = t.host.graph, t.forest
    if not f.vertices <= g.vertices:
        return "forest vertices must be vertices of the host"
    for u, v in f.edges:
        if u == v:
            return f"forest has a loop at {u}"
        if not g.has_edge(u, v):
            return f"({u}, {v}) is not an edge of the host"
    if f.edge_count() != f.simple_edge_count():
        return "forest has parallel edges"
    if not nx.is_forest(f.to_networkx()):
        return "F is not a forest"
    omega = t.omega
    for v in t.leaves():
        if v not in omega:
            return f"leaf {v} is not in V(Ω)"
    comps = [set(c) for c in t.components()]
    for i, comp in enumerate(comps):
        mine = sorted(comp & omega.vertices)
        others = set().union(*(c for j, c in enumerate(comps) if j != i)) & omega.vertices
        for u in mine:
            for v in mine:
                if u == v:
                    continue
                if not any(omega.clockwise([u, w, v]) for w in others):
                    return f"no other component meets Ω strictly between {u} and {v}"
    return None


def verify_target(t: Target) -> bool:
    reason = explain_target(t)
    if reason is not None:
        logger.debug(f"target rejected: {reason}")
    return reason is None


is_target = verify_target


def special_vertices(t: Target) -> FrozenSet[int]:
    """Degree at least three in F, or at least two and on Ω."""
    f = t.forest
    return frozenset(
        v for v in f.vertices if f.degree(v) >= 3 or (f.degree(v) >= 2 and v in t.omega)
    )


def critical_vertices(t: Target) -> FrozenSet[int]:
    return special_vertices(t) | frozenset(t.leaves())


def complexity(t: Target) -> int:
    """Σ_{v∉Ω} (deg-2)⁺ + Σ_{v∈Ω} (deg-1)⁺."""
    total = 0
    for v in t.forest.vertices:
        d = t.forest.degree(v)
        total += max(d - 1, 0) if v in t.omega else max(d - 2, 0)
    return total


def critical_adjacency(t: Target) -> Set[FrozenSet[int]]:
    """Pairs of critical vertices joined in F by a path with no critical interior."""
    f = t.forest
    critical = critical_vertices(t)
    pairs: Set[FrozenSet[int]] = set()
    for u in critical:
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in f.neighbors(x):
                if y in seen:
                    continue
                seen.add(y)
                if y in critical:
                    pairs.add(frozenset((u, y)))
                else:
                    stack.append(y)
    return pairs


def is_hypomorphic(t1: Target, t2: Target) -> bool:
    return critical_vertices(t1) == critical_vertices(t2) and critical_adjacency(t1) == critical_adjacency(t2)


@dataclass(frozen=True)
class RerouteStep:
    """
    A path P off Ω with both ends on one tree of F, plus the end of P whose
    side is cut back to the special vertex when the cycle has one.
    """

    path: Path
    side: Optional[int] = None

    def to_dict(self) -> Dict[str, object]:
        return {"path": list(self.path), "side": self.side}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "RerouteStep":
        try:
            return cls(tuple(data["path"]), data.get("side"))
        except (KeyError, TypeError) as e:
            raise MalformedInputError(f"reroute step JSON needs a path: {e}") from e


def _tree_path(f: Graph, u: int, v: int) -> Optional[Path]:
    return shortest_path(f, [u], [v])


def _dropped_subpath(t: Target, step: RerouteStep) -> Path:
    """
    The subpath P' removed by the step.

    Raises:
        InvalidStepError: any precondition of rerouting fails
    """
    g, f, p = t.host.graph, t.forest, step.path
    if len(p) < 2 or not is_path(g, p):
        raise InvalidStepError("the rerouting path is not a path of G")
    if set(p) & t.omega.vertices:
        raise InvalidStepError("the rerouting path must avoid V(Ω)")
    u, v = p[0], p[-1]
    if set(p[1:-1]) & f.vertices:
        raise InvalidStepError("the rerouting path meets F internally")
    if len(p) == 2 and f.has_edge(u, v):
        raise InvalidStepError("the rerouting path is an edge of F")
    if u not in f.vertices or v not in f.vertices:
        raise InvalidStepError("both ends must lie on F")
    tree = _tree_path(f, u, v)
    if tree is None:
        raise InvalidStepError("the ends lie in different components of F")
    special = special_vertices(t)
    on_cycle = [w for w in tree if w in special]
    if len(on_cycle) > 1:
        raise InvalidStepError(f"the cycle has {len(on_cycle)} F-special vertices")
    inner = [w for w in on_cycle if w not in (u, v)]
    if not inner:
        return tree
    w = inner[0]
    if step.side == v:
        return subpath(tree, w, v)
    if step.side == u:
        return subpath(tree, u, w)
    raise InvalidStepError(f"the cycle has special vertex {w}; side must name {u} or {v}")


def explain_step(t: Target, step: RerouteStep) -> Optional[str]:
    try:
        _dropped_subpath(t, step)
    except InvalidStepError as e:
        return str(e)
    return None


def reroute(t: Target, step: RerouteStep) -> Target:
    """
    F' = (F ∪ P) minus the edges and internal vertices of P'.

    Raises:
        InvalidStepError: the step is not a rerouting of t, or the result
            is not a target
    """
    dropped = _dropped_subpath(t, step)
    gone_edges = set(path_edges(dropped))
    gone_vertices = set(dropped[1:-1])
    edges: List[Edge] = [e for e in t.forest.edges if e not in gone_edges]
    edges += path_edges(step.path)
    vertices = (t.forest.vertices - gone_vertices) | set(step.path)
    out = Target(t.host, Graph(t.host.graph.n, edges, vertices))
    reason = explain_target(out)
    if reason is not None:
        raise InvalidStepError(f"rerouting does not yield a target: {reason}")
    logger.debug(f"reroute: added {list(step.path)}, dropped {list(dropped)}")
    return out


def certificate_target(s: Society, c: Certificate) -> Target:
    """
    The union of a configuration's paths as a target.

    Raises:
        ValueError: c is not a turtle, three crossed paths, gridlet or
            separated doublecross
        InvalidWitnessError: the union is not a target
    """
    if c.kind not in TARGET_KINDS:
        raise ValueError(f"{c.kind} certificates are not targets")
    edges: Set[Edge] = set()
    for p in c.parts.values():
        edges.update(path_edges(p))
    t = Target.of(s, sorted(edges), c.vertices())
    reason = explain_target(t)
    if reason is not None:
        raise InvalidWitnessError(f"{c.kind} paths do not form a target: {reason}")
    return t
