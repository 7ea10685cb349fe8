"""Vertex-capacity flows: Menger paths, closest minimum cuts, connectivity."""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from src.graph.graph import Graph, Separation
from src.graph.paths import PathSystem

logger = logging.getLogger(__name__)

_SOURCE = ("s", -1)
_SINK = ("t", -1)


class FlowResult:
    """Outcome of one split-network max-flow computation."""

    def __init__(self, value: int, reach: Set, paths: List[Tuple[int, ...]], g: Graph) -> None:
        self.value = value
        self.reach = reach
        self.paths = paths
        self._g = g

    @property
    def cut(self) -> FrozenSet[int]:
        return frozenset(v for v in self._g.vertices if (v, 0) in self.reach and (v, 1) not in self.reach)

    @property
    def separation(self) -> Separation:
        """X-closest separation: A is the source side, B the rest plus the cut."""
        a_side = frozenset(v for v in self._g.vertices if (v, 0) in self.reach)
        b_side = frozenset(self._g.vertices - a_side) | self.cut
        return Separation(a_side, b_side)


def _split_network(
    g: Graph,
    X: Iterable[int],
    Y: Iterable[int],
    uncuttable: Iterable[int] = (),
    sources_only: Iterable[int] = (),
    sinks_only: Iterable[int] = (),
) -> nx.DiGraph:
    big = len(g.vertices) + 1
    hard = set(uncuttable)
    no_in = set(sources_only)
    no_out = set(sinks_only)
    net = nx.DiGraph()
    for v in g.vertices:
        net.add_edge((v, 0), (v, 1), capacity=big if v in hard else 1)
    for u, v in g.simple_edges():
        # arcs without a capacity attribute are unbounded
        if v not in no_in and u not in no_out:
            net.add_edge((u, 1), (v, 0))
        if u not in no_in and v not in no_out:
            net.add_edge((v, 1), (u, 0))
    net.add_node(_SOURCE)
    net.add_node(_SINK)
    for x in X:
        net.add_edge(_SOURCE, (x, 0))
    for y in Y:
        net.add_edge((y, 1), _SINK)
    return net


def _decompose(residual: nx.DiGraph, value: int) -> List[Tuple[int, ...]]:
    """Unit flow paths as original vertex sequences, with cycles cut out."""
    flow: Dict[Tuple, Dict[Tuple, int]] = {}
    for u, v, data in residual.edges(data=True):
        f = data.get("flow", 0)
        if f > 0:
            flow.setdefault(u, {})[v] = f
    paths: List[Tuple[int, ...]] = []
    for _ in range(value):
        walk = [_SOURCE]
        position = {_SOURCE: 0}
        while walk[-1] != _SINK:
            out = flow.get(walk[-1], {})
            nxt = min((w for w, f in out.items() if f > 0), default=None, key=repr)
            if nxt is None:
                break
            out[nxt] -= 1
            if nxt in position:
                # drop the cycle just closed
                cut_at = position[nxt]
                for w in walk[cut_at + 1 :]:
                    position.pop(w, None)
                del walk[cut_at + 1 :]
                continue
            position[nxt] = len(walk)
            walk.append(nxt)
        if walk[-1] != _SINK:
            break
        seq: List[int] = []
        for node in walk[1:-1]:
            if not seq or seq[-1] != node[0]:
                seq.append(node[0])
        paths.append(tuple(seq))
    return paths


def vertex_flow(
    g: Graph,
    X: Iterable[int],
    Y: Iterable[int],
    uncuttable: Iterable[int] = (),
    sources_only: Iterable[int] = (),
    sinks_only: Iterable[int] = (),
) -> FlowResult:
    """Maximum number of vertex-disjoint X-Y paths via a split network."""
    X, Y = set(X), set(Y)
    g.check_vertices(X | Y)
    if not X or not Y:
        return FlowResult(0, {_SOURCE} | {(x, 0) for x in X}, [], g)
    net = _split_network(g, X, Y, uncuttable, sources_only, sinks_only)
    residual = edmonds_karp(net, _SOURCE, _SINK)
    value = int(residual.graph["flow_value"])
    reach = {_SOURCE}
    stack = [_SOURCE]
    while stack:
        u = stack.pop()
        for v, data in residual[u].items():
            if v not in reach and data["capacity"] - data["flow"] > 0:
                reach.add(v)
                stack.append(v)
    paths = _decompose(residual, value)
    return FlowResult(value, reach, paths, g)


def trim_path(p: Tuple[int, ...], X: Set[int], Y: Set[int]) -> Tuple[int, ...]:
    """Shorten an X-Y walk to the segment from its last X vertex to the first Y vertex."""
    j = next(i for i, v in enumerate(p) if v in Y)
    i = max(k for k in range(j + 1) if p[k] in X)
    return p[i : j + 1]


def min_vertex_cut(g: Graph, X: Iterable[int], Y: Iterable[int]) -> Tuple[FrozenSet[int], PathSystem]:
    """
    X-closest minimum vertex cut between X and Y with its Menger paths.

    Vertices of X and Y are themselves eligible for the cut; shared
    vertices of X and Y are forced members.

    Args:
        g: Host graph
        X: Source vertex set
        Y: Sink vertex set

    Returns:
        (cut, PathSystem of |cut| vertex-disjoint X-Y paths)
    """
    X, Y = set(X), set(Y)
    result = vertex_flow(g, X, Y)
    paths = [trim_path(p, X, Y) for p in result.paths]
    logger.debug(f"min_vertex_cut: |X|={len(X)} |Y|={len(Y)} order={result.value}")
    return result.cut, PathSystem.of(paths)


def closest_separation(g: Graph, X: Iterable[int], Y: Iterable[int]) -> Tuple[Separation, PathSystem]:
    """The minimum-order separation (A, B) with X ⊆ A, Y ⊆ B and A inclusion-minimal."""
    X, Y = set(X), set(Y)
    result = vertex_flow(g, X, Y)
    paths = [trim_path(p, X, Y) for p in result.paths]
    return result.separation, PathSystem.of(paths)


def max_disjoint_paths(g: Graph, X: Iterable[int], Y: Iterable[int]) -> int:
    return vertex_flow(g, X, Y).value


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff g has more than k vertices and no vertex cut of size < k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.order() <= k:
        return False
    if k == 0:
        return True
    return nx.node_connectivity(g.to_networkx()) >= k


def local_connectivity_from(g: Graph, w: int, targets: Iterable[int]) -> int:
    """Minimum order of a cut separating w from ``targets`` (w itself never cut)."""
    targets = set(targets)
    if w in targets:
        return len(targets)
    return vertex_flow(g, {w}, targets, uncuttable={w}).value
