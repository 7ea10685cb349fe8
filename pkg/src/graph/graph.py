"""Immutable multigraph substrate.

Vertices are dense integer ids ``0..n-1``. A graph may be a *view* over a
subset of that id space, which keeps ids stable across vertex deletion.
Loops and parallel edges are stored but every predicate in the library
works on the simple adjacency (``neighbors`` / ``simple_edges``).
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from src.utils.errors import MalformedInputError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class Graph:
    """Multigraph with loops, dense ids and an optional vertex subset."""

    __slots__ = ("_n", "_vertices", "_edges", "_adj", "_hash")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        vertices: Optional[Iterable[int]] = None,
    ) -> None:
        if n < 0:
            raise MalformedInputError(f"vertex count must be nonnegative, got {n}")
        self._n = n
        if vertices is None:
            self._vertices = frozenset(range(n))
        else:
            vs = frozenset(int(v) for v in vertices)
            bad = [v for v in vs if v < 0 or v >= n]
            if bad:
                raise MalformedInputError(f"vertex ids out of range 0..{n - 1}: {sorted(bad)[:5]}")
            self._vertices = vs

        normalized: List[Edge] = []
        for e in edges:
            if len(e) != 2:
                raise MalformedInputError(f"edge must have two endpoints: {e!r}")
            u, v = int(e[0]), int(e[1])
            if u not in self._vertices or v not in self._vertices:
                raise MalformedInputError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            normalized.append(_norm(u, v))
        normalized.sort()
        self._edges: Tuple[Edge, ...] = tuple(normalized)

        adj: Dict[int, Set[int]] = {v: set() for v in self._vertices}
        for u, v in self._edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._hash: Optional[int] = None

    # ------------------------------------------------------------------
    # basic accessors
    # ------------------------------------------------------------------
    @property
    def n(self) -> int:
        """Size of the id space (``vertex_count``)."""
        return self._n

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def vertices(self) -> FrozenSet[int]:
        return self._vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Sorted edge multiset, loops included."""
        return self._edges

    @property
    def adj(self) -> Dict[int, FrozenSet[int]]:
        """Simple adjacency: no loops, no multiplicity."""
        return self._adj

    def order(self) -> int:
        return len(self._vertices)

    def sorted_vertices(self) -> List[int]:
        return sorted(self._vertices)

    def has_vertex(self, v: int) -> bool:
        return v in self._vertices

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        """Simple degree (distinct neighbours)."""
        return len(self._adj[v])

    def multidegree(self, v: int) -> int:
        """Degree counting multiplicity; a loop counts twice."""
        return sum((u == v) + (w == v) for u, w in self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def simple_edges(self) -> List[Edge]:
        return sorted({e for e in self._edges if e[0] != e[1]})

    def edge_count(self) -> int:
        return len(self._edges)

    def simple_edge_count(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def check_vertices(self, vs: Iterable[int], what: str = "vertex") -> None:
        """Raise MalformedInputError if any id is not a vertex."""
        bad = [v for v in vs if v not in self._vertices]
        if bad:
            raise MalformedInputError(f"{what} ids not in graph: {sorted(bad)[:5]}")

    # ------------------------------------------------------------------
    # derived graphs
    # ------------------------------------------------------------------
    def delete_vertices(self, xs: Iterable[int]) -> "Graph":
        drop = set(xs)
        keep = self._vertices - drop
        return Graph(self._n, (e for e in self._edges if e[0] in keep and e[1] in keep), keep)

    def induced(self, xs: Iterable[int]) -> "Graph":
        keep = self._vertices & set(xs)
        return Graph(self._n, (e for e in self._edges if e[0] in keep and e[1] in keep), keep)

    def delete_edges(self, es: Iterable[Sequence[int]]) -> "Graph":
        """Remove every copy of each listed edge."""
        drop = {_norm(int(e[0]), int(e[1])) for e in es}
        return Graph(self._n, (e for e in self._edges if e not in drop), self._vertices)

    def add_edges(self, es: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self._n, list(self._edges) + [tuple(e) for e in es], self._vertices)

    def add_vertices(self, count: int) -> Tuple["Graph", List[int]]:
        """Extend the id space by ``count`` new isolated vertices."""
        new = list(range(self._n, self._n + count))
        return Graph(self._n + count, self._edges, self._vertices | set(new)), new

    def with_vertices(self, vs: Iterable[int]) -> "Graph":
        """Same edges, with extra (isolated) vertices added to the view."""
        vs = set(vs)
        n = max([self._n] + [v + 1 for v in vs])
        return Graph(n, self._edges, self._vertices | vs)

    def union(self, other: "Graph") -> "Graph":
        """Union over a common id space; multiplicities take the maximum."""
        n = max(self._n, other._n)
        mine, theirs = Counter(self._edges), Counter(other._edges)
        merged: List[Edge] = []
        for e in set(mine) | set(theirs):
            merged.extend([e] * max(mine[e], theirs[e]))
        return Graph(n, merged, self._vertices | other._vertices)

    def simplify(self) -> "Graph":
        """Explicit simple view: loops and parallel copies removed."""
        return Graph(self._n, self.simple_edges(), self._vertices)

    def relabel(self) -> Tuple["Graph", Dict[int, int]]:
        """Compact the vertex set to ``0..order-1``; returns the old->new map."""
        mapping = {v: i for i, v in enumerate(sorted(self._vertices))}
        return Graph(len(mapping), [(mapping[u], mapping[v]) for u, v in self._edges]), mapping

    def to_networkx(self) -> nx.Graph:
        """Simple networkx graph on the same ids."""
        h = nx.Graph()
        h.add_nodes_from(sorted(self._vertices))
        h.add_edges_from(self.simple_edges())
        return h

    @classmethod
    def from_networkx(cls, h: nx.Graph, n: Optional[int] = None) -> "Graph":
        nodes = [int(v) for v in h.nodes]
        size = n if n is not None else (max(nodes) + 1 if nodes else 0)
        return cls(size, [(int(u), int(v)) for u, v in h.edges], nodes)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], extra: Iterable[int] = ()) -> "Graph":
        """Graph whose vertex set is the endpoints plus ``extra``."""
        es = [tuple(e) for e in edges]
        vs = {int(v) for e in es for v in e} | {int(v) for v in extra}
        return cls(max(vs) + 1 if vs else 0, es, vs)

    # ------------------------------------------------------------------
    # connectivity
    # ------------------------------------------------------------------
    def bfs(self, sources: Iterable[int], allowed: Optional[Set[int]] = None) -> Set[int]:
        """Vertices reachable from ``sources`` inside ``allowed`` (default: all)."""
        seen: Set[int] = set()
        queue = deque()
        for s in sources:
            if s in self._vertices and (allowed is None or s in allowed) and s not in seen:
                seen.add(s)
                queue.append(s)
        while queue:
            v = queue.popleft()
            for u in self._adj[v]:
                if u not in seen and (allowed is None or u in allowed):
                    seen.add(u)
                    queue.append(u)
        return seen

    def components(self, within: Optional[Iterable[int]] = None) -> List[List[int]]:
        """Connected components (sorted lists, ordered by least vertex)."""
        pool = set(self._vertices) if within is None else set(within) & self._vertices
        comps: List[List[int]] = []
        for v in sorted(pool):
            if any(v in c for c in comps):
                continue
            comps.append(sorted(self.bfs([v], pool)))
        return comps

    def is_connected(self, within: Optional[Iterable[int]] = None) -> bool:
        pool = set(self._vertices) if within is None else set(within)
        if not pool:
            return True
        start = next(iter(pool))
        return self.bfs([start], pool) == pool

    # ------------------------------------------------------------------
    # serialization
    # ------------------------------------------------------------------
    def to_dict(self) -> Dict[str, object]:
        """Canonical JSON form: ``n`` then sorted ``edges``.

        A ``vertices`` key is added only for views over a proper subset.
        """
        data: Dict[str, object] = {"n": self._n, "edges": [list(e) for e in self._edges]}
        if len(self._vertices) != self._n:
            data["vertices"] = sorted(self._vertices)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "Graph":
        try:
            return cls(int(data["n"]), data.get("edges", []), data.get("vertices"))
        except (KeyError, TypeError) as e:
            raise MalformedInputError(f"invalid graph JSON: {e}") from e

    def to_dot(self, name: str = "G", labels: Optional[Dict[int, str]] = None) -> str:
        lines = [f"graph {name} {{"]
        for v in sorted(self._vertices):
            label = labels.get(v) if labels else None
            lines.append(f'  {v} [label="{label}"];' if label else f"  {v};")
        for u, v in self._edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    # ------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._vertices, self._edges))
        return self._hash

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._vertices))

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._vertices

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, |V|={len(self._vertices)}, |E|={len(self._edges)})"


@dataclass(frozen=True)
class Separation:
    """A pair (A, B) of vertex sets with no edge between A-B and B-A."""

    A: FrozenSet[int]
    B: FrozenSet[int]

    @property
    def order(self) -> int:
        return len(self.A & self.B)

    @property
    def cut(self) -> FrozenSet[int]:
        return self.A & self.B

    def is_valid(self, g: Graph) -> bool:
        if (self.A | self.B) != g.vertices:
            return False
        only_a = self.A - self.B
        only_b = self.B - self.A
        return not any(u in only_b for v in only_a for u in g.neighbors(v))

    def swapped(self) -> "Separation":
        return Separation(self.B, self.A)

    def to_dict(self) -> Dict[str, List[int]]:
        return {"A": sorted(self.A), "B": sorted(self.B)}


def complete_graph(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def grid_graph(rows: int, cols: int) -> Graph:
    """Grid with vertex ``r * cols + c`` at row r, column c."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def subdivide_edges(g: Graph, edges: Optional[Iterable[Sequence[int]]] = None) -> Tuple[Graph, Dict[Edge, int]]:
    """Subdivide each listed simple edge once (default: every simple edge).

    Returns:
        (subdivided graph, map from the original edge to its new middle vertex)
    """
    targets = g.simple_edges() if edges is None else sorted({_norm(int(e[0]), int(e[1])) for e in edges})
    missing = [e for e in targets if not g.has_edge(*e)]
    if missing:
        raise MalformedInputError(f"cannot subdivide missing edges {missing[:3]}")
    middle: Dict[Edge, int] = {}
    next_id = g.n
    for e in targets:
        middle[e] = next_id
        next_id += 1
    new_edges: List[Edge] = []
    for e in g.edges:
        if e in middle:
            m = middle[e]
            new_edges.extend([(e[0], m), (m, e[1])])
        else:
            new_edges.append(e)
    return Graph(next_id, new_edges, set(g.vertices) | set(middle.values())), middle
