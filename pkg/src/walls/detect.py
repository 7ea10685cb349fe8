"""Finding and verifying walls (subdivisions of elementary walls) in a host graph."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from src.graph.graph import Graph
from src.graph.paths import Path, enumerate_paths, is_path
from src.utils.budget import Budget, as_budget
from src.utils.errors import MalformedInputError
from src.walls.elementary import WallCoords, gen_elementary_wall

logger = logging.getLogger(__name__)

WallEdge = Tuple[int, int]


@dataclass(frozen=True)
class WallEmbedding:
    """
    A wall of height h in ``host``.

    ``branch`` maps every elementary-wall vertex to a host vertex and
    ``model`` maps every elementary-wall edge (u, v), u < v, to a host path
    from ``branch[u]`` to ``branch[v]``.
    """

    host: Graph
    coords: WallCoords
    branch: Dict[int, int]
    model: Dict[WallEdge, Path]

    @property
    def height(self) -> int:
        return self.coords.height

    @property
    def corners(self) -> Tuple[int, int, int, int]:
        return tuple(self.branch[c] for c in self.coords.corners)

    def vertices(self) -> Set[int]:
        out = set(self.branch.values())
        for p in self.model.values():
            out.update(p)
        return out

    def edges(self) -> Set[Tuple[int, int]]:
        out = set()
        for p in self.model.values():
            for a, b in zip(p, p[1:]):
                out.add((min(a, b), max(a, b)))
        return out

    def path(self, u: int, v: int) -> Path:
        """Host path of wall edge uv, oriented from u to v."""
        if u < v:
            return self.model[(u, v)]
        return tuple(reversed(self.model[(v, u)]))

    def to_dict(self) -> Dict[str, object]:
        return {
            "height": self.height,
            "branch": {str(k): v for k, v in sorted(self.branch.items())},
            "model": [[u, v, list(p)] for (u, v), p in sorted(self.model.items())],
        }

    @classmethod
    def from_dict(cls, host: Graph, data: Dict[str, object]) -> "WallEmbedding":
        try:
            _, wc = gen_elementary_wall(int(data["height"]))
            branch = {int(k): int(v) for k, v in data["branch"].items()}
            model = {(int(u), int(v)): tuple(p) for u, v, p in data["model"]}
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInputError(f"invalid wall embedding JSON: {e}") from e
        return cls(host, wc, branch, model)


def explain_wall_embedding(g: Graph, w: WallEmbedding) -> Optional[str]:
    """First reason w is not a wall in g, or None."""
    wall, _ = gen_elementary_wall(w.height)
    if set(w.branch) != wall.vertices:
        return "branch map must cover the elementary wall exactly"
    images = list(w.branch.values())
    if len(set(images)) != len(images):
        return "two wall vertices share a host vertex"
    if any(v not in g.vertices for v in images):
        return "branch vertex outside the host"
    if set(w.model) != set(wall.simple_edges()):
        return "model must map exactly the elementary wall edges"
    used: Set[int] = set(images)
    for (u, v), p in sorted(w.model.items()):
        if not is_path(g, p):
            return f"image of wall edge ({u}, {v}) is not a host path"
        if p[0] != w.branch[u] or p[-1] != w.branch[v]:
            return f"image of wall edge ({u}, {v}) has the wrong ends"
        inner = set(p[1:-1])
        if inner & used:
            return f"image of wall edge ({u}, {v}) meets another part of the wall"
        used |= inner
    return None


def verify_wall_embedding(g: Graph, w: WallEmbedding) -> bool:
    reason = explain_wall_embedding(g, w)
    if reason:
        logger.debug(f"Wall embedding rejected: {reason}")
    return reason is None


# ----------------------------------------------------------------------
# skeletons: suppress degree-2 vertices
# ----------------------------------------------------------------------
def _chains(g: Graph, keep: Set[int]) -> List[Path]:
    """Maximal paths between kept vertices whose interiors have degree 2."""
    seen: Set[Tuple[int, int]] = set()
    out: List[Path] = []
    for a in sorted(keep):
        for first in sorted(g.neighbors(a)):
            if (a, first) in seen:
                continue
            walk = [a, first]
            while walk[-1] not in keep:
                nxt = [u for u in g.neighbors(walk[-1]) if u != walk[-2]]
                if not nxt:
                    break
                walk.append(nxt[0])
            if walk[-1] not in keep or walk[-1] == a:
                continue
            seen.add((walk[-1], walk[-2]))
            seen.add((a, first))
            out.append(tuple(walk))
    return out


def _skeleton(g: Graph) -> nx.Graph:
    """Graph on the vertices of degree ≠ 2; each edge carries its longest chain."""
    keep = {v for v in g.vertices if g.degree(v) != 2}
    sk = nx.Graph()
    sk.add_nodes_from(keep)
    for p in _chains(g, keep):
        a, b = p[0], p[-1]
        if sk.has_edge(a, b):
            if len(sk[a][b]["path"]) >= len(p):
                continue
        sk.add_edge(a, b, path=p, length=len(p) - 1)
    return sk


def _lay_chain(w: Dict[WallEdge, Path], branch: Dict[int, int], pattern: Path, host: Path) -> None:
    """Spread a pattern chain over a host chain at least as long."""
    steps = len(pattern) - 1
    for k in range(1, steps):
        branch[pattern[k]] = host[k]
    for k in range(steps):
        u, v = pattern[k], pattern[k + 1]
        lo = k
        hi = k + 1 if k + 1 < steps else len(host) - 1
        seg = host[lo : hi + 1]
        if u < v:
            w[(u, v)] = tuple(seg)
        else:
            w[(v, u)] = tuple(reversed(seg))


class _WallSearch:
    """Routes the wall skeleton into the host by exhaustive backtracking."""

    def __init__(self, g: Graph, wall: Graph, budget: Budget) -> None:
        self.g = g
        self.budget = budget
        keep = {v for v in wall.vertices if wall.degree(v) != 2}
        chains = _chains(wall, keep)
        # order chains so each one after the first touches a routed vertex
        order: List[Path] = []
        reached = {chains[0][0]}
        pending = list(chains)
        while pending:
            for i, p in enumerate(pending):
                if p[0] in reached or p[-1] in reached:
                    if p[0] not in reached:
                        p = tuple(reversed(p))
                    order.append(p)
                    reached.add(p[-1])
                    pending.pop(i)
                    break
        self.chains = order
        self.degree = {v: wall.degree(v) for v in keep}

    def run(self) -> Optional[Tuple[Dict[int, int], List[Path]]]:
        start = self.chains[0][0]
        for v in sorted(self.g.vertices):
            if self.g.degree(v) < self.degree[start]:
                continue
            image = {start: v}
            routes: List[Path] = []
            if self._route(0, image, {v}, routes):
                return image, routes
        return None

    def _route(self, i: int, image: Dict[int, int], used: Set[int], routes: List[Path]) -> bool:
        self.budget.tick()
        if i == len(self.chains):
            return True
        chain = self.chains[i]
        a, b = chain[0], chain[-1]
        fresh = b not in image
        if fresh:
            ends = [u for u in sorted(self.g.vertices) if u not in used and self.g.degree(u) >= self.degree[b]]
        else:
            ends = [image[b]]
        for dst in ends:
            for p in enumerate_paths(
                self.g,
                image[a],
                is_target=lambda u: u == dst,
                allowed=lambda u: u not in used,
                budget=self.budget,
                min_length=len(chain) - 1,
            ):
                if fresh:
                    image[b] = dst
                used.update(p)
                routes.append(p)
                if self._route(i + 1, image, used, routes):
                    return True
                routes.pop()
                used.difference_update(p[1:-1])
                if fresh:
                    used.discard(dst)
                    del image[b]
        return False


def find_wall(g: Graph, h: int, budget=None) -> Optional[WallEmbedding]:
    """
    A wall of height h in g, or None after exhaustive search.

    The skeleton of the wall (its degree-3 vertices joined by chains) is
    matched first against the skeleton of g, where host chains may be longer
    than wall chains. When that fails the skeleton chains are routed one by
    one as disjoint host paths.

    Raises:
        ValueError: bad height
        BudgetExceeded: when the search runs out of nodes
    """
    wall, wc = gen_elementary_wall(h)
    budget = as_budget(budget, where="find_wall")
    if g.order() < wall.order() or g.simple_edge_count() < wall.simple_edge_count():
        return None

    wall_sk = _skeleton(wall)
    host_sk = _skeleton(g)
    matcher = isomorphism.GraphMatcher(
        host_sk, wall_sk, edge_match=lambda he, pe: he["length"] >= pe["length"]
    )
    mapping = next(matcher.subgraph_monomorphisms_iter(), None)
    if mapping is not None:
        budget.tick()
        inverse = {p: hv for hv, p in mapping.items()}
        branch = dict(inverse)
        model: Dict[WallEdge, Path] = {}
        for a, b, data in wall_sk.edges(data=True):
            pattern = data["path"]
            host_path = host_sk[inverse[pattern[0]]][inverse[pattern[-1]]]["path"]
            if host_path[0] != inverse[pattern[0]]:
                host_path = tuple(reversed(host_path))
            _lay_chain(model, branch, pattern, host_path)
        w = WallEmbedding(g, wc, branch, model)
        if verify_wall_embedding(g, w):
            logger.debug(f"find_wall: skeleton match for h={h}")
            return w

    search = _WallSearch(g, wall, budget)
    found = search.run()
    if found is None:
        logger.debug(f"find_wall: no wall of height {h} after {budget.spent} nodes")
        return None
    image, routes = found
    branch = dict(image)
    model = {}
    for pattern, host_path in zip(search.chains, routes):
        _lay_chain(model, branch, pattern, host_path)
    w = WallEmbedding(g, wc, branch, model)
    if not verify_wall_embedding(g, w):
        raise RuntimeError("routed wall failed verification")
    return w


def identity_wall(h: int) -> Tuple[Graph, WallEmbedding]:
    """The elementary wall of height h embedded in itself."""
    wall, wc = gen_elementary_wall(h)
    branch = {v: v for v in wall.vertices}
    model = {e: e for e in wall.simple_edges()}
    return wall, WallEmbedding(wall, wc, branch, model)
