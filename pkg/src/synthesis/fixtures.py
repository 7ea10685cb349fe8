"""
Canonical fixtures: the grid with two crosses, configuration-plus-nest
annuli, and small societies with planted leaps, windmills, fans and
tunnels.

Annulus fixtures are laid out as legs crossing concentric rings. Leg j runs
from the Ω vertex j through rings outer to inner and ends at an Ω0 vertex;
the certificate paths continue inside Ω0 through the core graph G0.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from src.configurations.certificate import (
    FAN,
    GRIDLET,
    LEAP,
    SEPARATED_DOUBLECROSS,
    THREE_CROSSED,
    TURTLE,
    WINDMILL,
    Certificate,
)
from src.configurations.orderly import OrderlyTransaction
from src.graph.graph import Edge, Graph, grid_graph, subdivide_edges
from src.graph.paths import Path, PathSystem, path_edges
from src.society.nest import Nest
from src.society.society import Neighborhood, Society, compose
from src.walls.detect import WallEmbedding
from src.walls.elementary import gen_elementary_wall

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fixture:
    """A named host graph with whatever witnesses were planted in it."""

    name: str
    graph: Graph
    society: Optional[Society] = None
    certificate: Optional[Certificate] = None
    neighborhood: Optional[Neighborhood] = None
    nest: Optional[Nest] = None
    walls: Tuple[WallEmbedding, ...] = ()
    crosses: Tuple[Optional[PathSystem], ...] = ()
    transaction: Optional[OrderlyTransaction] = None

    def to_dict(self) -> Dict[str, object]:
        """Graph (or society) keys at top level so the JSON feeds straight into other commands."""
        data = self.society.to_dict() if self.society is not None else self.graph.to_dict()
        data["fixture"] = self.name
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_dict()
        if self.neighborhood is not None:
            data["neighborhood"] = self.neighborhood.to_dict()
        if self.nest is not None:
            data["nest"] = self.nest.to_dict()
        if self.walls:
            data["walls"] = [w.to_dict() for w in self.walls]
            data["crosses"] = [c.to_dict() if c is not None else None for c in self.crosses]
        if self.transaction is not None:
            data["transaction"] = self.transaction.to_dict()
        return data


# ----------------------------------------------------------------------
# grid with two crosses
# ----------------------------------------------------------------------
GRID_ROWS, GRID_COLS = 6, 10

# top-left (row, col) of each cell that gets both diagonals
CROSSED_CELLS = ((1, 1), (3, 7))


def _grid_vertex(row: int, col: int) -> int:
    return row * GRID_COLS + col


def _grid_subwall(host: Graph, row0: int, col0: int) -> WallEmbedding:
    """Height-2 wall whose point (x, y) sits at grid row row0 + y, column col0 + x."""
    wall, wc = gen_elementary_wall(2)
    branch = {v: _grid_vertex(row0 + y, col0 + x) for v, (x, y) in wc.coords.items()}
    model = {(u, v): (branch[u], branch[v]) for u, v in wall.simple_edges()}
    return WallEmbedding(host, wc, branch, model)


def _wall_path(row0: int, col0: int, points: Sequence[Tuple[int, int]]) -> Path:
    return tuple(_grid_vertex(row0 + y, col0 + x) for x, y in points)


def two_crosses_grid(crosses: int = 2) -> Fixture:
    """
    A 6x10 grid with both diagonals added in one cell of each of two
    disjoint height-2 subwalls.

    With ``crosses=1`` only the first cell is crossed and the second wall
    comes without a cross.
    """
    if crosses not in (1, 2):
        raise ValueError(f"crosses must be 1 or 2, got {crosses}")
    diagonals: List[Edge] = []
    for r, c in CROSSED_CELLS[:crosses]:
        diagonals.append((_grid_vertex(r, c), _grid_vertex(r + 1, c + 1)))
        diagonals.append((_grid_vertex(r, c + 1), _grid_vertex(r + 1, c)))
    g = grid_graph(GRID_ROWS, GRID_COLS).add_edges(diagonals)
    w1 = _grid_subwall(g, 0, 0)
    w2 = _grid_subwall(g, 3, 4)
    # corner order is (1, 0), (0, 2), (4, 2), (5, 0); each cross joins opposite corners
    c1 = PathSystem.of(
        [
            _wall_path(0, 0, [(1, 0), (1, 1), (2, 2), (3, 2), (4, 2)]),
            _wall_path(0, 0, [(0, 2), (1, 2), (2, 1), (3, 1), (3, 0), (4, 0), (5, 0)]),
        ]
    )
    c2 = PathSystem.of(
        [
            _wall_path(3, 4, [(1, 0), (2, 0), (3, 0), (4, 1), (4, 2)]),
            _wall_path(3, 4, [(0, 2), (1, 2), (2, 2), (2, 1), (3, 1), (4, 0), (5, 0)]),
        ]
    )
    name = "two-crosses-grid" if crosses == 2 else "one-cross-grid"
    return Fixture(name, g, walls=(w1, w2), crosses=(c1, c2 if crosses == 2 else None))


# ----------------------------------------------------------------------
# annulus fixtures
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Annulus:
    """
    Vertex numbering of a legs-by-rings annulus.

    Ω vertices are ``0..legs-1``; ring k (0 innermost) follows the outer
    rings; Ω0 vertices come next and core vertices after them.
    """

    legs: int
    rings: int

    def omega(self, j: int) -> int:
        return j

    def ring(self, k: int, j: int) -> int:
        return self.legs * (self.rings - k) + j

    def inner(self, j: int) -> int:
        return self.legs * (self.rings + 1) + j

    def core(self, i: int) -> int:
        return self.legs * (self.rings + 2) + i

    def leg(self, j: int) -> Path:
        """From Ω inwards to Ω0."""
        return (self.omega(j),) + tuple(self.ring(k, j) for k in reversed(range(self.rings))) + (self.inner(j),)

    def bump(self, i: int, j: int, via: Sequence[int] = ()) -> Path:
        return self.leg(i) + tuple(via) + tuple(reversed(self.leg(j)))

    def tail(self, j: int, via: Sequence[int] = ()) -> Path:
        return self.leg(j) + tuple(via)

    def cycles(self) -> List[List[int]]:
        return [[self.ring(k, j) for j in range(self.legs)] for k in range(self.rings)]

    def neighborhood_edges(self) -> Set[Edge]:
        edges: Set[Edge] = set()
        for j in range(self.legs):
            edges.update(path_edges(self.leg(j)))
        for cycle in self.cycles():
            edges.update(path_edges(cycle + cycle[:1]))
        return edges


def annulus_fixture(
    name: str, kind: str, lay: Annulus, parts: Dict[str, Path], anchors: Dict[str, int]
) -> Fixture:
    """Compose the core spanned by the certificate paths with the ring neighborhood."""
    nb_edges = lay.neighborhood_edges()
    core_edges = sorted({e for p in parts.values() for e in path_edges(p)} - nb_edges)
    omega0 = [lay.inner(j) for j in range(lay.legs)]
    core_vertices = {v for e in core_edges for v in e} | set(omega0)
    n = max(core_vertices | {v for e in nb_edges for v in e}) + 1
    nb_vertices = {v for e in nb_edges for v in e}
    nb = Neighborhood.of(Graph(n, sorted(nb_edges), nb_vertices), list(range(lay.legs)), omega0)
    s0 = Society.of(Graph(n, core_edges, core_vertices), omega0)
    s = compose(s0, nb)
    cert = Certificate.of(kind, parts, anchors)
    nest = Nest.of(lay.cycles())
    logger.debug(f"{name}: {s.graph.order()} vertices, {len(lay.cycles())} rings, {lay.legs} legs")
    return Fixture(name, s.graph, s, cert, nb, nest)


def _labelled(labels: Sequence[str]) -> Dict[str, int]:
    return {label: j for j, label in enumerate(labels)}


def three_crossed_nest(rings: int = 3) -> Fixture:
    """Six legs u1 u2 u3 v1 v2 v3; each P_i is a chord of the core."""
    lay = Annulus(6, rings)
    at = _labelled(["u1", "u2", "u3", "v1", "v2", "v3"])
    parts = {f"P{i}": lay.bump(at[f"u{i}"], at[f"v{i}"]) for i in (1, 2, 3)}
    return annulus_fixture("three-crossed-nest", THREE_CROSSED, lay, parts, at)


def gridlet_nest(rings: int = 3) -> Fixture:
    lay = Annulus(8, rings)
    at = _labelled(["u1", "u2", "u3", "v2", "u4", "v1", "v4", "v3"])
    parts = {f"P{i}": lay.bump(at[f"u{i}"], at[f"v{i}"]) for i in (1, 2, 3, 4)}
    return annulus_fixture("gridlet-nest", GRIDLET, lay, parts, at)


def turtle_nest(rings: int = 3) -> Fixture:
    """
    Legs u1 u2 v1 v2 u3 t1 t2 v3 with a one-bump neck L from u3 to v3.

    q1 sits on P1 and q2 on P2 inside the core; Q1 runs from t1 down to q1
    and Q2 from t2 down to q2.
    """
    lay = Annulus(8, rings)
    at = _labelled(["u1", "u2", "v1", "v2", "u3", "t1", "t2", "v3"])
    q1, q2 = lay.core(0), lay.core(1)
    parts = {
        "P1": lay.bump(at["u1"], at["v1"], [q1]),
        "P2": lay.bump(at["u2"], at["v2"], [q2]),
        "L": lay.bump(at["u3"], at["v3"]),
        "Q1": lay.tail(at["t1"], [q1]),
        "Q2": lay.tail(at["t2"], [q2]),
    }
    anchors = {k: v for k, v in at.items() if not k.startswith("t")}
    anchors.update(q1=q1, q2=q2)
    name = "turtle-nest" if rings == 3 else f"turtle-nest-{rings}"
    return annulus_fixture(name, TURTLE, lay, parts, anchors)


def doublecross_nest(rings: int = 3) -> Fixture:
    """
    Ten legs u1 u2 v1 v2 w2 u3 u4 v3 v4 w1; P5 is a bump from w1, between
    v4 and u1, to w2, between v2 and u3.
    """
    lay = Annulus(10, rings)
    at = _labelled(["u1", "u2", "v1", "v2", "w2", "u3", "u4", "v3", "v4", "w1"])
    parts = {f"P{i}": lay.bump(at[f"u{i}"], at[f"v{i}"]) for i in (1, 2, 3, 4)}
    parts["P5"] = lay.bump(at["w1"], at["w2"])
    anchors = {k: v for k, v in at.items() if not k.startswith("w")}
    return annulus_fixture("doublecross-nest", SEPARATED_DOUBLECROSS, lay, parts, anchors)


def subdivided(fx: Fixture) -> Fixture:
    """Subdivide every edge of the certificate paths and nest cycles once."""
    if fx.society is None or fx.certificate is None or fx.nest is None or fx.neighborhood is None:
        raise ValueError(f"{fx.name} is not an annulus fixture")
    targets: Set[Edge] = set()
    for p in fx.certificate.parts.values():
        targets.update(path_edges(p))
    for i in range(len(fx.nest)):
        targets.update((min(e), max(e)) for e in fx.nest.edges_of(i))
    g, middle = subdivide_edges(fx.society.graph, targets)

    def stretch(seq: Sequence[int], closed: bool = False) -> Tuple[int, ...]:
        out: List[int] = []
        pairs = list(zip(seq, list(seq[1:]) + ([seq[0]] if closed else [])))
        for a, b in pairs:
            out.append(a)
            m = middle.get((min(a, b), max(a, b)))
            if m is not None:
                out.append(m)
        if not closed:
            out.append(seq[-1])
        return tuple(out)

    nb = fx.neighborhood
    nb_edges: List[Edge] = []
    for a, b in nb.graph.edges:
        m = middle.get((a, b))
        nb_edges.extend([(a, m), (m, b)] if m is not None else [(a, b)])
    nb_vertices = {v for e in nb_edges for v in e} | nb.graph.vertices
    new_nb = Neighborhood(Graph(g.n, nb_edges, nb_vertices), nb.omega, nb.omega0)
    cert = Certificate(
        fx.certificate.kind,
        {k: stretch(p) for k, p in fx.certificate.parts.items()},
        dict(fx.certificate.anchors),
    )
    nest = Nest.of([stretch(c, closed=True) for c in fx.nest.cycles])
    s = Society(g, fx.society.omega)
    return Fixture(f"{fx.name}-subdivided", g, s, cert, new_nb, nest)


def subdivided_two_crosses_grid() -> Fixture:
    """The grid with two crosses, every edge subdivided once."""
    fx = two_crosses_grid()
    g, middle = subdivide_edges(fx.graph)

    def stretch(p: Sequence[int]) -> Path:
        out: List[int] = [p[0]]
        for a, b in zip(p, p[1:]):
            out.extend([middle[(min(a, b), max(a, b))], b])
        return tuple(out)

    walls = tuple(
        WallEmbedding(g, w.coords, dict(w.branch), {e: stretch(p) for e, p in w.model.items()}) for w in fx.walls
    )
    crosses = tuple(PathSystem.of([stretch(p) for p in c.paths]) for c in fx.crosses if c is not None)
    return Fixture("two-crosses-grid-subdivided", g, walls=walls, crosses=crosses)


# ----------------------------------------------------------------------
# small planted societies
# ----------------------------------------------------------------------
def leap_society(k: int = 5) -> Fixture:
    """
    Ω = u0..uk, v0, vk..v1 on a cycle, with P_i a two-edge bump from u_i to v_i.
    """
    if k < 1:
        raise ValueError(f"a leap needs length at least 1, got {k}")
    m = 2 * k + 2
    v_pos = {0: k + 1}
    v_pos.update({i: m - i for i in range(1, k + 1)})
    parts, anchors, edges = {}, {}, [(i, (i + 1) % m) for i in range(m)]
    for i in range(k + 1):
        mid = m + i
        parts[f"P{i}"] = (i, mid, v_pos[i])
        anchors[f"u{i}"], anchors[f"v{i}"] = i, v_pos[i]
        edges += [(i, mid), (mid, v_pos[i])]
    s = Society.of(Graph(m + k + 1, edges), list(range(m)))
    return Fixture(f"leap-{k}", s.graph, s, Certificate.of(LEAP, parts, anchors))


def windmill_society(t: int = 3) -> Fixture:
    """Vanes u_i v_i w_i around Ω; P_i bends over v_i and Q_i joins the hub x to v_i."""
    if t < 1:
        raise ValueError(f"a windmill needs at least one vane, got {t}")
    m = 3 * t
    x = m + t
    parts, anchors, edges = {}, {"x": x}, [(i, (i + 1) % m) for i in range(m)]
    for i in range(1, t + 1):
        u, v, w = 3 * (i - 1), 3 * (i - 1) + 1, 3 * (i - 1) + 2
        bend = m + i - 1
        parts[f"P{i}"] = (u, bend, w)
        parts[f"Q{i}"] = (x, v)
        anchors.update({f"u{i}": u, f"v{i}": v, f"w{i}": w})
        edges += [(u, bend), (bend, w), (x, v)]
    s = Society.of(Graph(x + 1, edges), list(range(m)))
    return Fixture(f"windmill-{t}", s.graph, s, Certificate.of(WINDMILL, parts, anchors))


def fan_society(t: int = 3) -> Fixture:
    """Hubs z1, z2 off Ω; blade i is z1-u_i plus z2-v_i with u_i, v_i consecutive on Ω."""
    if t < 1:
        raise ValueError(f"a fan needs at least one blade, got {t}")
    m = 2 * t
    z1, z2 = m, m + 1
    parts, anchors, edges = {}, {"z1": z1, "z2": z2}, [(i, (i + 1) % m) for i in range(m)]
    for i in range(1, t + 1):
        u, v = 2 * (i - 1), 2 * (i - 1) + 1
        parts[f"P{i}"] = (z1, u)
        parts[f"Q{i}"] = (z2, v)
        anchors.update({f"u{i}": u, f"v{i}": v})
        edges += [(z1, u), (z2, v)]
    s = Society.of(Graph(m + 2, edges), list(range(m)))
    return Fixture(f"fan-{t}", s.graph, s, Certificate.of(FAN, parts, anchors))


def tunnel_society() -> Fixture:
    """
    One bump P1 = 0-4-5-6-2 with Ω = 0, 1, 2, 3. Q0 = 4-7-6 runs under P1,
    and from 5 the paths Q1, Q2 leave to 3 and 1, one on each side.
    """
    edges = [(0, 4), (4, 5), (5, 6), (6, 2), (4, 7), (7, 6), (5, 3), (5, 1)]
    s = Society.of(Graph(8, edges), [0, 1, 2, 3])
    t = OrderlyTransaction.of([(0, 4, 5, 6, 2)])
    return Fixture("tunnel", s.graph, s, transaction=t)


def _with_society(builder: Callable[[], Fixture], name: str) -> Callable[[], Fixture]:
    def build() -> Fixture:
        fx = builder()
        return Fixture(name, fx.graph, fx.society, fx.certificate)

    return build


FIXTURES: Dict[str, Callable[[], Fixture]] = {
    "two-crosses-grid": two_crosses_grid,
    "one-cross-grid": lambda: two_crosses_grid(crosses=1),
    "two-crosses-grid-subdivided": subdivided_two_crosses_grid,
    "turtle": _with_society(turtle_nest, "turtle"),
    "three-crossed": _with_society(three_crossed_nest, "three-crossed"),
    "gridlet": _with_society(gridlet_nest, "gridlet"),
    "doublecross": _with_society(doublecross_nest, "doublecross"),
    "turtle-nest": turtle_nest,
    "three-crossed-nest": three_crossed_nest,
    "gridlet-nest": gridlet_nest,
    "doublecross-nest": doublecross_nest,
    "turtle-nest-2": lambda: turtle_nest(rings=2),
    "leap-5": leap_society,
    "windmill": windmill_society,
    "fan": fan_society,
    "tunnel": tunnel_society,
}

NEST_FIXTURES = ("turtle-nest", "three-crossed-nest", "gridlet-nest", "doublecross-nest")


def build_fixture(name: str) -> Fixture:
    """
    Raises:
        ValueError: unknown fixture name
    """
    try:
        builder = FIXTURES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
    return builder()
