"""Elementary walls, pinwheels and hexagonal lattice patches."""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from src.graph.graph import Graph
from src.planarity.embedding import Embedding

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


@dataclass(frozen=True)
class WallCoords:
    """
    Coordinates of an elementary wall of height h.

    Vertex ids run row by row (y ascending, then x ascending). ``corners``
    holds the four corner vertices in clockwise order starting bottom-left:
    (1, 0), (0, h), (2h, h), (2h+1, 0). Diagonally opposite corners are
    ``corners[0]``/``corners[2]`` and ``corners[1]``/``corners[3]``.
    """

    height: int
    coords: Dict[int, Point]
    ids: Dict[Point, int]
    corners: Tuple[int, int, int, int]

    def vertex(self, x: int, y: int) -> int:
        return self.ids[(x, y)]

    def to_dict(self) -> Dict[str, object]:
        return {"coords": {str(v): list(p) for v, p in sorted(self.coords.items())}}


def wall_vertices(h: int) -> int:
    """Vertex count (2h+2)(h+1) − 2 of the elementary wall of height h."""
    return (2 * h + 2) * (h + 1) - 2


def _check_height(h: int) -> None:
    if h < 2 or h % 2:
        raise ValueError(f"wall height must be even and at least 2, got {h}")


def gen_elementary_wall(h: int) -> Tuple[Graph, WallCoords]:
    """
    Elementary wall of height h.

    Vertices are the points (x, y) with 0 ≤ x ≤ 2h+1 and 0 ≤ y ≤ h except
    (0, 0) and (2h+1, h). Two points are adjacent when they are horizontal
    neighbours in a row, or vertical neighbours (x, y), (x, y') with
    x ≡ max(y, y') mod 2.

    Raises:
        ValueError: h is odd or smaller than 2
    """
    _check_height(h)
    missing = {(0, 0), (2 * h + 1, h)}
    ids: Dict[Point, int] = {}
    for y in range(h + 1):
        for x in range(2 * h + 2):
            if (x, y) not in missing:
                ids[(x, y)] = len(ids)
    edges: List[Tuple[int, int]] = []
    for (x, y), v in ids.items():
        right = (x + 1, y)
        if right in ids:
            edges.append((v, ids[right]))
        up = (x, y + 1)
        if up in ids and x % 2 == (y + 1) % 2:
            edges.append((v, ids[up]))
    coords = {v: p for p, v in ids.items()}
    corners = (ids[(1, 0)], ids[(0, h)], ids[(2 * h, h)], ids[(2 * h + 1, 0)])
    g = Graph(len(ids), edges)
    logger.debug(f"elementary wall h={h}: {g.order()} vertices, {g.edge_count()} edges")
    return g, WallCoords(h, coords, ids, corners)


def embedding_from_coordinates(g: Graph, coords: Dict[int, Point]) -> Embedding:
    """Rotation system of a straight-line drawing, neighbours clockwise."""
    rotation: Dict[int, List[int]] = {}
    for v in g.sorted_vertices():
        x0, y0 = coords[v]
        rotation[v] = sorted(
            g.neighbors(v),
            key=lambda u: -math.atan2(coords[u][1] - y0, coords[u][0] - x0),
        )
    return Embedding(rotation)


def _area(face: Sequence[int], coords: Dict[int, Point]) -> float:
    total = 0.0
    for i, v in enumerate(face):
        x1, y1 = coords[v]
        x2, y2 = coords[face[(i + 1) % len(face)]]
        total += x1 * y2 - x2 * y1
    return abs(total) / 2


def outer_face(g: Graph, coords: Dict[int, Point]) -> List[int]:
    """Vertices around the unbounded face of the drawing (largest area)."""
    faces = embedding_from_coordinates(g, coords).face_vertices()
    return max(faces, key=lambda f: (_area(f, coords), len(f)))


def elementary_perimeter(g: Graph, wc: WallCoords) -> List[int]:
    """Perimeter cycle of the elementary wall, starting at the first corner."""
    face = outer_face(g, wc.coords)
    k = face.index(wc.corners[0])
    ring = face[k:] + face[:k]
    # walk towards (0, h) so corners come out in the stored clockwise order
    if ring.index(wc.corners[1]) > ring.index(wc.corners[2]):
        ring = [ring[0]] + list(reversed(ring[1:]))
    return ring


def gen_pinwheel(k: int) -> Graph:
    """
    Pinwheel with k vanes.

    A rim cycle r_0..r_{4k-1} (ids 0..4k-1) surrounds a hub cycle
    h_0..h_{2k-1} (ids 4k..6k-1). Vane i consists of the two crossing
    spokes h_{2i} r_{4i+2} and h_{2i+1} r_{4i+1}.

    Raises:
        ValueError: k < 1
    """
    if k < 1:
        raise ValueError(f"a pinwheel needs at least one vane, got {k}")
    rim = 4 * k
    hub = 2 * k
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    if hub >= 3:
        edges += [(rim + j, rim + (j + 1) % hub) for j in range(hub)]
    else:
        edges.append((rim, rim + 1))
    for i in range(k):
        edges.append((rim + 2 * i, 4 * i + 2))
        edges.append((rim + 2 * i + 1, 4 * i + 1))
    return Graph(rim + hub, edges)


def gen_hex_patch(a: int, b: int, c: int) -> Tuple[Graph, List[int], Dict[int, Point]]:
    """
    Triangular-lattice hexagon with side lengths a, b, c, a, b, c.

    Lattice points (x, y) with 0 ≤ x ≤ a+c, 0 ≤ y ≤ b+c and
    c ≤ x+y ≤ a+b+c; neighbours differ by (±1, 0), (0, ±1) or ±(1, −1).

    Returns:
        (graph, boundary cycle, lattice coordinates)

    Raises:
        ValueError: a side length below 1
    """
    if min(a, b, c) < 1:
        raise ValueError(f"hexagon sides must be positive, got {(a, b, c)}")
    ids: Dict[Point, int] = {}
    for y in range(b + c + 1):
        for x in range(a + c + 1):
            if c <= x + y <= a + b + c:
                ids[(x, y)] = len(ids)
    edges = []
    for (x, y), v in ids.items():
        for dx, dy in ((1, 0), (0, 1), (1, -1)):
            w = ids.get((x + dx, y + dy))
            if w is not None:
                edges.append((v, w))
    corners = [(c, 0), (a + c, 0), (a + c, b), (a, b + c), (0, b + c), (0, c)]
    steps = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
    boundary: List[int] = []
    for (x, y), (dx, dy), nxt in zip(corners, steps, corners[1:] + corners[:1]):
        while (x, y) != nxt:
            boundary.append(ids[(x, y)])
            x, y = x + dx, y + dy
    coords = {v: p for p, v in ids.items()}
    return Graph(len(ids), edges), boundary, coords
