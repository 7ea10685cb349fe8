"""Perimeter, compass and anticompass of a wall; flatness tests."""

import logging
from typing import List, Optional, Set

from src.graph.graph import Graph
from src.graph.paths import PathSystem, enumerate_paths, shortest_path
from src.planarity.disc import disc_embedding
from src.society.society import Society
from src.utils.budget import as_budget
from src.utils.errors import MalformedInputError
from src.walls.detect import WallEmbedding, verify_wall_embedding
from src.walls.elementary import elementary_perimeter, gen_elementary_wall

logger = logging.getLogger(__name__)


def perimeter(w: WallEmbedding) -> List[int]:
    """Host cycle that is the image of the elementary wall's outer face."""
    wall, wc = gen_elementary_wall(w.height)
    ring = elementary_perimeter(wall, wc)
    out: List[int] = []
    for i, u in enumerate(ring):
        v = ring[(i + 1) % len(ring)]
        out.extend(w.path(u, v)[:-1])
    return out


def _compass_vertices(g: Graph, w: WallEmbedding) -> Set[int]:
    cycle = set(perimeter(w))
    wall_inside = w.vertices() - cycle
    hit = [set(c) for c in g.components(g.vertices - cycle) if wall_inside & set(c)]
    if len(hit) != 1:
        raise MalformedInputError(
            f"the wall meets {len(hit)} components off its perimeter; expected exactly one"
        )
    return cycle | hit[0]


def compass(g: Graph, w: WallEmbedding) -> Graph:
    """
    Perimeter C plus the component of G∖V(C) that contains the wall, with
    every edge of g among those vertices.

    Raises:
        MalformedInputError: the wall does not sit in a single component
    """
    return g.induced(_compass_vertices(g, w))


def anticompass_society(g: Graph, w: WallEmbedding) -> Society:
    """
    The rest of g around the compass, with Ω the perimeter order.

    Edges among perimeter vertices stay in the compass, so the two parts
    share V(C) and no edges.
    """
    inside = _compass_vertices(g, w)
    ring = perimeter(w)
    cycle = set(ring)
    rest = g.delete_vertices(inside - cycle)
    rest = rest.delete_edges([e for e in rest.simple_edges() if e[0] in cycle and e[1] in cycle])
    return Society.of(rest, ring)


def is_planar_wall(g: Graph, w: WallEmbedding) -> bool:
    """The compass draws in a disc with the perimeter on the boundary."""
    if not verify_wall_embedding(g, w):
        raise MalformedInputError("wall embedding does not verify against the graph")
    return disc_embedding(compass(g, w), perimeter(w))


def find_cross_over_wall(g: Graph, w: WallEmbedding, budget=None) -> Optional[PathSystem]:
    """
    Two disjoint compass paths joining the diagonally opposite corners.

    The first path ranges over chordless paths, the second is a BFS in
    the rest of the compass.

    Raises:
        BudgetExceeded: when the search runs out of nodes
    """
    budget = as_budget(budget, where="find_cross_over_wall")
    k = compass(g, w)
    c1, c2, c3, c4 = w.corners
    for p in enumerate_paths(
        k, c1, is_target=lambda u: u == c3, allowed=lambda u: u not in (c2, c4), budget=budget, chordless=True
    ):
        allowed = k.vertices - set(p)
        q = shortest_path(k, [c2], [c4], allowed)
        if q is not None:
            logger.debug(f"cross over wall: paths of length {len(p) - 1} and {len(q) - 1}")
            return PathSystem.of([p, q])
    return None


def is_flat_wall(g: Graph, w: WallEmbedding, budget=None) -> bool:
    """No cross over the wall."""
    return find_cross_over_wall(g, w, budget) is None
