"""Apex testing and internal 4-connectivity."""

import logging
from itertools import combinations
from typing import Optional, Tuple

from src.graph.flows import is_k_connected
from src.graph.graph import Graph
from src.planarity.embedding import is_planar

logger = logging.getLogger(__name__)


def is_apex(g: Graph) -> Tuple[bool, Optional[int]]:
    """
    Decide whether some vertex deletion leaves g planar.

    Planar graphs count as apex (witness: least vertex); the null graph is
    apex with no witness.

    Returns:
        (is_apex, witness vertex or None)
    """
    if g.order() == 0:
        return True, None
    if is_planar(g):
        return True, min(g.vertices)
    for v in g.sorted_vertices():
        if is_planar(g.delete_vertices([v])):
            return True, v
    return False, None


def is_simple(g: Graph) -> bool:
    return all(u != v for u, v in g.edges) and len(set(g.edges)) == len(g.edges)


def is_internally_4_connected(g: Graph) -> bool:
    """
    Simple, 3-connected, at least five vertices, and for every separation
    (A, B) of order three one of G[A], G[B] has at most three edges.

    Both sides contain the separator, so edges inside it count on each side.
    """
    if not is_simple(g) or g.order() < 5 or not is_k_connected(g, 3):
        return False
    vertices = g.sorted_vertices()
    for sep in combinations(vertices, 3):
        cut = set(sep)
        comps = g.components(set(vertices) - cut)
        if len(comps) < 2:
            continue
        inside = sum(1 for u, v in combinations(sep, 2) if g.has_edge(u, v))
        # any grouping of the components into two sides is a separation
        weights = [_charged_edges(g, set(c), cut) for c in comps]
        total = sum(weights)
        sums = {0}
        for w in weights:
            sums |= {s + w for s in sums}
        if any(s + inside > 3 and total - s + inside > 3 for s in sums):
            logger.debug(f"order-3 separation at {sep} has two heavy sides")
            return False
    return True


def _charged_edges(g: Graph, side: set, cut: set) -> int:
    """Edges of G[side ∪ cut] with at least one end in ``side``."""
    count = 0
    for v in side:
        for u in g.neighbors(v):
            if u in cut or (u in side and u > v):
                count += 1
    return count
