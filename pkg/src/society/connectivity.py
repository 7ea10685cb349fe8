"""Connectivity of a society relative to its boundary."""

import logging

from src.graph.flows import local_connectivity_from
from src.society.society import Society

logger = logging.getLogger(__name__)


def society_connectivity_at(s: Society, w: int) -> int:
    """Least order of a separation (A, B) with V(Ω) ⊆ A and w ∈ B - A."""
    return local_connectivity_from(s.graph, w, s.omega.vertices)


def is_society_k_connected(s: Society, k: int) -> bool:
    """
    True iff no separation (A, B) of order at most k-1 has V(Ω) ⊆ A and
    B - A nonempty.

    Args:
        s: Society
        k: Connectivity, at least one
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    for w in s.inner_vertices():
        order = society_connectivity_at(s, w)
        if order < k:
            logger.debug(f"vertex {w} is cut from Ω by {order} vertices (k={k})")
            return False
    return True
