"""Rurally 4-connected societies."""

import logging
from itertools import combinations
from typing import Optional

from src.graph.graph import Separation
from src.planarity.disc import disc_embedding
from src.society.society import Society
from src.utils import config
from src.utils.errors import TooLarge

logger = logging.getLogger(__name__)


def find_bad_separation(s: Society, limit: Optional[int] = None) -> Optional[Separation]:
    """
    A separation (A, B) of order at most three with V(Ω) inside A whose B side
    does not draw in a disc with A∩B on the boundary.

    For each cut only the largest B side is tested; smaller ones are
    subgraphs of it.

    Raises:
        TooLarge: more than ``limit`` vertices (default MINORFORGE_SEPARATION_LIMIT)
    """
    limit = config.SEPARATION_LIMIT if limit is None else limit
    g = s.graph
    if g.order() > limit:
        raise TooLarge(f"rurally_4_connected accepts at most {limit} vertices, got {g.order()}")
    omega = s.omega.vertices
    vertices = g.sorted_vertices()
    for size in range(4):
        for cut in combinations(vertices, size):
            cut_set = set(cut)
            side = set()
            for comp in g.components(g.vertices - cut_set):
                if not omega & set(comp):
                    side |= set(comp)
            if not side:
                continue
            b = side | cut_set
            if not disc_embedding(g.induced(b), list(cut)):
                sep = Separation(frozenset(g.vertices - side), frozenset(b))
                logger.debug(f"separation at {list(cut)} has a non-disc side of {len(side)} vertices")
                return sep
    return None


def rurally_4_connected(s: Society, limit: Optional[int] = None) -> bool:
    """Every small separation away from Ω leaves a disc-drawable far side."""
    return find_bad_separation(s, limit) is None
