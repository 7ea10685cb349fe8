"""Rural and nearly rural societies."""

import logging
from typing import Optional, Tuple

from src.planarity.disc import disc_drawing, disc_embedding
from src.planarity.embedding import Embedding
from src.society.society import Society

logger = logging.getLogger(__name__)


def is_rural(s: Society) -> bool:
    """True iff G draws in a disc with V(Ω) on the boundary in the order Ω."""
    return disc_embedding(s.graph, s.omega.ring)


def rural_drawing(s: Society) -> Optional[Embedding]:
    """A rotation system of G plus the boundary wheel (hub ``-1``), if rural."""
    return disc_drawing(s.graph, s.omega.ring)


def is_nearly_rural(s: Society) -> Tuple[bool, Optional[int]]:
    """
    Find the least vertex whose deletion leaves a rural society.

    Returns:
        (nearly_rural, witness vertex or None)
    """
    for v in s.graph.sorted_vertices():
        if is_rural(s.delete([v])):
            logger.debug(f"society is rural after deleting {v}")
            return True, v
    return False, None
