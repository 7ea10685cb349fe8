"""Transactions: disjoint bumps across an Ω-interval."""

import logging
from typing import Iterable, Sequence, Tuple

from src.graph.flows import vertex_flow
from src.graph.paths import PathSystem
from src.society.bumps import is_bump
from src.society.society import Society

logger = logging.getLogger(__name__)


def transaction_across(s: Society, arc: Iterable[int]) -> PathSystem:
    """Maximum set of disjoint bumps from ``arc`` to the rest of V(Ω)."""
    inside = set(arc)
    outside = s.omega.vertices - inside
    # Ω-vertices may only start or end a bump
    result = vertex_flow(s.graph, inside, outside, sources_only=inside, sinks_only=outside)
    return PathSystem.of(result.paths)


def max_transaction(s: Society) -> Tuple[int, PathSystem]:
    """
    Largest transaction over all intervals uΩv.

    Returns:
        (cardinality, witness bumps); ties keep the earliest interval
    """
    best = PathSystem.of([])
    for arc in s.omega.arcs():
        found = transaction_across(s, arc)
        if len(found) > len(best):
            best = found
    logger.debug(f"max_transaction: {len(best)}")
    return len(best), best


def is_transaction(s: Society, bumps: Sequence[Sequence[int]]) -> bool:
    """Pairwise disjoint bumps that all cross one interval boundary."""
    if not all(is_bump(s, p) for p in bumps):
        return False
    if not PathSystem.of(bumps).verify(s.graph):
        return False
    if not bumps:
        return True
    ends = [(p[0], p[-1]) for p in bumps]
    for arc in s.omega.arcs():
        inside = set(arc)
        if all((a in inside) != (b in inside) for a, b in ends):
            return True
    return False
