"""Vertex-count bounds for rural societies and the cosmopolitan wall height."""

import logging

from src.society.rural import is_rural
from src.society.society import Society
from src.utils.errors import HypothesisUnmet
from src.walls.elementary import wall_vertices

logger = logging.getLogger(__name__)


def rural_vertex_bound(length: int) -> int:
    """⌊ℓ²/12 + ℓ/2 + 1⌋ for a boundary of length ℓ."""
    if length < 0:
        raise ValueError(f"boundary length must be nonnegative, got {length}")
    return (length * length + 6 * length + 12) // 12


devos_seymour_bound = rural_vertex_bound


def rural_vertex_slack(s: Society) -> int:
    """
    bound(|V(Ω)|) − |V(G)| for a rural society whose vertices off Ω all
    have degree at least 6.

    Raises:
        HypothesisUnmet: the society is not rural or a vertex off Ω has
            degree below 6
    """
    low = [v for v in s.inner_vertices() if s.graph.degree(v) < 6]
    if low:
        raise HypothesisUnmet(f"vertices off Ω with degree below 6: {low[:5]}")
    if not is_rural(s):
        raise HypothesisUnmet("society is not rural")
    return rural_vertex_bound(len(s.omega)) - s.graph.order()


def cosmopolitan_t_for_k(k: int) -> int:
    """
    Least even t ≥ 2 such that a wall of height t fits under the bound only
    for boundaries longer than 6k − 6.

    The bound grows with ℓ, so it suffices that a wall of height t has more
    vertices than the bound allows at ℓ = 6k − 6.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    ceiling = rural_vertex_bound(6 * k - 6)
    t = 2
    while wall_vertices(t) <= ceiling:
        t += 2
    logger.debug(f"cosmopolitan wall height for k={k}: {t}")
    return t
