"""Fans from a bump hitting set, or a goose bump."""

import logging
from itertools import combinations
from math import comb
from typing import Dict, List, Set

from src.configurations.certificate import FAN, Certificate
from src.configurations.checkers import explain_certificate
from src.decomposition.hitting import goose_bumps_or_hitting_set
from src.graph.paths import shortest_path
from src.society.connectivity import is_society_k_connected
from src.society.depth import LinearDecomposition
from src.society.society import Society
from src.utils.budget import as_budget
from src.utils.errors import HypothesisUnmet

logger = logging.getLogger(__name__)


def required_vertices(b: int, t: int, depth: int) -> int:
    """(b-1)·d + (t-1)·C((b-1)·d, 2) + 1."""
    x = (b - 1) * depth
    return x + (t - 1) * comb(x, 2) + 1


def _blade(s: Society, hub: int, v: int, component: Set[int]) -> tuple:
    """hub, then a shortest route through the component to v."""
    g = s.graph
    starts = sorted(g.neighbors(hub) & component)
    tail = shortest_path(g, starts, [v], component)
    return (hub,) + tail


def find_fan_or_goose_bump(s: Society, ld: LinearDecomposition, b: int, t: int, budget=None) -> Certificate:
    """
    A fan with t blades or a goose bump of strength b in a 3-connected
    society with enough Ω vertices of degree at least two.

    After a bump hitting set X is found, every Ω vertex v outside X with two
    neighbours lies alone on Ω inside its component H of G - X, and H sees
    at least two vertices of X. Some pair z1, z2 of X is seen by t such
    components; the blades run from z1 and z2 through those components.

    Raises:
        ValueError: b or t is not positive
        HypothesisUnmet: the society is not 3-connected, too few Ω vertices
            have two neighbours, or no pair of hubs serves t components
    """
    if b < 1 or t < 1:
        raise ValueError(f"b and t must be positive, got b={b}, t={t}")
    budget = as_budget(budget, where="find_fan_or_goose_bump")
    if not is_society_k_connected(s, 3):
        raise HypothesisUnmet("the society is not 3-connected")
    g = s.graph
    rich = [v for v in s.omega if len(g.neighbors(v)) >= 2]
    k = required_vertices(b, t, ld.depth)
    if len(rich) < k:
        raise HypothesisUnmet(f"{len(rich)} Ω vertices have two neighbours, need {k}")

    outcome = goose_bumps_or_hitting_set(s, ld, b, budget)
    if outcome.certificate is not None:
        logger.debug(f"find_fan_or_goose_bump: goose bump of strength {b}")
        return outcome.certificate
    hitting = set(outcome.hitting_set)

    components: Dict[int, Set[int]] = {}
    sees: Dict[int, Set[int]] = {}
    for v in rich:
        if v in hitting:
            continue
        budget.tick()
        comp = next(set(c) for c in g.components(g.vertices - hitting) if v in c)
        if comp & s.omega.vertices != {v}:
            raise RuntimeError(f"component of {v} meets Ω again after deleting a bump hitting set")
        components[v] = comp
        sees[v] = {z for u in comp for z in g.neighbors(u)} & hitting

    for z1, z2 in combinations(sorted(hitting), 2):
        served: List[int] = [v for v in s.omega if v in sees and {z1, z2} <= sees[v]]
        if len(served) < t:
            continue
        parts, anchors = {}, {"z1": z1, "z2": z2}
        for i, v in enumerate(served[:t], start=1):
            parts[f"P{i}"] = _blade(s, z1, v, components[v])
            parts[f"Q{i}"] = _blade(s, z2, v, components[v])
            anchors[f"u{i}"] = anchors[f"v{i}"] = v
        cert = Certificate.of(FAN, parts, anchors)
        reason = explain_certificate(s, cert)
        if reason is not None:
            raise RuntimeError(f"assembled fan does not verify: {reason}")
        logger.debug(f"find_fan_or_goose_bump: fan with hubs {z1}, {z2}")
        return cert
    raise HypothesisUnmet(f"no pair of hitting-set vertices sees {t} one-vertex Ω components")
