"""
Goose bumps or hitting sets, and consecutive crosses or hitting sets.

Both follow the interval-stabbing argument over the adhesions of a linear
decomposition: a bump meets a contiguous run of adhesions, so either b
runs are pairwise disjoint or b-1 adhesions meet every run.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Optional, Set, Tuple

from src.configurations.certificate import CONSECUTIVE_CROSSES, GOOSE_BUMP, Certificate
from src.configurations.checkers import verify_certificate
from src.configurations.finders import find_certificate
from src.graph.paths import Path
from src.society.bumps import bump_between, find_cross, has_bump
from src.society.depth import LinearDecomposition, verify_linear_decomposition
from src.society.society import Society
from src.utils.budget import Budget, as_budget
from src.utils.errors import HypothesisUnmet, InvalidWitnessError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Dichotomy:
    """Exactly one of ``certificate`` and ``hitting_set`` is set."""

    certificate: Optional[Certificate] = None
    hitting_set: Optional[FrozenSet[int]] = None

    def to_dict(self) -> Dict[str, object]:
        if self.certificate is not None:
            return {"certificate": self.certificate.to_dict()}
        return {"hitting_set": sorted(self.hitting_set or ())}


def any_bump(s: Society) -> Optional[Path]:
    ring = sorted(s.omega.vertices)
    for i, a in enumerate(ring):
        for b in ring[i + 1 :]:
            p = bump_between(s, a, b)
            if p is not None:
                return p
    return None


def _any_cross(s: Society, budget: Budget) -> Optional[List[Path]]:
    found = find_cross(s, budget)
    return None if found is None else list(found)


def _stab(
    s: Society,
    ld: LinearDecomposition,
    count: int,
    find: Callable[[Society], Optional[List[Path]]],
    budget: Budget,
) -> Tuple[List[List[Path]], FrozenSet[int]]:
    """
    Greedy stabbing: repeatedly take the witness whose adhesion run ends
    earliest among those avoiding the adhesions stabbed so far.

    Returns:
        (witnesses, stabbed vertex set)
    """
    adhesions = ld.adhesions()
    stabbed: Set[int] = set()
    found: List[List[Path]] = []
    while len(found) < count:
        hit = None
        for r in range(len(adhesions)):
            budget.tick()
            later = set().union(*adhesions[r + 1 :]) if r + 1 < len(adhesions) else set()
            hit = find(s.delete(stabbed | later))
            if hit is not None:
                stabbed |= adhesions[r]
                break
        if hit is None:
            return found, frozenset(stabbed)
        found.append(hit)
    return found, frozenset(stabbed)


def _position(ld: LinearDecomposition) -> Dict[int, int]:
    return {t: i for i, t in enumerate(ld.enumeration)}


def _goose_certificate(ld: LinearDecomposition, bumps: List[Path]) -> Certificate:
    pos = _position(ld)
    parts, anchors = {}, {}
    for i, p in enumerate(sorted(bumps, key=lambda p: min(pos[p[0]], pos[p[-1]])), start=1):
        u, v = sorted((p[0], p[-1]), key=lambda x: pos[x])
        parts[f"P{i}"] = p
        anchors[f"u{i}"], anchors[f"v{i}"] = u, v
    return Certificate.of(GOOSE_BUMP, parts, anchors)


def _crosses_certificate(ld: LinearDecomposition, crosses: List[List[Path]]) -> Certificate:
    pos = _position(ld)
    parts, anchors = {}, {}
    ordered = sorted(crosses, key=lambda c: min(pos[v] for p in c for v in (p[0], p[-1])))
    for i, (p, q) in enumerate(ordered, start=1):
        ends = sorted([p[0], p[-1], q[0], q[-1]], key=lambda x: pos[x])
        first, second = (p, q) if ends[0] in (p[0], p[-1]) else (q, p)
        parts[f"P{2 * i - 1}"], parts[f"P{2 * i}"] = first, second
        for j, v in enumerate(ends):
            anchors[f"u{4 * i - 3 + j}"] = v
    return Certificate.of(CONSECUTIVE_CROSSES, parts, anchors)


def _exhaustive_hitting_set(
    s: Society, size: int, ok: Callable[[Society], bool], budget: Budget
) -> Optional[FrozenSet[int]]:
    vertices = s.graph.sorted_vertices()
    for k in range(size + 1):
        for xs in combinations(vertices, k):
            budget.tick()
            if ok(s.delete(xs)):
                return frozenset(xs)
    return None


def _require(s: Society, ld: LinearDecomposition, count: int, name: str) -> None:
    if count < 1:
        raise ValueError(f"{name} must be positive, got {count}")
    if not verify_linear_decomposition(s, ld):
        raise InvalidWitnessError("the linear decomposition does not verify")


def goose_bumps_or_hitting_set(s: Society, ld: LinearDecomposition, b: int, budget=None) -> Dichotomy:
    """
    A goose bump of strength b, or at most (b-1)·depth vertices whose
    deletion leaves no bump.

    Raises:
        InvalidWitnessError: ld is not a linear decomposition of s
        HypothesisUnmet: neither outcome could be produced
        BudgetExceeded: when a fallback search runs out of nodes
    """
    _require(s, ld, b, "strength")
    budget = as_budget(budget, where="goose_bumps_or_hitting_set")
    bound = (b - 1) * ld.depth

    def one(t: Society) -> Optional[List[Path]]:
        p = any_bump(t)
        return None if p is None else [p]

    found, stabbed = _stab(s, ld, b, one, budget)
    if len(found) < b:
        if not has_bump(s.delete(stabbed)):
            logger.debug(f"hitting set of {len(stabbed)} vertices (bound {bound})")
            return Dichotomy(hitting_set=stabbed)
    else:
        cert = _goose_certificate(ld, [w[0] for w in found])
        if verify_certificate(s, cert):
            return Dichotomy(certificate=cert)
        logger.warning("stabbed bumps share bag vertices; falling back to exact search")
    cert = find_certificate(s, GOOSE_BUMP, b, budget)
    if cert is not None:
        return Dichotomy(certificate=cert)
    xs = _exhaustive_hitting_set(s, bound, lambda t: not has_bump(t), budget)
    if xs is not None:
        return Dichotomy(hitting_set=xs)
    raise HypothesisUnmet(f"no goose bump of strength {b} and no hitting set of size {bound}")


def crosses_or_hitting_set(s: Society, ld: LinearDecomposition, t: int, budget=None) -> Dichotomy:
    """
    t disjoint consecutive crosses, or at most (t-1)·depth vertices whose
    deletion leaves a cross-free society.

    Raises:
        InvalidWitnessError: ld is not a linear decomposition of s
        HypothesisUnmet: neither outcome could be produced
        BudgetExceeded: when a search runs out of nodes
    """
    _require(s, ld, t, "cross count")
    budget = as_budget(budget, where="crosses_or_hitting_set")
    bound = (t - 1) * ld.depth
    found, stabbed = _stab(s, ld, t, lambda x: _any_cross(x, budget), budget)
    if len(found) < t:
        if find_cross(s.delete(stabbed), budget) is None:
            logger.debug(f"cross hitting set of {len(stabbed)} vertices (bound {bound})")
            return Dichotomy(hitting_set=stabbed)
    else:
        cert = _crosses_certificate(ld, found)
        if verify_certificate(s, cert):
            return Dichotomy(certificate=cert)
        logger.warning("stabbed crosses are not consecutive and disjoint; falling back to exact search")
    cert = find_certificate(s, CONSECUTIVE_CROSSES, t, budget)
    if cert is not None:
        return Dichotomy(certificate=cert)
    xs = _exhaustive_hitting_set(s, bound, lambda x: find_cross(x, budget) is None, budget)
    if xs is not None:
        return Dichotomy(hitting_set=xs)
    raise HypothesisUnmet(f"no {t} consecutive crosses and no hitting set of size {bound}")
