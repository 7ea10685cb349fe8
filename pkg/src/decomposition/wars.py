"""
Wars, induced societies, perimeter paths and the disjoint-intrusions pipeline.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.configurations.certificate import GOOSE_BUMP
from src.configurations.finders import find_certificate
from src.decomposition.hitting import goose_bumps_or_hitting_set
from src.decomposition.intrusions import (
    Base,
    Intrusion,
    explain_intrusion,
    find_intrusion,
    is_minimal_intrusion,
    uncross_intrusions,
)
from src.decomposition.sunflower import sunflower_subsets
from src.graph.graph import Separation
from src.graph.paths import Path, is_path
from src.planarity.embedding import planar_embedding_of
from src.society.depth import LinearDecomposition
from src.society.society import Society
from src.utils.budget import as_budget
from src.utils.errors import HypothesisUnmet, InvalidWitnessError, MalformedInputError

logger = logging.getLogger(__name__)

_HUB = -1


@dataclass(frozen=True)
class War:
    """Minimal invasions with pairwise disjoint A sides, each with a meridian."""

    invasions: Tuple[Intrusion, ...]
    meridians: Tuple[Path, ...]

    @classmethod
    def of(cls, invasions: Iterable[Intrusion], meridians: Iterable[Sequence[int]]) -> "War":
        return cls(tuple(invasions), tuple(tuple(p) for p in meridians))

    @property
    def intensity(self) -> int:
        return len(self.invasions)

    def to_dict(self) -> Dict[str, object]:
        out = []
        for inv, p in zip(self.invasions, self.meridians):
            data = inv.to_dict()
            data["meridian"] = list(p)
            out.append(data)
        return {"invasions": out}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "War":
        try:
            items = list(data["invasions"])
            return cls.of([Intrusion.from_dict(d) for d in items], [d["meridian"] for d in items])
        except (KeyError, TypeError) as e:
            raise MalformedInputError(f"war JSON needs invasions with meridians: {e}") from e


def side_society(s: Society, side: Iterable[int]) -> Society:
    """(G[side], Ω restricted to side)."""
    return s.with_graph(s.graph.induced(side))


def is_separating(s: Society, inv: Intrusion, strength: int, budget=None) -> bool:
    """Goose bumps of the given strength inside A - B and inside B - A."""
    budget = as_budget(budget, where="is_separating")
    for side in (inv.A - inv.B, inv.B - inv.A):
        sub = side_society(s, side)
        if len(sub.omega) < 2 * strength:
            return False
        if find_certificate(sub, GOOSE_BUMP, strength, budget) is None:
            return False
    return True


def explain_war(s: Society, w: War, sep_strength: int = 0, budget=None) -> Optional[str]:
    """First violated clause of the war definition, or None."""
    if len(w.meridians) != len(w.invasions):
        return f"{len(w.invasions)} invasions but {len(w.meridians)} meridians"
    g = s.graph
    for i, (inv, p) in enumerate(zip(w.invasions, w.meridians)):
        reason = explain_intrusion(s, inv)
        if reason is not None:
            return f"invasion {i}: {reason}"
        on_omega = inv.cut & s.omega.vertices
        if len(on_omega) != 2:
            return f"invasion {i}: A∩B meets Ω in {len(on_omega)} vertices, not 2"
        if not is_minimal_intrusion(s, inv):
            return f"invasion {i} is not minimal"
        if not is_path(g, p) or not set(p) <= inv.A:
            return f"meridian {i} is not a path of G[A]"
        if {p[0], p[-1]} != set(inv.base.ends) or len(p) < 2:
            return f"meridian {i} does not join the two vertices of X∩Y"
    for i, a in enumerate(w.invasions):
        for j in range(i + 1, len(w.invasions)):
            if a.A & w.invasions[j].A:
                return f"A sides of invasions {i} and {j} meet"
    if sep_strength > 0:
        for i, inv in enumerate(w.invasions):
            if not is_separating(s, inv, sep_strength, budget):
                return f"invasion {i} is not {sep_strength}-separating"
    return None


def verify_war(s: Society, w: War, sep_strength: int = 0, budget=None) -> bool:
    reason = explain_war(s, w, sep_strength, budget)
    if reason is not None:
        logger.debug(f"war rejected: {reason}")
    return reason is None


def _require_invasion(s: Society, inv: Intrusion) -> None:
    reason = explain_intrusion(s, inv)
    if reason is not None:
        raise InvalidWitnessError(f"invalid invasion: {reason}")
    if len(inv.cut & s.omega.vertices) != 2:
        raise InvalidWitnessError("an invasion meets Ω in exactly two cut vertices")


def induced_society(s: Society, inv: Intrusion) -> Society:
    """
    (G[A], Ω'): walk Ω keeping X - Y, replacing a Y vertex by v when it is
    the Y end of the longitude through v, and dropping the other Y vertices.

    A vertex reached twice keeps the place where it sits on Ω itself.

    Raises:
        InvalidWitnessError: inv is not an invasion
    """
    _require_invasion(s, inv)
    y_end = {}
    for p in inv.longitudes:
        v = next(u for u in sorted(inv.cut) if u in p)
        y_end[p[-1]] = v
    entries: List[Tuple[int, int]] = []
    for u in s.omega:
        if u in inv.base.X - inv.base.Y:
            entries.append((u, u))
        elif u in y_end:
            entries.append((u, y_end[u]))
    ring: List[int] = []
    for i, (u, v) in enumerate(entries):
        rivals = [k for k, (_, w) in enumerate(entries) if w == v]
        home = next((k for k in rivals if entries[k][0] == v), rivals[0])
        if home == i:
            ring.append(v)
    return Society.of(s.graph.induced(inv.A), ring)


def _outer_walk(g, ring: Sequence[int]) -> Optional[List[int]]:
    """
    Closed boundary walk of a disc drawing of g with ``ring`` on the
    boundary, read off the faces beside a subdivided wheel rim.
    """
    h = g.to_networkx()
    h.add_node(_HUB)
    rim = {}
    for i, a in enumerate(ring):
        b = ring[(i + 1) % len(ring)]
        m = -2 - i
        rim[m] = (a, b)
        h.add_edges_from([(a, m), (m, b), (_HUB, m), (_HUB, a)])
    emb = planar_embedding_of(h)
    if emb is None:
        return None
    walk: List[int] = []
    for m, (a, b) in rim.items():
        face = next(
            f for f in emb.faces() if any(x == m for x, _ in f) and all(x != _HUB for x, _ in f)
        )
        k = next(i for i, (x, _) in enumerate(face) if x == m)
        seq = [x for x, _ in face[k + 1 :] + face[:k]]
        if seq[0] != a:
            seq.reverse()
        walk.extend(seq if not walk else seq[1:])
    return walk[:-1] if len(walk) > 1 and walk[-1] == walk[0] else walk


def perimeter_path(s: Society, inv: Intrusion, Z: Iterable[int] = ()) -> Optional[Path]:
    """
    A path of G[A] through every vertex of A∩B lying on the boundary of a
    disc drawing of the induced society, or None when that society is not
    rural or no boundary window is a path.

    ``inv`` is an invasion of (G - Z, Ω - Z).

    Raises:
        InvalidWitnessError: inv is not an invasion of the reduced society
    """
    t = s.delete(Z)
    sub = induced_society(t, inv)
    ring = list(sub.omega.ring)
    walk = _outer_walk(sub.graph, ring)
    if walk is None:
        logger.debug("perimeter_path: induced society is not rural")
        return None
    need = set(inv.cut)
    best: Optional[Path] = None
    size = len(walk)
    for start in range(size):
        seen: List[int] = []
        for step in range(size):
            v = walk[(start + step) % size]
            if v in seen:
                break
            seen.append(v)
            if need <= set(seen):
                if best is None or len(seen) < len(best):
                    best = tuple(seen)
                break
    if best is not None and not is_path(sub.graph, best):
        best = None
    logger.debug(f"perimeter_path: {list(best) if best else None}")
    return best


@dataclass(frozen=True)
class DisjointIntrusions:
    """Separations (A_i - X, B_i - X) with pairwise disjoint A sides after deleting X."""

    hitting_set: FrozenSet[int]
    separations: Tuple[Separation, ...]
    bases: Tuple[Base, ...]

    def to_dict(self) -> Dict[str, object]:
        return {
            "X": sorted(self.hitting_set),
            "intrusions": [dict(sep.to_dict(), **base.to_dict()) for sep, base in zip(self.separations, self.bases)],
        }


def _group_bases(s: Society, cert, per_base: int) -> List[Base]:
    bases = []
    for first in range(1, cert.size - per_base + 2, per_base):
        last = first + per_base - 1
        u, v = cert.anchors[f"u{first}"], cert.anchors[f"v{last}"]
        bases.append(Base(s.omega.interval(u, v), s.omega.interval(v, u)))
    return bases


def disjoint_intrusions(
    s: Society, ld: LinearDecomposition, b: int, t: int, per_base: int = 1, budget=None
) -> DisjointIntrusions:
    """
    Goose bump of strength b, one base per ``per_base`` consecutive bumps,
    a minimal intrusion at each base, uncrossing, and a core X over the cut
    sets so that t of the A sides are disjoint outside X.

    Raises:
        ValueError: nonpositive parameters
        HypothesisUnmet: no goose bump of strength b, or fewer than t
            intrusions survive the core extraction
    """
    if per_base < 1 or t < 1:
        raise ValueError(f"per_base and t must be positive, got {per_base}, {t}")
    budget = as_budget(budget, where="disjoint_intrusions")
    outcome = goose_bumps_or_hitting_set(s, ld, b, budget)
    if outcome.certificate is None:
        raise HypothesisUnmet(f"no goose bump of strength {b}; {len(outcome.hitting_set)} vertices hit every bump")
    bases = _group_bases(s, outcome.certificate, per_base)
    intrusions = uncross_intrusions(s, [find_intrusion(s, base) for base in bases])
    d = max(inv.order for inv in intrusions)
    by_cut: Dict[FrozenSet[int], Intrusion] = {}
    for inv in intrusions:
        by_cut.setdefault(inv.cut, inv)
    found = sunflower_subsets(list(by_cut), d, t)
    if found is None:
        raise HypothesisUnmet(f"{len(by_cut)} distinct cut sets hold no core with {t} members")
    core, members = found
    chosen = [by_cut[c] for c in members]
    seps = tuple(Separation(inv.A - core, inv.B - core) for inv in chosen)
    for i, a in enumerate(seps):
        for other in seps[i + 1 :]:
            if a.A & other.A:
                raise RuntimeError("A sides meet outside the core")
    logger.info(f"disjoint_intrusions: {len(seps)} intrusions after deleting {len(core)} vertices")
    return DisjointIntrusions(frozenset(core), seps, tuple(inv.base for inv in chosen))
