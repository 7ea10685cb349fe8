"""
K6 minor models from two crossed walls and from configuration-plus-nest
certificates.

Certificate synthesis first tries a guided assembly: the branch sets are
arcs of the three innermost nest cycles between consecutive legs of the
certificate, merged with the parts of the certificate that lie inside the
nest. Each kind has one frozen layout. Whatever comes out is checked with
verify_minor_model; when the layout does not apply or the model does not
verify, a budgeted exact search restricted to the certificate and the nest
takes over.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.configurations.certificate import GRIDLET, SEPARATED_DOUBLECROSS, THREE_CROSSED, TURTLE, Certificate
from src.configurations.checkers import doublecross_end_sets, doublecross_order, explain_certificate
from src.graph.graph import Edge, Graph
from src.graph.minors import MinorModel, explain_minor_model, find_k6_minor, verify_minor_model
from src.graph.paths import Path, PathSystem, path_edges
from src.society.nest import Nest, explain_nest
from src.society.society import Neighborhood, Society
from src.targets.perpendicular import perpendicularity
from src.targets.target import TARGET_KINDS, Target, explain_target
from src.utils.budget import as_budget
from src.utils.errors import BudgetExceeded, InvalidWitnessError, NoModel, PerpendicularityRequired
from src.walls.compass import find_cross_over_wall
from src.walls.detect import WallEmbedding, explain_wall_embedding

logger = logging.getLogger(__name__)

GUIDED = "guided"
RESTRICTED_SEARCH = "restricted_search"

# innermost cycles used by every guided layout
MIN_NEST: Dict[str, int] = {TURTLE: 3, THREE_CROSSED: 3, GRIDLET: 3, SEPARATED_DOUBLECROSS: 3}

INNER, MIDDLE, OUTER = 0, 1, 2

# Leg labels in the cyclic order they meet the nest cycles.
LEG_ORDERS: Dict[str, Tuple[Tuple[str, ...], ...]] = {
    THREE_CROSSED: (("u1", "u2", "u3", "v1", "v2", "v3"),),
    GRIDLET: (
        ("u1", "u2", "u3", "v2", "u4", "v1", "v4", "v3"),
        ("u1", "u2", "u3", "u4", "v2", "v1", "v4", "v3"),
    ),
    TURTLE: (("u1", "u2", "v1", "v2", "u3", "t1", "t2", "v3"),),
    SEPARATED_DOUBLECROSS: (("u1", "u2", "v1", "v2", "w2", "u3", "u4", "v3", "v4", "w1"),),
}

# A token is ("ring", level, leg), ("core", part) or ("span", part, leg, anchor).
Token = Tuple
Layout = Tuple[Tuple[Token, ...], ...]


def _ring(level: int, *legs: str) -> Tuple[Token, ...]:
    return tuple(("ring", level, leg) for leg in legs)


LAYOUTS: Dict[str, Layout] = {
    THREE_CROSSED: (
        _ring(OUTER, "u1", "u2") + _ring(MIDDLE, "u1"),
        _ring(OUTER, "u3", "v1") + _ring(MIDDLE, "u3"),
        _ring(OUTER, "v2", "v3") + _ring(MIDDLE, "v2"),
        _ring(INNER, "u1", "v1") + _ring(MIDDLE, "v1") + (("core", "P1"),),
        _ring(INNER, "u2", "v2") + _ring(MIDDLE, "u2") + (("core", "P2"),),
        _ring(INNER, "u3", "v3") + _ring(MIDDLE, "v3") + (("core", "P3"),),
    ),
    GRIDLET: (
        _ring(INNER, "u1", "v1") + _ring(MIDDLE, "u1", "v1") + (("core", "P1"),),
        _ring(INNER, "u3", "v3") + _ring(MIDDLE, "u3", "v3") + (("core", "P3"),),
        _ring(INNER, "u2", "v2", "u4", "v4") + (("core", "P2"), ("core", "P4")),
        _ring(OUTER, "u1", "u2", "u3") + _ring(MIDDLE, "u2"),
        _ring(OUTER, "v2", "u4") + _ring(MIDDLE, "v2", "u4"),
        _ring(OUTER, "v1", "v4", "v3") + _ring(MIDDLE, "v4"),
    ),
    TURTLE: (
        _ring(OUTER, "v1", "v2") + _ring(MIDDLE, "v1"),
        _ring(OUTER, "u3", "t1") + _ring(MIDDLE, "u3"),
        _ring(OUTER, "t2", "v3", "u1", "u2") + _ring(MIDDLE, "t2"),
        _ring(INNER, "v1", "t1") + _ring(MIDDLE, "t1") + (("span", "P1", "v1", "q1"), ("core", "Q1")),
        _ring(INNER, "v2", "t2") + _ring(MIDDLE, "v2") + (("span", "P2", "v2", "q2"), ("core", "Q2")),
        _ring(INNER, "u3", "v3", "u1", "u2") + _ring(MIDDLE, "v3", "u1", "u2") + (("core", "L"),),
    ),
    SEPARATED_DOUBLECROSS: (
        _ring(INNER, "u1") + _ring(MIDDLE, "u1", "w1", "v4") + (("core", "P1"),),
        _ring(INNER, "u2") + _ring(MIDDLE, "u2") + _ring(OUTER, "u2", "v1", "v2", "w2", "u3", "u4") + (("core", "P2"),),
        _ring(INNER, "v1") + _ring(MIDDLE, "v1", "v2", "w2", "u3"),
        _ring(INNER, "v2", "w2", "w1") + (("core", "P5"),),
        _ring(INNER, "u3", "v3") + _ring(MIDDLE, "v3") + _ring(OUTER, "v3") + (("core", "P3"),),
        _ring(INNER, "u4", "v4") + _ring(MIDDLE, "u4") + (("core", "P4"),),
    ),
}


@dataclass
class Synthesis:
    """A verified K6 model and how it was obtained."""

    model: MinorModel
    method: str
    provenance: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:
        data = self.model.to_dict()
        data["provenance"] = dict(self.provenance, method=self.method)
        return data


class LayoutMismatch(Exception):
    """The guided layout does not apply to this certificate and nest."""


# ----------------------------------------------------------------------
# certificate plus nest
# ----------------------------------------------------------------------
def wirings(c: Certificate) -> List[Tuple[str, Tuple[str, ...]]]:
    """Part subsets tried as targets, the full certificate first."""
    parts = tuple(sorted(c.parts))
    out = [("full", parts)]
    if c.kind == TURTLE:
        for q in ("Q2", "Q1"):
            out.append((f"without-{q}", tuple(p for p in parts if p != q)))
    return out


def _wiring_target(s: Society, c: Certificate, parts: Sequence[str]) -> Target:
    edges: Set[Edge] = set()
    vertices: Set[int] = set()
    for name in parts:
        edges.update(path_edges(c.parts[name]))
        vertices.update(c.parts[name])
    return Target.of(s, sorted(edges), vertices)


def _leg_labels(s: Society, c: Certificate) -> Dict[str, int]:
    """Ω vertex of every leg label of the kind's layout."""
    a = c.anchors
    labels = {k: v for k, v in a.items() if k[0] in "uv" and k[1:].isdigit()}
    if c.kind == TURTLE:
        if "L" not in c.parts:
            raise LayoutMismatch("two-bump necks have no frozen layout")
        for i in (1, 2):
            q = c.parts[f"Q{i}"]
            ends = [v for v in (q[0], q[-1]) if v != a[f"q{i}"]]
            labels[f"t{i}"] = ends[0]
    elif c.kind == SEPARATED_DOUBLECROSS:
        omega = doublecross_order(s, a)
        p5 = c.parts["P5"]
        first, second = doublecross_end_sets(omega, a, c.parts["P1"], c.parts["P3"])
        e, f = p5[0], p5[-1]
        labels["w1"], labels["w2"] = (e, f) if e in first else (f, e)
    if any(v not in s.omega for v in labels.values()):
        raise LayoutMismatch("every leg label must sit on Ω")
    if len(set(labels.values())) != len(labels):
        raise LayoutMismatch("two legs share an Ω vertex")
    return labels


def _run(p: Path, cycle: Set[int]) -> Optional[Tuple[int, int]]:
    hits = [i for i, v in enumerate(p) if v in cycle]
    if not hits:
        return None
    if hits[-1] - hits[0] + 1 != len(hits):
        raise LayoutMismatch(f"leg {p[0]} meets a cycle in several pieces")
    return hits[0], hits[-1]


class _Frame:
    """Legs, ring nodes and the core of a perpendicular target over three cycles."""

    def __init__(self, s: Society, c: Certificate, forest: Graph, nb: Neighborhood, inner: Nest):
        self.c = c
        self.cycles = list(inner.cycles)
        self.labels = _leg_labels(s, c)
        report = perpendicularity(forest, nb, inner)
        if not report.perpendicular:
            raise LayoutMismatch(f"not perpendicular to the inner cycles: {report.reason}")
        by_end: Dict[int, Path] = {}
        for p in report.paths:
            p = p if p[0] in nb.omega else tuple(reversed(p))
            by_end[p[0]] = p
        if set(by_end) != set(self.labels.values()):
            raise LayoutMismatch("the legs do not match the certificate's Ω ends")
        self.legs = {label: by_end[v] for label, v in self.labels.items()}
        self.runs: Dict[Tuple[int, str], Tuple[int, int]] = {}
        for label, p in self.legs.items():
            previous = -1
            for level in (OUTER, MIDDLE, INNER):
                run = _run(p, set(self.cycles[level]))
                if run is None or run[0] <= previous:
                    raise LayoutMismatch(f"leg {label} does not cross the cycles outside in")
                self.runs[(level, label)] = run
                previous = run[1]
        self.order = self._leg_order()
        dropped: Set[int] = set()
        for label, p in self.legs.items():
            dropped.update(p[: self.runs[(INNER, label)][1] + 1])
        self.core = set(forest.vertices) - dropped

    def _leg_order(self) -> Tuple[str, ...]:
        """The kind's leg order, checked against every cycle."""
        self.direction: Dict[int, int] = {}
        for order in LEG_ORDERS[self.c.kind]:
            directions = {}
            for level, cycle in enumerate(self.cycles):
                seen = self._legs_along(cycle, level)
                directions[level] = _match_cyclic(seen, order)
                if directions[level] == 0:
                    break
            else:
                self.direction = directions
                return order
        raise LayoutMismatch("the legs meet the cycles in an order the layout does not cover")

    def _legs_along(self, cycle: Sequence[int], level: int) -> List[str]:
        owner = {}
        for label, p in self.legs.items():
            i, j = self.runs[(level, label)]
            for v in p[i : j + 1]:
                owner[v] = label
        seen: List[str] = []
        for v in cycle:
            label = owner.get(v)
            if label is not None and (not seen or seen[-1] != label):
                seen.append(label)
        if len(seen) > 1 and seen[0] == seen[-1]:
            seen.pop()
        return seen

    def ring_node(self, level: int, label: str) -> Set[int]:
        """The leg's run on the cycle, the arc up to the next leg's run and, off the inner cycle, the leg inwards."""
        cycle = self.cycles[level]
        k = len(cycle)
        p = self.legs[label]
        i, j = self.runs[(level, label)]
        mine = set(p[i : j + 1])
        others: Set[int] = set()
        for other, q in self.legs.items():
            if other != label:
                a, b = self.runs[(level, other)]
                others.update(q[a : b + 1])
        step = self.direction[level]
        pos = cycle.index(p[i])
        while cycle[(pos + step) % k] in mine:
            pos += step
        node = set(mine)
        pos += step
        while cycle[pos % k] not in others and cycle[pos % k] not in mine:
            node.add(cycle[pos % k])
            pos += step
        if level > INNER:
            inner_start = self.runs[(level - 1, label)][0]
            node.update(p[j + 1 : inner_start])
        return node

    def core_of(self, part: str) -> Set[int]:
        return self.core & set(self.c.parts[part])

    def span(self, part: str, label: str, anchor: str) -> Set[int]:
        p = self.c.parts[part]
        if p[-1] == self.labels[label]:
            p = tuple(reversed(p))
        q = self.c.anchors[anchor]
        if q not in self.core or q not in p:
            raise LayoutMismatch(f"{anchor} is not inside the nest on {part}")
        return {v for v in p[: p.index(q) + 1] if v in self.core}

    def assemble(self, layout: Layout) -> MinorModel:
        sets = []
        for tokens in layout:
            branch: Set[int] = set()
            for token in tokens:
                if token[0] == "ring":
                    branch |= self.ring_node(token[1], token[2])
                elif token[0] == "core":
                    branch |= self.core_of(token[1])
                else:
                    branch |= self.span(token[1], token[2], token[3])
            sets.append(branch)
        return MinorModel.of(sets)


def _match_cyclic(seen: Sequence[str], order: Sequence[str]) -> int:
    """1 when seen is a rotation of order, -1 for a rotation of its reverse, else 0."""
    if len(seen) != len(order):
        return 0
    doubled = list(order) * 2
    n = len(order)
    for sign, seq in ((1, list(seen)), (-1, list(reversed(seen)))):
        if any(doubled[i : i + n] == seq for i in range(n)):
            return sign
    return 0


def guided_model(s: Society, c: Certificate, forest: Graph, nb: Neighborhood, nest: Nest) -> MinorModel:
    """
    Assemble the kind's frozen layout over the innermost three cycles.

    Raises:
        LayoutMismatch: the layout does not apply or its model does not verify
    """
    level_count = MIN_NEST[c.kind]
    if len(nest) < level_count:
        raise LayoutMismatch(f"the layout needs {level_count} cycles, the nest has {len(nest)}")
    frame = _Frame(s, c, forest, nb, nest.sub_nest(range(level_count)))
    model = frame.assemble(LAYOUTS[c.kind])
    reason = explain_minor_model(s.graph, model)
    if reason is not None:
        raise LayoutMismatch(f"assembled sets are not a K6 model: {reason}")
    return model


def _parts_touched(c: Certificate, model: MinorModel) -> List[str]:
    used = model.vertices()
    return sorted(name for name, p in c.parts.items() if used & set(p))


def synthesize_certificate_nest(
    s: Society, c: Certificate, nb: Neighborhood, nest: Nest, budget=None
) -> Synthesis:
    """
    A verified K6 model from a turtle, three crossed paths, gridlet or
    separated doublecross together with a nest its paths cross cleanly.

    Raises:
        ValueError: c is of another kind
        InvalidWitnessError: the certificate or the nest does not verify
        PerpendicularityRequired: no wiring of the certificate is
            perpendicular to the nest
        NoModel: guided assembly and the restricted search both failed
    """
    if c.kind not in TARGET_KINDS:
        raise ValueError(f"{c.kind} certificates do not lead to K6 through a nest")
    reason = explain_certificate(s, c)
    if reason is not None:
        raise InvalidWitnessError(f"{c.kind} certificate does not verify: {reason}")
    reason = explain_nest(nb, nest)
    if reason is not None:
        raise InvalidWitnessError(f"nest does not verify: {reason}")
    budget = as_budget(budget, where="k6_from_certificate_nest")

    diagnostics: Dict[str, object] = {"kind": c.kind, "nest_length": len(nest), "wirings": {}}
    perpendicular: List[Tuple[str, Target]] = []
    for name, parts in wirings(c):
        t = _wiring_target(s, c, parts)
        target_reason = explain_target(t)
        if target_reason is not None:
            diagnostics["wirings"][name] = f"not a target: {target_reason}"
            continue
        report = perpendicularity(t.forest, nb, nest)
        diagnostics["wirings"][name] = report.to_dict()
        if report.perpendicular:
            perpendicular.append((name, t))
    if not perpendicular:
        raise PerpendicularityRequired(f"no wiring of the {c.kind} is perpendicular to the nest: {diagnostics['wirings']}")

    name, t = perpendicular[0]
    provenance = {"kind": c.kind, "wiring": name}
    if name == "full":
        try:
            model = guided_model(s, c, t.forest, nb, nest)
            logger.info(f"k6_from_certificate_nest: guided {c.kind} layout verified")
            provenance.update(cycles=list(range(MIN_NEST[c.kind])), parts=_parts_touched(c, model))
            return Synthesis(model, GUIDED, provenance)
        except LayoutMismatch as e:
            diagnostics["guided"] = str(e)
            logger.warning(f"k6_from_certificate_nest: guided {c.kind} layout failed ({e}); searching instead")
    else:
        diagnostics["guided"] = f"skipped, only the {name} wiring is perpendicular"
        logger.warning(f"k6_from_certificate_nest: {diagnostics['guided']}; searching instead")

    within = c.vertices() | nest.vertices()
    try:
        model = find_k6_minor(s.graph, budget, within=within)
    except BudgetExceeded as e:
        diagnostics["search"] = f"budget exceeded after {e.spent} nodes"
        raise NoModel(f"no K6 model for the {c.kind} within budget", diagnostics) from e
    diagnostics["search"] = "exhausted" if model is None else "found"
    diagnostics["spent"] = budget.spent
    if model is None or not verify_minor_model(s.graph, model):
        raise NoModel(f"no K6 model inside the {c.kind} and its nest", diagnostics)
    provenance.update(cycles=list(range(len(nest))), parts=_parts_touched(c, model), spent=budget.spent)
    return Synthesis(model, RESTRICTED_SEARCH, provenance)


def k6_from_certificate_nest(s: Society, c: Certificate, nb: Neighborhood, nest: Nest, budget=None) -> MinorModel:
    return synthesize_certificate_nest(s, c, nb, nest, budget).model


# ----------------------------------------------------------------------
# two crossed walls
# ----------------------------------------------------------------------
def _check_cross(g: Graph, w: WallEmbedding, cross: PathSystem, label: str) -> None:
    if not cross.verify(g):
        raise InvalidWitnessError(f"cross over {label} is not a pair of disjoint paths of the host")
    c1, c2, c3, c4 = w.corners
    ends = {frozenset((p[0], p[-1])) for p in cross.paths}
    if len(cross.paths) != 2 or ends != {frozenset((c1, c3)), frozenset((c2, c4))}:
        raise InvalidWitnessError(f"cross over {label} must join opposite corners")


def synthesize_wall_two_crosses(
    g: Graph,
    w1: WallEmbedding,
    w2: WallEmbedding,
    cross1: Optional[PathSystem] = None,
    cross2: Optional[PathSystem] = None,
    frame: Optional[Iterable[int]] = None,
    budget=None,
) -> Synthesis:
    """
    K6 from two disjoint walls that each carry a cross.

    The model is searched for inside the walls, the crosses and ``frame``
    (the whole host when omitted, which is where the walls are joined up).
    A missing cross is looked for in the wall's compass first.

    Raises:
        InvalidWitnessError: a wall or a supplied cross does not verify, or
            the walls meet
        NoModel: no cross was found, or no K6 model lives in the union
    """
    budget = as_budget(budget, where="k6_from_wall_two_crosses")
    for label, w in (("w1", w1), ("w2", w2)):
        reason = explain_wall_embedding(g, w)
        if reason is not None:
            raise InvalidWitnessError(f"{label} is not a wall: {reason}")
    if w1.vertices() & w2.vertices():
        raise InvalidWitnessError("the two walls share vertices")

    diagnostics: Dict[str, object] = {"crosses": {}}
    crosses = []
    for label, w, cross in (("w1", w1, cross1), ("w2", w2, cross2)):
        if cross is None:
            try:
                cross = find_cross_over_wall(g, w, budget)
            except BudgetExceeded as e:
                diagnostics["crosses"][label] = "budget exceeded"
                raise NoModel(f"cross search over {label} ran out of budget", diagnostics) from e
            diagnostics["crosses"][label] = "found" if cross is not None else "none"
        else:
            _check_cross(g, w, cross, label)
            diagnostics["crosses"][label] = "given"
        if cross is not None:
            crosses.append(cross)

    within: Set[int] = set(g.vertices if frame is None else frame)
    within |= w1.vertices() | w2.vertices()
    for cross in crosses:
        within |= cross.vertices()
    try:
        model = find_k6_minor(g, budget, within=within)
    except BudgetExceeded as e:
        diagnostics["search"] = f"budget exceeded after {e.spent} nodes"
        raise NoModel("no K6 model from the two walls within budget", diagnostics) from e
    diagnostics["spent"] = budget.spent
    if model is None or not verify_minor_model(g, model):
        diagnostics["search"] = "exhausted"
        raise NoModel("no K6 model in the walls, crosses and frame", diagnostics)
    if len(crosses) < 2:
        logger.warning("k6_from_wall_two_crosses: a wall has no cross, yet the frame holds a K6 model")
    provenance = {"crosses": diagnostics["crosses"], "frame": len(within), "spent": budget.spent}
    logger.info(f"k6_from_wall_two_crosses: model found after {budget.spent} nodes")
    return Synthesis(model, RESTRICTED_SEARCH, provenance)


def k6_from_wall_two_crosses(
    g: Graph,
    w1: WallEmbedding,
    w2: WallEmbedding,
    cross1: Optional[PathSystem] = None,
    cross2: Optional[PathSystem] = None,
    frame: Optional[Iterable[int]] = None,
    budget=None,
) -> MinorModel:
    return synthesize_wall_two_crosses(g, w1, w2, cross1, cross2, frame, budget).model
