"""
Declarative shapes for the path-system certificate kinds.

A template names the Ω-anchors and their admissible clockwise layouts, the
hub vertices, the paths (demands) with their end labels, and which pairs of
paths may meet and where. Checking and searching both run off the same
template.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from src.configurations.certificate import (
    CONSECUTIVE_CROSSES,
    FAN,
    FAN_CROSS,
    FAN_JUMP,
    FAN_TWO_JUMPS,
    GOOSE_BUMP,
    GRIDLET,
    LEAP,
    THREE_CROSSED,
    WINDMILL,
    WINDMILL_CROSS,
)
from src.society.society import Society

logger = logging.getLogger(__name__)

ANYWHERE = "*"

# a check item is ("one", labels) - all labels name one vertex - or
# ("any", (u, v)) - the order must hold for either choice
Item = Tuple[str, Tuple[str, ...]]
Share = Union[FrozenSet[str], str]


@dataclass(frozen=True)
class Demand:
    name: str
    ends: Tuple[str, str]
    avoid_omega: bool = True


@dataclass
class Template:
    kind: str
    size: int
    checks: List[List[Item]]
    layouts: List[List[Tuple[str, ...]]]
    demands: List[Demand]
    hubs: Tuple[str, ...] = ()
    shares: Dict[FrozenSet[str], Share] = field(default_factory=dict)

    @property
    def omega_labels(self) -> List[str]:
        seen: List[str] = []
        for item in self.checks[0]:
            for label in item[1]:
                if label not in seen:
                    seen.append(label)
        return seen

    @property
    def labels(self) -> List[str]:
        return self.omega_labels + list(self.hubs)

    def share(self, a: str, b: str) -> Share:
        return self.shares.get(frozenset((a, b)), frozenset())

    def permitted_labels(self, d: Demand) -> FrozenSet[str]:
        out = set(d.ends)
        for other in self.demands:
            if other.name != d.name:
                s = self.share(d.name, other.name)
                if s != ANYWHERE:
                    out |= s
        return frozenset(out)


def safe_clockwise(s: Society, seq: Sequence[int]) -> bool:
    if len(seq) <= 1:
        return True
    if len(set(seq)) != len(seq) or any(v not in s.omega for v in seq):
        return False
    return s.omega.clockwise(seq)


def _check_ok(s: Society, anchors: Dict[str, int], check: List[Item]) -> bool:
    choices: List[List[int]] = []
    for mode, labels in check:
        if mode == "one":
            vs = {anchors[label] for label in labels}
            if len(vs) != 1:
                return False
            choices.append([anchors[labels[0]]])
        else:
            choices.append([anchors[label] for label in labels])
    return all(safe_clockwise(s, list(seq)) for seq in product(*choices))


def explain_anchors(s: Society, t: Template, anchors: Dict[str, int]) -> Optional[str]:
    """First reason the anchors do not fit the template, or None."""
    missing = [label for label in t.labels if label not in anchors]
    if missing:
        return f"missing anchors {missing}"
    for label in t.omega_labels:
        if anchors[label] not in s.omega:
            return f"anchor {label}={anchors[label]} is not in V(Ω)"
    for label in t.hubs:
        if anchors[label] not in s.graph.vertices:
            return f"hub {label}={anchors[label]} is not a vertex"
    hubs = [anchors[label] for label in t.hubs]
    if len(set(hubs)) != len(hubs):
        return "hubs must be distinct"
    omega_vs = {anchors[label] for label in t.omega_labels}
    if omega_vs & set(hubs):
        return "hubs must differ from the Ω-anchors"
    if not any(_check_ok(s, anchors, check) for check in t.checks):
        return "anchors are not in the required clockwise order"
    return None


def forbidden_anchor_vertices(t: Template, anchors: Dict[str, int], d: Demand) -> FrozenSet[int]:
    allowed = {anchors[label] for label in t.permitted_labels(d)}
    return frozenset(anchors[label] for label in t.labels if anchors[label] not in allowed)


def share_vertices(t: Template, anchors: Dict[str, int], a: Demand, b: Demand) -> Optional[FrozenSet[int]]:
    """Vertices two paths may have in common; None when unrestricted."""
    s = t.share(a.name, b.name)
    if s == ANYWHERE:
        return None
    return frozenset(anchors[label] for label in s)


def layouts_for(s: Society, t: Template) -> Iterator[Dict[str, int]]:
    return placements(s, t.layouts)


def placements(s: Society, layouts: Sequence[Sequence[Tuple[str, ...]]]) -> Iterator[Dict[str, int]]:
    """Every anchor assignment obtained by placing a layout clockwise on Ω."""
    ring = s.omega.ring
    n = len(ring)
    seen = set()
    for layout in layouts:
        m = len(layout)
        if m > n:
            continue
        for combo in combinations(range(n), m):
            for r in range(m):
                anchors: Dict[str, int] = {}
                for j, group in enumerate(layout):
                    v = ring[combo[(j + r) % m]]
                    for label in group:
                        anchors[label] = v
                key = tuple(sorted(anchors.items()))
                if key in seen:
                    continue
                seen.add(key)
                yield anchors


# ----------------------------------------------------------------------
# template builders
# ----------------------------------------------------------------------
def _one(*labels: str) -> Item:
    return ("one", tuple(labels))


def _seq(labels: Sequence[str]) -> List[Item]:
    return [_one(label) for label in labels]


def _bumps(pairs: Sequence[Tuple[str, str]], prefix: str = "P", start: int = 1) -> List[Demand]:
    return [Demand(f"{prefix}{i + start}", pair) for i, pair in enumerate(pairs)]


def three_crossed() -> Template:
    order = ["u1", "u2", "u3", "v1", "v2", "v3"]
    return Template(
        THREE_CROSSED, 3, [_seq(order)], [[(x,) for x in order]], _bumps([("u1", "v1"), ("u2", "v2"), ("u3", "v3")])
    )


def gridlet() -> Template:
    a = ["u1", "u2", "u3", "v2", "u4", "v1", "v4", "v3"]
    b = ["u1", "u2", "u3", "u4", "v2", "v1", "v4", "v3"]
    merged = [_one("u1"), _one("u2"), _one("u3"), _one("v2", "u4"), _one("v1"), _one("v4"), _one("v3")]
    layouts = [[(x,) for x in a], [(x,) for x in b], [labels for _, labels in merged]]
    t = Template(
        GRIDLET,
        4,
        [_seq(a), _seq(b), merged],
        layouts,
        _bumps([("u1", "v1"), ("u2", "v2"), ("u3", "v3"), ("u4", "v4")]),
    )
    t.shares[frozenset(("P2", "P4"))] = frozenset({"v2"})
    return t


def leap(k: int) -> Template:
    if k < 1:
        raise ValueError(f"a leap needs length at least 1, got {k}")
    order = [f"u{i}" for i in range(k + 1)] + ["v0"] + [f"v{i}" for i in range(k, 0, -1)]
    pairs = [(f"u{i}", f"v{i}") for i in range(k + 1)]
    return Template(LEAP, k, [_seq(order)], [[(x,) for x in order]], _bumps(pairs, start=0))


def goose_bump(k: int) -> Template:
    if k < 1:
        raise ValueError(f"a goose bump needs strength at least 1, got {k}")
    order = [x for i in range(1, k + 1) for x in (f"u{i}", f"v{i}")]
    pairs = [(f"u{i}", f"v{i}") for i in range(1, k + 1)]
    return Template(GOOSE_BUMP, k, [_seq(order)], [[(x,) for x in order]], _bumps(pairs))


def consecutive_crosses(t: int) -> Template:
    if t < 1:
        raise ValueError(f"need at least one cross, got {t}")
    order = [f"u{i}" for i in range(1, 4 * t + 1)]
    pairs: List[Tuple[str, str]] = []
    for i in range(1, t + 1):
        pairs.append((f"u{4 * i - 3}", f"u{4 * i - 1}"))
        pairs.append((f"u{4 * i - 2}", f"u{4 * i}"))
    return Template(CONSECUTIVE_CROSSES, t, [_seq(order)], [[(x,) for x in order]], _bumps(pairs))


def _cross_demands() -> List[Demand]:
    return [Demand("C1", ("a", "c")), Demand("C2", ("b", "d"))]


def windmill(t: int, cross: bool = False) -> Template:
    if t < 1:
        raise ValueError(f"a windmill needs at least one vane, got {t}")
    order = [x for i in range(1, t + 1) for x in (f"u{i}", f"v{i}", f"w{i}")]
    if cross:
        order += ["a", "b", "c", "d"]
    demands = [Demand(f"P{i}", (f"u{i}", f"w{i}")) for i in range(1, t + 1)]
    demands += [Demand(f"Q{i}", ("x", f"v{i}")) for i in range(1, t + 1)]
    if cross:
        demands += _cross_demands()
    tpl = Template(
        WINDMILL_CROSS if cross else WINDMILL, t, [_seq(order)], [[(x,) for x in order]], demands, hubs=("x",)
    )
    for i in range(1, t + 1):
        for j in range(i + 1, t + 1):
            tpl.shares[frozenset((f"Q{i}", f"Q{j}"))] = frozenset({"x"})
    return tpl


def _fan_blocks(blades: int) -> Tuple[List[Item], List[List[Tuple[str, ...]]]]:
    """Literal check items and block layouts for the blade ends."""
    items = [("any", (f"u{i}", f"v{i}")) for i in range(1, blades + 1)]
    options = []
    for i in range(1, blades + 1):
        u, v = f"u{i}", f"v{i}"
        options.append([[(u,), (v,)], [(v,), (u,)], [(u, v)]])
    layouts = [[g for block in choice for g in block] for choice in product(*options)]
    return items, layouts


def _fan_demands(blades: int) -> List[Demand]:
    demands = [Demand(f"P{i}", ("z1", f"u{i}")) for i in range(1, blades + 1)]
    demands += [Demand(f"Q{i}", ("z2", f"v{i}")) for i in range(1, blades + 1)]
    return demands


def _fan_shares(tpl: Template, blades: int) -> None:
    for i in range(1, blades + 1):
        tpl.shares[frozenset((f"P{i}", f"Q{i}"))] = ANYWHERE
        for j in range(i + 1, blades + 1):
            tpl.shares[frozenset((f"P{i}", f"P{j}"))] = frozenset({"z1"})
            tpl.shares[frozenset((f"Q{i}", f"Q{j}"))] = frozenset({"z2"})


def fan(t: int) -> Template:
    if t < 1:
        raise ValueError(f"a fan needs at least one blade, got {t}")
    items, layouts = _fan_blocks(t)
    tpl = Template(FAN, t, [items], layouts, _fan_demands(t), hubs=("z1", "z2"))
    _fan_shares(tpl, t)
    return tpl


def fan_cross(t: int) -> Template:
    tpl = fan(t)
    tail = ["a", "b", "c", "d"]
    tpl.kind = FAN_CROSS
    tpl.checks = [tpl.checks[0] + _seq(tail)]
    tpl.layouts = [layout + [(x,) for x in tail] for layout in tpl.layouts]
    tpl.demands = tpl.demands + _cross_demands()
    return tpl


def fan_jump(t: int) -> Template:
    """Fan with t+1 blades plus a path J from a to b around blade t+1."""
    if t < 1:
        raise ValueError(f"a fan with a jump needs at least one blade, got {t}")
    tpl = fan(t + 1)
    tpl.kind = FAN_JUMP
    tpl.size = t
    items = tpl.checks[0]
    tpl.checks = [items[:t] + [_one("a"), items[t], _one("b")]]
    layouts = []
    for layout in tpl.layouts:
        # the last block is one or two groups
        last = 1 if len(layout[-1]) == 2 else 2
        head, block = layout[:-last], layout[-last:]
        layouts.append(head + [("a",)] + block + [("b",)])
    tpl.layouts = layouts
    tpl.demands = tpl.demands + [Demand("J", ("a", "b"), avoid_omega=False)]
    return tpl


def fan_two_jumps(t: int) -> Template:
    tpl = fan(t)
    tpl.kind = FAN_TWO_JUMPS
    tail = ["a1", "b1", "c1", "a2", "b2", "c2"]
    merged_tail = [_one("a1"), _one("b1"), _one("c1", "a2"), _one("b2"), _one("c2")]
    items = tpl.checks[0]
    tpl.checks = [items + _seq(tail), items + merged_tail]
    base = tpl.layouts
    tpl.layouts = [layout + [(x,) for x in tail] for layout in base] + [
        layout + [labels for _, labels in merged_tail] for layout in base
    ]
    tpl.demands = tpl.demands + [
        Demand("L1", ("a1", "c1")),
        Demand("L2", ("a2", "c2")),
        Demand("S1", ("z1", "b1")),
        Demand("S2", ("z2", "b2")),
    ]
    tpl.shares[frozenset(("L1", "L2"))] = frozenset({"c1"})
    for i in range(1, t + 1):
        tpl.shares[frozenset(("S1", f"P{i}"))] = frozenset({"z1"})
        tpl.shares[frozenset(("S2", f"Q{i}"))] = frozenset({"z2"})
    return tpl


def template_for(kind: str, size: int = 0) -> Template:
    """
    Raises:
        ValueError: unknown kind for the template engine, or bad size
    """
    if kind == THREE_CROSSED:
        return three_crossed()
    if kind == GRIDLET:
        return gridlet()
    if kind == LEAP:
        return leap(size)
    if kind == GOOSE_BUMP:
        return goose_bump(size)
    if kind == CONSECUTIVE_CROSSES:
        return consecutive_crosses(size)
    if kind == WINDMILL:
        return windmill(size)
    if kind == WINDMILL_CROSS:
        return windmill(size, cross=True)
    if kind == FAN:
        return fan(size)
    if kind == FAN_CROSS:
        return fan_cross(size)
    if kind == FAN_JUMP:
        return fan_jump(size)
    if kind == FAN_TWO_JUMPS:
        return fan_two_jumps(size)
    raise ValueError(f"kind {kind!r} has no path template")
