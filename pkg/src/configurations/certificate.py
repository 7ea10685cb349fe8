"""Certificate objects: named paths plus named anchor vertices."""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence, Set

from src.graph.paths import Path
from src.utils.errors import MalformedInputError

logger = logging.getLogger(__name__)

TURTLE = "turtle"
THREE_CROSSED = "three_crossed"
GRIDLET = "gridlet"
SEPARATED_DOUBLECROSS = "separated_doublecross"
LEAP = "leap"
GOOSE_BUMP = "goose_bump"
CONSECUTIVE_CROSSES = "consecutive_crosses"
WINDMILL = "windmill"
FAN = "fan"
WINDMILL_CROSS = "windmill_cross"
FAN_CROSS = "fan_cross"
FAN_JUMP = "fan_jump"
FAN_TWO_JUMPS = "fan_two_jumps"

KINDS = (
    TURTLE,
    THREE_CROSSED,
    GRIDLET,
    SEPARATED_DOUBLECROSS,
    LEAP,
    GOOSE_BUMP,
    CONSECUTIVE_CROSSES,
    WINDMILL,
    FAN,
    WINDMILL_CROSS,
    FAN_CROSS,
    FAN_JUMP,
    FAN_TWO_JUMPS,
)

# kinds whose size parameter is free
SIZED_KINDS = frozenset(
    {LEAP, GOOSE_BUMP, CONSECUTIVE_CROSSES, WINDMILL, FAN, WINDMILL_CROSS, FAN_CROSS, FAN_JUMP, FAN_TWO_JUMPS}
)


def _count(parts: Iterable[str], prefix: str) -> int:
    return sum(1 for name in parts if name.startswith(prefix) and name[len(prefix) :].isdigit())


@dataclass(frozen=True)
class Certificate:
    """
    A configuration in a society.

    ``parts`` maps part names (``P1``, ``Q2``, ``L``, ...) to paths and
    ``anchors`` maps anchor names (``u1``, ``v1``, ``x``, ``z1``, ...) to
    vertices, following the names used in each kind's definition.
    """

    kind: str
    parts: Dict[str, Path] = field(default_factory=dict)
    anchors: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise MalformedInputError(f"unknown certificate kind {self.kind!r}")

    @classmethod
    def of(cls, kind: str, parts: Dict[str, Sequence[int]], anchors: Dict[str, int]) -> "Certificate":
        return cls(kind, {k: tuple(int(v) for v in p) for k, p in parts.items()}, {k: int(v) for k, v in anchors.items()})

    @property
    def size(self) -> int:
        """k for leaps and goose bumps, t for the crosses, windmill and fan families."""
        if self.kind == LEAP:
            return _count(self.parts, "P") - 1
        if self.kind == GOOSE_BUMP:
            return _count(self.parts, "P")
        if self.kind == CONSECUTIVE_CROSSES:
            return _count(self.parts, "P") // 2
        if self.kind == FAN_JUMP:
            return _count(self.parts, "Q") - 1
        if self.kind in SIZED_KINDS:
            return _count(self.parts, "Q")
        return 0

    def vertices(self) -> Set[int]:
        out = {v for p in self.parts.values() for v in p}
        out.update(self.anchors.values())
        return out

    def base(self) -> Optional["Certificate"]:
        """The windmill or fan underneath a composite certificate."""
        if self.kind == WINDMILL_CROSS:
            base_kind, keep = WINDMILL, ("x", "u", "v", "w")
        elif self.kind in (FAN_CROSS, FAN_JUMP, FAN_TWO_JUMPS):
            base_kind, keep = FAN, ("z1", "z2", "u", "v")
        else:
            return None
        parts = {k: p for k, p in self.parts.items() if k[0] in "PQ" and k[1:].isdigit()}
        anchors = {
            k: v
            for k, v in self.anchors.items()
            if k in keep or (k[0] in keep and k[1:].isdigit())
        }
        return Certificate(base_kind, parts, anchors)

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "parts": {k: list(p) for k, p in sorted(self.parts.items())},
            "anchors": dict(sorted(self.anchors.items())),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "Certificate":
        try:
            return cls.of(str(data["kind"]), dict(data.get("parts", {})), dict(data.get("anchors", {})))
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInputError(f"invalid certificate JSON: {e}") from e
