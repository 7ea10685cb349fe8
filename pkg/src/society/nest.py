"""Nests: concentric disjoint cycles in a rural neighborhood."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from src.graph.paths import is_path
from src.planarity.disc import (
    AnnulusDrawing,
    annulus_drawing,
    annulus_gadget,
    cycle_separates,
    matches_gadget,
    side_of_vertex,
)
from src.planarity.embedding import Embedding
from src.society.society import Neighborhood
from src.utils.errors import MalformedInputError

logger = logging.getLogger(__name__)

Cycle = Tuple[int, ...]


@dataclass(frozen=True)
class Nest:
    """
    Cycles C1..Cs, C1 innermost.

    ``embedding`` is a rotation system of the neighborhood with both
    boundary wheels attached (hubs ``-1`` inside, ``-2`` outside); when it
    is omitted the drawing found by the annulus test is used.
    """

    cycles: Tuple[Cycle, ...]
    embedding: Optional[Embedding] = field(default=None, compare=False)

    @classmethod
    def of(cls, cycles: Sequence[Sequence[int]], embedding: Optional[Embedding] = None) -> "Nest":
        return cls(tuple(tuple(c) for c in cycles), embedding)

    def __len__(self) -> int:
        return len(self.cycles)

    def vertices(self) -> set:
        return {v for c in self.cycles for v in c}

    def edges_of(self, i: int) -> List[Tuple[int, int]]:
        c = self.cycles[i]
        return [(c[k], c[(k + 1) % len(c)]) for k in range(len(c))]

    def sub_nest(self, indices: Sequence[int]) -> "Nest":
        return Nest(tuple(self.cycles[i] for i in indices), self.embedding)

    def to_dict(self) -> Dict[str, object]:
        return {"cycles": [list(c) for c in self.cycles], "embedding": self.embedding.to_dict() if self.embedding else None}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "Nest":
        try:
            emb = data.get("embedding")
            return cls.of(data["cycles"], Embedding.from_dict(emb) if emb else None)
        except (KeyError, TypeError) as e:
            raise MalformedInputError(f"invalid nest JSON: {e}") from e


def is_cycle(g, c: Sequence[int]) -> bool:
    return len(c) >= 3 and is_path(g, c) and g.has_edge(c[-1], c[0])


def nest_drawing(nb: Neighborhood, nest: Nest) -> Optional[AnnulusDrawing]:
    """The drawing the nest is checked against."""
    if nest.embedding is None:
        return annulus_drawing(nb.graph, nb.omega.ring, nb.omega0.ring)
    h = annulus_gadget(nb.graph, nb.omega.ring, nb.omega0.ring)
    if not matches_gadget(nest.embedding, h):
        return None
    return AnnulusDrawing(nest.embedding, nb.omega.ring, nb.omega0.ring)


def explain_nest(nb: Neighborhood, nest: Nest) -> Optional[str]:
    """First violated nest condition, or None."""
    g = nb.graph
    for i, c in enumerate(nest.cycles):
        if not is_cycle(g, c):
            return f"C{i + 1} is not a cycle of the neighborhood"
    for i in range(len(nest.cycles)):
        for j in range(i + 1, len(nest.cycles)):
            if set(nest.cycles[i]) & set(nest.cycles[j]):
                return f"C{i + 1} and C{j + 1} share vertices"
    drawing = nest_drawing(nb, nest)
    if drawing is None:
        return "neighborhood has no annulus drawing matching the nest embedding"
    inner_hub, outer_hub = AnnulusDrawing.INNER_HUB, AnnulusDrawing.OUTER_HUB
    if len(nb.omega0) < 3 or len(nb.omega) < 3:
        return "nest checks need at least three vertices on each boundary"
    for i, c in enumerate(nest.cycles):
        separates, classes = cycle_separates(drawing, c)
        if not separates:
            return f"C{i + 1} does not separate the two boundaries"
        inside = classes[drawing.hub_face(inner_hub)]
        outside = classes[drawing.hub_face(outer_hub)]
        on_cycle = set(c)
        for v in nb.omega0:
            if v not in on_cycle and side_of_vertex(drawing, classes, v) != inside:
                return f"Ω0 vertex {v} lies outside C{i + 1}"
        for v in nb.omega:
            if v not in on_cycle and side_of_vertex(drawing, classes, v) != outside:
                return f"Ω vertex {v} lies inside C{i + 1}"
        if i + 1 < len(nest.cycles):
            for v in nest.cycles[i + 1]:
                if side_of_vertex(drawing, classes, v) != outside:
                    return f"C{i + 2} is not drawn around C{i + 1}"
    return None


def verify_nest(nb: Neighborhood, nest: Nest) -> bool:
    reason = explain_nest(nb, nest)
    if reason:
        logger.debug(f"Nest rejected: {reason}")
    return reason is None
