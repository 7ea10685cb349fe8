"""Societies, neighborhoods, composition and planar truncations."""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence

from src.graph.graph import Graph
from src.planarity.disc import annulus_drawing
from src.planarity.embedding import Embedding
from src.society.cyclic import CyclicOrder
from src.utils.errors import InvalidWitnessError, MalformedInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Society:
    """A graph with a cyclic order Ω over some of its vertices."""

    graph: Graph
    omega: CyclicOrder

    def __post_init__(self) -> None:
        self.graph.check_vertices(self.omega, "omega")

    @classmethod
    def of(cls, graph: Graph, omega: Sequence[int]) -> "Society":
        return cls(graph, CyclicOrder(omega))

    @property
    def omega_vertices(self):
        return self.omega.vertices

    def inner_vertices(self) -> List[int]:
        """Vertices of G outside V(Ω), ascending."""
        return sorted(self.graph.vertices - self.omega.vertices)

    def delete(self, xs: Iterable[int]) -> "Society":
        """(G∖X, Ω∖X)."""
        xs = set(xs)
        return Society(self.graph.delete_vertices(xs), self.omega.delete(xs))

    def with_graph(self, graph: Graph) -> "Society":
        return Society(graph, self.omega.restrict(graph.vertices))

    def to_dict(self) -> Dict[str, object]:
        data = self.graph.to_dict()
        data["omega"] = self.omega.to_list()
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "Society":
        if "omega" not in data:
            raise MalformedInputError("society JSON needs an 'omega' list")
        return cls(Graph.from_dict(data), CyclicOrder(data["omega"]))

    def __repr__(self) -> str:
        return f"Society({self.graph!r}, |Ω|={len(self.omega)})"


@dataclass(frozen=True)
class Neighborhood:
    """(G, Ω, Ω0): a graph with an outer and an inner cyclic order."""

    graph: Graph
    omega: CyclicOrder
    omega0: CyclicOrder

    def __post_init__(self) -> None:
        self.graph.check_vertices(self.omega, "omega")
        self.graph.check_vertices(self.omega0, "omega0")

    @classmethod
    def of(cls, graph: Graph, omega: Sequence[int], omega0: Sequence[int]) -> "Neighborhood":
        return cls(graph, CyclicOrder(omega), CyclicOrder(omega0))

    def is_rural(self) -> bool:
        return annulus_drawing(self.graph, self.omega.ring, self.omega0.ring) is not None

    def to_dict(self) -> Dict[str, object]:
        data = self.graph.to_dict()
        data["omega"] = self.omega.to_list()
        data["omega0"] = self.omega0.to_list()
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "Neighborhood":
        try:
            return cls(Graph.from_dict(data), CyclicOrder(data["omega"]), CyclicOrder(data["omega0"]))
        except KeyError as e:
            raise MalformedInputError(f"neighborhood JSON is missing {e}") from e


@dataclass(frozen=True)
class TruncationWitness:
    """Inner society plus rural neighborhood, optionally with its drawing."""

    inner: Society
    neighborhood: Neighborhood
    embedding: Optional[Embedding] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "inner": self.inner.to_dict(),
            "neighborhood": self.neighborhood.to_dict(),
            "embedding": self.embedding.to_dict() if self.embedding else None,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "TruncationWitness":
        try:
            emb = data.get("embedding")
            return cls(
                Society.from_dict(data["inner"]),
                Neighborhood.from_dict(data["neighborhood"]),
                Embedding.from_dict(emb) if emb else None,
            )
        except KeyError as e:
            raise MalformedInputError(f"truncation witness JSON is missing {e}") from e


def compose(s0: Society, nb: Neighborhood) -> Society:
    """
    Glue (G0, Ω0) into the neighborhood (G1, Ω, Ω0) along V(Ω0).

    Raises:
        MalformedInputError: when V(G0) ∩ V(G1) differs from V(Ω0) or the
            inner society's order is not the neighborhood's Ω0
    """
    shared = s0.graph.vertices & nb.graph.vertices
    if shared != nb.omega0.vertices:
        raise MalformedInputError(
            f"V(G0) ∩ V(G1) must equal V(Ω0); got {len(shared)} shared vertices for |Ω0|={len(nb.omega0)}"
        )
    if s0.omega != nb.omega0:
        raise MalformedInputError("inner society order differs from the neighborhood's Ω0")
    return Society(s0.graph.union(nb.graph), nb.omega)


def _boundary_matches(emb: Embedding, ring: Sequence[int]) -> bool:
    """Some face meets ``ring`` in its cyclic order or the reverse."""
    if len(ring) < 3:
        return True
    want = CyclicOrder(ring)
    members = set(ring)
    for face in emb.face_vertices():
        seen: List[int] = []
        for v in face:
            if v in members and v not in seen:
                seen.append(v)
        if len(seen) == len(ring):
            order = CyclicOrder(seen)
            if order == want or order == want.reversed():
                return True
    return False


def explain_planar_truncation(s: Society, witness: TruncationWitness) -> Optional[str]:
    """First reason the witness is not a planar truncation of s, or None."""
    try:
        glued = compose(witness.inner, witness.neighborhood)
    except MalformedInputError as e:
        return str(e)
    if glued.omega != s.omega:
        return "neighborhood Ω differs from the society's Ω"
    if glued.graph.vertices != s.graph.vertices or set(glued.graph.simple_edges()) != set(s.graph.simple_edges()):
        return "G0 ∪ G1 is not the society's graph"
    nb = witness.neighborhood
    if not nb.is_rural():
        return "neighborhood has no annulus drawing with Ω outside and Ω0 inside"
    if witness.embedding is not None:
        emb = witness.embedding
        if not emb.is_valid_for(nb.graph):
            return "supplied rotation system is not a plane embedding of the neighborhood"
        if not _boundary_matches(emb, nb.omega.ring):
            return "no face of the supplied drawing carries Ω in order"
        if not _boundary_matches(emb, nb.omega0.ring):
            return "no face of the supplied drawing carries Ω0 in order"
    return None


def is_planar_truncation(s: Society, witness: TruncationWitness) -> bool:
    reason = explain_planar_truncation(s, witness)
    if reason:
        logger.debug(f"Truncation rejected: {reason}")
    return reason is None


def cosmopolitan_count(witness: TruncationWitness) -> int:
    """Vertices of Ω0 with at least two neighbours in G0."""
    g0 = witness.inner.graph
    return sum(1 for v in witness.inner.omega if g0.degree(v) >= 2)


def cosmopolitan_witness_check(s: Society, witness: TruncationWitness, k: int) -> bool:
    """
    Check one planar truncation against the k-cosmopolitan count.

    Raises:
        InvalidWitnessError: the witness is not a planar truncation of s
    """
    reason = explain_planar_truncation(s, witness)
    if reason:
        raise InvalidWitnessError(f"invalid truncation witness: {reason}")
    count = cosmopolitan_count(witness)
    logger.debug(f"cosmopolitan count {count} against k={k}")
    return count >= k


def identity_truncation(s: Society) -> TruncationWitness:
    """The truncation whose neighborhood is V(Ω) with no edges."""
    nb = Neighborhood(Graph(s.graph.n, (), s.omega.vertices), s.omega, s.omega)
    return TruncationWitness(s, nb)
