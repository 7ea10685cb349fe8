"""Planarity testing and combinatorial embeddings (rotation systems)."""

import logging
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from src.graph.graph import Graph

logger = logging.getLogger(__name__)

HalfEdge = Tuple[int, int]


class Embedding:
    """
    Rotation system of a simple plane graph.

    ``rotation[v]`` lists the neighbours of v in clockwise order. Faces are
    traced by leaving each half-edge (u, v) along (v, w) where w follows u
    in the rotation at v.
    """

    def __init__(self, rotation: Dict[int, List[int]], outer: Optional[List[int]] = None) -> None:
        self.rotation = {v: list(nb) for v, nb in rotation.items()}
        self.outer = list(outer) if outer is not None else None
        self._faces: Optional[List[List[HalfEdge]]] = None

    @classmethod
    def from_networkx(cls, emb: nx.PlanarEmbedding) -> "Embedding":
        return cls({int(v): [int(u) for u in emb.neighbors_cw_order(v)] for v in emb.nodes})

    def vertices(self) -> List[int]:
        return sorted(self.rotation)

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.rotation.values()) // 2

    def next_half_edge(self, u: int, v: int) -> HalfEdge:
        around = self.rotation[v]
        return v, around[(around.index(u) + 1) % len(around)]

    def faces(self) -> List[List[HalfEdge]]:
        """All traced faces as lists of half-edges."""
        if self._faces is None:
            seen: Set[HalfEdge] = set()
            faces: List[List[HalfEdge]] = []
            for u in sorted(self.rotation):
                for v in self.rotation[u]:
                    if (u, v) in seen:
                        continue
                    face: List[HalfEdge] = []
                    he = (u, v)
                    while he not in seen:
                        seen.add(he)
                        face.append(he)
                        he = self.next_half_edge(*he)
                    faces.append(face)
            self._faces = faces
        return self._faces

    def face_vertices(self) -> List[List[int]]:
        return [[u for u, _ in f] for f in self.faces()]

    def face_count(self) -> int:
        """Faces of the drawing: one shared outer face across components."""
        traced = len(self.faces())
        with_edges = self._components_with_edges()
        if with_edges == 0:
            return 1
        return traced - with_edges + 1

    def component_count(self) -> int:
        return len(self._components(include_isolated=True))

    def _components(self, include_isolated: bool) -> List[Set[int]]:
        seen: Set[int] = set()
        comps: List[Set[int]] = []
        for s in sorted(self.rotation):
            if s in seen or (not include_isolated and not self.rotation[s]):
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.rotation[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(comp)
        return comps

    def _components_with_edges(self) -> int:
        return len(self._components(include_isolated=False))

    def satisfies_euler(self) -> bool:
        """v - e + f = 1 + c on the traced faces."""
        v = len(self.rotation)
        return v - self.edge_count() + self.face_count() == 1 + self.component_count()

    def faces_at(self, v: int) -> List[int]:
        """Indices of faces having v on their boundary."""
        return [i for i, f in enumerate(self.faces()) if any(a == v for a, _ in f)]

    def face_of_half_edge(self) -> Dict[HalfEdge, int]:
        index: Dict[HalfEdge, int] = {}
        for i, f in enumerate(self.faces()):
            for he in f:
                index[he] = i
        return index

    def face_classes(self, blocked: Iterable[Tuple[int, int]]) -> Dict[int, int]:
        """
        Group faces that can reach each other without crossing a blocked edge.

        Returns:
            Map from face index to a class representative
        """
        blocked = {(min(a, b), max(a, b)) for a, b in blocked}
        index = self.face_of_half_edge()
        parent = list(range(len(self.faces())))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (u, v), f in index.items():
            if (min(u, v), max(u, v)) in blocked:
                continue
            g = index[(v, u)]
            ra, rb = find(f), find(g)
            if ra != rb:
                parent[ra] = rb
        return {i: find(i) for i in range(len(parent))}

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"rotation": {str(v): nb for v, nb in sorted(self.rotation.items())}}
        data["outer"] = self.outer
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "Embedding":
        rotation = {int(v): [int(u) for u in nb] for v, nb in dict(data["rotation"]).items()}
        outer = data.get("outer")
        return cls(rotation, [int(v) for v in outer] if outer else None)

    def is_valid_for(self, g: Graph) -> bool:
        """Rotation lists exactly the simple neighbourhoods of g and is planar."""
        if set(self.rotation) != set(g.vertices):
            return False
        if any(sorted(self.rotation[v]) != sorted(g.neighbors(v)) for v in g.vertices):
            return False
        return self.satisfies_euler()


def _nx_planar(h: nx.Graph) -> Tuple[bool, Optional[nx.PlanarEmbedding]]:
    planar, emb = nx.check_planarity(h)
    return planar, (emb if planar else None)


def is_planar(g: Graph) -> bool:
    """True iff the simplification of g is planar."""
    planar, _ = nx.check_planarity(g.to_networkx())
    return planar


def embedding(g: Graph) -> Optional[Embedding]:
    """A planar rotation system for g, or None when g is not planar."""
    planar, emb = _nx_planar(g.to_networkx())
    if not planar:
        return None
    result = Embedding.from_networkx(emb)
    for v in g.vertices:
        result.rotation.setdefault(v, [])
    return result


def planar_embedding_of(h: nx.Graph) -> Optional[Embedding]:
    """Embedding for an already-built networkx graph (gadget constructions)."""
    planar, emb = _nx_planar(h)
    return Embedding.from_networkx(emb) if planar else None
