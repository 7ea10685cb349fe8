"""Disc and annulus drawings with prescribed boundary orders."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from src.graph.graph import Graph
from src.planarity.embedding import Embedding, planar_embedding_of
from src.utils.errors import MalformedInputError

logger = logging.getLogger(__name__)


def _check_boundary(g: Graph, boundary: Sequence[int]) -> None:
    if len(set(boundary)) != len(boundary):
        raise MalformedInputError(f"boundary vertices must be distinct: {list(boundary)}")
    g.check_vertices(boundary, "boundary")


def add_ring_gadget(h: nx.Graph, ring: Sequence[int], hub) -> None:
    """Attach a wheel on ``ring`` with centre ``hub`` (smaller rings degrade)."""
    ring = list(ring)
    if len(ring) >= 3:
        for i, v in enumerate(ring):
            h.add_edge(hub, v)
            h.add_edge(v, ring[(i + 1) % len(ring)])
    elif len(ring) == 2:
        h.add_edge(ring[0], ring[1])


def wheel_gadget(g: Graph, boundary: Sequence[int]) -> nx.Graph:
    """g plus a hub joined to every boundary vertex and the boundary cycle."""
    h = g.to_networkx()
    add_ring_gadget(h, boundary, ("hub", 0))
    return h


def disc_embedding(g: Graph, boundary: Sequence[int]) -> bool:
    """
    Decide whether g has a drawing in a closed disc with exactly the boundary
    vertices on the boundary, in the given cyclic order (either orientation).

    With two boundary vertices the test is planarity of g plus their edge;
    with at most one it is plain planarity.

    Raises:
        MalformedInputError: repeated or foreign boundary vertices
    """
    _check_boundary(g, boundary)
    planar, _ = nx.check_planarity(wheel_gadget(g, boundary))
    return planar


def disc_drawing(g: Graph, boundary: Sequence[int]) -> Optional[Embedding]:
    """Embedding of the wheel gadget (hub id ``-1``) when a disc drawing exists."""
    _check_boundary(g, boundary)
    h = g.to_networkx()
    add_ring_gadget(h, boundary, -1)
    return planar_embedding_of(h)


def _same_cycle(rotation: List[int], ring: Sequence[int]) -> bool:
    ring = list(ring)
    if sorted(rotation) != sorted(ring):
        return False
    k = rotation.index(ring[0])
    return rotation[k:] + rotation[:k] == ring


class AnnulusDrawing:
    """Result of an annulus test: the gadget embedding and hub ids."""

    INNER_HUB = -1
    OUTER_HUB = -2

    def __init__(self, embedding: Embedding, outer: Sequence[int], inner: Sequence[int]) -> None:
        self.embedding = embedding
        self.outer = list(outer)
        self.inner = list(inner)

    def hub_face(self, hub: int) -> Optional[int]:
        faces = self.embedding.faces_at(hub) if hub in self.embedding.rotation else []
        return faces[0] if faces else None


def annulus_gadget(g: Graph, outer: Sequence[int], inner: Sequence[int]) -> nx.Graph:
    """g with an outer wheel (hub ``-2``) and an inner wheel (hub ``-1``)."""
    h = g.to_networkx()
    add_ring_gadget(h, outer, AnnulusDrawing.OUTER_HUB)
    add_ring_gadget(h, inner, AnnulusDrawing.INNER_HUB)
    return h


def matches_gadget(emb: Embedding, h: nx.Graph) -> bool:
    """The rotation system lists exactly the neighbourhoods of h and is plane."""
    if set(emb.rotation) != set(h.nodes):
        return False
    if any(set(emb.rotation[v]) != set(h[v]) or len(emb.rotation[v]) != len(h[v]) for v in h.nodes):
        return False
    return emb.satisfies_euler()


def annulus_drawing(g: Graph, outer: Sequence[int], inner: Sequence[int]) -> Optional[AnnulusDrawing]:
    """
    Draw g in an annulus with ``outer`` on the outer boundary and ``inner``
    on the inner boundary, both clockwise in the plane.

    Two wheels are attached, one per boundary. When the hubs are joined by
    three disjoint paths the relative orientation of the wheels is rigid and
    is checked against the requested orders; otherwise one side can be
    flipped and planarity alone decides.

    Returns:
        The drawing, or None when no annulus drawing exists
    """
    _check_boundary(g, outer)
    _check_boundary(g, inner)
    h = annulus_gadget(g, outer, inner)
    emb = planar_embedding_of(h)
    if emb is None:
        return None
    if len(outer) >= 3 and len(inner) >= 3:
        linked = nx.node_connectivity(h, AnnulusDrawing.INNER_HUB, AnnulusDrawing.OUTER_HUB) >= 3
        if linked:
            rot_in = emb.rotation[AnnulusDrawing.INNER_HUB]
            rot_out = emb.rotation[AnnulusDrawing.OUTER_HUB]
            # seen from the outer hub the outer boundary runs anticlockwise
            straight = _same_cycle(rot_in, inner) and _same_cycle(rot_out, list(reversed(outer)))
            mirrored = _same_cycle(rot_in, list(reversed(inner))) and _same_cycle(rot_out, outer)
            if not (straight or mirrored):
                logger.debug("annulus wheels are rigidly linked with the wrong relative orientation")
                return None
    return AnnulusDrawing(emb, outer, inner)


def is_annulus_embeddable(g: Graph, outer: Sequence[int], inner: Sequence[int]) -> bool:
    return annulus_drawing(g, outer, inner) is not None


def cycle_separates(
    drawing: AnnulusDrawing, cycle: Sequence[int]
) -> Tuple[bool, Dict[int, int]]:
    """
    Whether a cycle separates the two hubs in the drawing.

    Returns:
        (separates, face -> side class map)
    """
    ring = list(cycle)
    edges = [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    classes = drawing.embedding.face_classes(edges)
    f_in = drawing.hub_face(AnnulusDrawing.INNER_HUB)
    f_out = drawing.hub_face(AnnulusDrawing.OUTER_HUB)
    if f_in is None or f_out is None:
        return False, classes
    return classes[f_in] != classes[f_out], classes


def side_of_vertex(drawing: AnnulusDrawing, classes: Dict[int, int], v: int) -> Optional[int]:
    faces = drawing.embedding.faces_at(v)
    return classes[faces[0]] if faces else None
