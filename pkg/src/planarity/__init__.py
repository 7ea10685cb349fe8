"""Planarity, rotation systems, apex testing and disc/annulus drawings."""

from src.planarity.apex import is_apex, is_internally_4_connected
from src.planarity.disc import annulus_drawing, disc_embedding, is_annulus_embeddable
from src.planarity.embedding import Embedding, embedding, is_planar

__all__ = [
    "Embedding",
    "embedding",
    "is_planar",
    "is_apex",
    "is_internally_4_connected",
    "disc_embedding",
    "annulus_drawing",
    "is_annulus_embeddable",
]
