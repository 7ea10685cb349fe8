"""Graph substrate: multigraphs, separations, paths, flows and K6 minor models."""

from src.graph.graph import (
    Graph,
    Separation,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    grid_graph,
    path_graph,
    petersen_graph,
    subdivide_edges,
)
from src.graph.paths import PathSystem, is_path, shortest_path
from src.graph.flows import closest_separation, is_k_connected, max_disjoint_paths, min_vertex_cut
from src.graph.minors import MinorModel, explain_minor_model, find_k6_minor, verify_minor_model

__all__ = [
    "Graph",
    "Separation",
    "PathSystem",
    "MinorModel",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "grid_graph",
    "path_graph",
    "petersen_graph",
    "subdivide_edges",
    "is_path",
    "shortest_path",
    "min_vertex_cut",
    "closest_separation",
    "max_disjoint_paths",
    "is_k_connected",
    "verify_minor_model",
    "explain_minor_model",
    "find_k6_minor",
]
