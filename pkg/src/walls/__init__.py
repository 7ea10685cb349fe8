"""Walls, pinwheels, wall detection, compasses and rural vertex bounds."""

from src.walls.arithmetic import cosmopolitan_t_for_k, devos_seymour_bound, rural_vertex_bound, rural_vertex_slack
from src.walls.compass import (
    anticompass_society,
    compass,
    find_cross_over_wall,
    is_flat_wall,
    is_planar_wall,
    perimeter,
)
from src.walls.detect import (
    WallEmbedding,
    explain_wall_embedding,
    find_wall,
    identity_wall,
    verify_wall_embedding,
)
from src.walls.elementary import (
    WallCoords,
    elementary_perimeter,
    gen_elementary_wall,
    gen_hex_patch,
    gen_pinwheel,
    outer_face,
    wall_vertices,
)

__all__ = [
    "WallCoords",
    "WallEmbedding",
    "anticompass_society",
    "compass",
    "cosmopolitan_t_for_k",
    "devos_seymour_bound",
    "elementary_perimeter",
    "explain_wall_embedding",
    "find_cross_over_wall",
    "find_wall",
    "gen_elementary_wall",
    "gen_hex_patch",
    "gen_pinwheel",
    "identity_wall",
    "is_flat_wall",
    "is_planar_wall",
    "outer_face",
    "perimeter",
    "rural_vertex_bound",
    "rural_vertex_slack",
    "verify_wall_embedding",
    "wall_vertices",
]
