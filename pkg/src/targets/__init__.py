"""Targets, rerouting, hypomorphism and perpendicularity to nests."""

from src.targets.perpendicular import (
    Normalization,
    PerpendicularityReport,
    explain_perpendicular,
    is_perpendicular,
    normalize_perpendicular,
    perpendicularity,
)
from src.targets.target import (
    RerouteStep,
    Target,
    certificate_target,
    complexity,
    critical_vertices,
    explain_target,
    is_hypomorphic,
    is_target,
    reroute,
    special_vertices,
    verify_target,
)

__all__ = [
    "Target",
    "RerouteStep",
    "explain_target",
    "verify_target",
    "is_target",
    "special_vertices",
    "critical_vertices",
    "complexity",
    "reroute",
    "is_hypomorphic",
    "certificate_target",
    "PerpendicularityReport",
    "perpendicularity",
    "explain_perpendicular",
    "is_perpendicular",
    "Normalization",
    "normalize_perpendicular",
]
