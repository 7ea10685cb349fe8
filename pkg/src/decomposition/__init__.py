"""Goose bumps, hitting sets, intrusions, uncrossing, sunflowers and wars."""

from src.decomposition.fans import find_fan_or_goose_bump
from src.decomposition.hitting import Dichotomy, crosses_or_hitting_set, goose_bumps_or_hitting_set
from src.decomposition.intrusions import (
    Base,
    Intrusion,
    base_from_arc,
    find_intrusion,
    find_meridian,
    is_invasion,
    is_minimal_intrusion,
    uncross_intrusions,
    verify_base,
    verify_intrusion,
)
from src.decomposition.sunflower import sunflower_subsets, verify_sunflower
from src.decomposition.wars import (
    DisjointIntrusions,
    War,
    disjoint_intrusions,
    explain_war,
    induced_society,
    perimeter_path,
    verify_war,
)

__all__ = [
    "Dichotomy",
    "goose_bumps_or_hitting_set",
    "crosses_or_hitting_set",
    "Base",
    "Intrusion",
    "base_from_arc",
    "verify_base",
    "verify_intrusion",
    "find_intrusion",
    "is_minimal_intrusion",
    "is_invasion",
    "find_meridian",
    "uncross_intrusions",
    "sunflower_subsets",
    "verify_sunflower",
    "War",
    "explain_war",
    "verify_war",
    "induced_society",
    "perimeter_path",
    "DisjointIntrusions",
    "disjoint_intrusions",
    "find_fan_or_goose_bump",
]
