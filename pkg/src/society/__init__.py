"""Societies: cyclic orders, bumps and crosses, rurality, depth, transactions and nests."""

from src.society.bumps import find_cross, is_bump, is_cross, is_cross_free
from src.society.connectivity import is_society_k_connected
from src.society.cyclic import CyclicOrder, clockwise, interval, restrict
from src.society.depth import (
    LinearDecomposition,
    VorticalDecomposition,
    depth_exact,
    linear_depth,
    verify_linear_decomposition,
    verify_vortical_decomposition,
    vortical_from_linear,
)
from src.society.nest import Nest, verify_nest
from src.society.rural import is_nearly_rural, is_rural
from src.society.society import (
    Neighborhood,
    Society,
    TruncationWitness,
    compose,
    cosmopolitan_witness_check,
    is_planar_truncation,
)
from src.society.transactions import is_transaction, max_transaction

__all__ = [
    "CyclicOrder",
    "clockwise",
    "interval",
    "restrict",
    "Society",
    "Neighborhood",
    "TruncationWitness",
    "compose",
    "is_planar_truncation",
    "cosmopolitan_witness_check",
    "is_bump",
    "is_cross",
    "find_cross",
    "is_cross_free",
    "is_rural",
    "is_nearly_rural",
    "is_society_k_connected",
    "LinearDecomposition",
    "VorticalDecomposition",
    "depth_exact",
    "linear_depth",
    "verify_linear_decomposition",
    "verify_vortical_decomposition",
    "vortical_from_linear",
    "max_transaction",
    "is_transaction",
    "Nest",
    "verify_nest",
]
