"""Configuration certificates, their checkers and finders, orderly transactions and leaps."""

from src.configurations.bridges import Bridge, BridgeReport, m_bridges, proper_reroute, segments, stabilize
from src.configurations.certificate import KINDS, SIZED_KINDS, Certificate
from src.configurations.checkers import explain_certificate, verify_certificate
from src.configurations.finders import find_any, find_certificate
from src.configurations.leaps import LeapOutcomeReport, classify_leap_outcomes, exposed_vertices, leap_sets
from src.configurations.orderly import (
    ObstructionReport,
    OrderlyTransaction,
    is_coterminal,
    t_obstructions,
    verify_orderly_transaction,
)
from src.configurations.rural4 import find_bad_separation, rurally_4_connected

__all__ = [
    "Certificate",
    "KINDS",
    "SIZED_KINDS",
    "verify_certificate",
    "explain_certificate",
    "find_certificate",
    "find_any",
    "OrderlyTransaction",
    "ObstructionReport",
    "verify_orderly_transaction",
    "is_coterminal",
    "t_obstructions",
    "Bridge",
    "BridgeReport",
    "segments",
    "m_bridges",
    "proper_reroute",
    "stabilize",
    "LeapOutcomeReport",
    "leap_sets",
    "exposed_vertices",
    "classify_leap_outcomes",
    "rurally_4_connected",
    "find_bad_separation",
]
