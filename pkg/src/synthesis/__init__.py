"""K6 minor synthesis and the canonical fixtures it is exercised on."""

from src.synthesis.fixtures import FIXTURES, NEST_FIXTURES, Fixture, build_fixture
from src.synthesis.k6 import (
    MIN_NEST,
    Synthesis,
    guided_model,
    k6_from_certificate_nest,
    k6_from_wall_two_crosses,
    synthesize_certificate_nest,
    synthesize_wall_two_crosses,
    wirings,
)

__all__ = [
    "Fixture",
    "FIXTURES",
    "NEST_FIXTURES",
    "build_fixture",
    "MIN_NEST",
    "Synthesis",
    "wirings",
    "guided_model",
    "synthesize_certificate_nest",
    "k6_from_certificate_nest",
    "synthesize_wall_two_crosses",
    "k6_from_wall_two_crosses",
]
