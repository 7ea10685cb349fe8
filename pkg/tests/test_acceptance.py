"""Seeded sweeps against brute-force oracles. Sample sizes follow MINORFORGE_TEST_SCALE."""

import random

import pytest

from src.decomposition.hitting import goose_bumps_or_hitting_set
from src.graph.graph import Graph
from src.graph.minors import find_k6_minor, verify_minor_model
from src.society.depth import depth_exact
from src.society.rural import is_rural
from src.society.society import Society
from tests.oracles import all_bumps, disjoint_bump_count, has_clique_minor, rural_oracle
from tests.strategies import scaled

pytestmark = pytest.mark.slow


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_society(rng: random.Random, n: int, p: float) -> Society:
    g = random_graph(rng, n, p)
    omega = rng.sample(range(n), rng.randint(1, n))
    return Society.of(g, omega)


def test_k6_search_matches_branch_set_enumeration(rng):
    for _ in range(scaled(60)):
        g = random_graph(rng, rng.randint(6, 7), rng.uniform(0.5, 0.95))
        model = find_k6_minor(g)
        assert (model is not None) == has_clique_minor(g, 6)
        if model is not None:
            assert verify_minor_model(g, model)


def test_rural_matches_gadget_planarity(rng):
    for _ in range(scaled(200)):
        s = random_society(rng, rng.randint(3, 7), rng.uniform(0.2, 0.6))
        assert is_rural(s) == rural_oracle(s)


@pytest.mark.parametrize("b", [1, 2, 3])
def test_goose_bump_dichotomy(rng, b):
    for _ in range(scaled(100)):
        s = random_society(rng, rng.randint(3, 7), rng.uniform(0.2, 0.5))
        _, ld = depth_exact(s)
        outcome = goose_bumps_or_hitting_set(s, ld, b)
        if outcome.certificate is not None:
            assert disjoint_bump_count(s, list(outcome.certificate.parts.values())) == b
        else:
            assert len(outcome.hitting_set) <= (b - 1) * ld.depth
            assert next(all_bumps(s.delete(outcome.hitting_set)), None) is None
