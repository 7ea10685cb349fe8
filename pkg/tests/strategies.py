"""Hypothesis strategies for graphs and societies."""

import os

from hypothesis import strategies as st

from src.graph.graph import Graph
from src.society.society import Society

TEST_SCALE = float(os.getenv("MINORFORGE_TEST_SCALE", "0.2"))


def scaled(full: int) -> int:
    """Sample size for an acceptance count under the current scale."""
    return max(1, int(round(full * TEST_SCALE)))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, max_edges: int = 18) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n)
    edges = draw(st.lists(st.sampled_from(pairs), max_size=max_edges, unique=True))
    return Graph(n, sorted(edges))


@st.composite
def societies(draw, min_n: int = 3, max_n: int = 7, min_omega: int = 1, max_omega: int = 6) -> Society:
    g = draw(graphs(min_n=min_n, max_n=max_n))
    size = draw(st.integers(min_value=min(min_omega, g.order()), max_value=min(max_omega, g.order())))
    omega = draw(st.permutations(range(g.order())))[:size]
    return Society.of(g, omega)


@st.composite
def vertex_subsets(draw, g: Graph, max_size: int = 3):
    return set(draw(st.lists(st.sampled_from(g.sorted_vertices()), max_size=max_size, unique=True)))
