"""Planarity, apex testing, internal 4-connectivity and boundary drawings."""

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from src.graph.graph import Graph, complete_bipartite, complete_graph, cycle_graph, grid_graph, petersen_graph
from src.planarity.apex import is_apex, is_internally_4_connected
from src.planarity.disc import annulus_drawing, disc_embedding, is_annulus_embeddable
from src.planarity.embedding import embedding, is_planar
from src.utils.errors import MalformedInputError
from tests.oracles import internally_4_connected_oracle, kuratowski_planar
from tests.strategies import graphs


def icosahedron_plus_universal() -> Graph:
    icosa = nx.icosahedral_graph()
    return Graph(13, list(icosa.edges()) + [(12, v) for v in range(12)])


def cylinder(k: int) -> Graph:
    """Two k-cycles (0..k-1 outside, k..2k-1 inside) joined by spokes."""
    outer = [(i, (i + 1) % k) for i in range(k)]
    inner = [(k + i, k + (i + 1) % k) for i in range(k)]
    spokes = [(i, k + i) for i in range(k)]
    return Graph(2 * k, outer + inner + spokes)


class TestPlanarity:
    @pytest.mark.parametrize(
        "g, planar",
        [
            (complete_graph(4), True),
            (complete_graph(5), False),
            (complete_bipartite(3, 3), False),
            (grid_graph(5, 5), True),
            (petersen_graph(), False),
        ],
    )
    def test_known_graphs(self, g, planar):
        assert is_planar(g) is planar

    def test_loops_and_parallel_edges_ignored(self):
        g = Graph(4, [(0, 1), (0, 1), (2, 2), (1, 2), (2, 3)])
        assert is_planar(g)

    @settings(max_examples=40)
    @given(g=graphs(min_n=5, max_n=7, max_edges=16))
    def test_agrees_with_kuratowski(self, g):
        assert is_planar(g) == kuratowski_planar(g)

    def test_embedding_is_valid(self):
        g = grid_graph(3, 4)
        emb = embedding(g)
        assert emb is not None
        assert emb.is_valid_for(g)
        assert emb.face_count() == 6 + 1
        assert embedding(complete_graph(5)) is None


class TestApex:
    def test_k6_is_not_apex(self):
        assert is_apex(complete_graph(6)) == (False, None)

    def test_k5_is_apex(self):
        ok, witness = is_apex(complete_graph(5))
        assert ok and witness is not None

    def test_icosahedron_with_universal_vertex(self):
        g = icosahedron_plus_universal()
        ok, witness = is_apex(g)
        assert ok
        assert is_planar(g.delete_vertices([witness]))
        assert not is_planar(g)

    def test_planar_graph_witness_is_least_vertex(self):
        assert is_apex(cycle_graph(4)) == (True, 0)

    def test_null_graph(self):
        assert is_apex(Graph(0)) == (True, None)


class TestInternal4Connectivity:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (complete_graph(5), True),
            (complete_bipartite(3, 3), True),
            (complete_bipartite(3, 4), False),
            (complete_graph(4), False),
            (cycle_graph(6), False),
        ],
        ids=["K5", "K33", "K34", "K4", "C6"],
    )
    def test_known_graphs(self, g, expected):
        assert is_internally_4_connected(g) is expected

    def test_multigraph_is_rejected(self):
        g = complete_graph(5).add_edges([(0, 1)])
        assert not is_internally_4_connected(g)

    def test_degree_three_vertex_on_a_triangle(self):
        # {0, 1, 2, 5} induces K4 and {0, ..., 4} induces K5
        g = Graph(6, list(complete_graph(5).edges) + [(0, 5), (1, 5), (2, 5)])
        assert is_internally_4_connected(g) is False

    def test_two_k5_sharing_a_triangle(self):
        second = [(u, v) for u, v in combinations([0, 1, 2, 5, 6], 2) if v > 4]
        g = Graph(7, list(complete_graph(5).edges) + second)
        assert g.edge_count() == 17
        assert is_internally_4_connected(g) is False

    @settings(max_examples=60, deadline=None)
    @given(missing=graphs(min_n=5, max_n=8, max_edges=9))
    def test_matches_separation_enumeration(self, missing):
        n = missing.order()
        absent = set(missing.edges)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in absent])
        assert is_internally_4_connected(g) == internally_4_connected_oracle(g)


class TestBoundaryDrawings:
    def test_cycle_in_disc(self):
        g = cycle_graph(6)
        assert disc_embedding(g, [0, 1, 2, 3, 4, 5])
        assert disc_embedding(g, [5, 4, 3, 2, 1, 0])
        assert not disc_embedding(g, [0, 2, 1, 3, 4, 5])

    def test_small_boundaries(self):
        assert disc_embedding(complete_graph(4), [0])
        assert disc_embedding(complete_graph(4), [0, 1])
        assert not disc_embedding(complete_graph(4), [0, 1, 2, 3])

    def test_bad_boundary(self):
        with pytest.raises(MalformedInputError):
            disc_embedding(cycle_graph(4), [0, 0, 1])
        with pytest.raises(MalformedInputError):
            disc_embedding(cycle_graph(4), [0, 9])

    def test_cylinder_in_annulus(self):
        g = cylinder(4)
        drawing = annulus_drawing(g, [0, 1, 2, 3], [4, 5, 6, 7])
        assert drawing is not None
        assert not is_annulus_embeddable(g, [0, 1, 2, 3], [7, 6, 5, 4])
        assert not is_annulus_embeddable(g, [0, 2, 1, 3], [4, 5, 6, 7])
