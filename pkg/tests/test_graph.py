"""Graph container, paths and flows."""

import networkx as nx
import pytest
from hypothesis import given

from src.graph.flows import closest_separation, is_k_connected, max_disjoint_paths, min_vertex_cut
from src.graph.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    grid_graph,
    path_graph,
    petersen_graph,
    subdivide_edges,
)
from src.graph.paths import PathSystem, is_path, join, path_edges, subpath
from src.utils.errors import MalformedInputError
from tests.oracles import subset_min_cut
from tests.strategies import graphs, vertex_subsets


class TestGraph:
    def test_edges_are_normalized_and_sorted(self):
        g = Graph(4, [(3, 1), (0, 2), (2, 0), (1, 1)])
        assert g.edges == ((0, 2), (0, 2), (1, 1), (1, 3))
        assert g.edge_count() == 4
        assert g.simple_edge_count() == 2
        assert g.neighbors(1) == frozenset({3})

    def test_rejects_bad_edges(self):
        with pytest.raises(MalformedInputError):
            Graph(3, [(0, 3)])
        with pytest.raises(MalformedInputError):
            Graph(3, [(0, 1, 2)])
        with pytest.raises(MalformedInputError):
            Graph(-1)

    def test_vertex_view(self):
        g = Graph(5, [(0, 4)], vertices=[0, 2, 4])
        assert g.order() == 3
        assert g.to_dict() == {"n": 5, "edges": [[0, 4]], "vertices": [0, 2, 4]}
        with pytest.raises(MalformedInputError):
            Graph(5, [(0, 1)], vertices=[0, 4])

    def test_dict_round_trip(self):
        g = petersen_graph()
        assert Graph.from_dict(g.to_dict()) == g
        with pytest.raises(MalformedInputError):
            Graph.from_dict({"edges": []})

    def test_delete_and_induce(self):
        g = cycle_graph(5)
        h = g.delete_vertices([0])
        assert h.vertices == frozenset({1, 2, 3, 4})
        assert h.edges == ((1, 2), (2, 3), (3, 4))
        assert g.induced([0, 1, 2]).edges == ((0, 1), (1, 2))

    def test_relabel_compacts(self):
        g = Graph(10, [(2, 7), (7, 9)], vertices=[2, 7, 9])
        h, mapping = g.relabel()
        assert mapping == {2: 0, 7: 1, 9: 2}
        assert h.edges == ((0, 1), (1, 2))

    def test_networkx_round_trip(self):
        g = grid_graph(3, 4)
        h = g.to_networkx()
        assert nx.is_isomorphic(h, nx.grid_2d_graph(3, 4))
        assert Graph.from_networkx(h) == g

    def test_components(self):
        g = Graph(6, [(0, 1), (2, 3), (3, 4)])
        assert g.components() == [[0, 1], [2, 3, 4], [5]]
        assert not g.is_connected()
        assert g.is_connected([2, 3, 4])
        assert g.bfs([2], {2, 3}) == {2, 3}

    def test_subdivide(self):
        g = complete_graph(4)
        h, middle = subdivide_edges(g, [(0, 1)])
        m = middle[(0, 1)]
        assert not h.has_edge(0, 1)
        assert h.has_edge(0, m) and h.has_edge(m, 1)
        assert h.order() == 5
        with pytest.raises(MalformedInputError):
            subdivide_edges(path_graph(3), [(0, 2)])

    def test_dot_lists_every_edge(self):
        dot = path_graph(3).to_dot("P3", {0: "start"})
        assert dot.startswith("graph P3 {")
        assert "0 -- 1" in dot and "1 -- 2" in dot
        assert "start" in dot


class TestPaths:
    def test_is_path(self):
        g = cycle_graph(5)
        assert is_path(g, [0, 1, 2])
        assert not is_path(g, [0, 2])
        assert not is_path(g, [0, 1, 0])
        assert not is_path(g, [])

    def test_path_helpers(self):
        p = (4, 0, 1, 2)
        assert path_edges(p) == [(0, 4), (0, 1), (1, 2)]
        assert subpath(p, 2, 0) == (2, 1, 0)
        assert join((0, 1), (1, 2, 3), (3, 4)) == (0, 1, 2, 3, 4)

    def test_path_system_modes(self):
        g = complete_graph(5)
        shared_end = PathSystem.of([(0, 1), (1, 2)], mode="internal")
        assert shared_end.verify(g)
        assert not PathSystem.of([(0, 1), (1, 2)]).verify(g)
        assert PathSystem.of([(0, 1), (1, 2)], shared=[1]).verify(g)
        assert not PathSystem.of([(0, 2, 1), (3, 2, 4)], mode="internal").verify(g)


class TestFlows:
    def test_grid_cut(self):
        g = grid_graph(3, 3)
        cut, paths = min_vertex_cut(g, {0}, {8})
        assert len(cut) == 1
        assert len(paths) == 1
        assert max_disjoint_paths(g, {0, 3, 6}, {2, 5, 8}) == 3

    def test_closest_separation_is_valid(self):
        g = grid_graph(3, 4)
        sep, paths = closest_separation(g, {0, 4, 8}, {3, 7, 11})
        assert sep.is_valid(g)
        assert sep.order == len(paths) == 3
        assert {0, 4, 8} <= sep.A and {3, 7, 11} <= sep.B
        assert paths.verify(g)

    @given(g=graphs(min_n=2, max_n=7).flatmap(lambda g: vertex_subsets(g).map(lambda x: (g, x))))
    def test_cut_matches_brute_force(self, g):
        g, X = g
        Y = set(g.sorted_vertices()[-2:])
        if not X:
            X = {g.sorted_vertices()[0]}
        cut, paths = min_vertex_cut(g, X, Y)
        assert len(cut) == subset_min_cut(g, X, Y) == len(paths)
        assert paths.verify(g)
        rest = g.vertices - cut
        assert not g.bfs(X - cut, rest) & (Y - cut)

    def test_connectivity(self):
        assert is_k_connected(complete_graph(5), 4)
        assert not is_k_connected(complete_graph(5), 5)
        assert is_k_connected(petersen_graph(), 3)
        assert not is_k_connected(path_graph(4), 2)
        with pytest.raises(ValueError):
            is_k_connected(path_graph(2), -1)
