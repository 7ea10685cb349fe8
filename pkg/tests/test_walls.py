"""Elementary walls, wall detection, compasses and the vertex-count bounds."""

from dataclasses import replace

import pytest

from src.graph.graph import Graph, cycle_graph, subdivide_edges
from src.graph.paths import is_path
from src.planarity.embedding import is_planar
from src.society.society import Society
from src.utils.errors import HypothesisUnmet
from src.walls.arithmetic import cosmopolitan_t_for_k, devos_seymour_bound, rural_vertex_bound, rural_vertex_slack
from src.walls.compass import anticompass_society, find_cross_over_wall, is_flat_wall, is_planar_wall, perimeter
from src.walls.detect import (
    WallEmbedding,
    explain_wall_embedding,
    find_wall,
    identity_wall,
    verify_wall_embedding,
)
from src.walls.elementary import gen_elementary_wall, gen_hex_patch, gen_pinwheel, wall_vertices


class TestElementaryWall:
    @pytest.mark.parametrize("h", [2, 4, 6])
    def test_vertex_count(self, h):
        g, wc = gen_elementary_wall(h)
        assert g.order() == (2 * h + 2) * (h + 1) - 2 == wall_vertices(h)
        assert is_planar(g)
        assert max(g.degree(v) for v in g.vertices) == 3
        assert len(set(wc.corners)) == 4

    @pytest.mark.parametrize("h", [0, 1, 3])
    def test_bad_height(self, h):
        with pytest.raises(ValueError):
            gen_elementary_wall(h)

    def test_corners_have_degree_two(self):
        g, wc = gen_elementary_wall(4)
        assert all(g.degree(c) == 2 for c in wc.corners)


class TestPinwheel:
    def test_four_vanes_literal(self):
        rim = [(i, (i + 1) % 16) for i in range(16)]
        hub = [(16 + j, 16 + (j + 1) % 8) for j in range(8)]
        vanes = [(16, 2), (17, 1), (18, 6), (19, 5), (20, 10), (21, 9), (22, 14), (23, 13)]
        assert gen_pinwheel(4) == Graph(24, rim + hub + vanes)

    def test_no_vanes(self):
        with pytest.raises(ValueError):
            gen_pinwheel(0)


class TestWallDetection:
    def test_identity_wall_verifies(self):
        g, w = identity_wall(4)
        assert verify_wall_embedding(g, w)
        assert WallEmbedding.from_dict(g, w.to_dict()) == w

    @pytest.mark.parametrize("h", [2, 4])
    def test_round_trip_through_subdivision(self, h):
        wall, _ = gen_elementary_wall(h)
        for host in (wall, subdivide_edges(wall)[0]):
            w = find_wall(host, h)
            assert w is not None
            assert verify_wall_embedding(host, w)
            assert w.height == h

    def test_no_wall_in_a_cycle(self):
        assert find_wall(cycle_graph(20), 2) is None

    def test_shared_branch_vertex_rejected(self):
        g, w = identity_wall(2)
        branch = dict(w.branch)
        branch[1] = branch[0]
        assert explain_wall_embedding(g, replace(w, branch=branch)) == "two wall vertices share a host vertex"

    def test_broken_path_rejected(self):
        g, w = identity_wall(2)
        h = g.delete_edges([(0, 1)])
        assert not verify_wall_embedding(h, w)


class TestCompass:
    def test_perimeter_is_a_cycle_through_the_corners(self):
        g, w = identity_wall(4)
        ring = perimeter(w)
        assert is_path(g, ring) and g.has_edge(ring[-1], ring[0])
        assert set(w.corners) <= set(ring)

    def test_elementary_wall_is_flat(self):
        g, w = identity_wall(4)
        assert is_planar_wall(g, w)
        assert is_flat_wall(g, w)
        anti = anticompass_society(g, w)
        assert anti.graph.edge_count() == 0
        assert len(anti.omega) == len(perimeter(w))

    def test_grid_walls_carry_crosses(self, crossed_grid):
        for w in crossed_grid.walls:
            assert verify_wall_embedding(crossed_grid.graph, w)
            cross = find_cross_over_wall(crossed_grid.graph, w)
            assert cross is not None
            assert cross.verify(crossed_grid.graph)
            assert not is_planar_wall(crossed_grid.graph, w)


class TestBounds:
    def test_known_values(self):
        assert rural_vertex_bound(0) == 1
        assert rural_vertex_bound(3) == 3
        assert rural_vertex_bound(12) == 19
        with pytest.raises(ValueError):
            rural_vertex_bound(-1)

    def test_named_bound(self):
        assert devos_seymour_bound is rural_vertex_bound
        assert devos_seymour_bound(6) == 7

    @pytest.mark.parametrize("sides", [(1, 1, 1), (2, 1, 1), (2, 2, 2), (3, 2, 1)])
    def test_hex_patches_satisfy_the_bound(self, sides):
        g, boundary, _ = gen_hex_patch(*sides)
        assert len(boundary) == 2 * sum(sides)
        assert rural_vertex_slack(Society.of(g, boundary)) >= 0

    def test_hexagon_is_tight(self):
        g, boundary, _ = gen_hex_patch(1, 1, 1)
        assert g.order() == 7
        assert rural_vertex_slack(Society.of(g, boundary)) == 0

    def test_low_degree_inner_vertex(self):
        g = cycle_graph(4).with_vertices([4]).add_edges([(i, 4) for i in range(4)])
        with pytest.raises(HypothesisUnmet):
            rural_vertex_slack(Society.of(g, range(4)))

    def test_cosmopolitan_height(self):
        assert cosmopolitan_t_for_k(1) == 2
        t = cosmopolitan_t_for_k(3)
        assert t % 2 == 0
        assert wall_vertices(t) > rural_vertex_bound(12)
        assert wall_vertices(t - 2) <= rural_vertex_bound(12)
        with pytest.raises(ValueError):
            cosmopolitan_t_for_k(0)
