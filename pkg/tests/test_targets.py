"""Targets, rerouting, hypomorphism and perpendicularity to nests."""

import pytest

from src.graph.graph import Graph, complete_graph, cycle_graph
from src.society.nest import Nest
from src.society.society import Society
from src.targets.perpendicular import explain_perpendicular, is_perpendicular, normalize_perpendicular, perpendicularity
from src.targets.target import (
    RerouteStep,
    Target,
    certificate_target,
    complexity,
    critical_vertices,
    explain_step,
    explain_target,
    is_hypomorphic,
    reroute,
    special_vertices,
    verify_target,
)
from src.utils.errors import InvalidStepError, MalformedInputError


def cycle_society(k: int) -> Society:
    return Society.of(cycle_graph(k), range(k))


def branching_target() -> Target:
    """
    Ω = 0 1 2 3 7 8. One tree joins 0, 2 and 7 through 4 (degree three),
    a chord joins 1 and 3, and 8 sits alone. The host also has 5-6-9.
    """
    g = Graph(10, [(0, 4), (4, 9), (9, 2), (4, 5), (5, 7), (1, 3), (5, 6), (6, 9)])
    s = Society.of(g, [0, 1, 2, 3, 7, 8])
    return Target.of(s, [(0, 4), (4, 9), (9, 2), (4, 5), (5, 7), (1, 3)], vertices=[8])


def detour_target() -> Target:
    """Path 0-4-5-2 and chord 1-3 around Ω = 0 1 2 3, with a detour 4-6-5 in the host."""
    g = Graph(7, [(0, 4), (4, 5), (5, 2), (4, 6), (6, 5), (1, 3)])
    s = Society.of(g, [0, 1, 2, 3])
    return Target.of(s, [(0, 4), (4, 5), (5, 2), (1, 3)])


class TestTargets:
    def test_crossing_chords(self):
        t = Target.of(Society.of(complete_graph(4), range(4)), [(0, 2), (1, 3)])
        assert verify_target(t)
        assert complexity(t) == 0
        assert special_vertices(t) == frozenset()
        assert critical_vertices(t) == frozenset(range(4))

    def test_axioms(self):
        s = cycle_society(6)
        assert explain_target(Target.of(s, [(0, 3)])) == "(0, 3) is not an edge of the host"
        assert explain_target(Target.of(s, [(i, (i + 1) % 6) for i in range(6)])) == "F is not a forest"
        assert explain_target(Target.of(s, [(0, 1)])) == "no other component meets Ω strictly between 0 and 1"
        pendant = Society.of(cycle_graph(4).with_vertices([4]).add_edges([(0, 4)]), range(4))
        assert explain_target(Target.of(pendant, [(0, 4)])) == "leaf 4 is not in V(Ω)"

    def test_branching_target(self):
        t = branching_target()
        assert verify_target(t)
        assert special_vertices(t) == frozenset({4})
        assert complexity(t) == 1

    def test_dict_round_trip(self):
        t = branching_target()
        assert Target.from_dict(t.to_dict()) == t
        assert Target.from_dict({"edges": [[0, 4]]}, host=t.host).forest.edge_count() == 1
        with pytest.raises(MalformedInputError):
            Target.from_dict({"edges": []})

    @pytest.mark.parametrize("name", ["three-crossed-nest", "gridlet-nest", "turtle-nest", "doublecross-nest"])
    def test_certificate_targets(self, fixture_named, name):
        fx = fixture_named(name)
        assert verify_target(certificate_target(fx.society, fx.certificate))

    def test_leap_is_not_a_target_kind(self, fixture_named):
        fx = fixture_named("leap-5")
        with pytest.raises(ValueError):
            certificate_target(fx.society, fx.certificate)


class TestRerouting:
    def test_plain_detour(self):
        t = detour_target()
        t2 = reroute(t, RerouteStep((4, 6, 5)))
        assert t2.forest.has_edge(4, 6) and t2.forest.has_edge(6, 5)
        assert not t2.forest.has_edge(4, 5)
        assert verify_target(t2)
        assert is_hypomorphic(t, t2)

    def test_rejected_steps(self):
        t = detour_target()
        assert explain_step(t, RerouteStep((4, 5))) == "the rerouting path is an edge of F"
        assert explain_step(t, RerouteStep((0, 4))) == "the rerouting path must avoid V(Ω)"
        assert explain_step(t, RerouteStep((4, 2))) == "the rerouting path is not a path of G"
        with pytest.raises(InvalidStepError):
            reroute(t, RerouteStep((4, 5)))

    def test_special_vertex_needs_a_side(self):
        t = branching_target()
        assert explain_step(t, RerouteStep((5, 6, 9))) == "the cycle has special vertex 4; side must name 5 or 9"

        near_nine = reroute(t, RerouteStep((5, 6, 9), side=9))
        assert not near_nine.forest.has_edge(4, 9)
        assert special_vertices(near_nine) == frozenset({5})
        assert complexity(near_nine) == complexity(t)
        assert not is_hypomorphic(t, near_nine)

        near_five = reroute(t, RerouteStep((5, 6, 9), side=5))
        assert not near_five.forest.has_edge(4, 5)
        assert special_vertices(near_five) == frozenset({9})

    def test_step_dict_round_trip(self):
        step = RerouteStep((5, 6, 9), side=9)
        assert RerouteStep.from_dict(step.to_dict()) == step
        with pytest.raises(MalformedInputError):
            RerouteStep.from_dict({"side": 1})


class TestPerpendicularity:
    def test_certificate_legs_cross_every_cycle(self, fixture_named):
        fx = fixture_named("three-crossed-nest")
        f = certificate_target(fx.society, fx.certificate).forest
        report = perpendicularity(f, fx.neighborhood, fx.nest)
        assert report.perpendicular
        assert report.crosses_every_cycle
        assert len(report.paths) == 6
        assert report.to_dict()["perpendicular"] is True

    def test_short_leg(self, fixture_named):
        fx = fixture_named("three-crossed-nest")
        f = Graph(fx.graph.n, [(0, 6), (6, 12), (12, 18)], vertices=[0, 6, 12, 18])
        assert explain_perpendicular(f, fx.neighborhood, fx.nest) == "path 0..18 does not join V(Ω) to V(Ω0)"

    def test_wiggle_meets_a_cycle_twice(self, fixture_named):
        fx = fixture_named("three-crossed-nest")
        route = [0, 6, 12, 13, 7, 8, 14, 20, 26]
        f = Graph(fx.graph.n, list(zip(route, route[1:])), vertices=route)
        assert explain_perpendicular(f, fx.neighborhood, fx.nest) == "path 0..26 meets C2 in 2 pieces"

    def test_bad_nest(self, fixture_named):
        fx = fixture_named("three-crossed-nest")
        f = Graph(fx.graph.n)
        assert explain_perpendicular(f, fx.neighborhood, Nest.of([[0, 1, 2]])).startswith("nest:")

    def test_normalize_keeps_a_perpendicular_target(self, fixture_named):
        fx = fixture_named("gridlet-nest")
        t = certificate_target(fx.society, fx.certificate)
        result = normalize_perpendicular(t, fx.neighborhood, fx.nest, length=2)
        assert result.steps == []
        assert len(result.nest) == 2
        assert is_perpendicular(result.target.forest, fx.neighborhood, result.nest)
        with pytest.raises(ValueError):
            normalize_perpendicular(t, fx.neighborhood, fx.nest, length=4)
