"""K6 synthesis from certificates with nests and from two crossed walls."""

import pytest

from src.configurations.certificate import THREE_CROSSED, Certificate
from src.graph.minors import verify_minor_model
from src.graph.paths import PathSystem
from src.synthesis.fixtures import NEST_FIXTURES, Annulus, annulus_fixture, build_fixture, subdivided
from src.synthesis.k6 import (
    GUIDED,
    RESTRICTED_SEARCH,
    k6_from_certificate_nest,
    k6_from_wall_two_crosses,
    synthesize_certificate_nest,
    synthesize_wall_two_crosses,
    wirings,
)
from src.utils.errors import InvalidWitnessError, NoModel, PerpendicularityRequired


def wiggling_three_crossed():
    """
    Three crossed paths on eight legs where P1 climbs back out to the
    outer ring on its way in, so it meets that ring in two pieces.
    """
    lay = Annulus(8, 3)
    at = {"u1": 0, "u2": 1, "u3": 2, "v1": 3, "v2": 4, "v3": 5}
    down = (
        lay.omega(0),
        lay.ring(2, 0),
        lay.ring(1, 0),
        lay.ring(1, 7),
        lay.ring(2, 7),
        lay.ring(2, 6),
        lay.ring(1, 6),
        lay.ring(0, 6),
        lay.inner(6),
    )
    parts = {
        "P1": down + tuple(reversed(lay.leg(3))),
        "P2": lay.bump(1, 4),
        "P3": lay.bump(2, 5),
    }
    return annulus_fixture("wiggle", THREE_CROSSED, lay, parts, at)


class TestCertificateNest:
    @pytest.mark.parametrize("name", NEST_FIXTURES)
    def test_planted_nests(self, fixture_named, name):
        fx = fixture_named(name)
        syn = synthesize_certificate_nest(fx.society, fx.certificate, fx.neighborhood, fx.nest)
        assert verify_minor_model(fx.society.graph, syn.model)
        assert syn.method in (GUIDED, RESTRICTED_SEARCH)
        assert syn.provenance["kind"] == fx.certificate.kind
        assert syn.to_dict()["provenance"]["method"] == syn.method

    @pytest.mark.parametrize("name", NEST_FIXTURES)
    def test_subdivided_nests(self, fixture_named, name):
        fx = subdivided(fixture_named(name))
        model = k6_from_certificate_nest(fx.society, fx.certificate, fx.neighborhood, fx.nest)
        assert verify_minor_model(fx.society.graph, model)

    def test_two_rings(self, fixture_named):
        fx = fixture_named("turtle-nest-2")
        try:
            syn = synthesize_certificate_nest(fx.society, fx.certificate, fx.neighborhood, fx.nest, budget=50000)
        except NoModel as e:
            assert e.diagnostics["guided"] == "the layout needs 3 cycles, the nest has 2"
        else:
            assert syn.method == RESTRICTED_SEARCH
            assert verify_minor_model(fx.society.graph, syn.model)

    def test_wiggle_is_not_perpendicular(self):
        fx = wiggling_three_crossed()
        with pytest.raises(PerpendicularityRequired):
            synthesize_certificate_nest(fx.society, fx.certificate, fx.neighborhood, fx.nest)

    def test_bad_certificate(self, fixture_named):
        fx = fixture_named("three-crossed-nest")
        parts = dict(fx.certificate.parts)
        del parts["P3"]
        broken = Certificate(fx.certificate.kind, parts, dict(fx.certificate.anchors))
        with pytest.raises(InvalidWitnessError):
            synthesize_certificate_nest(fx.society, broken, fx.neighborhood, fx.nest)

    def test_wrong_kind(self, fixture_named):
        fx = fixture_named("three-crossed-nest")
        leap = fixture_named("leap-5")
        with pytest.raises(ValueError):
            synthesize_certificate_nest(fx.society, leap.certificate, fx.neighborhood, fx.nest)

    def test_wirings(self, fixture_named):
        names = [name for name, _ in wirings(fixture_named("turtle").certificate)]
        assert names == ["full", "without-Q2", "without-Q1"]
        only = wirings(fixture_named("three-crossed").certificate)
        assert [name for name, _ in only] == ["full"]
        assert only[0][1] == ("P1", "P2", "P3")


class TestWalls:
    def test_crosses_found_on_both_walls(self, crossed_grid):
        w1, w2 = crossed_grid.walls
        syn = synthesize_wall_two_crosses(crossed_grid.graph, w1, w2)
        assert verify_minor_model(crossed_grid.graph, syn.model)
        assert syn.provenance["crosses"] == {"w1": "found", "w2": "found"}

    def test_given_crosses(self, crossed_grid):
        w1, w2 = crossed_grid.walls
        model = k6_from_wall_two_crosses(crossed_grid.graph, w1, w2, *crossed_grid.crosses)
        assert verify_minor_model(crossed_grid.graph, model)

    def test_one_cross_is_not_enough(self):
        fx = build_fixture("one-cross-grid")
        with pytest.raises(NoModel) as e:
            synthesize_wall_two_crosses(fx.graph, *fx.walls, budget=20000)
        assert e.value.diagnostics["crosses"]["w1"] == "found"

    def test_walls_must_be_disjoint(self, crossed_grid):
        w1, _ = crossed_grid.walls
        with pytest.raises(InvalidWitnessError):
            synthesize_wall_two_crosses(crossed_grid.graph, w1, w1)

    def test_cross_must_join_opposite_corners(self, crossed_grid):
        w1, w2 = crossed_grid.walls
        c1, c2, _, _ = w1.corners
        with pytest.raises(InvalidWitnessError):
            synthesize_wall_two_crosses(crossed_grid.graph, w1, w2, PathSystem.of([(c1,), (c2,)]))


class TestFixtures:
    def test_unknown_name(self):
        with pytest.raises(ValueError):
            build_fixture("nope")

    def test_to_dict_feeds_other_commands(self, fixture_named):
        data = fixture_named("turtle-nest").to_dict()
        assert data["fixture"] == "turtle-nest"
        assert {"n", "edges", "omega", "certificate", "neighborhood", "nest"} <= set(data)
