"""Certificates, finders, orderly transactions, bridges, leaps and rural 4-connectivity."""

import json
from dataclasses import replace

import pytest

from src.configurations.bridges import m_bridges, proper_reroute, segments, stabilize
from src.configurations.certificate import FAN, LEAP, THREE_CROSSED, TURTLE, WINDMILL, Certificate
from src.configurations.checkers import explain_certificate, verify_certificate
from src.configurations.finders import find_any, find_certificate
from src.configurations.leaps import (
    NEARLY_RURAL,
    classify_leap_outcomes,
    exposed_vertices,
    leap_sets,
    leap_transaction,
)
from src.configurations.orderly import OrderlyTransaction, t_obstructions, verify_orderly_transaction
from src.configurations.rural4 import find_bad_separation, rurally_4_connected
from src.graph.graph import Graph, complete_graph, cycle_graph, path_graph
from src.society.society import Society
from src.utils.errors import InvalidStepError, InvalidWitnessError, MalformedInputError, TooLarge
from src.utils.serialization import dumps, load_certificate

PLANTED = ["turtle", "three-crossed", "gridlet", "doublecross", "leap-5", "windmill", "fan"]


def three_chords() -> Society:
    return Society.of(Graph(6, [(0, 3), (1, 4), (2, 5)]), range(6))


class TestCertificates:
    @pytest.mark.parametrize("name", PLANTED)
    def test_planted_certificates_verify(self, fixture_named, name):
        fx = fixture_named(name)
        assert explain_certificate(fx.society, fx.certificate) is None

    @pytest.mark.parametrize("name", PLANTED)
    def test_dropping_a_part_is_rejected(self, fixture_named, name):
        fx = fixture_named(name)
        parts = dict(fx.certificate.parts)
        parts.pop(sorted(parts)[0])
        assert not verify_certificate(fx.society, replace(fx.certificate, parts=parts))

    @pytest.mark.parametrize("name", PLANTED)
    def test_broken_path_is_rejected(self, fixture_named, name):
        fx = fixture_named(name)
        parts = dict(fx.certificate.parts)
        longest = max(parts, key=lambda k: (len(parts[k]), k))
        p = parts[longest]
        parts[longest] = (p[0], p[-1]) if len(p) > 2 else (p[0], p[0])
        bent = replace(fx.certificate, parts=parts)
        if len(p) > 2 and fx.society.graph.has_edge(p[0], p[-1]):
            pytest.skip("the ends happen to be adjacent")
        assert not verify_certificate(fx.society, bent)

    def test_sizes(self, fixture_named):
        assert fixture_named("leap-5").certificate.size == 5
        assert fixture_named("windmill").certificate.size == 3
        assert fixture_named("fan").certificate.size == 3
        assert fixture_named("turtle").certificate.size == 0

    def test_unknown_kind(self):
        with pytest.raises(MalformedInputError):
            Certificate("octopus")
        with pytest.raises(MalformedInputError):
            Certificate.from_dict({"parts": {}})

    def test_dict_round_trip(self, fixture_named):
        c = fixture_named("turtle").certificate
        assert Certificate.from_dict(c.to_dict()) == c

    def test_foreign_vertex_is_malformed(self):
        s = three_chords()
        c = Certificate.of(THREE_CROSSED, {"P1": [0, 99]}, {})
        with pytest.raises(MalformedInputError):
            verify_certificate(s, c)

    def test_turtle_order_clause(self, fixture_named):
        fx = fixture_named("turtle")
        anchors = dict(fx.certificate.anchors)
        anchors["u1"], anchors["u2"] = anchors["u2"], anchors["u1"]
        reason = explain_certificate(fx.society, replace(fx.certificate, anchors=anchors))
        assert reason == "(u1, u2, v1, v2, u3, v3) is not clockwise"


class TestFinders:
    def test_three_crossed_chords(self):
        s = three_chords()
        c = find_certificate(s, THREE_CROSSED)
        assert c is not None and verify_certificate(s, c)

    def test_rural_society_has_no_configuration(self):
        s = Society.of(cycle_graph(8), range(8))
        assert find_certificate(s, THREE_CROSSED) is None
        assert find_certificate(s, TURTLE) is None

    def test_sized_kinds(self, fixture_named):
        fx = fixture_named("windmill")
        c = find_certificate(fx.society, WINDMILL, size=2)
        assert c is not None and c.size == 2
        assert verify_certificate(fx.society, c)
        fan = fixture_named("fan")
        assert find_certificate(fan.society, FAN, size=2) is not None

    def test_leap_is_found(self, fixture_named):
        fx = fixture_named("leap-5")
        c = find_certificate(fx.society, LEAP, size=2)
        assert c is not None and verify_certificate(fx.society, c)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            find_certificate(three_chords(), "octopus")
        with pytest.raises(ValueError):
            find_certificate(three_chords(), LEAP)

    def test_find_any_keeps_order(self):
        c = find_any(three_chords(), [TURTLE, THREE_CROSSED])
        assert c is not None and c.kind == THREE_CROSSED


class TestOrderlyTransactions:
    def test_leap_bumps_are_orderly(self, fixture_named):
        fx = fixture_named("leap-5")
        t = leap_transaction(fx.certificate)
        assert t.k == 5
        assert verify_orderly_transaction(fx.society, t)
        assert OrderlyTransaction.from_dict(t.to_dict()) == t

    def test_reversed_bump_is_not_orderly(self, fixture_named):
        fx = fixture_named("leap-5")
        t = leap_transaction(fx.certificate)
        flipped = OrderlyTransaction((tuple(reversed(t.bump(1))),) + t.bumps[1:])
        assert not verify_orderly_transaction(fx.society, flipped)
        with pytest.raises(InvalidWitnessError):
            t_obstructions(fx.society, flipped)

    def test_tunnel(self, fixture_named):
        fx = fixture_named("tunnel")
        report = t_obstructions(fx.society, fx.transaction)
        assert [entry[0] for entry in report.tunnels] == [1]
        assert not report.is_empty()
        assert report.to_dict()["tunnels"][0]["under"] == 1

    def test_rural_society_has_no_obstructions(self):
        s = Society.of(Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]), range(6))
        report = t_obstructions(s, OrderlyTransaction.of([(1, 4)]))
        assert report.is_empty()


class TestBridges:
    def detour(self):
        """Path 0..4 as the frame, 5 hanging off 1 and 3, 6 joining 0 to 2."""
        g = path_graph(5).with_vertices([5, 6]).add_edges([(1, 5), (5, 3), (0, 6), (6, 2)])
        return g, path_graph(5)

    def test_segments(self):
        m = Graph(6, [(0, 1), (1, 2), (1, 3), (3, 4)], vertices=range(6))
        assert sorted(segments(m)) == [(0, 1), (1, 2), (1, 3, 4), (5,)]
        with pytest.raises(MalformedInputError):
            segments(cycle_graph(4))

    def test_bridges_partition_the_other_edges(self):
        g, m = self.detour()
        report = m_bridges(g, m)
        covered = set().union(*(b.edges for b in report.bridges))
        assert covered == set(g.simple_edges()) - set(m.simple_edges())
        assert len(report.unstable()) == 2

    def test_proper_reroute(self):
        g, m = self.detour()
        m2 = proper_reroute(g, m, (1, 5, 3))
        assert m2.has_edge(1, 5) and m2.has_edge(5, 3)
        assert 2 not in m2.vertices

    def test_reroute_through_stable_bridge(self):
        g = Graph(6, [(0, 1), (1, 2), (3, 4), (0, 5), (5, 3)])
        m = Graph(6, [(0, 1), (1, 2), (3, 4)], vertices=range(5))
        with pytest.raises(InvalidStepError):
            proper_reroute(g, m, (0, 5, 3))

    def test_stabilize_lowers_the_potential(self):
        g, m = self.detour()
        before = m_bridges(g, m).potential()
        final, steps = stabilize(g, m)
        assert steps == 1
        assert m_bridges(g, final).potential() < before

    def test_stabilize_stops_behind_two_cuts(self):
        g = path_graph(5).with_vertices([5]).add_edges([(1, 5), (5, 3)])
        final, steps = stabilize(g, path_graph(5))
        assert steps == 0
        assert final == path_graph(5)


class TestLeaps:
    def test_leap_sets(self, fixture_named):
        fx = fixture_named("leap-5")
        sets = leap_sets(fx.society, fx.certificate)
        assert not sets.z & sets.z1
        assert not sets.z & sets.z2

    def test_leap_sets_come_from_the_society(self, fixture_named):
        fx = fixture_named("leap-5")
        reread = load_certificate(json.loads(dumps(fx.certificate.to_dict())))
        assert leap_sets(fx.society, reread) == leap_sets(fx.society, fx.certificate)
        assert exposed_vertices(fx.society, reread) == exposed_vertices(fx.society, fx.certificate)

    def test_exposed_vertices_lie_on_p0(self, fixture_named):
        fx = fixture_named("leap-5")
        exposed = exposed_vertices(fx.society, fx.certificate)
        assert exposed <= set(fx.certificate.parts["P0"])

    def test_invalid_leap(self, fixture_named):
        fx = fixture_named("windmill")
        with pytest.raises(InvalidWitnessError):
            leap_sets(fx.society, fx.certificate)

    def test_k4_is_nearly_rural(self):
        s = Society.of(complete_graph(4), range(4))
        report = classify_leap_outcomes(s)
        assert NEARLY_RURAL in report.detected
        assert report.to_dict()["witnesses"][NEARLY_RURAL] == {"vertex": 0}

    def test_three_chords_outcome(self):
        report = classify_leap_outcomes(three_chords())
        assert THREE_CROSSED in report.detected


class TestRurallyFourConnected:
    def test_cycle(self):
        assert rurally_4_connected(Society.of(cycle_graph(6), range(6)))

    def test_hidden_k5(self):
        g = cycle_graph(4).union(complete_graph(8).induced(range(4, 8))).add_edges([(0, v) for v in range(4, 8)])
        s = Society.of(g, range(4))
        sep = find_bad_separation(s)
        assert sep is not None and sep.is_valid(g)
        assert not rurally_4_connected(s)

    def test_too_large(self):
        with pytest.raises(TooLarge):
            rurally_4_connected(Society.of(cycle_graph(10), range(10)), limit=5)
