"""Hitting-set dichotomies, fans, intrusions, uncrossing, sunflowers and wars."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.configurations.certificate import CONSECUTIVE_CROSSES, GOOSE_BUMP
from src.configurations.checkers import verify_certificate
from src.decomposition.fans import find_fan_or_goose_bump, required_vertices
from src.decomposition.hitting import Dichotomy, crosses_or_hitting_set, goose_bumps_or_hitting_set
from src.decomposition.intrusions import (
    Base,
    Intrusion,
    base_from_arc,
    explain_base,
    find_intrusion,
    find_meridian,
    is_invasion,
    is_minimal_intrusion,
    is_uncrossed,
    side_sizes,
    uncross_intrusions,
    uncross_steps,
    verify_base,
    verify_intrusion,
)
from src.decomposition.sunflower import minimal_member, sunflower_subsets, threshold, verify_sunflower
from src.decomposition.wars import War, disjoint_intrusions, explain_war, induced_society, perimeter_path, verify_war
from src.graph.graph import Graph, Separation, complete_graph, cycle_graph
from src.graph.paths import PathSystem, is_path
from src.society.bumps import find_cross, has_bump
from src.society.cyclic import CyclicOrder
from src.society.depth import LinearDecomposition, depth_exact
from src.society.society import Society
from src.utils.errors import HypothesisUnmet, InvalidWitnessError, MalformedInputError
from tests.strategies import societies


def cycle_society(k: int) -> Society:
    return Society.of(cycle_graph(k), range(k))


def hub_society() -> Society:
    """C8 with one inner vertex 8 joined to 1 and 5."""
    g = cycle_graph(8).with_vertices([8]).add_edges([(8, 1), (8, 5)])
    return Society.of(g, range(8))


def hand_intrusions():
    """Two valid intrusions of the hub society whose A sides cross at 1, 5 and 8."""
    first = Intrusion(
        Separation(frozenset({0, 1, 2, 5, 8}), frozenset({0, 2, 3, 4, 5, 6, 7})),
        Base.of([0, 1, 2], [2, 3, 4, 5, 6, 7, 0]),
        PathSystem.of([(0,), (2,), (1, 8, 5)]),
    )
    second = Intrusion(
        Separation(frozenset({1, 4, 5, 6, 8}), frozenset({0, 1, 2, 3, 4, 6, 7})),
        Base.of([4, 5, 6], [6, 7, 0, 1, 2, 3, 4]),
        PathSystem.of([(4,), (6,), (5, 8, 1)]),
    )
    return first, second


class TestSunflower:
    def test_disjoint_singletons(self):
        core, members = sunflower_subsets([[0], [1], [2]], 1, 3)
        assert core == frozenset()
        assert len(members) == 3

    def test_common_vertex_goes_to_the_core(self):
        family = [[0, 1], [0, 2], [0, 3]]
        core, members = sunflower_subsets(family, 2, 3)
        assert 0 in core
        assert verify_sunflower(family, core, members, 2, 3)

    def test_threshold(self):
        assert threshold(1, 2) == 4
        assert threshold(2, 3) == 72

    def test_minimal_member(self):
        assert minimal_member([frozenset({0, 1}), frozenset({0})]) == frozenset({0})
        with pytest.raises(ValueError):
            minimal_member([])

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            sunflower_subsets([[0, 1, 2]], 2, 1)
        with pytest.raises(ValueError):
            sunflower_subsets([[0]], -1, 1)

    def test_explain_rejects_meeting_members(self):
        assert not verify_sunflower([[0, 1], [1, 2]], [], [[0, 1], [1, 2]], 2, 2)

    @settings(max_examples=50)
    @given(
        family=st.lists(st.sets(st.integers(0, 7), max_size=2), max_size=12),
        t=st.integers(1, 4),
    )
    def test_result_verifies(self, family, t):
        found = sunflower_subsets(family, 2, t)
        if found is not None:
            core, members = found
            assert verify_sunflower(family, core, members, 2, t)


def check_goose_outcome(s: Society, ld: LinearDecomposition, b: int, outcome: Dichotomy) -> None:
    assert (outcome.certificate is None) != (outcome.hitting_set is None)
    if outcome.certificate is not None:
        assert outcome.certificate.kind == GOOSE_BUMP
        assert outcome.certificate.size == b
        assert verify_certificate(s, outcome.certificate)
    else:
        assert len(outcome.hitting_set) <= (b - 1) * ld.depth
        assert not has_bump(s.delete(outcome.hitting_set))


class TestHitting:
    def test_cycle_has_goose_bump(self):
        s = cycle_society(6)
        _, ld = depth_exact(s)
        outcome = goose_bumps_or_hitting_set(s, ld, 3)
        check_goose_outcome(s, ld, 3, outcome)

    def test_edgeless_society_is_hit_by_nothing(self):
        s = Society.of(Graph(4), range(4))
        _, ld = depth_exact(s)
        outcome = goose_bumps_or_hitting_set(s, ld, 1)
        assert outcome.hitting_set == frozenset()
        assert outcome.to_dict() == {"hitting_set": []}

    def test_bad_arguments(self):
        s = cycle_society(4)
        _, ld = depth_exact(s)
        with pytest.raises(ValueError):
            goose_bumps_or_hitting_set(s, ld, 0)
        bad = LinearDecomposition.of([0, 2, 1, 3], [[0, 1], [1, 2], [2, 3], [3, 0]])
        with pytest.raises(InvalidWitnessError):
            goose_bumps_or_hitting_set(s, bad, 2)

    def test_k4_cross(self):
        s = Society.of(complete_graph(4), range(4))
        _, ld = depth_exact(s)
        outcome = crosses_or_hitting_set(s, ld, 1)
        assert outcome.certificate is not None
        assert outcome.certificate.kind == CONSECUTIVE_CROSSES
        assert verify_certificate(s, outcome.certificate)

    @settings(max_examples=20, deadline=None)
    @given(s=societies(min_n=3, max_n=6, max_omega=5), b=st.integers(1, 3))
    def test_goose_dichotomy(self, s, b):
        _, ld = depth_exact(s)
        check_goose_outcome(s, ld, b, goose_bumps_or_hitting_set(s, ld, b))

    @settings(max_examples=20, deadline=None)
    @given(s=societies(min_n=4, max_n=6, min_omega=4, max_omega=5))
    def test_cross_dichotomy(self, s):
        _, ld = depth_exact(s)
        outcome = crosses_or_hitting_set(s, ld, 2)
        if outcome.certificate is not None:
            assert verify_certificate(s, outcome.certificate)
        else:
            assert len(outcome.hitting_set) <= ld.depth
            assert find_cross(s.delete(outcome.hitting_set)) is None


class TestFans:
    def test_required_vertices(self):
        assert required_vertices(2, 3, 1) == 2
        assert required_vertices(3, 2, 2) == 11

    def test_cycle_gives_goose_bump(self):
        s = cycle_society(6)
        _, ld = depth_exact(s)
        cert = find_fan_or_goose_bump(s, ld, 2, 1)
        assert cert.kind == GOOSE_BUMP
        assert verify_certificate(s, cert)

    def test_hypotheses(self):
        s = cycle_society(6)
        _, ld = depth_exact(s)
        with pytest.raises(ValueError):
            find_fan_or_goose_bump(s, ld, 0, 1)
        with pytest.raises(HypothesisUnmet):
            find_fan_or_goose_bump(s, ld, 3, 3)
        pendant = Society.of(cycle_graph(4).with_vertices([4]).add_edges([(0, 4)]), range(4))
        _, ld = depth_exact(pendant)
        with pytest.raises(HypothesisUnmet):
            find_fan_or_goose_bump(pendant, ld, 2, 1)


class TestIntrusions:
    def test_bases(self):
        s = cycle_society(6)
        assert verify_base(s, base_from_arc(s, 0, 3))
        assert explain_base(s, Base.of([0, 1, 2], [2, 3, 4, 5])) == "|X∩Y| must be 2, got 1"
        assert explain_base(s, Base.of([0, 2, 3], [0, 1, 3, 4, 5])) == "X and Y interleave around Ω"
        with pytest.raises(ValueError):
            base_from_arc(s, 1, 1)

    def test_minimal_intrusion_on_a_cycle(self):
        s = cycle_society(6)
        inv = find_intrusion(s, base_from_arc(s, 0, 3))
        assert inv.order == 2
        assert inv.cut == frozenset({0, 3})
        assert inv.A == frozenset({0, 1, 2, 3})
        assert verify_intrusion(s, inv)
        assert is_minimal_intrusion(s, inv)
        assert is_invasion(s, inv)
        assert find_meridian(s, inv) == (0, 1, 2, 3)

    def test_order_is_checked_against_depth(self):
        s = cycle_society(6)
        _, ld = depth_exact(s)
        inv = find_intrusion(s, base_from_arc(s, 0, 3), ld)
        assert inv.order <= 2 * ld.depth + 2

    def test_invalid_base_raises(self):
        with pytest.raises(InvalidWitnessError):
            find_intrusion(cycle_society(6), Base.of([0, 2, 3], [0, 1, 3, 4, 5]))

    def test_dict_round_trip(self):
        s = cycle_society(6)
        inv = find_intrusion(s, base_from_arc(s, 1, 4))
        assert Intrusion.from_dict(inv.to_dict()) == inv
        with pytest.raises(MalformedInputError):
            Intrusion.from_dict({"A": [0]})

    def test_hand_built_intrusions_verify(self):
        s = hub_society()
        for inv in hand_intrusions():
            assert verify_intrusion(s, inv)
            assert not is_minimal_intrusion(s, inv)

    def test_uncrossing(self):
        s = hub_society()
        history = list(uncross_steps(s, hand_intrusions()))
        assert len(history) == 2
        assert not is_uncrossed(history[0])
        final = uncross_intrusions(s, hand_intrusions())
        assert is_uncrossed(final)
        assert side_sizes(final) == (5, 3)
        assert [inv.base for inv in final] == [inv.base for inv in hand_intrusions()]

    def test_overlapping_x_sides_rejected(self):
        s = cycle_society(6)
        family = [find_intrusion(s, base_from_arc(s, 0, 3)), find_intrusion(s, base_from_arc(s, 3, 0))]
        with pytest.raises(InvalidWitnessError):
            uncross_intrusions(s, family)


class TestWars:
    def two_fronts(self):
        s = cycle_society(6)
        invasions = [find_intrusion(s, base_from_arc(s, 0, 2)), find_intrusion(s, base_from_arc(s, 3, 5))]
        return s, War.of(invasions, [(0, 1, 2), (3, 4, 5)])

    def test_war_of_intensity_two(self):
        s, w = self.two_fronts()
        assert w.intensity == 2
        assert verify_war(s, w)
        assert War.from_dict(w.to_dict()) == w

    def test_meeting_a_sides(self):
        s = cycle_society(6)
        invasions = [find_intrusion(s, base_from_arc(s, 0, 3)), find_intrusion(s, base_from_arc(s, 2, 5))]
        w = War.of(invasions, [(0, 1, 2, 3), (2, 3, 4, 5)])
        assert explain_war(s, w) == "A sides of invasions 0 and 1 meet"

    def test_bad_meridian(self):
        s, w = self.two_fronts()
        bent = War.of(w.invasions, [(0, 2), (3, 4, 5)])
        assert explain_war(s, bent) == "meridian 0 is not a path of G[A]"
        with pytest.raises(MalformedInputError):
            War.from_dict({"invasions": [{"A": [0]}]})

    def test_induced_society(self):
        s = cycle_society(6)
        inv = find_intrusion(s, base_from_arc(s, 0, 3))
        sub = induced_society(s, inv)
        assert sub.omega == CyclicOrder([0, 1, 2, 3])
        assert sub.graph.vertices == frozenset({0, 1, 2, 3})

    def test_perimeter_path(self):
        s = cycle_society(6)
        inv = find_intrusion(s, base_from_arc(s, 0, 3))
        p = perimeter_path(s, inv)
        assert p is not None
        assert is_path(s.graph, p)
        assert inv.cut <= set(p)

    def test_disjoint_intrusions(self):
        s = cycle_society(6)
        _, ld = depth_exact(s)
        result = disjoint_intrusions(s, ld, 2, 2)
        assert len(result.separations) == 2
        first, second = result.separations
        assert not first.A & second.A
        assert result.hitting_set == frozenset()
        assert sorted(result.to_dict()) == ["X", "intrusions"]

    def test_disjoint_intrusions_needs_a_goose_bump(self):
        s = Society.of(Graph(4), range(4))
        _, ld = depth_exact(s)
        with pytest.raises(HypothesisUnmet):
            disjoint_intrusions(s, ld, 2, 2)
        with pytest.raises(ValueError):
            disjoint_intrusions(s, ld, 2, 0)
