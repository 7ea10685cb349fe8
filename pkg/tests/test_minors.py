"""K6 minor models: verification and exact search."""

import pytest
from hypothesis import given, settings

from src.graph.graph import Graph, complete_bipartite, complete_graph, grid_graph, petersen_graph, subdivide_edges
from src.graph.minors import MinorModel, explain_minor_model, find_k6_minor, verify_minor_model
from src.utils.errors import BudgetExceeded, MalformedInputError
from tests.oracles import has_clique_minor
from tests.strategies import graphs


def test_k6_is_its_own_model():
    g = complete_graph(6)
    model = find_k6_minor(g)
    assert model is not None
    assert verify_minor_model(g, model)
    assert sorted(len(s) for s in model.branch_sets) == [1] * 6


def test_subdivided_k6_is_found():
    g, _ = subdivide_edges(complete_graph(6))
    model = find_k6_minor(g)
    assert model is not None and verify_minor_model(g, model)


@pytest.mark.parametrize(
    "g",
    [complete_graph(5), petersen_graph(), complete_bipartite(3, 3), grid_graph(4, 4)],
    ids=["K5", "petersen", "K33", "grid"],
)
def test_graphs_without_k6(g):
    assert find_k6_minor(g) is None


def test_explain_names_the_first_violation():
    g = complete_graph(6)
    assert explain_minor_model(g, MinorModel.of([[0], [1], [2], [3], [4]])) == "expected 6 branch sets, got 5"
    assert "intersect" in explain_minor_model(g, MinorModel.of([[0, 1], [1], [2], [3], [4], [5]]))
    assert "empty" in explain_minor_model(g, MinorModel.of([[], [1], [2], [3], [4], [5]]))
    h = g.delete_edges([(0, 1)])
    assert explain_minor_model(h, MinorModel.of([[0], [1], [2], [3], [4], [5]])) == "branch sets 0 and 1 are not adjacent"


def test_disconnected_branch_set_rejected():
    g = complete_graph(7).delete_edges([(0, 6)])
    model = MinorModel.of([[0, 6], [1], [2], [3], [4], [5]])
    assert explain_minor_model(g, model) == "branch set 0 is not connected"


def test_out_of_range_branch_vertex_is_malformed():
    with pytest.raises(MalformedInputError):
        explain_minor_model(complete_graph(6), MinorModel.of([[0], [1], [2], [3], [4], [9]]))


def test_model_dict_round_trip():
    model = MinorModel.of([[5], [0, 1], [2], [3], [4], [6]]).normalized()
    assert MinorModel.from_dict(model.to_dict()) == model
    with pytest.raises(MalformedInputError):
        MinorModel.from_dict({"sets": []})


def test_search_restricted_to_subset():
    g = complete_graph(6).union(Graph(9, [(6, 7), (7, 8)]))
    assert find_k6_minor(g, within=range(6, 9)) is None
    assert find_k6_minor(g, within=range(6)) is not None


def test_budget_exhaustion_raises():
    with pytest.raises(BudgetExceeded) as e:
        find_k6_minor(petersen_graph(), budget=1)
    assert e.value.limit == 1


def test_two_crosses_grid_has_k6_minor(crossed_grid):
    model = find_k6_minor(crossed_grid.graph)
    assert model is not None
    assert verify_minor_model(crossed_grid.graph, model)


@settings(max_examples=40)
@given(g=graphs(min_n=6, max_n=8, max_edges=24))
def test_search_agrees_with_brute_force(g):
    model = find_k6_minor(g)
    assert (model is not None) == has_clique_minor(g, 6)
    if model is not None:
        assert verify_minor_model(g, model)
