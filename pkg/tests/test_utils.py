"""Serialization, budgets and the audit trail."""

import json

import pytest

from src.graph.graph import Graph, complete_graph
from src.utils import config
from src.utils.audit_logger import fingerprint, get_audit_trail_stats, load_audit_trail, log_verification
from src.utils.budget import Budget, as_budget
from src.utils.errors import BudgetExceeded, MalformedInputError
from src.utils.serialization import (
    dumps,
    load_certificate,
    load_graph,
    load_minor_model,
    load_society,
    load_target,
    load_truncation_witness,
    load_war,
    read_json,
)


class TestSerialization:
    def test_graph_json_is_canonical(self):
        g = Graph(3, [(2, 1), (0, 1)])
        assert list(g.to_dict()) == ["n", "edges"]
        assert g.to_dict()["edges"] == [[0, 1], [1, 2]]
        assert load_graph(json.loads(dumps(g.to_dict()))) == g

    def test_shape_errors_are_malformed(self):
        with pytest.raises(MalformedInputError, match="GraphModel"):
            load_graph({"edges": []})
        with pytest.raises(MalformedInputError):
            load_graph({"n": -1})
        with pytest.raises(MalformedInputError):
            load_society({"n": 3, "edges": []})
        with pytest.raises(MalformedInputError):
            load_minor_model({"branch_sets": [[0], [1]]})
        with pytest.raises(MalformedInputError):
            load_certificate({"parts": {}})

    def test_range_errors_are_malformed(self):
        with pytest.raises(MalformedInputError):
            load_graph({"n": 2, "edges": [[0, 2]]})

    def test_extra_keys_are_kept_out_of_the_graph(self):
        g = load_graph({"n": 2, "edges": [[0, 1]], "fixture": "anything"})
        assert g == Graph(2, [(0, 1)])

    def test_documents_round_trip(self, fixture_named):
        fx = fixture_named("turtle")
        assert load_society(fx.society.to_dict()) == fx.society
        assert load_certificate(fx.certificate.to_dict()) == fx.certificate
        model = {"branch_sets": [[i] for i in range(6)]}
        assert load_minor_model(model).to_dict() == model

    def test_target_and_war_documents(self):
        host = dict(complete_graph(4).to_dict(), omega=[0, 1, 2, 3])
        t = load_target({"edges": [[0, 2], [1, 3]], "host": host})
        assert t.forest.edge_count() == 2
        with pytest.raises(MalformedInputError):
            load_target({"edges": []})
        with pytest.raises(MalformedInputError):
            load_war({"invasions": [{"A": [0], "B": [0], "X": [0], "Y": [0]}]})

    def test_truncation_witness_needs_both_orders(self):
        inner = {"n": 1, "edges": [], "omega": [0]}
        with pytest.raises(MalformedInputError):
            load_truncation_witness({"inner": inner, "neighborhood": {"n": 1, "edges": [], "omega": [0]}})

    def test_read_json(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("[1, 2", encoding="utf-8")
        with pytest.raises(MalformedInputError):
            read_json(str(bad))
        good = tmp_path / "good.json"
        good.write_text('{"n": 0}', encoding="utf-8")
        assert read_json(str(good)) == {"n": 0}


class TestBudget:
    def test_limit(self):
        b = Budget(3, where="test")
        b.tick(3)
        assert b.remaining == 0
        with pytest.raises(BudgetExceeded) as e:
            b.tick()
        assert e.value.spent == 4

    def test_defaults_and_sharing(self):
        assert Budget().limit == config.DEFAULT_BUDGET
        shared = Budget(10)
        assert as_budget(shared, where="x") is shared
        assert as_budget(5, where="x").limit == 5
        with pytest.raises(ValueError):
            Budget(0)


class TestAuditTrail:
    def test_disabled_by_default(self, tmp_path, monkeypatch):
        monkeypatch.setattr(config, "AUDIT_FILE", str(tmp_path / "trail.json"))
        monkeypatch.setattr(config, "AUDIT_ENABLED", False)
        assert log_verification("verify_model", True) is None
        assert not (tmp_path / "trail.json").exists()
        assert log_verification("verify_model", True, force=True) is not None

    def test_entries_and_stats(self, audit_file):
        first = log_verification("verify_model", True, {"n": 1}, budget={"limit": 9, "spent": 2})
        log_verification("verify_model", False, {"n": 2}, "branch set 0 is empty")
        log_verification("verify_war", True)
        assert first["input"] == fingerprint({"n": 1})
        assert first["budget"] == {"limit": 9, "spent": 2}

        trail = load_audit_trail()
        assert [e["operation"] for e in trail] == ["verify_model", "verify_model", "verify_war"]
        assert trail[1]["violated"] == "branch set 0 is empty"
        assert trail[2]["input"] is None

        stats = get_audit_trail_stats()
        assert stats["total_events"] == 3
        assert stats["operations"]["verify_model"] == {"True": 1, "False": 1}

    def test_unreadable_trail_starts_over(self, audit_file):
        audit_file.write_text("not json", encoding="utf-8")
        assert load_audit_trail() == []
        log_verification("verify_model", True)
        assert len(load_audit_trail()) == 1

    def test_fingerprint_ignores_key_order(self):
        assert fingerprint({"a": 1, "b": 2}) == fingerprint({"b": 2, "a": 1})
        assert len(fingerprint([1])) == 16
