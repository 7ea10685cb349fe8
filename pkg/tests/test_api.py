"""HTTP service: status codes, verdicts and the audit trail."""

import json

import pytest
from fastapi.testclient import TestClient

from src.api.main import app
from src.graph.graph import complete_graph, cycle_graph, petersen_graph


@pytest.fixture
def client():
    return TestClient(app)


def society_doc(g, omega):
    return dict(g.to_dict(), omega=list(omega))


class TestHealth:
    def test_root(self, client):
        response = client.get("/")
        assert response.status_code == 200
        assert response.json()["status"] == "healthy"

    def test_health_reports_audit_counts(self, client, audit_file):
        assert client.get("/health").json()["audit"] == {"total_events": 0, "operations": {}}


class TestAnalyze:
    def test_planar(self, client):
        assert client.post("/analyze/planar", json={"graph": complete_graph(4).to_dict()}).json() == {"planar": True}
        assert client.post("/analyze/planar", json={"graph": complete_graph(5).to_dict()}).json() == {"planar": False}

    def test_apex(self, client):
        body = client.post("/analyze/apex", json={"graph": complete_graph(5).to_dict()}).json()
        assert body["apex"] is True

    def test_k6(self, client):
        body = client.post("/analyze/k6", json={"graph": complete_graph(6).to_dict()}).json()
        assert body["k6_minor"] is True
        assert len(body["model"]["branch_sets"]) == 6
        body = client.post("/analyze/k6", json={"graph": cycle_graph(7).to_dict()}).json()
        assert body == {"k6_minor": False, "model": None, "spent": body["spent"]}

    def test_budget_exhausted(self, client):
        response = client.post("/analyze/k6", json={"graph": petersen_graph().to_dict(), "budget": 1})
        assert response.status_code == 422
        assert response.json()["detail"].startswith("analyze/k6:")

    def test_bad_graphs(self, client):
        assert client.post("/analyze/planar", json={"graph": {"n": 2, "edges": [[0, 5]]}}).status_code == 400
        # shape errors are rejected by request validation
        assert client.post("/analyze/planar", json={"graph": {"n": -1}}).status_code == 422
        assert client.post("/analyze/k6", json={"graph": {"n": 1}, "budget": 0}).status_code == 422


class TestSociety:
    def test_rural(self, client):
        body = client.post("/society/rural", json={"society": society_doc(cycle_graph(6), range(6))}).json()
        assert body == {"rural": True}

    def test_depth(self, client):
        body = client.post("/society/depth", json={"society": society_doc(cycle_graph(5), range(5))}).json()
        assert body["depth"] == 2
        assert "decomposition" in body

    def test_depth_too_large(self, client):
        request = {"society": society_doc(cycle_graph(8), range(8)), "limit": 5}
        assert client.post("/society/depth", json=request).status_code == 422


class TestVerify:
    def test_model_verdicts_are_audited(self, client, audit_file):
        request = {"graph": complete_graph(6).to_dict(), "model": {"branch_sets": [[i] for i in range(6)]}}
        good = client.post("/verify/model", json=request).json()
        assert good["valid"] is True and good["violated"] is None
        request["graph"] = complete_graph(6).delete_edges([(2, 3)]).to_dict()
        bad = client.post("/verify/model", json=request).json()
        assert bad["violated"] == "branch sets 2 and 3 are not adjacent"
        assert bad["fingerprint"] != good["fingerprint"]

        trail = json.loads(audit_file.read_text(encoding="utf-8"))
        assert [entry["verdict"] for entry in trail] == [True, False]
        stats = client.get("/health").json()["audit"]
        assert stats["operations"]["verify_minor_model"] == {"True": 1, "False": 1}

    def test_certificate(self, client, fixture_named):
        fx = fixture_named("three-crossed")
        request = {"society": fx.society.to_dict(), "certificate": fx.certificate.to_dict()}
        assert client.post("/verify/certificate", json=request).json()["valid"] is True

    def test_certificate_with_foreign_vertex(self, client):
        request = {
            "society": society_doc(cycle_graph(6), range(6)),
            "certificate": {"kind": "three_crossed", "parts": {"P1": [0, 99]}},
        }
        assert client.post("/verify/certificate", json=request).status_code == 400
