"""JSON-over-HTTP service: endpoint contracts and the 400/422 error split."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from lightsout import analysis
from lightsout.gf2 import BitVector
from lightsout.graph import parse_graph
from lightsout.service import create_app

C5 = {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]}
P3 = {"n": 3, "edges": [[0, 1], [1, 2]]}
K2 = {"n": 2, "edges": [[0, 1]]}
K2_K2 = {"n": 4, "edges": [[0, 1], [2, 3]]}


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestAnalyze:
    def test_five_cycle(self, client):
        r = client.post("/api/analyze", json={"graph": C5})
        assert r.status_code == 200
        assert r.json() == {
            "nullity": 0,
            "alwaysSolvable": True,
            "vertexClasses": ["AO"] * 5,
            "oddDominatingCount": 1,
        }

    def test_two_disjoint_edges(self, client):
        r = client.post("/api/analyze", json={"graph": K2_K2})
        assert r.json()["nullity"] == 2
        assert r.json()["oddDominatingCount"] == 4

    def test_byte_identical_responses(self, client):
        a = client.post("/api/analyze", json={"graph": C5})
        b = client.post("/api/analyze", json={"graph": C5})
        assert a.content == b.content


class TestSolve:
    def test_solvable(self, client):
        r = client.post("/api/solve", json={"graph": P3, "config": "111"})
        assert r.json() == {"solvable": True, "pattern": "010", "solutionCount": 1}

    def test_unsolvable_certificate_verifies(self, client):
        r = client.post("/api/solve", json={"graph": K2, "config": "10"})
        doc = r.json()
        assert doc == {"solvable": False, "certificate": "11"}
        cert = BitVector.parse(doc["certificate"])
        config = BitVector.parse("10")
        graph = parse_graph(K2)
        assert config.dot(cert) == 1
        assert analysis.solve_configuration(graph, cert) is not None  # a null pattern solves 0
        assert analysis.nullity(graph) >= 1
        from lightsout.graph import closed_neighborhood_matrix

        assert closed_neighborhood_matrix(graph).mul_vector(cert).mask == 0

    def test_zero_configuration(self, client):
        r = client.post("/api/solve", json={"graph": P3, "config": "000"})
        assert r.json() == {"solvable": True, "pattern": "000", "solutionCount": 1}


class TestWhatif:
    def test_chord_addition(self, client):
        r = client.post("/api/whatif", json={"graph": C5, "u": 0, "v": 2})
        assert r.json() == {
            "action": "add",
            "deltaNu": 0,
            "beforeClasses": {"u": "AO", "v": "AO"},
            "afterClasses": {"u": "AO", "v": "AO"},
            "additionType": "Type2",
        }

    def test_merging_addition(self, client):
        r = client.post("/api/whatif", json={"graph": K2_K2, "u": 0, "v": 2})
        doc = r.json()
        assert doc["action"] == "add"
        assert doc["deltaNu"] == -2

    def test_removal_has_no_type(self, client):
        r = client.post("/api/whatif", json={"graph": C5, "u": 0, "v": 1})
        doc = r.json()
        assert doc["action"] == "remove"
        assert "additionType" not in doc

    def test_delta_matches_reanalysis(self, client):
        before = client.post("/api/analyze", json={"graph": K2_K2}).json()["nullity"]
        delta = client.post("/api/whatif", json={"graph": K2_K2, "u": 0, "v": 2}).json()["deltaNu"]
        edited = {"n": 4, "edges": [[0, 1], [0, 2], [2, 3]]}
        after = client.post("/api/analyze", json={"graph": edited}).json()["nullity"]
        assert after == before + delta


class TestMalformedBodies:
    @pytest.mark.parametrize(
        "content",
        [b"not json", b"[1, 2]", b"null"],
    )
    def test_unparseable_body(self, client, content):
        r = client.post("/api/analyze", content=content, headers={"content-type": "application/json"})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "malformed_body"

    def test_missing_graph(self, client):
        r = client.post("/api/analyze", json={})
        assert r.status_code == 400

    @pytest.mark.parametrize(
        "graph",
        [
            {"n": 2, "edges": [[0, 0]]},
            {"n": 2, "edges": [[0, 5]]},
            {"n": 2, "edges": [[0, 1], [1, 0]]},
            {"n": -1, "edges": []},
        ],
    )
    def test_invalid_graph_documents(self, client, graph):
        r = client.post("/api/analyze", json={"graph": graph})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "malformed_body"

    def test_bad_config_characters(self, client):
        r = client.post("/api/solve", json={"graph": P3, "config": "10x"})
        assert r.status_code == 400

    def test_config_length_mismatch(self, client):
        r = client.post("/api/solve", json={"graph": P3, "config": "11"})
        assert r.status_code == 400

    def test_missing_vertex_field(self, client):
        r = client.post("/api/whatif", json={"graph": C5, "u": 0})
        assert r.status_code == 400

    def test_non_integer_vertex(self, client):
        r = client.post("/api/whatif", json={"graph": C5, "u": "0", "v": 2})
        assert r.status_code == 400

    def test_out_of_range_vertex(self, client):
        r = client.post("/api/whatif", json={"graph": C5, "u": 0, "v": 9})
        assert r.status_code == 400


class TestDomainPreconditions:
    def test_loop_toggle(self, client):
        r = client.post("/api/whatif", json={"graph": C5, "u": 2, "v": 2})
        assert r.status_code == 422
        assert r.json()["error"]["code"] == "invalid_input"

    def test_payload_limit(self):
        small = TestClient(create_app(max_vertices=4))
        r = small.post("/api/analyze", json={"graph": C5})
        assert r.status_code == 422
        assert r.json()["error"]["code"] == "precondition_failed"

    def test_edgeless_graph_document_is_fine(self, client):
        r = client.post("/api/analyze", json={"graph": {"n": 2}})
        assert r.status_code == 200
        assert r.json()["nullity"] == 0
