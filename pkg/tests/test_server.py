"""HTTP API endpoints, validated against the shipped JSON schemas."""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import pytest
from fastapi.testclient import TestClient

from facetforge.errors import ModelEndpointError
from facetforge.kbstore import (
    Assertion,
    ConceptProfile,
    KnowledgeBase,
    assertion_id,
    loads_kb,
)
from facetforge.qa import KBRegistry, MockModelClient
from facetforge.server import create_app

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def load_schema(name: str) -> dict:
    return json.loads((SCHEMA_DIR / f"{name}.json").read_text(encoding="utf-8"))


def check(payload: dict, schema_name: str) -> None:
    jsonschema.validate(payload, load_schema(schema_name))


class FailingClient:
    def complete(self, setup, prompt, question, context, num_answers=1):
        raise ModelEndpointError("model endpoint unreachable: boom")


class NoContextHatingClient:
    """Fails only on empty context, to exercise per-row errors."""

    def __init__(self):
        self.inner = MockModelClient()

    def complete(self, setup, prompt, question, context, num_answers=1):
        if not context:
            raise ModelEndpointError("model endpoint unreachable: no context")
        return self.inner.complete(setup, prompt, question, context, num_answers)


@pytest.fixture()
def client(demo_kb):
    registry = KBRegistry()
    registry.add("animals", demo_kb)
    return TestClient(create_app(registry, MockModelClient()))


@pytest.fixture()
def pipeline_client(pipeline_kb):
    registry = KBRegistry()
    registry.add("toy", pipeline_kb)
    return TestClient(create_app(registry, MockModelClient()))


def test_concept_page_payload(client, demo_kb):
    response = client.get("/api/concepts/lion")
    assert response.status_code == 200
    payload = response.json()
    check(payload, "concept")
    assert payload["name"] == "lion"
    assert payload["alternative_lemmas"] == ["lioness"]
    assert payload["stats"]["summary"].startswith("4 websites, 22 sentences")
    ids = [a["id"] for a in payload["assertions"]]
    assert ids == [a.id for a in demo_kb.list_assertions("lion")]
    top = payload["assertions"][0]
    assert (top["predicate"], top["object"]) == ("eat", "zebra")
    assert top["has_facets"] is True
    assert "cluster_members" not in top


def test_concept_lookup_is_case_insensitive(client):
    assert client.get("/api/concepts/LION").status_code == 200


def test_concept_not_found(client):
    response = client.get("/api/concepts/unicorn")
    assert response.status_code == 404
    payload = response.json()
    check(payload, "error")
    assert payload["code"] == "not_found"
    assert payload["status"] == 404


def test_assertion_detail_payload(client):
    wanted = assertion_id("lion", "eat", "zebra")
    response = client.get(f"/api/assertions/{wanted}")
    assert response.status_code == 200
    payload = response.json()
    check(payload, "assertion")
    assert payload["id"] == wanted
    assert payload["frequency"] == 14
    assert len(payload["cluster_members"]) == 5
    assert payload["provenance"]
    spans = payload["provenance"][0]["spans"]
    assert "subject" in spans and "facets" in spans


def test_assertion_not_found(client):
    response = client.get("/api/assertions/deadbeefdeadbeef")
    assert response.status_code == 404
    assert response.json()["code"] == "not_found"


def test_search_orders_by_frequency(client):
    response = client.get("/api/search", params={"o": "grass"})
    assert response.status_code == 200
    payload = response.json()
    check(payload, "search")
    assert [r["subject"] for r in payload["results"]] == [
        "kangaroo", "capybara", "zebra",
    ]


def test_search_requires_a_term(client):
    response = client.get("/api/search")
    assert response.status_code == 400
    payload = response.json()
    check(payload, "error")
    assert payload["code"] == "bad_request"


def test_autocomplete_ranks_by_total_frequency():
    kb = KnowledgeBase()
    kb.put_concept(ConceptProfile(name="cat"))
    kb.put_concept(ConceptProfile(name="caterpillar"))
    kb.add_assertion(Assertion.build("cat", "chase", "mouse", frequency=2))
    kb.add_assertion(Assertion.build("caterpillar", "eat", "leaf", frequency=7))
    registry = KBRegistry()
    registry.add("bugs", kb)
    api = TestClient(create_app(registry, MockModelClient()))
    response = api.get("/api/autocomplete", params={"q": "ca"})
    assert response.status_code == 200
    payload = response.json()
    check(payload, "autocomplete")
    assert payload["names"] == ["caterpillar", "cat"]


def test_autocomplete_rejects_blank_query(client):
    response = client.get("/api/autocomplete", params={"q": "   "})
    assert response.status_code == 400
    assert response.json()["code"] == "bad_request"


def test_autocomplete_caps_at_ten(pipeline_client):
    response = pipeline_client.get("/api/autocomplete", params={"q": "e"})
    assert len(response.json()["names"]) <= 10


def test_qa_masked_prediction(client):
    body = {
        "setup": "masked_prediction",
        "question": "Bartenders work in [MASK].",
        "sources": ["no_context", "kb:animals"],
    }
    response = client.post("/api/qa", json=body)
    assert response.status_code == 200
    payload = response.json()
    check(payload, "qa")
    rows = payload["rows"]
    assert [r["source"] for r in rows] == ["no_context", "kb:animals"]
    assert rows[1]["answers"][0] == {"text": "bar", "confidence": 1.0}
    assert rows[1]["context"].startswith("Bartenders work in bar.")


def test_qa_generative_answers_omit_confidence(client):
    body = {
        "setup": "free_generation",
        "question": "Where do bartenders work?",
        "sources": [{"custom": "Bartenders work in bar. They chat."}],
    }
    response = client.post("/api/qa", json=body)
    assert response.status_code == 200
    payload = response.json()
    check(payload, "qa")
    row = payload["rows"][0]
    assert row["source"] == "custom"
    assert row["answers"][0] == {"text": "Bartenders work in bar."}
    assert "confidence" not in row["answers"][0]


def test_qa_span_prediction_reports_offsets(client):
    context = ("Elephants eat roots, grasses, fruit, and bark, "
               "and they eat a lot of these things.")
    body = {
        "setup": "span_prediction",
        "question": "What do elephants eat?",
        "sources": [{"custom": context}],
    }
    response = client.post("/api/qa", json=body)
    assert response.status_code == 200
    payload = response.json()
    check(payload, "qa")
    row = payload["rows"][0]
    assert row["span"] == [14, 45]
    assert row["answers"][0]["text"] == "roots, grasses, fruit, and bark"


@pytest.mark.parametrize("body", [
    {"setup": "mind_reading", "question": "x?", "sources": ["no_context"]},
    {"question": "x?", "sources": ["no_context"]},
    {"setup": "masked_prediction", "question": "no mask here",
     "sources": ["no_context"]},
    {"setup": "masked_prediction", "question": "Bartenders work in [MASK].",
     "sources": []},
    {"setup": "masked_prediction", "question": "Bartenders work in [MASK].",
     "sources": [{"bogus": True}]},
    {"setup": "masked_prediction", "question": "Bartenders work in [MASK].",
     "sources": ["kb:nope"]},
])
def test_qa_invalid_requests(client, body):
    response = client.post("/api/qa", json=body)
    assert response.status_code == 422
    payload = response.json()
    check(payload, "error")
    assert payload["code"] == "invalid_request"


def test_qa_rejects_non_json_body(client):
    response = client.post(
        "/api/qa", content=b"not json",
        headers={"content-type": "application/json"},
    )
    assert response.status_code == 422
    assert response.json()["code"] == "invalid_request"
    listy = client.post("/api/qa", json=["setup"])
    assert listy.status_code == 422


def test_qa_reports_unreachable_model(demo_kb):
    registry = KBRegistry()
    registry.add("animals", demo_kb)
    broken = TestClient(create_app(registry, FailingClient()))
    body = {
        "setup": "masked_prediction",
        "question": "Bartenders work in [MASK].",
        "sources": ["no_context", "kb:animals"],
    }
    response = broken.post("/api/qa", json=body)
    assert response.status_code == 502
    payload = response.json()
    check(payload, "error")
    assert payload["code"] == "model_unreachable"


def test_qa_keeps_partial_failures_per_row(demo_kb):
    registry = KBRegistry()
    registry.add("animals", demo_kb)
    shaky = TestClient(create_app(registry, NoContextHatingClient()))
    body = {
        "setup": "masked_prediction",
        "question": "Bartenders work in [MASK].",
        "sources": ["no_context", "kb:animals"],
    }
    response = shaky.post("/api/qa", json=body)
    assert response.status_code == 200
    rows = response.json()["rows"]
    assert "error" in rows[0] and rows[0]["answers"] == []
    assert "error" not in rows[1]
    assert rows[1]["answers"][0]["text"] == "bar"


def test_dump_round_trips(client, demo_kb):
    response = client.get("/api/dump")
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("application/jsonl")
    assert loads_kb(response.text) == demo_kb
