"""HTTP API over one or more loaded knowledge bases.

All endpoints are read-only; /api/qa is side-effect-free but not
cacheable. Errors use one flat shape: {"status", "code", "message"}.
The first KB registered is the browsing default; QA requests may name
any registered KB as a context source. Response shapes are pinned by
the JSON schemas in docs/schemas/.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .errors import NotFoundError, RequestError
from .kbstore import Assertion, KnowledgeBase, dumps_kb
from .qa import (
    KBRegistry,
    ModelClient,
    QARequest,
    QASetup,
    QASource,
    answer,
)


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"status": status, "code": code, "message": message},
    )


def _assertion_summary(a: Assertion) -> dict:
    return {
        "id": a.id,
        "subject": a.subject,
        "predicate": a.predicate,
        "object": a.object,
        "frequency": a.frequency,
        "facets": [
            {"label": f.label, "value": f.value, "frequency": f.frequency}
            for f in a.facets
        ],
        "has_facets": bool(a.facets),
    }


def _assertion_detail(a: Assertion) -> dict:
    detail = _assertion_summary(a)
    detail["cluster_members"] = [dict(m) for m in a.cluster_members]
    detail["provenance"] = [
        {
            "doc_id": p.doc_id,
            "url": p.url,
            "sent_id": p.sent_id,
            "sentence": p.sentence,
            "spans": p.spans,
        }
        for p in a.provenance
    ]
    return detail


def _parse_source(item: Any) -> QASource:
    if isinstance(item, str):
        return QASource.parse(item)
    if isinstance(item, dict):
        if "custom" in item:
            return QASource("custom", str(item["custom"]))
        return QASource(item["kind"], item.get("value", ""))
    raise ValueError(f"cannot parse source {item!r}")


def _parse_qa_request(body: dict) -> QARequest:
    try:
        setup = QASetup(body["setup"])
    except (KeyError, ValueError):
        raise RequestError("setup must be one of: " +
                           ", ".join(s.value for s in QASetup)) from None
    try:
        sources = tuple(_parse_source(s) for s in body.get("sources", []))
    except (ValueError, KeyError, TypeError) as exc:
        raise RequestError(f"bad context source: {exc}") from None
    try:
        return QARequest(
            setup=setup,
            question=str(body.get("question", "")),
            sources=sources,
            answer_prefix=str(body.get("answer_prefix", "")),
            k=int(body.get("k", 5)),
            retrieval_method=str(body.get("retrieval_method", "tfidf")),
            num_answers=int(body.get("num_answers", 1)),
        )
    except (TypeError, ValueError) as exc:
        raise RequestError(f"bad request field: {exc}") from None


def create_app(registry: KBRegistry, model_client: ModelClient) -> FastAPI:
    app = FastAPI(title="facetforge", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    def default_kb() -> KnowledgeBase:
        name = registry.default_name
        if name is None:
            raise NotFoundError("no knowledge base loaded")
        kb, _ = registry.get(name)
        return kb

    @app.get("/api/concepts/{name}")
    def get_concept(name: str):
        kb = default_kb()
        try:
            profile = kb.get_concept(name.lower())
        except NotFoundError as exc:
            return _error(404, "not_found", str(exc))
        assertions = kb.list_assertions(profile.name)
        return {
            "name": profile.name,
            "wordnet_synset_id": profile.wordnet_synset_id,
            "wikipedia_title": profile.wikipedia_title,
            "image_url": profile.image_url,
            "alternative_lemmas": list(profile.alternative_lemmas),
            "hypernym_id": profile.hypernym_id,
            "queries": list(profile.queries),
            "subgroups": [dict(s) for s in profile.subgroups],
            "aspects": [dict(a) for a in profile.aspects],
            "stats": {
                "websites_retained": profile.stats.websites_retained,
                "sentences": profile.stats.sentences,
                "raw_assertions": profile.stats.raw_assertions,
                "consolidated_assertions": profile.stats.consolidated_assertions,
                "summary": profile.stats.summary(),
            },
            "assertions": [_assertion_summary(a) for a in assertions],
        }

    @app.get("/api/assertions/{assertion_id}")
    def get_assertion(assertion_id: str):
        kb = default_kb()
        try:
            found = kb.get_assertion(assertion_id)
        except NotFoundError as exc:
            return _error(404, "not_found", str(exc))
        return _assertion_detail(found)

    @app.get("/api/search")
    def search(s: str = "", p: str = "", o: str = ""):
        kb = default_kb()
        try:
            hits = kb.search_assertions(s, p, o)
        except ValueError as exc:
            return _error(400, "bad_request", str(exc))
        return {"results": [_assertion_summary(a) for a in hits]}

    @app.get("/api/autocomplete")
    def autocomplete(q: str = ""):
        if not q.strip():
            return _error(400, "bad_request", "q must be non-empty")
        kb = default_kb()
        prefix = q.strip().lower()
        matches = [n for n in kb.concepts if n.startswith(prefix)]

        def total_frequency(name: str) -> int:
            return sum(a.frequency for a in kb.list_assertions(name))

        matches.sort(key=lambda n: (-total_frequency(n), n))
        return {"names": matches[:10]}

    @app.post("/api/qa")
    async def qa(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(422, "invalid_request", "body must be JSON")
        if not isinstance(body, dict):
            return _error(422, "invalid_request", "body must be a JSON object")
        try:
            qa_request = _parse_qa_request(body)
            result = answer(qa_request, registry, model_client)
        except RequestError as exc:
            return _error(422, "invalid_request", str(exc))
        rows = []
        all_failed = bool(result.rows)
        for row in result.rows:
            entry: dict = {"source": row.source, "context": row.context}
            entry["answers"] = [
                {"text": a.text} if a.confidence is None
                else {"text": a.text, "confidence": a.confidence}
                for a in row.answers
            ]
            if row.span is not None:
                entry["span"] = list(row.span)
            if row.error:
                entry["error"] = row.error
            else:
                all_failed = False
            rows.append(entry)
        if all_failed:
            return _error(502, "model_unreachable", rows[0]["error"])
        return {"rows": rows}

    @app.get("/api/dump")
    def dump():
        return PlainTextResponse(
            dumps_kb(default_kb()), media_type="application/jsonl"
        )

    return app
