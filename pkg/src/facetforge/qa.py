"""Prompt building and per-source answer orchestration.

Four setups are supported: masked_prediction fills a [MASK] slot,
free_generation continues after "A:", guided_generation continues after
a user-supplied answer prefix, and span_prediction locates an answer
substring inside the context (and therefore cannot run without one).

Answers come from a model client. The bundled mock client is fully
deterministic, so the whole QA path runs and tests offline; the HTTP
client posts {setup, prompt, question, context, num_answers} to any
conforming inference server.
"""

from __future__ import annotations

import json
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Protocol, Sequence

from .errors import ModelEndpointError, RequestError
from .kbstore import KnowledgeBase
from .lexicon import load_stopwords
from .retrieval import RetrievalIndex, build_index, content_tokens, retrieve, verbalize

MASK_TOKEN = "[MASK]"

_SENTENCE_SPLIT = re.compile(r"(?<=[.!?])\s+")
# word lists like "roots, grasses, fruit, and bark"; the lookahead keeps
# "and" out of the repeated part so the optional tail can claim it
_COMMA_LIST = re.compile(r"\w+(?:, (?!and\b)\w+)*(?:,? and \w+)?")
_WORD = re.compile(r"[A-Za-z0-9']+")


class QASetup(str, Enum):
    MASKED_PREDICTION = "masked_prediction"
    FREE_GENERATION = "free_generation"
    GUIDED_GENERATION = "guided_generation"
    SPAN_PREDICTION = "span_prediction"


_GENERATIVE = (QASetup.FREE_GENERATION, QASetup.GUIDED_GENERATION)


@dataclass(frozen=True)
class QASource:
    """One context source: no_context, kb:<name>, or custom:<text>."""

    kind: str
    value: str = ""

    def __post_init__(self):
        if self.kind not in ("no_context", "kb", "custom"):
            raise ValueError(f"unknown source kind {self.kind!r}")
        if self.kind == "kb" and not self.value:
            raise ValueError("kb source needs a KB name")

    @classmethod
    def parse(cls, text: str) -> "QASource":
        if text == "no_context":
            return cls("no_context")
        for kind in ("kb", "custom"):
            if text.startswith(kind + ":"):
                return cls(kind, text[len(kind) + 1:])
        raise ValueError(f"cannot parse source {text!r}")

    def describe(self) -> str:
        if self.kind == "no_context":
            return "no_context"
        if self.kind == "kb":
            return f"kb:{self.value}"
        return "custom"


@dataclass(frozen=True)
class QARequest:
    setup: QASetup
    question: str
    sources: tuple[QASource, ...]
    answer_prefix: str = ""
    k: int = 5
    retrieval_method: str = "tfidf"
    num_answers: int = 1


@dataclass(frozen=True)
class ModelAnswer:
    text: str
    confidence: float | None = None


@dataclass(frozen=True)
class QARow:
    source: str
    answers: tuple[ModelAnswer, ...]
    context: str
    span: tuple[int, int] | None = None
    error: str = ""


@dataclass(frozen=True)
class QAResult:
    rows: tuple[QARow, ...]


@dataclass(frozen=True)
class ModelReply:
    answers: tuple[ModelAnswer, ...]
    span: tuple[int, int] | None = None


class ModelClient(Protocol):
    def complete(self, setup: QASetup, prompt: str, question: str,
                 context: str, num_answers: int) -> ModelReply: ...


class KBRegistry:
    """Named KBs with their retrieval indexes, built once at load time."""

    def __init__(self):
        self._entries: dict[str, tuple[KnowledgeBase, RetrievalIndex]] = {}
        self._default: str | None = None

    def add(self, name: str, kb: KnowledgeBase) -> None:
        self._entries[name] = (kb, build_index(kb))
        if self._default is None:
            self._default = name

    def names(self) -> list[str]:
        return list(self._entries)

    @property
    def default_name(self) -> str | None:
        return self._default

    def get(self, name: str) -> tuple[KnowledgeBase, RetrievalIndex]:
        return self._entries[name]

    def __contains__(self, name: str) -> bool:
        return name in self._entries


def build_prompt(setup: QASetup, question: str, context: str = "",
                 answer_prefix: str = "") -> str:
    """Render the model input for one setup.

    Masked prompts append " [SEP] <context>" when a context exists.
    Generation prompts use the C:/Q:/A: layout, dropping the C: line for
    empty contexts; guided generation puts the prefix after "A:".
    Span prediction has no free-text prompt; it serializes the question
    and context as a JSON pair.
    """
    setup = QASetup(setup)
    if setup is QASetup.MASKED_PREDICTION:
        if question.count(MASK_TOKEN) != 1:
            raise RequestError(
                f"masked question must contain {MASK_TOKEN} exactly once"
            )
        return f"{question} [SEP] {context}" if context else question
    if setup is QASetup.GUIDED_GENERATION and not answer_prefix:
        raise RequestError("guided_generation requires an answer prefix")
    if setup in _GENERATIVE:
        lines = []
        if context:
            lines.append(f"C: {context}")
        lines.append(f"Q: {question}")
        answer_line = "A:"
        if setup is QASetup.GUIDED_GENERATION:
            answer_line = f"A: {answer_prefix}"
        lines.append(answer_line)
        return "\n".join(lines)
    return json.dumps({"question": question, "context": context}, sort_keys=True)


def validate_request(request: QARequest, registry: KBRegistry) -> None:
    """Raise RequestError on any contract violation, before any model call."""
    if not request.question.strip():
        raise RequestError("question must be non-empty")
    if not request.sources:
        raise RequestError("at least one context source is required")
    if request.k < 1:
        raise RequestError("k must be >= 1")
    if request.num_answers < 1:
        raise RequestError("num_answers must be >= 1")
    if request.retrieval_method not in ("overlap", "tfidf"):
        raise RequestError(f"unknown retrieval method {request.retrieval_method!r}")
    if request.setup is QASetup.MASKED_PREDICTION:
        if request.question.count(MASK_TOKEN) != 1:
            raise RequestError(
                f"masked question must contain {MASK_TOKEN} exactly once"
            )
    if request.setup is QASetup.GUIDED_GENERATION and not request.answer_prefix:
        raise RequestError("guided_generation requires an answer prefix")
    for source in request.sources:
        if request.setup is QASetup.SPAN_PREDICTION and source.kind == "no_context":
            raise RequestError("span_prediction cannot run without context")
        if source.kind == "kb" and source.value not in registry:
            raise RequestError(f"unknown KB {source.value!r}")


def _row_context(request: QARequest, source: QASource, registry: KBRegistry) -> str:
    if source.kind == "no_context":
        return ""
    if source.kind == "custom":
        return source.value
    _, index = registry.get(source.value)
    hits = retrieve(index, request.question, k=request.k,
                    method=request.retrieval_method)
    return " ".join(h.text for h in hits)


def answer(request: QARequest, registry: KBRegistry,
           client: ModelClient) -> QAResult:
    """Answer one request, one row per source, in request order.

    Validation failures raise before any model traffic. A model failure
    on one row becomes that row's error entry; the other rows are
    unaffected. Rows run concurrently but the output order always
    matches the source order.
    """
    validate_request(request, registry)
    contexts = [_row_context(request, s, registry) for s in request.sources]

    def run_row(pair: tuple[QASource, str]) -> QARow:
        source, context = pair
        prompt = build_prompt(request.setup, request.question, context,
                              request.answer_prefix)
        try:
            reply = client.complete(request.setup, prompt, request.question,
                                    context, request.num_answers)
        except ModelEndpointError as exc:
            return QARow(source=source.describe(), answers=(),
                         context=context, error=str(exc))
        answers = reply.answers
        if request.setup in _GENERATIVE:
            answers = tuple(ModelAnswer(a.text, None) for a in answers)
        return QARow(source=source.describe(), answers=answers,
                     context=context, span=reply.span)

    pairs = list(zip(request.sources, contexts))
    if len(pairs) == 1:
        rows = [run_row(pairs[0])]
    else:
        with ThreadPoolExecutor(max_workers=min(8, len(pairs))) as pool:
            rows = list(pool.map(run_row, pairs))
    return QAResult(rows=tuple(rows))


# --- span baseline -----------------------------------------------------


def _byte_offset(text: str, char_pos: int) -> int:
    return len(text[:char_pos].encode("utf-8"))


def _question_main_verb(question: str) -> str:
    """Last content token of the question, before the mask if present."""
    head = question.split(MASK_TOKEN, 1)[0] if MASK_TOKEN in question else question
    tokens = content_tokens(head)
    return tokens[-1] if tokens else ""


def _sentence_bounds(context: str) -> list[tuple[int, int]]:
    bounds = []
    pos = 0
    for piece in _SENTENCE_SPLIT.split(context):
        start = context.index(piece, pos)
        bounds.append((start, start + len(piece)))
        pos = start + len(piece)
    return bounds


def _enclosing_sentence(context: str, start: int) -> str:
    for s, e in _sentence_bounds(context):
        if s <= start < e:
            return context[s:e]
    return context


def lexical_span_baseline(
    question: str,
    context: str,
    kb: KnowledgeBase | None = None,
) -> tuple[str, int, int, float]:
    """Locate an answer substring in the context without a model.

    Candidates are object phrases of KB assertions whose verbalization
    occurs verbatim in the context, plus comma-separated word lists that
    directly follow the question's main verb. Each candidate scores by
    content-token overlap between the question and its enclosing
    sentence; the best one wins (ties: earlier start, then longer span).
    Returns ("", 0, 0, 0.0) when nothing matches. Offsets are 0-based
    bytes, end exclusive, so encode(context)[start:end] == answer.
    """
    if not context:
        raise RequestError("span prediction needs a non-empty context")
    question_tokens = set(content_tokens(question))
    candidates: list[tuple[int, int]] = []  # char offsets

    if kb is not None:
        for assertion in kb.all_assertions():
            if not assertion.object:
                continue
            sentence = verbalize(assertion)
            obj_at = sentence.lower().rfind(assertion.object.lower())
            if obj_at < 0:
                continue
            search = 0
            while True:
                hit = context.find(sentence, search)
                if hit < 0:
                    break
                candidates.append((hit + obj_at, hit + obj_at + len(assertion.object)))
                search = hit + 1

    verb = _question_main_verb(question)
    if verb:
        for match in re.finditer(rf"\b{re.escape(verb)}\b", context, re.IGNORECASE):
            tail = context[match.end():]
            stripped = tail.lstrip()
            offset = match.end() + (len(tail) - len(stripped))
            list_match = _COMMA_LIST.match(context, offset)
            if list_match:
                text = context[list_match.start():list_match.end()]
                # a lone word after the verb is not a list; skip it so
                # verbatim KB matches keep priority in short contexts
                if "," in text or " and " in text:
                    candidates.append((list_match.start(), list_match.end()))

    if not candidates:
        return "", 0, 0, 0.0

    def overlap(span: tuple[int, int]) -> int:
        sentence = _enclosing_sentence(context, span[0])
        return len(question_tokens.intersection(content_tokens(sentence)))

    best = max(candidates, key=lambda sp: (overlap(sp), -sp[0], sp[1]))
    score = overlap(best)
    confidence = score / len(question_tokens) if question_tokens else 0.0
    answer_text = context[best[0]:best[1]]
    return (
        answer_text,
        _byte_offset(context, best[0]),
        _byte_offset(context, best[1]),
        min(1.0, confidence),
    )


# --- model clients -----------------------------------------------------


class MockModelClient:
    """Deterministic stand-in used when no model endpoint is configured.

    Masked prediction scans the context for the question's verb and
    returns the following content tokens ranked 1, 1/2, 1/3, ...;
    generation echoes the first context sentence; span prediction runs
    the lexical baseline. No state, no randomness.
    """

    def __init__(self, kb: KnowledgeBase | None = None):
        self.kb = kb

    def complete(self, setup, prompt, question, context, num_answers=1) -> ModelReply:
        setup = QASetup(setup)
        if setup is QASetup.MASKED_PREDICTION:
            return self._masked(question, context, num_answers)
        if setup in _GENERATIVE:
            if not context:
                return ModelReply(answers=(ModelAnswer("I don't know."),))
            first = _SENTENCE_SPLIT.split(context.strip())[0]
            return ModelReply(answers=(ModelAnswer(first),))
        text, start, end, confidence = lexical_span_baseline(question, context, self.kb)
        return ModelReply(
            answers=(ModelAnswer(text, confidence),),
            span=(start, end),
        )

    def _masked(self, question: str, context: str, num_answers: int) -> ModelReply:
        verb = _question_main_verb(question)
        stop = load_stopwords()
        found: list[str] = []
        if verb and context:
            tokens = [m.group(0).lower() for m in _WORD.finditer(context)]
            seen_verb = False
            for token in tokens:
                if seen_verb and token not in stop and token not in found:
                    found.append(token)
                    if len(found) >= num_answers:
                        break
                elif token == verb:
                    seen_verb = True
        if not found:
            return ModelReply(answers=(ModelAnswer("unknown", 0.0),))
        answers = tuple(
            ModelAnswer(text, 1.0 / (rank + 1)) for rank, text in enumerate(found)
        )
        return ModelReply(answers=answers)


class HttpModelClient:
    """POSTs prompts to an external inference server.

    Wire contract: request {setup, prompt, question, context,
    num_answers}; response {answers: [{text, confidence?}], span?}.
    Connection problems, timeouts and non-2xx statuses all surface as
    ModelEndpointError so callers can degrade per row.
    """

    def __init__(self, endpoint: str, timeout: float = 10.0):
        if not endpoint:
            raise ValueError("endpoint must be non-empty")
        self.endpoint = endpoint
        self.timeout = timeout

    def complete(self, setup, prompt, question, context, num_answers=1) -> ModelReply:
        import httpx

        payload = {
            "setup": QASetup(setup).value,
            "prompt": prompt,
            "question": question,
            "context": context,
            "num_answers": num_answers,
        }
        try:
            response = httpx.post(self.endpoint, json=payload, timeout=self.timeout)
        except httpx.HTTPError as exc:
            raise ModelEndpointError(f"model endpoint unreachable: {exc}") from None
        if response.status_code != 200:
            raise ModelEndpointError(
                f"model endpoint returned status {response.status_code}"
            )
        try:
            body = response.json()
            answers = tuple(
                ModelAnswer(a["text"], a.get("confidence"))
                for a in body["answers"]
            )
            span = tuple(body["span"]) if body.get("span") else None
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelEndpointError(f"malformed model response: {exc}") from None
        if span is not None and len(span) != 2:
            raise ModelEndpointError("malformed model response: bad span")
        return ModelReply(answers=answers, span=span)
