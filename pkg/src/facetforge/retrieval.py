"""Turning assertions into sentences and ranking them against queries.

Verbalization is template-free: pluralized subject, predicate, object,
then facets rendered as "connective value" with location, temporal and
purpose facets leading (those read naturally after the object). The
result always ends with a period and a capital letter.

Two ranking methods: plain content-token overlap, and tf-idf where
idf(t) = ln(1 + N / df(t)) over the verbalized corpus. Both are exact
and deterministic; ties resolve by assertion frequency then id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .embeddings import tokenize
from .kbstore import Assertion, KnowledgeBase
from .lexicon import FacetLabel, load_plural_overrides, load_stopwords

_LEAD_LABELS = (FacetLabel.LOCATION, FacetLabel.TEMPORAL, FacetLabel.PURPOSE)


def pluralize(noun_phrase: str) -> str:
    """Pluralize the last word of a noun phrase.

    Irregulars come from a bundled table; words already ending in "s" are
    left alone, everything else takes a plain "s". Good enough for
    verbalization, not a morphology engine.
    """
    words = noun_phrase.split()
    if not words:
        return noun_phrase
    last = words[-1]
    overrides = load_plural_overrides()
    lower = last.lower()
    if lower in overrides:
        plural = overrides[lower]
    elif lower.endswith("s"):
        plural = last
    else:
        plural = last + "s"
    return " ".join(words[:-1] + [plural])


def verbalize(assertion: Assertion) -> str:
    """Render an assertion as one English sentence."""
    parts = [pluralize(assertion.subject), assertion.predicate]
    if assertion.object:
        parts.append(assertion.object)
    lead = [f for f in assertion.facets if FacetLabel(f.label) in _LEAD_LABELS]
    rest = [f for f in assertion.facets if FacetLabel(f.label) not in _LEAD_LABELS]
    for facet in lead + rest:
        parts.append(facet.value)
    text = " ".join(p for p in parts if p)
    text = text[0].upper() + text[1:] if text else text
    if not text.endswith("."):
        text += "."
    return text


def _facet_connected_value(label_value: tuple[str, str]) -> str:
    return " ".join(p for p in label_value if p)


@dataclass(frozen=True)
class IndexEntry:
    assertion_id: str
    text: str
    tokens: tuple[str, ...]
    frequency: int


@dataclass(frozen=True)
class RetrievalIndex:
    entries: tuple[IndexEntry, ...]
    doc_freq: dict
    size: int

    def idf(self, token: str) -> float:
        df = self.doc_freq.get(token, 0)
        return math.log(1.0 + self.size / df) if df else 0.0


def content_tokens(text: str, stopwords: frozenset[str] | None = None) -> list[str]:
    stop = stopwords if stopwords is not None else load_stopwords()
    return [t for t in tokenize(text) if t not in stop]


def build_index(kb: KnowledgeBase) -> RetrievalIndex:
    """Verbalize every assertion and build document frequencies.

    Entries keep the assertion's id, rendered sentence, deduplicated
    content-token set (as a sorted tuple) and frequency. Order follows
    sorted assertion ids so the index is reproducible.
    """
    entries = []
    doc_freq: dict[str, int] = {}
    for assertion in sorted(kb.all_assertions(), key=lambda a: a.id):
        text = verbalize(assertion)
        tokens = tuple(sorted(set(content_tokens(text))))
        for token in tokens:
            doc_freq[token] = doc_freq.get(token, 0) + 1
        entries.append(IndexEntry(assertion.id, text, tokens, assertion.frequency))
    return RetrievalIndex(entries=tuple(entries), doc_freq=doc_freq, size=len(entries))


@dataclass(frozen=True)
class Retrieved:
    assertion_id: str
    text: str
    score: float


def retrieve(
    index: RetrievalIndex,
    query: str,
    k: int = 5,
    method: str = "tfidf",
) -> list[Retrieved]:
    """Top-k index entries for a query.

    ``overlap`` scores by shared content-token count; ``tfidf`` sums
    idf over the shared tokens. Zero-score entries never appear. Ties
    break on assertion frequency descending, then id ascending.
    """
    if method not in ("overlap", "tfidf"):
        raise ValueError(f"unknown method {method!r}")
    if k < 1:
        raise ValueError("k must be >= 1")
    query_tokens = set(content_tokens(query))
    scored: list[tuple[float, int, str, str]] = []
    for entry in index.entries:
        shared = query_tokens.intersection(entry.tokens)
        if not shared:
            continue
        if method == "overlap":
            score = float(len(shared))
        else:
            score = sum(index.idf(t) for t in sorted(shared))
        if score <= 0.0:
            continue
        scored.append((score, entry.frequency, entry.assertion_id, entry.text))
    scored.sort(key=lambda row: (-row[0], -row[1], row[2]))
    return [Retrieved(aid, text, score) for score, _, aid, text in scored[:k]]
