"""Facet label vocabulary and the data files backing classification.

The eight facet labels form a closed set. The default facet classifier
is a connective lexicon (see ``data/facet_lexicon.json``) with place and
time word lists for disambiguating locative prepositions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib.resources import files


class FacetLabel(str, Enum):
    CAUSE = "cause"
    MANNER = "manner"
    PURPOSE = "purpose"
    TRANSITIVE_OBJECT = "transitive-object"
    DEGREE = "degree"
    LOCATION = "location"
    TEMPORAL = "temporal"
    OTHER_QUALITY = "other-quality"


def _data_text(name: str) -> str:
    return files("facetforge.data").joinpath(name).read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def load_stopwords() -> frozenset[str]:
    words = set()
    for line in _data_text("stopwords.txt").splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            words.add(word)
    return frozenset(words)


@lru_cache(maxsize=1)
def load_plural_overrides() -> dict[str, str]:
    """Irregular singular → plural pairs; everything else pluralizes with +s."""
    return dict(json.loads(_data_text("plurals.json")))


@lru_cache(maxsize=1)
def load_facet_lexicon() -> "FacetLexicon":
    raw = json.loads(_data_text("facet_lexicon.json"))
    return FacetLexicon(
        purpose_connectives=frozenset(raw["purpose_connectives"]),
        cause_connectives=frozenset(raw["cause_connectives"]),
        temporal_connectives=frozenset(raw["temporal_connectives"]),
        manner_connectives=frozenset(raw["manner_connectives"]),
        location_connectives=frozenset(raw["location_connectives"]),
        degree_adverbs=frozenset(raw["degree_adverbs"]),
        place_words=frozenset(raw["place_words"]),
        time_words=frozenset(raw["time_words"]),
    )


@dataclass(frozen=True)
class FacetLexicon:
    purpose_connectives: frozenset[str]
    cause_connectives: frozenset[str]
    temporal_connectives: frozenset[str]
    manner_connectives: frozenset[str]
    location_connectives: frozenset[str]
    degree_adverbs: frozenset[str]
    place_words: frozenset[str]
    time_words: frozenset[str]


def classify_facet(
    connective: str,
    value_phrase: str,
    governing_verb_lemma: str = "",
    *,
    nominal: bool | None = None,
    lexicon: FacetLexicon | None = None,
) -> FacetLabel:
    """Deterministically map a facet to one of the eight labels.

    ``nominal`` is an optional hint from the extractor (the facet value is a
    noun phrase rather than a clause or adverb); without it a small surface
    heuristic is used. Every input yields exactly one label; anything the
    lexicon does not cover falls back to ``other-quality``.
    """
    lex = lexicon or load_facet_lexicon()
    conn = " ".join(connective.lower().split())
    tokens = [t for t in _words(value_phrase)]
    token_set = set(tokens)

    if conn:
        if conn in lex.cause_connectives:
            return FacetLabel.CAUSE
        if conn in lex.temporal_connectives:
            return FacetLabel.TEMPORAL
        if conn in lex.purpose_connectives:
            # "to" heading a noun phrase is directional, not a purpose clause
            if conn == "to" and nominal is True:
                if token_set & lex.time_words:
                    return FacetLabel.TEMPORAL
                if token_set & lex.place_words:
                    return FacetLabel.LOCATION
                return FacetLabel.OTHER_QUALITY
            return FacetLabel.PURPOSE
        if conn in lex.manner_connectives:
            if conn == "by" and token_set & lex.place_words:
                return FacetLabel.LOCATION
            return FacetLabel.MANNER
        if conn in lex.location_connectives:
            if token_set & lex.time_words:
                return FacetLabel.TEMPORAL
            if token_set & lex.place_words:
                return FacetLabel.LOCATION
            return FacetLabel.OTHER_QUALITY
        return FacetLabel.OTHER_QUALITY

    # connective-less facets: supporting adverbs and bare nominals
    if tokens and all(t in lex.degree_adverbs for t in tokens):
        return FacetLabel.DEGREE
    if nominal is True:
        return FacetLabel.TRANSITIVE_OBJECT
    if nominal is None and len(tokens) > 1 and not tokens[-1].endswith("ly"):
        return FacetLabel.TRANSITIVE_OBJECT
    return FacetLabel.OTHER_QUALITY


def _words(phrase: str) -> list[str]:
    out = []
    word = []
    for ch in phrase.lower():
        if ch.isalnum() or ch == "'":
            word.append(ch)
        elif word:
            out.append("".join(word))
            word = []
    if word:
        out.append("".join(word))
    return out


def head_key(phrase: str, stopwords: frozenset[str] | None = None) -> str:
    """Last non-stopword token of a phrase, lowercased; the grouping key
    used when no parse is available."""
    stop = stopwords if stopwords is not None else load_stopwords()
    tokens = _words(phrase)
    for tok in reversed(tokens):
        if tok not in stop:
            return tok
    return tokens[-1] if tokens else ""
