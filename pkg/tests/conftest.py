"""Shared fixtures: the toy corpus, its embedding table, the pipeline
KB built from it, and a small hand-assembled KB with known numbers."""

from __future__ import annotations

from pathlib import Path

import pytest

from facetforge.consolidation import ConsolidationConfig
from facetforge.corpus import FilterPolicy
from facetforge.embeddings import load_embeddings
from facetforge.kbstore import (
    Assertion,
    ConceptProfile,
    FacetRecord,
    KBStats,
    KnowledgeBase,
    Provenance,
)
from facetforge.pipeline import run_pipeline

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"
SUBJECT_DIRS = [CORPUS / name for name in ("elephant", "lion", "bartender")]


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def vectors():
    return load_embeddings(FIXTURES / "vectors.txt")


@pytest.fixture(scope="session")
def pipeline_kb(vectors) -> KnowledgeBase:
    return run_pipeline(
        SUBJECT_DIRS,
        policy=FilterPolicy(),
        table=vectors,
        config=ConsolidationConfig(),
    )


def _span(start: int, end: int, text: str) -> dict:
    return {"start": start, "end": end, "text": text}


def build_demo_kb() -> KnowledgeBase:
    """A KB with hand-picked numbers, independent of the pipeline.

    Includes the five-member predation cluster (9+2+1+1+1 = 14), three
    subjects sharing the eat/grass pattern for multi-subject search,
    and the bartender rows the QA tests prime with.
    """
    kb = KnowledgeBase()

    kb.put_concept(ConceptProfile(
        name="lion",
        wordnet_synset_id="lion.n.01",
        wikipedia_title="Lion",
        image_url="https://example.org/images/lion.jpg",
        alternative_lemmas=("lioness",),
        aspects=({"name": "mane", "frequency": 1, "source": "possessive"},),
        stats=KBStats(4, 22, 22, 8),
        hypernym_id="animal.n.01",
        queries=("lion animal facts",),
    ))
    for name in ("capybara", "zebra", "kangaroo"):
        kb.put_concept(ConceptProfile(name=name, stats=KBStats(1, 1, 1, 1)))
    kb.put_concept(ConceptProfile(
        name="bartender",
        wordnet_synset_id="bartender.n.01",
        hypernym_id="professional.n.01",
        queries=("bartender job descriptions",),
        stats=KBStats(4, 12, 12, 8),
    ))

    kb.add_assertion(Assertion.build(
        "lion", "eat", "zebra",
        facets=(FacetRecord("location", "in savanna", 2),),
        frequency=14,
        cluster_members=(
            {"s": "lion", "p": "eat", "o": "zebra", "frequency": 9},
            {"s": "lion", "p": "prey on", "o": "zebra", "frequency": 2},
            {"s": "lion", "p": "feed on", "o": "zebra", "frequency": 1},
            {"s": "lion", "p": "hunt", "o": "zebra", "frequency": 1},
            {"s": "lion", "p": "consume", "o": "zebra", "frequency": 1},
        ),
        provenance=(
            Provenance(
                doc_id="doc01",
                url="https://example.org/lions/diet",
                sent_id="s1",
                sentence="Lions eat zebras.",
                spans={
                    "subject": _span(0, 5, "Lions"),
                    "predicate": _span(6, 9, "eat"),
                    "object": _span(10, 16, "zebras"),
                    "facets": [None],
                },
            ),
            Provenance(
                doc_id="doc03",
                url="https://example.org/lions/prey",
                sent_id="s2",
                sentence="Lions eat zebras in savanna.",
                spans={
                    "subject": _span(0, 5, "Lions"),
                    "predicate": _span(6, 9, "eat"),
                    "object": _span(10, 16, "zebras"),
                    "facets": [_span(20, 27, "savanna")],
                },
            ),
        ),
    ))
    kb.add_assertion(Assertion.build("lion", "live in", "africa", frequency=1))
    kb.add_assertion(Assertion.build("capybara", "eat", "grass", frequency=2))
    kb.add_assertion(Assertion.build("zebra", "eat", "grass", frequency=1))
    kb.add_assertion(Assertion.build("kangaroo", "eat", "grass", frequency=3))
    kb.add_assertion(Assertion.build("bartender", "work in", "bar", frequency=3))
    kb.add_assertion(Assertion.build("bartender", "work in", "restaurant", frequency=1))
    kb.add_assertion(Assertion.build("bartender", "serve", "drink", frequency=2))
    return kb


@pytest.fixture()
def demo_kb() -> KnowledgeBase:
    return build_demo_kb()
