"""Faceted commonsense knowledge extraction, consolidation and serving."""

from .consolidation import ConsolidationConfig, HacParams, cluster_triples, hac
from .corpus import (
    FilterPolicy,
    ParsedDocument,
    ParsedSentence,
    ParsedToken,
    parse_conllu,
)
from .extraction import (
    Aspect,
    RawAssertion,
    RawFacet,
    Subgroup,
    extract_assertions,
    mine_aspects,
    mine_subgroups,
)
from .kbstore import Assertion, ConceptProfile, KBStats, KnowledgeBase
from .lexicon import FacetLabel, classify_facet
from .pipeline import consolidate_records, extract_subject, ingest_subject, run_pipeline
from .qa import QARequest, QAResult, QASetup, answer, build_prompt
from .retrieval import build_index, retrieve, verbalize

__version__ = "0.1.0"

__all__ = [
    "Aspect",
    "Assertion",
    "ConceptProfile",
    "ConsolidationConfig",
    "FacetLabel",
    "FilterPolicy",
    "HacParams",
    "KBStats",
    "KnowledgeBase",
    "ParsedDocument",
    "ParsedSentence",
    "ParsedToken",
    "QARequest",
    "QAResult",
    "QASetup",
    "RawAssertion",
    "RawFacet",
    "Subgroup",
    "answer",
    "build_index",
    "build_prompt",
    "classify_facet",
    "cluster_triples",
    "consolidate_records",
    "extract_assertions",
    "extract_subject",
    "hac",
    "ingest_subject",
    "mine_aspects",
    "mine_subgroups",
    "parse_conllu",
    "retrieve",
    "run_pipeline",
    "verbalize",
    "__version__",
]
