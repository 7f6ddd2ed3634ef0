"""End-to-end orchestration: subject dir → raw records → knowledge base.

The extract step writes an intermediate JSONL file of raw records, one
JSON object per line, four kinds keyed by their single top-level field:

    {"meta": {...}}       one per subject, first line of its block
    {"subgroup": {...}}   mined subgroups for the preceding meta
    {"aspect": {...}}     mined aspects for the preceding meta
    {"assertion": {...}}  one per raw assertion occurrence

Consolidation streams these records (several subject blocks may be
concatenated), merges duplicate triples, clusters near-duplicates per
subject, groups facets, and emits a KnowledgeBase with full provenance.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence

from .consolidation import (
    ConsolidationConfig,
    EmbeddingPairScorer,
    TripleCluster,
    candidate_pairs,
    cluster_triples,
    group_facets,
)
from .corpus import (
    FilterPolicy,
    ParsedDocument,
    SubjectMeta,
    bag_of_words,
    build_search_queries,
    filter_documents,
    load_query_templates,
    load_subject_dir,
)
from .embeddings import EmbeddingTable
from .errors import DumpError
from .extraction import (
    RawAssertion,
    extract_assertions,
    mine_aspects,
    mine_subgroups,
)
from .kbstore import (
    Assertion,
    ConceptProfile,
    FacetRecord,
    KBStats,
    KnowledgeBase,
    Provenance,
)
from .lexicon import load_stopwords


@dataclass(frozen=True)
class ScoredDocument:
    doc_id: str
    score: float
    kept: bool


@dataclass(frozen=True)
class IngestReport:
    """What source discovery decided for one subject directory."""

    meta: SubjectMeta
    queries: tuple[str, ...]
    scored: tuple[ScoredDocument, ...]
    retained: tuple[ParsedDocument, ...]

    @property
    def sentences(self) -> int:
        return sum(len(d.sentences) for d in self.retained)


def ingest_subject(subject_dir, policy: FilterPolicy | None = None) -> IngestReport:
    """Load a subject directory and rank its documents by relevance."""
    policy = policy or FilterPolicy()
    meta, reference, docs = load_subject_dir(subject_dir)
    stoplist = load_stopwords()
    ref_bow = bag_of_words(reference, stoplist)
    ranked = filter_documents(docs, ref_bow, policy, stoplist)
    kept_ids = {doc.doc_id for doc, _ in ranked}

    scored = []
    for doc in docs:
        score = next((s for d, s in ranked if d.doc_id == doc.doc_id), None)
        if score is None:
            from .corpus import relevance_score

            score = relevance_score(bag_of_words(doc, stoplist), ref_bow)
        scored.append(ScoredDocument(doc.doc_id, score, doc.doc_id in kept_ids))
    scored.sort(key=lambda s: (-s.score, s.doc_id))

    queries = build_search_queries(meta.subject, meta.hypernym_id,
                                   load_query_templates())
    return IngestReport(
        meta=meta,
        queries=tuple(queries),
        scored=tuple(scored),
        retained=tuple(doc for doc, _ in ranked),
    )


def extract_subject(
    subject_dir,
    policy: FilterPolicy | None = None,
    table: EmbeddingTable | None = None,
) -> list[dict]:
    """Run discovery + extraction for one subject; return raw records."""
    report = ingest_subject(subject_dir, policy)
    meta = report.meta

    raw: list[RawAssertion] = []
    for doc in report.retained:
        for sent in doc.sentences:
            raw.extend(extract_assertions(sent))

    subgroups = mine_subgroups(meta.subject, report.retained, table)
    aspects = mine_aspects(meta.subject, report.retained, raw)

    records: list[dict] = [{
        "meta": {
            "subject": meta.subject,
            "hypernym_id": meta.hypernym_id,
            "wordnet_synset_id": meta.wordnet_synset_id,
            "wikipedia_title": meta.wikipedia_title,
            "image_url": meta.image_url,
            "alternative_lemmas": list(meta.alternative_lemmas),
            "queries": list(report.queries),
            "websites_retained": len(report.retained),
            "sentences": report.sentences,
            "raw_assertions": len(raw),
        }
    }]
    for sg in subgroups:
        records.append({"subgroup": {
            "name": sg.name,
            "member_phrases": list(sg.member_phrases),
            "frequency": sg.frequency,
        }})
    for asp in aspects:
        records.append({"aspect": {
            "name": asp.name,
            "frequency": asp.frequency,
            "source": asp.source.value,
        }})

    urls = {doc.doc_id: doc.url for doc in report.retained}
    sentences = {
        (doc.doc_id, sent.sent_id): sent.text
        for doc in report.retained for sent in doc.sentences
    }
    for item in raw:
        records.append({"assertion": {
            "subject": item.subject,
            "predicate": item.predicate,
            "object": item.object,
            "subject_span": list(item.subject_span),
            "predicate_span": list(item.predicate_span),
            "object_span": list(item.object_span) if item.object_span else None,
            "facets": [{
                "connective": f.connective,
                "value": f.value,
                "label": f.label.value,
                "start": f.char_start,
                "end": f.char_end,
                "head_lemma": f.head_lemma,
            } for f in item.facets],
            "doc_id": item.doc_id,
            "sent_id": item.sent_id,
            "url": urls.get(item.doc_id, ""),
            "sentence": sentences[(item.doc_id, item.sent_id)],
            "subject_head_lemma": item.subject_head_lemma,
            "object_head_lemma": item.object_head_lemma,
            "predicate_lemmas": list(item.predicate_lemmas),
            "normalized": list(item.normalized_triple),
        }})
    return records


def write_records(records: Iterable[dict], path) -> int:
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True))
            fh.write("\n")
            count += 1
    return count


def read_records(path) -> list[dict]:
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DumpError(f"{path}: line {lineno}: invalid JSON: {exc.msg}") from None
            if not isinstance(record, dict) or len(record) != 1:
                raise DumpError(f"{path}: line {lineno}: expected a single-key object")
            records.append(record)
    return records


@dataclass
class _SubjectBlock:
    meta: dict
    subgroups: list[dict]
    aspects: list[dict]
    assertions: list[dict]


def _split_blocks(records: Sequence[dict]) -> list[_SubjectBlock]:
    blocks: list[_SubjectBlock] = []
    for record in records:
        kind, payload = next(iter(record.items()))
        if kind == "meta":
            blocks.append(_SubjectBlock(payload, [], [], []))
            continue
        if not blocks:
            raise DumpError(f"{kind} record before any meta record")
        if kind == "subgroup":
            blocks[-1].subgroups.append(payload)
        elif kind == "aspect":
            blocks[-1].aspects.append(payload)
        elif kind == "assertion":
            blocks[-1].assertions.append(payload)
        else:
            raise DumpError(f"unknown record kind {kind!r}")
    return blocks


def consolidate_records(
    records: Sequence[dict],
    table: EmbeddingTable | None = None,
    config: ConsolidationConfig = ConsolidationConfig(),
) -> KnowledgeBase:
    """Merge raw records into a consolidated KnowledgeBase.

    Retention: an assertion stays if its subject head lemma is the
    subject (or an alternative lemma), or its normalized subject names a
    mined subgroup. Plain subjects collapse onto the concept name;
    subgroup subjects keep their own identity. Clustering runs per
    distinct stored subject; without an embedding table every distinct
    triple stays its own cluster.
    """
    kb = KnowledgeBase()
    for block in _split_blocks(records):
        _consolidate_block(kb, block, table, config)
    return kb


def _consolidate_block(kb, block, table, config):
    meta = block.meta
    subject = meta["subject"].lower()
    accepted = {subject} | {l.lower() for l in meta.get("alternative_lemmas", [])}
    # any member phrase of a subgroup resolves to that subgroup's name
    subgroup_of: dict[str, str] = {}
    for sg in block.subgroups:
        for member in sg.get("member_phrases", [sg["name"]]):
            subgroup_of.setdefault(member, sg["name"])
        subgroup_of.setdefault(sg["name"], sg["name"])

    retained: list[dict] = []
    for item in block.assertions:
        norm_subject = item["normalized"][0]
        if norm_subject in subgroup_of and norm_subject != subject:
            stored_subject = subgroup_of[norm_subject]
        elif item["subject_head_lemma"] in accepted:
            stored_subject = subject
        else:
            continue
        retained.append({**item, "stored_subject": stored_subject})

    # bucket occurrences by stored subject, then by normalized triple
    by_subject: dict[str, dict[tuple, list[dict]]] = {}
    for item in retained:
        triple = (item["stored_subject"], item["normalized"][1], item["normalized"][2])
        by_subject.setdefault(item["stored_subject"], {}).setdefault(triple, []).append(item)

    consolidated_total = 0
    for stored_subject in sorted(by_subject):
        groups = by_subject[stored_subject]
        items = sorted(
            ((triple, len(occurrences)) for triple, occurrences in groups.items()),
            key=lambda pair: (-pair[1], pair[0]),
        )
        triples = [t for t, _ in items]
        if table is not None and len(triples) > 1:
            candidates = candidate_pairs(triples, table, config.tau_fast)
            scorer = EmbeddingPairScorer(table)
            clusters = cluster_triples(items, scorer, config, candidates)
        else:
            clusters = [
                TripleCluster(representative=t, members=((t, f),), frequency=f)
                for t, f in items
            ]
            clusters.sort(key=lambda c: (-c.frequency, c.representative))
        for cluster in clusters:
            assertion = _build_kb_assertion(cluster, groups)
            kb.add_assertion(assertion)
            consolidated_total += 1

    profile = ConceptProfile(
        name=subject,
        wordnet_synset_id=meta.get("wordnet_synset_id", ""),
        wikipedia_title=meta.get("wikipedia_title", ""),
        image_url=meta.get("image_url", ""),
        alternative_lemmas=tuple(meta.get("alternative_lemmas", [])),
        subgroups=tuple(block.subgroups),
        aspects=tuple(block.aspects),
        stats=KBStats(
            websites_retained=int(meta.get("websites_retained", 0)),
            sentences=int(meta.get("sentences", 0)),
            raw_assertions=int(meta.get("raw_assertions", 0)),
            consolidated_assertions=consolidated_total,
        ),
        hypernym_id=meta.get("hypernym_id", ""),
        queries=tuple(meta.get("queries", [])),
    )
    kb.put_concept(profile)


def _utf8_slice(text: str, start: int, end: int) -> str:
    return text.encode("utf-8")[start:end].decode("utf-8")


def _build_kb_assertion(cluster: TripleCluster, groups) -> Assertion:
    occurrences: list[dict] = []
    for triple, _ in cluster.members:
        occurrences.extend(groups[triple])
    occurrences.sort(key=lambda o: (o["doc_id"], o["sent_id"]))

    observations = []
    for occ in occurrences:
        for f in occ["facets"]:
            value = f"{f['connective']} {f['value']}".strip()
            observations.append((value, f["label"], 1, f["head_lemma"]))
    facet_groups = group_facets(observations)
    value_to_slot: dict[str, int] = {}
    for slot, fg in enumerate(facet_groups):
        for member in fg.member_values:
            value_to_slot.setdefault(member, slot)
    facet_records = tuple(
        FacetRecord(label=fg.label, value=fg.value, frequency=fg.frequency)
        for fg in facet_groups
    )

    provenance = []
    for occ in occurrences:
        sentence = occ["sentence"]

        def span_entry(span):
            if not span:
                return None
            start, end = span
            return {"start": start, "end": end,
                    "text": _utf8_slice(sentence, start, end)}

        facet_slots: list[dict | None] = [None] * len(facet_records)
        for f in occ["facets"]:
            value = f"{f['connective']} {f['value']}".strip()
            slot = value_to_slot.get(value)
            if slot is not None and facet_slots[slot] is None:
                facet_slots[slot] = {
                    "start": f["start"], "end": f["end"],
                    "text": _utf8_slice(sentence, f["start"], f["end"]),
                }
        spans = {
            "subject": span_entry(occ["subject_span"]),
            "predicate": span_entry(occ["predicate_span"]),
            "facets": facet_slots,
        }
        obj_span = span_entry(occ.get("object_span"))
        if obj_span:
            spans["object"] = obj_span
        provenance.append(Provenance(
            doc_id=occ["doc_id"],
            url=occ.get("url", ""),
            sent_id=occ["sent_id"],
            sentence=sentence,
            spans=spans,
        ))

    s, p, o = cluster.representative
    return Assertion.build(
        s, p, o,
        facets=facet_records,
        frequency=cluster.frequency,
        cluster_members=tuple(
            {"s": t[0], "p": t[1], "o": t[2], "frequency": freq}
            for t, freq in cluster.members
        ),
        provenance=tuple(provenance),
    )


def run_pipeline(
    subject_dirs: Sequence,
    policy: FilterPolicy | None = None,
    table: EmbeddingTable | None = None,
    config: ConsolidationConfig = ConsolidationConfig(),
) -> KnowledgeBase:
    """Convenience wrapper: extract every subject dir and consolidate."""
    records: list[dict] = []
    for subject_dir in subject_dirs:
        records.extend(extract_subject(subject_dir, policy, table))
    return consolidate_records(records, table, config)
