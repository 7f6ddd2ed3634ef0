"""In-memory knowledge base with a JSONL dump format.

One dump file interleaves two record kinds, distinguished by their top
key: ``{"concept": {...}}`` rows carry a subject profile (subgroups,
aspects, collection stats, search queries), all other rows are assertion
records. Assertion ids are content-addressed (sha1 of "s|p|o", first 16
hex chars) so re-exports are stable and ids survive round trips.

Offsets in provenance spans are byte offsets into the UTF-8 encoding of
the stored sentence, 0-based and end-exclusive; each span carries the
exact substring it covers, original casing included.
"""

from __future__ import annotations

import hashlib
import io
import json
from dataclasses import asdict, dataclass, field
from typing import IO, Iterable, Iterator

from .errors import DumpError, NotFoundError
from .lexicon import FacetLabel

SPAN_KEYS = ("subject", "predicate", "object", "facets")


def assertion_id(subject: str, predicate: str, obj: str) -> str:
    digest = hashlib.sha1(f"{subject}|{predicate}|{obj}".encode("utf-8"))
    return digest.hexdigest()[:16]


@dataclass(frozen=True)
class FacetRecord:
    """One grouped facet on a stored assertion."""

    label: str
    value: str
    frequency: int

    def __post_init__(self):
        FacetLabel(self.label)  # raises on unknown labels
        if self.frequency < 1:
            raise ValueError("facet frequency must be >= 1")
        if not self.value:
            raise ValueError("facet value must be non-empty")


@dataclass(frozen=True)
class Provenance:
    """Where one supporting sentence came from and what it contributed.

    ``spans`` maps subject/predicate/object to {start, end, text} byte
    spans (object may be absent), and "facets" to a list aligned with the
    assertion's stored facet order, with None holes for facets this
    sentence did not attest. The text field is the exact substring, so
    highlighting never needs to re-derive offsets.
    """

    doc_id: str
    url: str
    sent_id: str
    sentence: str
    spans: dict

    def __post_init__(self):
        for key in self.spans:
            if key not in SPAN_KEYS:
                raise ValueError(f"unknown span key {key!r}")


@dataclass(frozen=True)
class Assertion:
    """A consolidated statement about a subject."""

    id: str
    subject: str
    predicate: str
    object: str
    facets: tuple[FacetRecord, ...]
    frequency: int
    cluster_members: tuple[dict, ...] = ()
    provenance: tuple[Provenance, ...] = ()

    def __post_init__(self):
        if self.frequency < 1:
            raise ValueError("assertion frequency must be >= 1")
        expected = assertion_id(self.subject, self.predicate, self.object)
        if self.id != expected:
            raise ValueError(f"assertion id {self.id!r} does not match content")
        if self.cluster_members:
            total = sum(int(m["frequency"]) for m in self.cluster_members)
            if total != self.frequency:
                raise ValueError(
                    f"frequency {self.frequency} != cluster member sum {total}"
                )

    @classmethod
    def build(cls, subject, predicate, obj, facets=(), frequency=1,
              cluster_members=(), provenance=()):
        return cls(
            id=assertion_id(subject, predicate, obj),
            subject=subject,
            predicate=predicate,
            object=obj,
            facets=tuple(facets),
            frequency=frequency,
            cluster_members=tuple(cluster_members),
            provenance=tuple(provenance),
        )


@dataclass(frozen=True)
class KBStats:
    """Collection-level counters for one subject."""

    websites_retained: int = 0
    sentences: int = 0
    raw_assertions: int = 0
    consolidated_assertions: int = 0

    def __post_init__(self):
        if self.consolidated_assertions > self.raw_assertions:
            raise ValueError("consolidated count cannot exceed raw count")

    def summary(self) -> str:
        return (
            f"{self.websites_retained:,} websites, {self.sentences:,} sentences, "
            f"{self.raw_assertions:,} raw assertions, "
            f"{self.consolidated_assertions:,} consolidated assertions"
        )


@dataclass(frozen=True)
class ConceptProfile:
    """Everything known about one subject besides its assertions."""

    name: str
    wordnet_synset_id: str = ""
    wikipedia_title: str = ""
    image_url: str = ""
    alternative_lemmas: tuple[str, ...] = ()
    subgroups: tuple[dict, ...] = ()
    aspects: tuple[dict, ...] = ()
    stats: KBStats = KBStats()
    # extensions beyond the portal's needs: the hypernym drives query
    # templating, and the queries themselves are provenance worth keeping
    hypernym_id: str = ""
    queries: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.name:
            raise ValueError("concept name must be non-empty")
        if self.name != self.name.lower():
            raise ValueError("concept name must be lowercased")


class KnowledgeBase:
    """Concept profiles plus assertions, with lookup and search."""

    def __init__(self):
        self._concepts: dict[str, ConceptProfile] = {}
        self._assertions: dict[str, Assertion] = {}
        self._by_subject: dict[str, list[str]] = {}

    def __len__(self) -> int:
        return len(self._assertions)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KnowledgeBase):
            return NotImplemented
        return (self._concepts == other._concepts
                and self._assertions == other._assertions)

    @property
    def concepts(self) -> dict[str, ConceptProfile]:
        return dict(self._concepts)

    def put_concept(self, profile: ConceptProfile) -> None:
        self._concepts[profile.name] = profile

    def get_concept(self, name: str) -> ConceptProfile:
        try:
            return self._concepts[name]
        except KeyError:
            raise NotFoundError(f"unknown concept {name!r}") from None

    def has_concept(self, name: str) -> bool:
        return name in self._concepts

    def add_assertion(self, assertion: Assertion) -> None:
        if assertion.id in self._assertions:
            raise ValueError(f"duplicate assertion id {assertion.id}")
        self._assertions[assertion.id] = assertion
        self._by_subject.setdefault(assertion.subject, []).append(assertion.id)

    def get_assertion(self, assertion_id: str) -> Assertion:
        try:
            return self._assertions[assertion_id]
        except KeyError:
            raise NotFoundError(f"unknown assertion {assertion_id!r}") from None

    def all_assertions(self) -> Iterator[Assertion]:
        return iter(self._assertions.values())

    def list_assertions(self, subject: str) -> list[Assertion]:
        """Assertions for a subject, grouped by predicate.

        Predicate groups are ordered by total group frequency descending
        then predicate; inside a group rows sort by frequency descending,
        object, id. Unknown subjects return the empty list.
        """
        ids = self._by_subject.get(subject, [])
        rows = [self._assertions[i] for i in ids]
        totals: dict[str, int] = {}
        for row in rows:
            totals[row.predicate] = totals.get(row.predicate, 0) + row.frequency
        rows.sort(key=lambda a: (-totals[a.predicate], a.predicate,
                                 -a.frequency, a.object, a.id))
        return rows

    def search_assertions(self, s: str = "", p: str = "", o: str = "") -> list[Assertion]:
        """Conjunctive case-insensitive substring match over s/p/o.

        At least one pattern must be non-empty; results sort by frequency
        descending then id.
        """
        s, p, o = s.lower(), p.lower(), o.lower()
        if not (s or p or o):
            raise ValueError("search needs at least one of s, p, o")
        hits = [
            a for a in self._assertions.values()
            if s in a.subject.lower() and p in a.predicate.lower() and o in a.object.lower()
        ]
        hits.sort(key=lambda a: (-a.frequency, a.id))
        return hits

    def stats(self, subject: str) -> KBStats:
        return self.get_concept(subject).stats

    # --- dump format -----------------------------------------------

    def export_jsonl(self, stream: IO[str]) -> int:
        """Write the dump; concepts first, then assertions, both sorted.

        Returns the number of lines written. Output is UTF-8 text with
        one JSON object per LF-terminated line and stable key order.
        """
        lines = 0
        for name in sorted(self._concepts):
            record = {"concept": _concept_to_json(self._concepts[name])}
            stream.write(json.dumps(record, ensure_ascii=False, sort_keys=True))
            stream.write("\n")
            lines += 1
        for aid in sorted(self._assertions):
            record = _assertion_to_json(self._assertions[aid])
            stream.write(json.dumps(record, ensure_ascii=False, sort_keys=True))
            stream.write("\n")
            lines += 1
        return lines

    @classmethod
    def import_jsonl(cls, stream: IO[str]) -> "KnowledgeBase":
        """Parse a dump. Malformed rows raise DumpError with the line number."""
        kb = cls()
        for lineno, line in enumerate(stream, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DumpError(f"line {lineno}: invalid JSON: {exc.msg}") from None
            if not isinstance(record, dict):
                raise DumpError(f"line {lineno}: expected an object")
            try:
                if "concept" in record:
                    kb.put_concept(_concept_from_json(record["concept"]))
                else:
                    kb.add_assertion(_assertion_from_json(record))
            except (KeyError, TypeError, ValueError) as exc:
                raise DumpError(f"line {lineno}: {exc}") from None
        return kb

    def export_path(self, path) -> int:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            return self.export_jsonl(fh)

    @classmethod
    def import_path(cls, path) -> "KnowledgeBase":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.import_jsonl(fh)


def _concept_to_json(profile: ConceptProfile) -> dict:
    return {
        "name": profile.name,
        "wordnet_synset_id": profile.wordnet_synset_id,
        "wikipedia_title": profile.wikipedia_title,
        "image_url": profile.image_url,
        "alternative_lemmas": list(profile.alternative_lemmas),
        "subgroups": [dict(s) for s in profile.subgroups],
        "aspects": [dict(a) for a in profile.aspects],
        "stats": asdict(profile.stats),
        "hypernym_id": profile.hypernym_id,
        "queries": list(profile.queries),
    }


def _concept_from_json(data: dict) -> ConceptProfile:
    if not isinstance(data, dict):
        raise ValueError("concept record must be an object")
    stats = data.get("stats", {})
    return ConceptProfile(
        name=data["name"],
        wordnet_synset_id=data.get("wordnet_synset_id", ""),
        wikipedia_title=data.get("wikipedia_title", ""),
        image_url=data.get("image_url", ""),
        alternative_lemmas=tuple(data.get("alternative_lemmas", [])),
        subgroups=tuple(dict(s) for s in data.get("subgroups", [])),
        aspects=tuple(dict(a) for a in data.get("aspects", [])),
        stats=KBStats(
            websites_retained=int(stats.get("websites_retained", 0)),
            sentences=int(stats.get("sentences", 0)),
            raw_assertions=int(stats.get("raw_assertions", 0)),
            consolidated_assertions=int(stats.get("consolidated_assertions", 0)),
        ),
        hypernym_id=data.get("hypernym_id", ""),
        queries=tuple(data.get("queries", [])),
    )


def _assertion_to_json(a: Assertion) -> dict:
    return {
        "id": a.id,
        "subject": a.subject,
        "predicate": a.predicate,
        "object": a.object,
        "facets": [asdict(f) for f in a.facets],
        "frequency": a.frequency,
        "cluster_members": [dict(m) for m in a.cluster_members],
        "provenance": [asdict(p) for p in a.provenance],
    }


def _assertion_from_json(data: dict) -> Assertion:
    facets = tuple(
        FacetRecord(label=f["label"], value=f["value"], frequency=int(f["frequency"]))
        for f in data.get("facets", [])
    )
    provenance = tuple(
        Provenance(
            doc_id=p.get("doc_id", ""),
            url=p.get("url", ""),
            sent_id=p.get("sent_id", ""),
            sentence=p["sentence"],
            spans=dict(p.get("spans", {})),
        )
        for p in data.get("provenance", [])
    )
    return Assertion(
        id=data["id"],
        subject=data["subject"],
        predicate=data["predicate"],
        object=data["object"],
        facets=facets,
        frequency=int(data["frequency"]),
        cluster_members=tuple(dict(m) for m in data.get("cluster_members", [])),
        provenance=provenance,
    )


def dumps_kb(kb: KnowledgeBase) -> str:
    buf = io.StringIO()
    kb.export_jsonl(buf)
    return buf.getvalue()


def loads_kb(text: str) -> KnowledgeBase:
    return KnowledgeBase.import_jsonl(io.StringIO(text))
