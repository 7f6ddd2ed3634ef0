"""Pre-parsed corpus ingestion: CoNLL-U documents, bag-of-words relevance.

One directory per subject holds ``*.conllu`` document files plus
``reference.conllu`` (the encyclopedia stand-in used for relevance
filtering) and ``meta.json``. All offsets in this package are 0-based
byte offsets into the UTF-8 encoding of the sentence text, end
exclusive.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable

from .errors import ConlluParseError, TokenSpanError


@dataclass(frozen=True)
class ParsedToken:
    """One dependency-annotated token.

    ``index`` is 1-based; ``head`` is the index of the governor, 0 for the
    root. ``char_start``/``char_end`` are byte offsets into the sentence
    text.
    """

    index: int
    surface: str
    lemma: str
    upos: str
    head: int
    deprel: str
    char_start: int
    char_end: int


@dataclass(frozen=True)
class ParsedSentence:
    text: str
    tokens: tuple[ParsedToken, ...]
    doc_id: str
    sent_id: str

    def root(self) -> ParsedToken | None:
        for tok in self.tokens:
            if tok.head == 0:
                return tok
        return None

    def children(self, index: int) -> list[ParsedToken]:
        return [t for t in self.tokens if t.head == index]

    def subtree(self, index: int) -> list[ParsedToken]:
        """Tokens of the subtree rooted at ``index``, in sentence order."""
        picked = {index}
        changed = True
        while changed:
            changed = False
            for tok in self.tokens:
                if tok.head in picked and tok.index not in picked:
                    picked.add(tok.index)
                    changed = True
        return [t for t in self.tokens if t.index in picked]


@dataclass(frozen=True)
class ParsedDocument:
    doc_id: str
    url: str
    sentences: tuple[ParsedSentence, ...]


@dataclass(frozen=True)
class BagOfWords:
    """Lemma → positive count; zero-count entries are never stored."""

    counts: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if any(c <= 0 for c in self.counts.values()):
            raise ValueError("bag-of-words entries must be positive")

    def __bool__(self) -> bool:
        return bool(self.counts)


@dataclass(frozen=True)
class QueryTemplate:
    """Search-query pattern for one hypernym; ``{subject}`` is the slot."""

    hypernym_id: str
    template: str

    def __post_init__(self):
        if self.template.count("{subject}") != 1:
            raise ValueError(
                f"template {self.template!r} must contain the {{subject}} slot exactly once"
            )


@dataclass(frozen=True)
class FilterPolicy:
    min_score: float = 0.15
    max_keep: int | None = 500

    def __post_init__(self):
        if self.max_keep is not None and self.max_keep < 0:
            raise ValueError("max_keep must be >= 0")


def _iter_lines(stream: str | IO[str] | Iterable[str]) -> Iterable[str]:
    if isinstance(stream, str):
        return stream.splitlines()
    return stream


def parse_conllu(stream: str | IO[str] | Iterable[str], doc_id: str = "", url: str = "") -> ParsedDocument:
    """Parse a CoNLL-U stream into a :class:`ParsedDocument`.

    Token lines carry ten tab-separated columns; blank lines separate
    sentences; ``# text = ...`` comments give the original sentence text,
    from which token spans are reconstructed by left-to-right surface
    matching on the UTF-8 bytes. Multiword-token ranges and empty nodes
    are skipped. Raises :class:`ConlluParseError` for malformed lines and
    :class:`TokenSpanError` when a surface cannot be located.
    """
    sentences: list[ParsedSentence] = []
    rows: list[tuple[int, list[str]]] = []
    text_line: str | None = None
    sent_id: str | None = None

    def flush():
        nonlocal rows, text_line, sent_id
        if rows:
            sid = sent_id if sent_id is not None else str(len(sentences) + 1)
            sentences.append(_build_sentence(rows, text_line, doc_id, sid))
        rows = []
        text_line = None
        sent_id = None

    for lineno, raw in enumerate(_iter_lines(stream), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                key, _, value = body.partition("=")
                key = key.strip()
                if key == "text":
                    text_line = value.strip()
                elif key == "sent_id":
                    sent_id = value.strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluParseError(f"line {lineno}: expected 10 columns, got {len(cols)}")
        if "-" in cols[0] or "." in cols[0]:
            continue  # multiword-token range / empty node
        try:
            int(cols[0])
            int(cols[6])
        except ValueError:
            raise ConlluParseError(f"line {lineno}: non-integer ID or HEAD column") from None
        rows.append((lineno, cols))
    flush()
    return ParsedDocument(doc_id=doc_id, url=url, sentences=tuple(sentences))


def _build_sentence(rows, text_line: str | None, doc_id: str, sent_id: str) -> ParsedSentence:
    surfaces = [cols[1] for _, cols in rows]
    text = text_line if text_line is not None else " ".join(surfaces)
    data = text.encode("utf-8")

    indices = [int(cols[0]) for _, cols in rows]
    if indices != list(range(1, len(rows) + 1)):
        first = rows[0][0]
        raise ConlluParseError(
            f"sentence starting at line {first}: token indices must be contiguous from 1"
        )
    roots = [cols for _, cols in rows if int(cols[6]) == 0]
    if len(roots) != 1:
        first = rows[0][0]
        raise ConlluParseError(
            f"sentence starting at line {first}: expected exactly one root, got {len(roots)}"
        )

    tokens = []
    cursor = 0
    for lineno, cols in rows:
        head = int(cols[6])
        if head > len(rows):
            raise ConlluParseError(f"line {lineno}: head {head} out of range")
        needle = cols[1].encode("utf-8")
        pos = data.find(needle, cursor)
        if pos < 0:
            raise TokenSpanError(
                f"line {lineno}: surface {cols[1]!r} not found in sentence text {text!r}"
            )
        tokens.append(
            ParsedToken(
                index=int(cols[0]),
                surface=cols[1],
                lemma=cols[2],
                upos=cols[3],
                head=head,
                deprel=cols[7],
                char_start=pos,
                char_end=pos + len(needle),
            )
        )
        cursor = pos + len(needle)
    return ParsedSentence(text=text, tokens=tuple(tokens), doc_id=doc_id, sent_id=sent_id)


def serialize_conllu(doc: ParsedDocument) -> str:
    """Render a document back to CoNLL-U; inverse of :func:`parse_conllu`
    on all token fields."""
    blocks = []
    for sent in doc.sentences:
        lines = [f"# sent_id = {sent.sent_id}", f"# text = {sent.text}"]
        for tok in sent.tokens:
            lines.append(
                "\t".join(
                    [
                        str(tok.index),
                        tok.surface,
                        tok.lemma,
                        tok.upos,
                        "_",
                        "_",
                        str(tok.head),
                        tok.deprel,
                        "_",
                        "_",
                    ]
                )
            )
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def bag_of_words(doc: ParsedDocument, stoplist: frozenset[str] | set[str] = frozenset()) -> BagOfWords:
    """Counts of lowercased lemmas of alphabetic tokens, stoplist removed."""
    counts: dict[str, int] = {}
    for sent in doc.sentences:
        for tok in sent.tokens:
            if not tok.surface.isalpha():
                continue
            lemma = tok.lemma.lower()
            if not lemma or lemma in stoplist:
                continue
            counts[lemma] = counts.get(lemma, 0) + 1
    return BagOfWords(counts=counts)


def relevance_score(doc_bow: BagOfWords, ref_bow: BagOfWords) -> float:
    """Cosine similarity of the two count vectors over the union vocabulary."""
    if not doc_bow or not ref_bow:
        return 0.0
    dot = sum(c * ref_bow.counts.get(w, 0) for w, c in doc_bow.counts.items())
    norm_a = math.sqrt(sum(c * c for c in doc_bow.counts.values()))
    norm_b = math.sqrt(sum(c * c for c in ref_bow.counts.values()))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return dot / (norm_a * norm_b)


def filter_documents(
    docs: Iterable[ParsedDocument],
    ref_bow: BagOfWords,
    policy: FilterPolicy = FilterPolicy(),
    stoplist: frozenset[str] | set[str] = frozenset(),
) -> list[tuple[ParsedDocument, float]]:
    """Retain documents scoring at least ``min_score`` against the reference.

    Returns (document, score) pairs sorted by score descending, ties broken
    by doc_id ascending, truncated to ``max_keep``.
    """
    scored = []
    for doc in docs:
        score = relevance_score(bag_of_words(doc, stoplist), ref_bow)
        if score >= policy.min_score:
            scored.append((doc, score))
    scored.sort(key=lambda pair: (-pair[1], pair[0].doc_id))
    if policy.max_keep is not None:
        scored = scored[: policy.max_keep]
    return scored


def build_search_queries(
    subject: str, hypernym_id: str, templates: Iterable[QueryTemplate]
) -> list[str]:
    """Instantiate every matching hypernym template; fall back to
    ``"<subject> facts"`` when none matches."""
    queries = [
        t.template.replace("{subject}", subject)
        for t in templates
        if t.hypernym_id == hypernym_id
    ]
    return queries if queries else [f"{subject} facts"]


@dataclass(frozen=True)
class SubjectMeta:
    """Contents of a subject directory's ``meta.json``."""

    subject: str
    hypernym_id: str = ""
    wordnet_synset_id: str = ""
    wikipedia_title: str = ""
    image_url: str = ""
    alternative_lemmas: tuple[str, ...] = ()


def load_query_templates() -> list[QueryTemplate]:
    """The bundled hypernym → search-query templates."""
    from .lexicon import _data_text

    raw = json.loads(_data_text("query_templates.json"))
    return [QueryTemplate(t["hypernym_id"], t["template"]) for t in raw]


def load_subject_dir(path) -> tuple[SubjectMeta, ParsedDocument, list[ParsedDocument]]:
    """Read a subject directory: meta.json, reference.conllu, and the
    document ``*.conllu`` files (sorted by filename for determinism)."""
    base = Path(path)
    with open(base / "meta.json", "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    meta = SubjectMeta(
        subject=raw["subject"].lower(),
        hypernym_id=raw.get("hypernym_id", ""),
        wordnet_synset_id=raw.get("wordnet_synset_id", raw.get("synset_id", "")),
        wikipedia_title=raw.get("wikipedia_title", ""),
        image_url=raw.get("image_url", ""),
        alternative_lemmas=tuple(raw.get("alternative_lemmas", [])),
    )
    urls = raw.get("urls", {})
    with open(base / "reference.conllu", "r", encoding="utf-8") as fh:
        reference = parse_conllu(fh, doc_id="reference", url=raw.get("reference_url", ""))
    docs = []
    for fname in sorted(base.glob("*.conllu")):
        if fname.name == "reference.conllu":
            continue
        doc_id = fname.stem
        with open(fname, "r", encoding="utf-8") as fh:
            docs.append(parse_conllu(fh, doc_id=doc_id, url=urls.get(doc_id, "")))
    return meta, reference, docs
