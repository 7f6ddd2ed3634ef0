"""Dependency-rule extraction of faceted assertions, subgroups, aspects.

The rule set is fixed and versioned in ``docs/extraction-rules.md`` so
golden tests stay stable:

* a predicate candidate is a VERB token, or any token carrying a ``cop``
  child; candidates serving as ``aux``/``aux:pass``/``cop`` themselves,
  or opening an infinitival clause (``mark`` child with lemma *to*), are
  skipped;
* the subject is the ``nsubj``/``nsubj:pass`` subtree, inherited through
  ``conj`` chains for coordinated verbs;
* the predicate collects the verb plus auxiliaries, negation, and verb
  particles; adjectival copula complements fold into the predicate,
  nominal ones become the object;
* the object is the subtree of the first ``obj`` child, else a nominal
  ``xcomp``, else a lone ``iobj``; with none of those, the first ``obl``
  is promoted to object and its preposition folds into the predicate
  (work + in + bar becomes "work in" / "bar"), unless the oblique reads
  as temporal, cause, manner, degree, or purpose, in which case it
  stays a facet;
* coordinated subjects and objects split into one assertion per
  conjunct; leftover object-like children become transitive-object
  facets;
* every remaining ``obl``, ``advcl``, adverbial ``advmod``, and verbal
  ``xcomp`` child becomes a facet whose connective is its case/mark
  subtree.

Phrases are stored lowercased; spans are byte offsets into the sentence
text, so the original casing is always recoverable. Element token sets
are trimmed to the contiguous run containing their head so that every
span reads back as its phrase.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Protocol, Sequence

from .consolidation import HacParams, hac
from .corpus import ParsedDocument, ParsedSentence, ParsedToken
from .embeddings import EmbeddingTable, cosine, phrase_vector
from .lexicon import FacetLabel, classify_facet, load_stopwords

NOMINAL_UPOS = {"NOUN", "PROPN", "PRON", "NUM"}
SUBJECT_DEPRELS = {"nsubj", "nsubj:pass"}
PREDICATE_PART_DEPRELS = {"aux", "aux:pass", "compound:prt"}
NEGATION_LEMMAS = {"not", "n't", "never"}
_UNPROMOTABLE_LABELS = {
    FacetLabel.TEMPORAL,
    FacetLabel.CAUSE,
    FacetLabel.MANNER,
    FacetLabel.DEGREE,
    FacetLabel.PURPOSE,
}


class FacetClassifier(Protocol):
    """Pluggable facet labeler; the in-repo baseline is the lexicon."""

    def classify(self, connective: str, value_phrase: str, verb_lemma: str,
                 nominal: bool | None = None) -> FacetLabel: ...


class LexiconFacetClassifier:
    def classify(self, connective, value_phrase, verb_lemma, nominal=None):
        return classify_facet(connective, value_phrase, verb_lemma, nominal=nominal)


@dataclass(frozen=True)
class RawFacet:
    """A typed qualifier phrase attached to an assertion.

    ``connective`` is the preposition/subordinator (may be empty for bare
    adverbs); the span covers the value phrase only.
    """

    connective: str
    value: str
    label: FacetLabel
    char_start: int
    char_end: int
    head_lemma: str = ""

    def __post_init__(self):
        if not self.value:
            raise ValueError("facet value must be non-empty")


@dataclass(frozen=True)
class RawAssertion:
    """One extracted subject-predicate-object tuple with facets and spans.

    Spans are byte offsets into the source sentence; the object span is
    ``None`` for intransitives. ``normalized_triple`` carries the
    lowercased, determiner-stripped, head-lemmatized form used as the
    consolidation key.
    """

    subject: str
    predicate: str
    object: str
    subject_span: tuple[int, int]
    predicate_span: tuple[int, int]
    object_span: tuple[int, int] | None
    facets: tuple[RawFacet, ...]
    doc_id: str
    sent_id: str
    subject_head_lemma: str = ""
    object_head_lemma: str = ""
    predicate_lemmas: tuple[str, ...] = ()
    normalized_triple: tuple[str, str, str] = ("", "", "")

    def __post_init__(self):
        if not self.subject or not self.predicate:
            raise ValueError("subject and predicate must be non-empty")
        spans = [self.subject_span, self.predicate_span]
        if self.object_span is not None:
            spans.append(self.object_span)
        spans.sort()
        for (_, end_a), (start_b, _) in zip(spans, spans[1:]):
            if start_b < end_a:
                raise ValueError("subject/predicate/object spans overlap")


class AspectSource(str, Enum):
    POSSESSIVE = "possessive"
    HAS_TRIPLE = "has-triple"


@dataclass(frozen=True)
class Subgroup:
    """A multi-word refinement of the subject, e.g. school bus ⊂ bus."""

    name: str
    member_phrases: tuple[str, ...]
    frequency: int


@dataclass(frozen=True)
class Aspect:
    """A related part or property of the subject (elephant → trunk)."""

    name: str
    frequency: int
    source: AspectSource

    def __post_init__(self):
        if self.frequency < 1:
            raise ValueError("aspect frequency must be >= 1")


def _contiguous_run(tokens: Sequence[ParsedToken], head: ParsedToken) -> list[ParsedToken]:
    """Longest index-contiguous run containing the head token."""
    ordered = sorted(tokens, key=lambda t: t.index)
    runs: list[list[ParsedToken]] = []
    for tok in ordered:
        if runs and tok.index == runs[-1][-1].index + 1:
            runs[-1].append(tok)
        else:
            runs.append([tok])
    for run in runs:
        if any(t.index == head.index for t in run):
            return run
    return [head]


def _phrase(sentence: ParsedSentence, tokens: Sequence[ParsedToken], head: ParsedToken):
    """Lowercased byte-substring phrase and span for a token set."""
    run = _contiguous_run(tokens, head)
    start = run[0].char_start
    end = run[-1].char_end
    data = sentence.text.encode("utf-8")
    return data[start:end].decode("utf-8").lower(), (start, end), run


def _strip(tokens: Iterable[ParsedToken], drop: set[int]) -> list[ParsedToken]:
    return [t for t in tokens if t.index not in drop and t.deprel != "punct"]


def _subtree_ids(sentence: ParsedSentence, token: ParsedToken) -> set[int]:
    return {t.index for t in sentence.subtree(token.index)}


def _connective_text(sentence: ParsedSentence, markers: list[ParsedToken]) -> str:
    toks: list[ParsedToken] = []
    for marker in markers:
        toks.extend(sentence.subtree(marker.index))
    toks.sort(key=lambda t: t.index)
    return " ".join(t.surface.lower() for t in toks)


def tok_is_nominal(tok: ParsedToken) -> bool:
    return tok.upos in NOMINAL_UPOS


_DETERMINER_DEPRELS = {"det", "det:predet"}


def _normalize_nominal(run: Sequence[ParsedToken], head: ParsedToken) -> str:
    """Lowercase, drop leading determiners, lemmatize the head token."""
    toks = list(run)
    while toks and toks[0].index != head.index and (
            toks[0].deprel in _DETERMINER_DEPRELS or toks[0].upos == "DET"):
        toks = toks[1:]
    if not toks:
        toks = [head]
    parts = []
    for t in toks:
        parts.append(t.lemma.lower() if t.index == head.index else t.surface.lower())
    return " ".join(parts)


def _conj_variants(sentence: ParsedSentence, head: ParsedToken):
    """Split a nominal head into itself plus its conjuncts.

    Each variant drops the other conjuncts and any coordinators from its
    token set, so "roots, grasses, and bark" yields three clean phrases.
    """
    conjuncts = [c for c in sentence.children(head.index) if c.deprel == "conj"]
    own = _subtree_ids(sentence, head)
    drop_from_own: set[int] = set()
    for c in conjuncts:
        drop_from_own |= _subtree_ids(sentence, c)
    drop_from_own |= {
        t.index for t in sentence.tokens
        if t.index in own and t.deprel == "cc"
    }
    variants = [(head, drop_from_own)]
    for c in conjuncts:
        sub = _subtree_ids(sentence, c)
        inner_drop = {
            t.index for t in sentence.tokens
            if t.index in sub and t.deprel == "cc"
        }
        for t in sentence.tokens:
            if t.index in sub and t.deprel == "conj" and t.index != c.index:
                inner_drop |= _subtree_ids(sentence, t)
        variants.append((c, inner_drop))
    return variants


def extract_assertions(
    sentence: ParsedSentence,
    classifier: FacetClassifier | None = None,
) -> list[RawAssertion]:
    """Apply the extraction rule set to one sentence.

    Deterministic: identical input yields the identical list in the same
    order (candidates in token order, subject splits before object
    splits). Sentences without a qualifying predicate yield [].
    """
    clf = classifier or LexiconFacetClassifier()
    results: list[RawAssertion] = []

    for tok in sentence.tokens:
        children = sentence.children(tok.index)
        cop_children = [c for c in children if c.deprel == "cop"]
        if tok.upos != "VERB" and not cop_children:
            continue
        if tok.deprel in ("aux", "aux:pass", "cop"):
            continue
        if any(c.deprel == "mark" and c.lemma.lower() == "to" for c in children):
            continue  # infinitival clause; surfaces as a facet of its governor
        subjects = _find_subjects(sentence, tok, children)
        if not subjects:
            continue
        results.extend(
            _build_assertions(sentence, tok, children, cop_children, subjects[0], clf)
        )
    return results


def _find_subjects(sentence, tok, children):
    subjects = [c for c in children if c.deprel in SUBJECT_DEPRELS]
    node = tok
    # coordinated verbs share the first conjunct's subject
    while not subjects and node.deprel == "conj" and node.head:
        node = sentence.tokens[node.head - 1]
        subjects = [
            c for c in sentence.children(node.index) if c.deprel in SUBJECT_DEPRELS
        ]
    return subjects


def _build_assertions(sentence, verb, children, cop_children, subj_child, clf):
    pred_tokens = list(cop_children) if cop_children else [verb]
    main_verb = cop_children[0] if cop_children else verb
    for c in children:
        if c.deprel in PREDICATE_PART_DEPRELS:
            pred_tokens.append(c)
        elif c.deprel == "neg" or (
                c.deprel == "advmod" and c.lemma.lower() in NEGATION_LEMMAS):
            pred_tokens.append(c)

    obj_child = None
    promoted_obl = False
    extra_object_children: list[ParsedToken] = []

    obls = [c for c in children if c.deprel.split(":")[0] == "obl"]
    if cop_children:
        if tok_is_nominal(verb):
            obj_child = verb
        else:
            pred_tokens.append(verb)
    else:
        objs = [c for c in children if c.deprel == "obj"]
        iobjs = [c for c in children if c.deprel == "iobj"]
        xcomp_nominals = [c for c in children if c.deprel == "xcomp" and tok_is_nominal(c)]
        if objs:
            obj_child = objs[0]
            extra_object_children.extend(objs[1:])
            extra_object_children.extend(iobjs)
            extra_object_children.extend(xcomp_nominals)
        elif xcomp_nominals:
            obj_child = xcomp_nominals[0]
            extra_object_children.extend(xcomp_nominals[1:])
            extra_object_children.extend(iobjs)
        elif iobjs:
            obj_child = iobjs[0]
            extra_object_children.extend(iobjs[1:])
        elif obls:
            # promote only obliques that read as complements, not as
            # time/cause/manner/degree/purpose qualifiers
            probe = _build_facet(sentence, obls[0], True, verb.lemma.lower(), clf)
            if probe is not None and probe.label not in _UNPROMOTABLE_LABELS:
                obj_child = obls[0]
                promoted_obl = True

    facet_sources: list[tuple[ParsedToken, bool]] = []  # (child, nominal hint)
    for c in children:
        base = c.deprel.split(":")[0]
        if base == "obl":
            if promoted_obl and c.index == obj_child.index:
                continue
            facet_sources.append((c, True))
        elif base == "advcl":
            facet_sources.append((c, False))
        elif c.deprel == "xcomp" and not tok_is_nominal(c) and not cop_children:
            facet_sources.append((c, False))
        elif c.deprel == "advmod" and c not in pred_tokens:
            facet_sources.append((c, False))
    for c in extra_object_children:
        facet_sources.append((c, True))
    facet_sources.sort(key=lambda pair: pair[0].index)

    if promoted_obl:
        case_children = [
            c for c in sentence.children(obj_child.index) if c.deprel == "case"
        ]
        pred_tokens.extend(case_children)

    predicate, pred_span, pred_run = _phrase(sentence, pred_tokens, main_verb)
    verb_lemma = verb.lemma.lower()

    facets = []
    for src, nominal in facet_sources:
        facet = _build_facet(sentence, src, nominal, verb_lemma, clf)
        if facet is not None:
            facets.append(facet)
    facets = tuple(facets)

    subject_variants = _nominal_variants(sentence, subj_child, set())
    if obj_child is not None:
        if cop_children and obj_child.index == verb.index:
            obj_drop = _copular_drop(
                sentence, verb, children, cop_children, pred_tokens,
                subj_child, facet_sources,
            )
        else:
            obj_drop = set()
        if promoted_obl:
            for c in sentence.children(obj_child.index):
                if c.deprel == "case":
                    obj_drop |= _subtree_ids(sentence, c)
        object_variants = _nominal_variants(sentence, obj_child, obj_drop)
        if not object_variants:
            object_variants = [None]
    else:
        object_variants = [None]

    pred_lemmas = tuple(t.lemma.lower() for t in pred_run)
    norm_pred = " ".join(pred_lemmas)

    out = []
    for s_phrase, s_span, s_head, s_norm in subject_variants:
        for obj_variant in object_variants:
            if obj_variant is None:
                o_phrase, o_span, o_head_lemma, o_norm = "", None, "", ""
            else:
                o_phrase, o_span, o_head, o_norm = obj_variant
                o_head_lemma = o_head.lemma.lower()
            try:
                out.append(RawAssertion(
                    subject=s_phrase,
                    predicate=predicate,
                    object=o_phrase,
                    subject_span=s_span,
                    predicate_span=pred_span,
                    object_span=o_span,
                    facets=facets,
                    doc_id=sentence.doc_id,
                    sent_id=sentence.sent_id,
                    subject_head_lemma=s_head.lemma.lower(),
                    object_head_lemma=o_head_lemma,
                    predicate_lemmas=pred_lemmas,
                    normalized_triple=(s_norm, norm_pred, o_norm),
                ))
            except ValueError:
                continue  # overlapping spans from an exotic parse; skip
    return out


def _copular_drop(sentence, verb, children, cop_children, pred_tokens,
                  subj_child, facet_sources):
    """Tokens to remove from a copular complement's subtree."""
    drop: set[int] = set()
    drop |= {c.index for c in cop_children}
    drop |= _subtree_ids(sentence, subj_child)
    for src, _ in facet_sources:
        drop |= _subtree_ids(sentence, src)
    drop |= {c.index for c in children if c.deprel == "mark"}
    drop |= {c.index for c in pred_tokens}
    drop.discard(verb.index)
    return drop


def _nominal_variants(sentence, head, base_drop):
    """(phrase, span, head token, normalized form) per conjunct."""
    variants = []
    for var_head, drop in _conj_variants(sentence, head):
        tokens = _strip(sentence.subtree(var_head.index), drop | base_drop)
        if not tokens:
            continue
        phrase, span, run = _phrase(sentence, tokens, var_head)
        variants.append((phrase, span, var_head, _normalize_nominal(run, var_head)))
    return variants


def _build_facet(sentence, src, nominal, verb_lemma, clf) -> RawFacet | None:
    markers = [c for c in sentence.children(src.index) if c.deprel in ("case", "mark")]
    drop: set[int] = set()
    for m in markers:
        drop |= _subtree_ids(sentence, m)
    drop |= {
        c.index for c in sentence.children(src.index)
        if c.deprel in _DETERMINER_DEPRELS or c.upos == "DET"
    }
    value_tokens = _strip(sentence.subtree(src.index), drop)
    if not value_tokens:
        return None
    connective = _connective_text(sentence, markers)
    value, span, _ = _phrase(sentence, value_tokens, src)
    if not value.strip():
        return None
    label = clf.classify(connective, value, verb_lemma, nominal=nominal)
    return RawFacet(
        connective=connective,
        value=value,
        label=label,
        char_start=span[0],
        char_end=span[1],
        head_lemma=src.lemma.lower(),
    )


# --- subgroup mining ---------------------------------------------------

SUBGROUP_MODIFIER_DEPRELS = {"amod", "compound"}


def mine_subgroups(
    subject_lemma: str,
    docs: Iterable[ParsedDocument],
    table: EmbeddingTable | None,
    params: HacParams = HacParams(),
) -> list[Subgroup]:
    """Cluster multi-word noun phrases headed by the subject lemma.

    Candidates (≥2 tokens, head lemma = subject) are grouped by HAC on
    mean embedding vectors; with no table every phrase stays a singleton.
    Cluster name is the most frequent member phrase, ties broken
    lexicographically; output sorted by frequency descending.
    """
    subject_lemma = subject_lemma.lower()
    counts: Counter[str] = Counter()
    for doc in docs:
        for sent in doc.sentences:
            for tok in sent.tokens:
                if tok.upos != "NOUN" or tok.lemma.lower() != subject_lemma:
                    continue
                mods = [
                    c for c in sent.children(tok.index)
                    if c.deprel in SUBGROUP_MODIFIER_DEPRELS
                ]
                if not mods:
                    continue
                run = _contiguous_run(mods + [tok], tok)
                if len(run) < 2 or not any(t.index != tok.index for t in run):
                    continue
                counts[_normalize_nominal(run, tok)] += 1
    if not counts:
        return []

    phrases = sorted(counts)
    distances: dict[tuple[int, int], float] = {}
    if table is not None:
        vectors = [phrase_vector(p, table)[0] for p in phrases]
        for i in range(len(phrases)):
            for j in range(i + 1, len(phrases)):
                sim = max(0.0, min(1.0, cosine(vectors[i], vectors[j])))
                distances[(i, j)] = 1.0 - sim
    partition = hac(len(phrases), distances, params.linkage, params.theta_cut)

    subgroups = []
    for cluster in partition:
        members = sorted(phrases[i] for i in cluster)
        name = min(members, key=lambda p: (-counts[p], p))
        subgroups.append(
            Subgroup(
                name=name,
                member_phrases=tuple(members),
                frequency=sum(counts[p] for p in members),
            )
        )
    subgroups.sort(key=lambda s: (-s.frequency, s.name))
    return subgroups


# --- aspect mining -----------------------------------------------------

_PLAIN_HAS_LEMMAS = {"have", "contain"}
_COMPOSED_LEMMAS = {"compose", "assemble"}
_ASPECT_SKIP_LEMMAS = {"be", "do", "not", "never", "n't", "of"}


def mine_aspects(
    subject_lemma: str,
    docs: Iterable[ParsedDocument],
    raw_assertions: Iterable[RawAssertion],
) -> list[Aspect]:
    """Collect aspects from possessive noun chunks and have/contain triples.

    Possessives: a noun governing an ``nmod:poss`` child whose lemma is
    the subject. Triples: assertions whose subject head is the subject
    lemma with bare predicate *have*/*contain*, or a passive
    *composed/assembled of* predicate. Aggregated by lowercased head
    lemma, frequency-sorted.
    """
    subject_lemma = subject_lemma.lower()
    stop = load_stopwords()
    tallies: dict[str, Counter[AspectSource]] = {}

    def add(lemma: str, source: AspectSource):
        if not lemma or lemma == subject_lemma or lemma in stop:
            return
        tallies.setdefault(lemma, Counter())[source] += 1

    for doc in docs:
        for sent in doc.sentences:
            for tok in sent.tokens:
                if tok.upos not in ("NOUN", "PROPN"):
                    continue
                for c in sent.children(tok.index):
                    if c.deprel.startswith("nmod:poss") and c.lemma.lower() == subject_lemma:
                        add(tok.lemma.lower(), AspectSource.POSSESSIVE)

    for raw in raw_assertions:
        if raw.subject_head_lemma != subject_lemma or not raw.object:
            continue
        content = [l for l in raw.predicate_lemmas if l not in _ASPECT_SKIP_LEMMAS]
        if len(content) == 1 and content[0] in _PLAIN_HAS_LEMMAS:
            add(raw.object_head_lemma, AspectSource.HAS_TRIPLE)
        elif any(l in _COMPOSED_LEMMAS for l in content):
            add(raw.object_head_lemma, AspectSource.HAS_TRIPLE)

    aspects = []
    for lemma, votes in tallies.items():
        frequency = sum(votes.values())
        source = AspectSource.POSSESSIVE
        if votes[AspectSource.HAS_TRIPLE] > votes[AspectSource.POSSESSIVE]:
            source = AspectSource.HAS_TRIPLE
        aspects.append(Aspect(name=lemma, frequency=frequency, source=source))
    aspects.sort(key=lambda a: (-a.frequency, a.name))
    return aspects
