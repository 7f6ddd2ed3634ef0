"""CoNLL-U parsing, bag-of-words relevance, document filtering."""

from __future__ import annotations

import io
import random

import pytest

from facetforge.corpus import (
    FilterPolicy,
    bag_of_words,
    build_search_queries,
    filter_documents,
    load_query_templates,
    load_subject_dir,
    parse_conllu,
    relevance_score,
    serialize_conllu,
)
from facetforge.errors import ConlluParseError, TokenSpanError
from facetforge.lexicon import load_stopwords

SIMPLE = """\
# sent_id = s1
# text = Elephants eat grasses.
1\tElephants\telephant\tNOUN\t_\t_\t2\tnsubj\t_\t_
2\teat\teat\tVERB\t_\t_\t0\troot\t_\t_
3\tgrasses\tgrass\tNOUN\t_\t_\t2\tobj\t_\t_
4\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_
"""


def parse(text, doc_id="doc", url=""):
    return parse_conllu(io.StringIO(text), doc_id=doc_id, url=url)


def test_parse_simple_sentence_fields():
    doc = parse(SIMPLE)
    assert len(doc.sentences) == 1
    sent = doc.sentences[0]
    assert sent.text == "Elephants eat grasses."
    assert sent.sent_id == "s1"
    assert [t.surface for t in sent.tokens] == ["Elephants", "eat", "grasses", "."]
    assert [t.lemma for t in sent.tokens] == ["elephant", "eat", "grass", "."]
    assert sent.root().surface == "eat"


def test_parse_reconstructs_byte_spans():
    doc = parse(SIMPLE)
    sent = doc.sentences[0]
    text = sent.text.encode("utf-8")
    for tok in sent.tokens:
        assert text[tok.char_start:tok.char_end].decode("utf-8") == tok.surface
    assert sent.tokens[0].char_start == 0
    assert sent.tokens[0].char_end == 9
    assert sent.tokens[-1].char_start == 21


def test_parse_empty_stream_yields_empty_document():
    doc = parse("")
    assert doc.sentences == ()
    assert doc.doc_id == "doc"


def test_parse_rejects_wrong_column_count():
    bad = "# text = Hi\n1\tHi\thi\tINTJ\t_\t_\t0\troot\t_\n"
    with pytest.raises(ConlluParseError) as err:
        parse(bad)
    assert "line 2" in str(err.value)


def test_parse_rejects_unlocatable_surface():
    bad = (
        "# text = Elephants eat.\n"
        "1\tzebras\tzebra\tNOUN\t_\t_\t0\troot\t_\t_\n"
    )
    with pytest.raises(TokenSpanError):
        parse(bad)


def test_parse_rejects_missing_root():
    bad = (
        "# text = Hi there\n"
        "1\tHi\thi\tINTJ\t_\t_\t2\tdiscourse\t_\t_\n"
        "2\tthere\tthere\tADV\t_\t_\t1\tadvmod\t_\t_\n"
    )
    with pytest.raises(ConlluParseError):
        parse(bad)


def test_parse_skips_multiword_and_empty_nodes():
    text = (
        "# text = don't stop\n"
        "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
        "1\tdo\tdo\tAUX\t_\t_\t3\taux\t_\t_\n"
        "2\tn't\tnot\tPART\t_\t_\t3\tadvmod\t_\t_\n"
        "3\tstop\tstop\tVERB\t_\t_\t0\troot\t_\t_\n"
        "3.1\telided\telide\tVERB\t_\t_\t_\t_\t_\t_\n"
    )
    doc = parse(text)
    assert [t.surface for t in doc.sentences[0].tokens] == ["do", "n't", "stop"]


def test_serialize_then_parse_is_fixed_point_on_fixture_corpus(fixtures_dir):
    _, reference, docs = load_subject_dir(fixtures_dir / "corpus" / "elephant")
    for doc in [reference] + docs:
        rendered = serialize_conllu(doc)
        reparsed = parse(rendered, doc_id=doc.doc_id, url=doc.url)
        assert reparsed == doc


def test_bag_of_words_counts_lemmas():
    doc = parse(SIMPLE)
    bag = bag_of_words(doc, stoplist=frozenset())
    assert bag.counts == {"elephant": 1, "eat": 1, "grass": 1}


def test_bag_of_words_applies_stoplist_and_alpha_filter():
    doc = parse(SIMPLE)
    bag = bag_of_words(doc, stoplist=frozenset({"eat"}))
    assert "eat" not in bag.counts
    assert "." not in bag.counts


def test_relevance_score_hand_computed_half():
    # {a:1,b:1} vs {a:1,c:1}: dot = 1, norms = sqrt(2) each -> 1/2
    from facetforge.corpus import BagOfWords

    left = BagOfWords({"a": 1, "b": 1})
    right = BagOfWords({"a": 1, "c": 1})
    assert relevance_score(left, right) == pytest.approx(0.5, abs=1e-12)


def test_relevance_score_identity_disjoint_and_empty():
    from facetforge.corpus import BagOfWords

    bag = BagOfWords({"x": 3, "y": 1})
    assert relevance_score(bag, bag) == pytest.approx(1.0)
    assert relevance_score(bag, BagOfWords({"z": 5})) == 0.0
    assert relevance_score(bag, BagOfWords({})) == 0.0


def test_relevance_score_symmetric_random_bags():
    rng = random.Random(99)
    from facetforge.corpus import BagOfWords

    vocab = [f"w{i}" for i in range(10)]
    for _ in range(100):
        left = BagOfWords({w: rng.randint(1, 4) for w in rng.sample(vocab, 4)})
        right = BagOfWords({w: rng.randint(1, 4) for w in rng.sample(vocab, 4)})
        forward = relevance_score(left, right)
        assert forward == pytest.approx(relevance_score(right, left))
        assert 0.0 <= forward <= 1.0


def test_filter_documents_threshold_and_order(fixtures_dir):
    meta, reference, docs = load_subject_dir(fixtures_dir / "corpus" / "elephant")
    stop = load_stopwords()
    ref_bag = bag_of_words(reference, stop)
    scored = filter_documents(docs, ref_bag, FilterPolicy(min_score=0.15, max_keep=500))
    kept_ids = [doc.doc_id for doc, _ in scored]
    # the finance doc shares no content lemma with the reference
    assert "doc06" not in kept_ids
    assert len(kept_ids) == 5
    scores = [score for _, score in scored]
    assert scores == sorted(scores, reverse=True)
    assert all(score >= 0.15 for score in scores)


def test_filter_documents_cap_and_tie_break(fixtures_dir):
    meta, reference, docs = load_subject_dir(fixtures_dir / "corpus" / "lion")
    stop = load_stopwords()
    ref_bag = bag_of_words(reference, stop)
    top = filter_documents(docs, ref_bag, FilterPolicy(min_score=0.0, max_keep=2))
    assert len(top) == 2
    everything = filter_documents(docs, ref_bag, FilterPolicy(min_score=0.0, max_keep=500))
    assert [d.doc_id for d, _ in everything[:2]] == [d.doc_id for d, _ in top]
    # equal-score documents order by doc_id
    pairs = list(zip(everything, everything[1:]))
    for (da, sa), (db, sb) in pairs:
        if sa == sb:
            assert da.doc_id < db.doc_id


def test_filter_documents_stable_under_permutation(fixtures_dir):
    meta, reference, docs = load_subject_dir(fixtures_dir / "corpus" / "bartender")
    stop = load_stopwords()
    ref_bag = bag_of_words(reference, stop)
    base = filter_documents(docs, ref_bag, FilterPolicy(min_score=0.0, max_keep=500))
    rng = random.Random(7)
    for _ in range(10):
        shuffled = docs[:]
        rng.shuffle(shuffled)
        again = filter_documents(shuffled, ref_bag, FilterPolicy(min_score=0.0, max_keep=500))
        assert [(d.doc_id, s) for d, s in again] == [(d.doc_id, s) for d, s in base]


def test_build_search_queries_template_match():
    templates = load_query_templates()
    assert build_search_queries("elephant", "animal.n.01", templates) == [
        "elephant animal facts"
    ]
    assert build_search_queries("lawyer", "professional.n.01", templates) == [
        "lawyer job descriptions"
    ]


def test_build_search_queries_fallback():
    templates = load_query_templates()
    assert build_search_queries("quark", "unknown.n.99", templates) == ["quark facts"]


def test_load_subject_dir_reads_meta(fixtures_dir):
    meta, reference, docs = load_subject_dir(fixtures_dir / "corpus" / "elephant")
    assert meta.subject == "elephant"
    assert meta.hypernym_id == "animal.n.01"
    assert meta.wordnet_synset_id == "elephant.n.01"
    assert meta.alternative_lemmas == ("pachyderm",)
    assert len(docs) == 6
    assert docs[0].url.startswith("https://example.org/")
