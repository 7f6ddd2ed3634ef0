#!/usr/bin/env python3
"""Regenerate the toy fixture corpus under tests/fixtures/.

Three subject directories (elephant, lion, bartender) with hand-written
dependency parses, plus a small deterministic embedding table. The
parses are authored so the pipeline exercises every extraction rule:
purpose/cause/temporal/manner/degree facets, oblique promotion,
coordination splitting, determiner stripping, copular predicates,
possessive and have-triple aspects, and subgroup merging.

The embedding table is engineered, not trained. Words that must pull
triples into one cluster (eat/prey/feed/hunt/consume) share a direction;
words that must keep triples apart (bar vs. restaurant, school vs.
tourist) sit on orthogonal axes with large norms so that shared light
verbs cannot drag the cosine over the merge threshold. The script
asserts those margins after writing the files, so editing a vector or a
sentence that breaks the fixture contract fails loudly here instead of
in a distant test.

Run from the repository root:

    python3 scripts/gen_toy_corpus.py
"""

from __future__ import annotations

import io
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"

NO_SPACE_BEFORE = {".", ",", ";", ":", "!", "?", "'s"}


def render_text(tokens):
    parts = []
    for i, tok in enumerate(tokens):
        surface = tok[0]
        if i and surface not in NO_SPACE_BEFORE:
            parts.append(" ")
        parts.append(surface)
    return "".join(parts)


def conllu(sent_id, tokens):
    lines = [f"# sent_id = {sent_id}", f"# text = {render_text(tokens)}"]
    for i, (surface, lemma, upos, head, deprel) in enumerate(tokens, start=1):
        lines.append(
            "\t".join([str(i), surface, lemma, upos, "_", "_", str(head), deprel, "_", "_"])
        )
    return "\n".join(lines) + "\n"


def write_doc(path, sentences):
    blocks = [conllu(f"s{i}", toks) for i, toks in enumerate(sentences, start=1)]
    path.write_text("\n".join(blocks), encoding="utf-8")


# --- sentence bank -------------------------------------------------------
# token = (surface, lemma, upos, head, deprel)

E_TRUNKS = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("use", "use", "VERB", 0, "root"),
    ("their", "they", "PRON", 4, "nmod:poss"),
    ("trunks", "trunk", "NOUN", 2, "obj"),
    ("to", "to", "PART", 6, "mark"),
    ("suck", "suck", "VERB", 2, "advcl"),
    ("up", "up", "ADP", 6, "compound:prt"),
    ("water", "water", "NOUN", 6, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_EAT_LIST = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("eat", "eat", "VERB", 0, "root"),
    ("roots", "root", "NOUN", 2, "obj"),
    (",", ",", "PUNCT", 5, "punct"),
    ("grasses", "grass", "NOUN", 3, "conj"),
    (",", ",", "PUNCT", 7, "punct"),
    ("fruit", "fruit", "NOUN", 3, "conj"),
    (",", ",", "PUNCT", 10, "punct"),
    ("and", "and", "CCONJ", 10, "cc"),
    ("bark", "bark", "NOUN", 3, "conj"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_MOSTLY = [
    ("Elephants", "elephant", "NOUN", 3, "nsubj"),
    ("mostly", "mostly", "ADV", 3, "advmod"),
    ("eat", "eat", "VERB", 0, "root"),
    ("grasses", "grass", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

E_DRINK = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("drink", "drink", "VERB", 0, "root"),
    ("water", "water", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_HERDS = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("live", "live", "VERB", 0, "root"),
    ("in", "in", "ADP", 4, "case"),
    ("herds", "herd", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_AN_EATS = [
    ("An", "a", "DET", 2, "det"),
    ("elephant", "elephant", "NOUN", 3, "nsubj"),
    ("eats", "eat", "VERB", 0, "root"),
    ("grasses", "grass", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

E_TUSKS = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("have", "have", "VERB", 0, "root"),
    ("tusks", "tusk", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_AFRICAN_EARS = [
    ("African", "african", "ADJ", 2, "amod"),
    ("elephants", "elephant", "NOUN", 3, "nsubj"),
    ("have", "have", "VERB", 0, "root"),
    ("large", "large", "ADJ", 5, "amod"),
    ("ears", "ear", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

E_POSS_TRUNK = [
    ("The", "the", "DET", 2, "det"),
    ("elephant", "elephant", "NOUN", 4, "nmod:poss"),
    ("'s", "'s", "PART", 2, "case"),
    ("trunk", "trunk", "NOUN", 6, "nsubj"),
    ("is", "be", "AUX", 6, "cop"),
    ("long", "long", "ADJ", 0, "root"),
    (".", ".", "PUNCT", 6, "punct"),
]

E_TRUNKS_HAVE = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("have", "have", "VERB", 0, "root"),
    ("trunks", "trunk", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_POSS_SKIN = [
    ("An", "a", "DET", 2, "det"),
    ("elephant", "elephant", "NOUN", 4, "nmod:poss"),
    ("'s", "'s", "PART", 2, "case"),
    ("skin", "skin", "NOUN", 6, "nsubj"),
    ("is", "be", "AUX", 6, "cop"),
    ("thick", "thick", "ADJ", 0, "root"),
    (".", ".", "PUNCT", 6, "punct"),
]

E_LARGE_EARS = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("have", "have", "VERB", 0, "root"),
    ("large", "large", "ADJ", 4, "amod"),
    ("ears", "ear", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_ASIAN_FORESTS = [
    ("Asian", "asian", "ADJ", 2, "amod"),
    ("elephants", "elephant", "NOUN", 3, "nsubj"),
    ("live", "live", "VERB", 0, "root"),
    ("in", "in", "ADP", 5, "case"),
    ("forests", "forest", "NOUN", 3, "obl"),
    (".", ".", "PUNCT", 3, "punct"),
]

E_ASIAN_EARS = [
    ("Asian", "asian", "ADJ", 2, "amod"),
    ("elephants", "elephant", "NOUN", 3, "nsubj"),
    ("have", "have", "VERB", 0, "root"),
    ("small", "small", "ADJ", 5, "amod"),
    ("ears", "ear", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

E_ASIAN_EAT = [
    ("Asian", "asian", "ADJ", 2, "amod"),
    ("elephants", "elephant", "NOUN", 3, "nsubj"),
    ("eat", "eat", "VERB", 0, "root"),
    ("grasses", "grass", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

E_ASIATIC_EAT = [
    ("Asiatic", "asiatic", "ADJ", 2, "amod"),
    ("elephants", "elephant", "NOUN", 3, "nsubj"),
    ("eat", "eat", "VERB", 0, "root"),
    ("grasses", "grass", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

E_BATHE = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("bathe", "bathe", "VERB", 0, "root"),
    ("in", "in", "ADP", 4, "case"),
    ("rivers", "river", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_AFRICAN_AFRICA = [
    ("African", "african", "ADJ", 2, "amod"),
    ("elephants", "elephant", "NOUN", 3, "nsubj"),
    ("live", "live", "VERB", 0, "root"),
    ("in", "in", "ADP", 5, "case"),
    ("Africa", "Africa", "PROPN", 3, "obl"),
    (".", ".", "PUNCT", 3, "punct"),
]

E_AFRICA = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("live", "live", "VERB", 0, "root"),
    ("in", "in", "ADP", 4, "case"),
    ("Africa", "Africa", "PROPN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_ANIMALS = [
    ("Elephants", "elephant", "NOUN", 4, "nsubj"),
    ("are", "be", "AUX", 4, "cop"),
    ("large", "large", "ADJ", 4, "amod"),
    ("animals", "animal", "NOUN", 0, "root"),
    (".", ".", "PUNCT", 4, "punct"),
]

E_SLEEP = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("sleep", "sleep", "VERB", 0, "root"),
    ("during", "during", "ADP", 5, "case"),
    ("the", "the", "DET", 5, "det"),
    ("day", "day", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_PACHYDERM = [
    ("Pachyderms", "pachyderm", "NOUN", 2, "nsubj"),
    ("eat", "eat", "VERB", 0, "root"),
    ("fruit", "fruit", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_INTELLIGENT = [
    ("Elephants", "elephant", "NOUN", 3, "nsubj"),
    ("are", "be", "AUX", 3, "cop"),
    ("intelligent", "intelligent", "ADJ", 0, "root"),
    (".", ".", "PUNCT", 3, "punct"),
]

E_RUMBLING = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("communicate", "communicate", "VERB", 0, "root"),
    ("by", "by", "ADP", 4, "case"),
    ("rumbling", "rumbling", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_NO_MEAT = [
    ("Elephants", "elephant", "NOUN", 4, "nsubj"),
    ("do", "do", "AUX", 4, "aux"),
    ("not", "not", "PART", 4, "advmod"),
    ("eat", "eat", "VERB", 0, "root"),
    ("meat", "meat", "NOUN", 4, "obj"),
    (".", ".", "PUNCT", 4, "punct"),
]

E_CALVES = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("protect", "protect", "VERB", 0, "root"),
    ("their", "they", "PRON", 4, "nmod:poss"),
    ("calves", "calf", "NOUN", 2, "obj"),
    ("because", "because", "SCONJ", 7, "mark"),
    ("predators", "predator", "NOUN", 7, "nsubj"),
    ("attack", "attack", "VERB", 2, "advcl"),
    ("them", "they", "PRON", 7, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_BABY = [
    ("Baby", "baby", "NOUN", 2, "compound"),
    ("elephants", "elephant", "NOUN", 3, "nsubj"),
    ("drink", "drink", "VERB", 0, "root"),
    ("milk", "milk", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

E_REF_EAT = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("eat", "eat", "VERB", 0, "root"),
    ("grasses", "grass", "NOUN", 2, "obj"),
    (",", ",", "PUNCT", 5, "punct"),
    ("roots", "root", "NOUN", 3, "conj"),
    (",", ",", "PUNCT", 8, "punct"),
    ("and", "and", "CCONJ", 8, "cc"),
    ("fruit", "fruit", "NOUN", 3, "conj"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_REF_HAS = [
    ("An", "a", "DET", 2, "det"),
    ("elephant", "elephant", "NOUN", 3, "nsubj"),
    ("has", "have", "VERB", 0, "root"),
    ("a", "a", "DET", 5, "det"),
    ("trunk", "trunk", "NOUN", 3, "obj"),
    ("and", "and", "CCONJ", 7, "cc"),
    ("tusks", "tusk", "NOUN", 5, "conj"),
    (".", ".", "PUNCT", 3, "punct"),
]

E_REF_ASIA = [
    ("Elephants", "elephant", "NOUN", 2, "nsubj"),
    ("live", "live", "VERB", 0, "root"),
    ("in", "in", "ADP", 4, "case"),
    ("Africa", "Africa", "PROPN", 2, "obl"),
    ("and", "and", "CCONJ", 6, "cc"),
    ("Asia", "Asia", "PROPN", 4, "conj"),
    (".", ".", "PUNCT", 2, "punct"),
]

E_REF_HERDS = [
    ("Herds", "herd", "NOUN", 2, "nsubj"),
    ("protect", "protect", "VERB", 0, "root"),
    ("baby", "baby", "NOUN", 4, "compound"),
    ("elephants", "elephant", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_EAT = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("eat", "eat", "VERB", 0, "root"),
    ("zebras", "zebra", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_A_LION_EATS = [
    ("A", "a", "DET", 2, "det"),
    ("lion", "lion", "NOUN", 3, "nsubj"),
    ("eats", "eat", "VERB", 0, "root"),
    ("zebras", "zebra", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

L_EAT_A_ZEBRA = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("eat", "eat", "VERB", 0, "root"),
    ("a", "a", "DET", 4, "det"),
    ("zebra", "zebra", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_THE_LIONS = [
    ("The", "the", "DET", 2, "det"),
    ("lions", "lion", "NOUN", 3, "nsubj"),
    ("eat", "eat", "VERB", 0, "root"),
    ("zebras", "zebra", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

L_PREY = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("prey", "prey", "VERB", 0, "root"),
    ("on", "on", "ADP", 4, "case"),
    ("zebras", "zebra", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_FEED = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("feed", "feed", "VERB", 0, "root"),
    ("on", "on", "ADP", 4, "case"),
    ("zebras", "zebra", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_HUNT = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("hunt", "hunt", "VERB", 0, "root"),
    ("zebras", "zebra", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_CONSUME = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("consume", "consume", "VERB", 0, "root"),
    ("zebras", "zebra", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_AFRICA = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("live", "live", "VERB", 0, "root"),
    ("in", "in", "ADP", 4, "case"),
    ("Africa", "Africa", "PROPN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_SLEEP = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("sleep", "sleep", "VERB", 0, "root"),
    ("during", "during", "ADP", 5, "case"),
    ("the", "the", "DET", 5, "det"),
    ("day", "day", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_GROUPS = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("hunt", "hunt", "VERB", 0, "root"),
    ("in", "in", "ADP", 4, "case"),
    ("groups", "group", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_MANE = [
    ("A", "a", "DET", 2, "det"),
    ("lion", "lion", "NOUN", 4, "nmod:poss"),
    ("'s", "'s", "PART", 2, "case"),
    ("mane", "mane", "NOUN", 6, "nsubj"),
    ("is", "be", "AUX", 6, "cop"),
    ("dark", "dark", "ADJ", 0, "root"),
    (".", ".", "PUNCT", 6, "punct"),
]

L_CLAWS = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("have", "have", "VERB", 0, "root"),
    ("sharp", "sharp", "ADJ", 4, "amod"),
    ("claws", "claw", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_CATS = [
    ("Lions", "lion", "NOUN", 4, "nsubj"),
    ("are", "be", "AUX", 4, "cop"),
    ("big", "big", "ADJ", 4, "amod"),
    ("cats", "cat", "NOUN", 0, "root"),
    (".", ".", "PUNCT", 4, "punct"),
]

L_LIONESS = [
    ("Lionesses", "lioness", "NOUN", 2, "nsubj"),
    ("hunt", "hunt", "VERB", 0, "root"),
    ("gazelles", "gazelle", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_SHADE = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("rest", "rest", "VERB", 0, "root"),
    ("in", "in", "ADP", 5, "case"),
    ("the", "the", "DET", 5, "det"),
    ("shade", "shade", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_REF_EAT = [
    ("Lions", "lion", "NOUN", 2, "nsubj"),
    ("eat", "eat", "VERB", 0, "root"),
    ("zebras", "zebra", "NOUN", 2, "obj"),
    ("and", "and", "CCONJ", 5, "cc"),
    ("gazelles", "gazelle", "NOUN", 3, "conj"),
    (".", ".", "PUNCT", 2, "punct"),
]

L_REF_MANE = [
    ("A", "a", "DET", 2, "det"),
    ("lion", "lion", "NOUN", 3, "nsubj"),
    ("has", "have", "VERB", 0, "root"),
    ("a", "a", "DET", 5, "det"),
    ("mane", "mane", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

B_BAR = [
    ("Bartenders", "bartender", "NOUN", 2, "nsubj"),
    ("work", "work", "VERB", 0, "root"),
    ("in", "in", "ADP", 5, "case"),
    ("a", "a", "DET", 5, "det"),
    ("bar", "bar", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

B_RESTAURANT = [
    ("Bartenders", "bartender", "NOUN", 2, "nsubj"),
    ("work", "work", "VERB", 0, "root"),
    ("in", "in", "ADP", 5, "case"),
    ("a", "a", "DET", 5, "det"),
    ("restaurant", "restaurant", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

B_SERVE = [
    ("Bartenders", "bartender", "NOUN", 2, "nsubj"),
    ("serve", "serve", "VERB", 0, "root"),
    ("drinks", "drink", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

B_COCKTAILS = [
    ("A", "a", "DET", 2, "det"),
    ("bartender", "bartender", "NOUN", 3, "nsubj"),
    ("mixes", "mix", "VERB", 0, "root"),
    ("cocktails", "cocktail", "NOUN", 3, "obj"),
    ("at", "at", "ADP", 6, "case"),
    ("night", "night", "NOUN", 3, "obl"),
    (".", ".", "PUNCT", 3, "punct"),
]

B_CUSTOMERS = [
    ("Bartenders", "bartender", "NOUN", 2, "nsubj"),
    ("talk", "talk", "VERB", 0, "root"),
    ("to", "to", "ADP", 4, "case"),
    ("customers", "customer", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

B_QUICKLY = [
    ("A", "a", "DET", 2, "det"),
    ("bartender", "bartender", "NOUN", 3, "nsubj"),
    ("prepares", "prepare", "VERB", 0, "root"),
    ("drinks", "drink", "NOUN", 3, "obj"),
    ("quickly", "quickly", "ADV", 3, "advmod"),
    (".", ".", "PUNCT", 3, "punct"),
]

B_NIGHT = [
    ("Bartenders", "bartender", "NOUN", 2, "nsubj"),
    ("work", "work", "VERB", 0, "root"),
    ("at", "at", "ADP", 4, "case"),
    ("night", "night", "NOUN", 2, "obl"),
    (".", ".", "PUNCT", 2, "punct"),
]

B_BEERS = [
    ("Bartenders", "bartender", "NOUN", 2, "nsubj"),
    ("pour", "pour", "VERB", 0, "root"),
    ("beers", "beer", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

B_TIPS = [
    ("Experienced", "experienced", "ADJ", 2, "amod"),
    ("bartenders", "bartender", "NOUN", 3, "nsubj"),
    ("earn", "earn", "VERB", 0, "root"),
    ("tips", "tip", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

B_REF_WORKS = [
    ("A", "a", "DET", 2, "det"),
    ("bartender", "bartender", "NOUN", 3, "nsubj"),
    ("works", "work", "VERB", 0, "root"),
    ("in", "in", "ADP", 6, "case"),
    ("a", "a", "DET", 6, "det"),
    ("bar", "bar", "NOUN", 3, "obl"),
    (".", ".", "PUNCT", 3, "punct"),
]

B_REF_MIX = [
    ("Bartenders", "bartender", "NOUN", 2, "nsubj"),
    ("mix", "mix", "VERB", 0, "root"),
    ("drinks", "drink", "NOUN", 2, "obj"),
    ("and", "and", "CCONJ", 5, "cc"),
    ("cocktails", "cocktail", "NOUN", 3, "conj"),
    (".", ".", "PUNCT", 2, "punct"),
]

B_REF_SERVE = [
    ("Bartenders", "bartender", "NOUN", 2, "nsubj"),
    ("serve", "serve", "VERB", 0, "root"),
    ("customers", "customer", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]

B_REF_PREPARES = [
    ("A", "a", "DET", 2, "det"),
    ("bartender", "bartender", "NOUN", 3, "nsubj"),
    ("prepares", "prepare", "VERB", 0, "root"),
    ("cocktails", "cocktail", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

OFF_BUDGET = [
    ("The", "the", "DET", 2, "det"),
    ("committee", "committee", "NOUN", 3, "nsubj"),
    ("approved", "approve", "VERB", 0, "root"),
    ("the", "the", "DET", 6, "det"),
    ("annual", "annual", "ADJ", 6, "amod"),
    ("budget", "budget", "NOUN", 3, "obj"),
    (".", ".", "PUNCT", 3, "punct"),
]

OFF_TAXES = [
    ("Taxes", "tax", "NOUN", 2, "nsubj"),
    ("increased", "increase", "VERB", 0, "root"),
    ("sharply", "sharply", "ADV", 2, "advmod"),
    (".", ".", "PUNCT", 2, "punct"),
]

OFF_REPORT = [
    ("The", "the", "DET", 3, "det"),
    ("quarterly", "quarterly", "ADJ", 3, "amod"),
    ("report", "report", "NOUN", 4, "nsubj"),
    ("described", "describe", "VERB", 0, "root"),
    ("the", "the", "DET", 6, "det"),
    ("results", "result", "NOUN", 4, "obj"),
    (".", ".", "PUNCT", 4, "punct"),
]

OFF_MEETING = [
    ("Shareholders", "shareholder", "NOUN", 2, "nsubj"),
    ("attended", "attend", "VERB", 0, "root"),
    ("the", "the", "DET", 4, "det"),
    ("meeting", "meeting", "NOUN", 2, "obj"),
    (".", ".", "PUNCT", 2, "punct"),
]


SUBJECTS = {
    "elephant": {
        "meta": {
            "subject": "elephant",
            "hypernym_id": "animal.n.01",
            "wordnet_synset_id": "elephant.n.01",
            "wikipedia_title": "Elephant",
            "image_url": "https://example.org/images/elephant.jpg",
            "alternative_lemmas": ["pachyderm"],
            "reference_url": "https://example.org/wiki/elephant",
            "urls": {
                "doc01": "https://example.org/elephants/habits",
                "doc02": "https://example.org/elephants/anatomy",
                "doc03": "https://example.org/elephants/asia",
                "doc04": "https://example.org/elephants/africa",
                "doc05": "https://example.org/elephants/behavior",
                "doc06": "https://example.org/finance/minutes",
            },
        },
        "reference": [
            E_REF_EAT, E_REF_HAS, E_REF_ASIA, E_ASIAN_FORESTS,
            E_SLEEP, E_REF_HERDS, E_ANIMALS, E_DRINK,
        ],
        "docs": {
            "doc01": [E_TRUNKS, E_EAT_LIST, E_MOSTLY, E_DRINK, E_HERDS, E_AN_EATS],
            "doc02": [E_TUSKS, E_AFRICAN_EARS, E_POSS_TRUNK, E_TRUNKS_HAVE,
                      E_POSS_SKIN, E_LARGE_EARS],
            "doc03": [E_ASIAN_FORESTS, E_ASIAN_EARS, E_ASIAN_EAT, E_ASIATIC_EAT,
                      E_BATHE],
            "doc04": [E_AFRICAN_AFRICA, E_AFRICA, E_ANIMALS, E_SLEEP, E_PACHYDERM],
            "doc05": [E_INTELLIGENT, E_RUMBLING, E_NO_MEAT, E_CALVES, E_BABY],
            "doc06": [OFF_BUDGET, OFF_TAXES, OFF_REPORT, OFF_MEETING],
        },
    },
    "lion": {
        "meta": {
            "subject": "lion",
            "hypernym_id": "animal.n.01",
            "wordnet_synset_id": "lion.n.01",
            "wikipedia_title": "Lion",
            "image_url": "https://example.org/images/lion.jpg",
            "alternative_lemmas": ["lioness"],
            "reference_url": "https://example.org/wiki/lion",
            "urls": {
                "doc01": "https://example.org/lions/diet",
                "doc02": "https://example.org/lions/hunting",
                "doc03": "https://example.org/lions/prey",
                "doc04": "https://example.org/lions/life",
                "doc05": "https://example.org/finance/notes",
            },
        },
        "reference": [
            L_CATS, L_REF_EAT, L_AFRICA, L_REF_MANE, L_GROUPS, L_SLEEP, L_CLAWS,
        ],
        "docs": {
            "doc01": [L_EAT, L_EAT, L_EAT, L_EAT],
            "doc02": [L_A_LION_EATS, L_A_LION_EATS, L_EAT_A_ZEBRA, L_EAT_A_ZEBRA,
                      L_THE_LIONS],
            "doc03": [L_PREY, L_PREY, L_FEED, L_HUNT, L_CONSUME],
            "doc04": [L_AFRICA, L_SLEEP, L_GROUPS, L_MANE, L_CLAWS, L_CATS,
                      L_LIONESS, L_SHADE],
            "doc05": [OFF_BUDGET, OFF_TAXES, OFF_MEETING],
        },
    },
    "bartender": {
        "meta": {
            "subject": "bartender",
            "hypernym_id": "professional.n.01",
            "wordnet_synset_id": "bartender.n.01",
            "wikipedia_title": "Bartender",
            "image_url": "https://example.org/images/bartender.jpg",
            "alternative_lemmas": [],
            "reference_url": "https://example.org/wiki/bartender",
            "urls": {
                "doc01": "https://example.org/bars/jobs",
                "doc02": "https://example.org/bars/service",
                "doc03": "https://example.org/bars/shifts",
                "doc04": "https://example.org/bars/venues",
                "doc05": "https://example.org/finance/report",
            },
        },
        "reference": [
            B_REF_WORKS, B_REF_MIX, B_REF_SERVE, B_NIGHT, B_REF_PREPARES, B_BEERS,
        ],
        "docs": {
            "doc01": [B_BAR, B_SERVE, B_COCKTAILS],
            "doc02": [B_BAR, B_CUSTOMERS, B_SERVE],
            "doc03": [B_BAR, B_QUICKLY, B_NIGHT],
            "doc04": [B_RESTAURANT, B_BEERS, B_TIPS],
            "doc05": [OFF_BUDGET, OFF_REPORT, OFF_MEETING],
        },
    },
}


# --- embedding table -----------------------------------------------------
# 16 axes. Big-norm words define cluster geometry; light verbs and
# subject nouns get norm 1 so they never dominate a phrase mean.

DIM = 16


def axis(i, scale):
    v = [0.0] * DIM
    v[i] = scale
    return v


VECTORS = {
    # predation verbs share one direction: their triples must merge
    "eat": axis(0, 10.0),
    "prey": axis(0, 10.0),
    "feed": axis(0, 10.0),
    "hunt": axis(0, 10.0),
    "consume": axis(0, 10.0),
    # distinct object nouns, one axis each per subject
    "root": axis(2, 10.0),
    "grass": axis(3, 10.0),
    "fruit": axis(4, 10.0),
    "bark": axis(5, 10.0),
    "herd": axis(6, 10.0),
    "water": axis(7, 10.0),
    "meat": axis(9, 10.0),
    "africa": axis(10, 10.0),
    "river": axis(11, 10.0),
    "tusk": axis(12, 10.0),
    "animal": axis(13, 10.0),
    "ear": axis(14, 10.0),
    "zebra": axis(8, 10.0),
    "gazelle": axis(11, 10.0),
    "group": axis(9, 10.0),
    "claw": axis(7, 10.0),
    "bar": axis(2, 10.0),
    "restaurant": axis(3, 10.0),
    "cocktail": axis(4, 10.0),
    "beer": axis(5, 10.0),
    "drink": axis(6, 10.0),
    "customer": axis(9, 10.0),
    "live": axis(15, 10.0),
    # subgroup modifiers: asian and asiatic coincide, african is elsewhere
    "asian": axis(8, 10.0),
    "asiatic": axis(8, 10.0),
    "african": axis(1, 10.0),
    "baby": axis(9, 10.0),
    "school": axis(2, 10.0),
    "tourist": axis(3, 10.0),
    # light words: norm 1 so phrase means stay dominated by content nouns
    "elephant": axis(13, 1.0),
    "lion": axis(1, 1.0),
    "bartender": axis(12, 1.0),
    "bus": axis(4, 1.0),
    "have": axis(14, 1.0),
    "use": axis(11, 1.0),
    "work": axis(0, 1.0),
    "mix": axis(1, 1.0),
    "prepare": axis(2, 1.0),
    "serve": axis(3, 1.0),
    "talk": axis(5, 1.0),
    "pour": axis(6, 1.0),
    "earn": axis(7, 1.0),
    "sleep": axis(8, 1.0),
    "bathe": axis(9, 1.0),
    "communicate": axis(10, 1.0),
    "protect": axis(15, 1.0),
}


def write_vectors(path):
    lines = [f"{len(VECTORS)} {DIM}"]
    for word, vec in VECTORS.items():
        comps = " ".join(f"{x:g}" for x in vec)
        lines.append(f"{word} {comps}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


# --- self checks ---------------------------------------------------------


def check(table):
    from facetforge.embeddings import cosine, phrase_vector

    def sim(a, b):
        va, _ = phrase_vector(a, table)
        vb, _ = phrase_vector(b, table)
        return cosine(va, vb)

    merge_floor = 0.9       # pairs that must cluster together
    split_ceiling = 0.55    # pairs that must stay apart (merge needs > 0.65)
    candidate_gate = 0.8    # full-triple prefilter threshold

    predation = ["eat zebra", "prey on zebra", "feed on zebra",
                 "hunt zebra", "consume zebra"]
    for i in range(len(predation)):
        for j in range(i + 1, len(predation)):
            s = sim(predation[i], predation[j])
            assert s >= merge_floor, (predation[i], predation[j], s)
    full = ["lion " + p for p in predation]
    for i in range(len(full)):
        for j in range(i + 1, len(full)):
            s = sim(full[i], full[j])
            assert s >= candidate_gate, (full[i], full[j], s)

    apart = [
        ("work in bar", "work in restaurant"),
        ("eat root", "eat grass"),
        ("eat grass", "eat fruit"),
        ("do not eat meat", "eat grass"),
        ("hunt in group", "eat zebra"),
        ("hunt gazelle", "eat zebra"),
        ("live in herd", "live in africa"),
        ("use their trunk", "have trunk"),
        ("have trunk", "have tusk"),
        ("have tusk", "have large ear"),
        ("school bus", "tourist bus"),
        ("asian elephant", "african elephant"),
        ("asian elephant", "baby elephant"),
    ]
    for a, b in apart:
        s = sim(a, b)
        assert s <= split_ceiling, (a, b, s)
    assert sim("asian elephant", "asiatic elephant") >= merge_floor
    assert sim("bartender work in bar", "bartender work in restaurant") < candidate_gate


def main():
    corpus_dir = FIXTURES / "corpus"
    total = 0
    for name, entry in SUBJECTS.items():
        subject_dir = corpus_dir / name
        subject_dir.mkdir(parents=True, exist_ok=True)
        (subject_dir / "meta.json").write_text(
            json.dumps(entry["meta"], indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
        write_doc(subject_dir / "reference.conllu", entry["reference"])
        total += len(entry["reference"])
        for doc_id, sentences in entry["docs"].items():
            write_doc(subject_dir / f"{doc_id}.conllu", sentences)
            total += len(sentences)

    vectors_path = FIXTURES / "vectors.txt"
    write_vectors(vectors_path)

    sys.path.insert(0, str(ROOT / "src"))
    from facetforge.corpus import load_subject_dir
    from facetforge.embeddings import load_embeddings

    for name in SUBJECTS:
        meta, reference, docs = load_subject_dir(corpus_dir / name)
        assert meta.subject == name
        assert reference.sentences
        assert len(docs) == len(SUBJECTS[name]["docs"])
    table = load_embeddings(vectors_path)
    assert len(table.vectors) == len(VECTORS)
    check(table)
    print(f"wrote {total} sentences across {len(SUBJECTS)} subjects; "
          f"{len(VECTORS)} vectors of dim {DIM}")


if __name__ == "__main__":
    main()
