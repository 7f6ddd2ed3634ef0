"""Random but valid knowledge bases for round-trip testing."""

from __future__ import annotations

import random

from facetforge.kbstore import (
    Assertion,
    ConceptProfile,
    FacetRecord,
    KBStats,
    KnowledgeBase,
    Provenance,
)

LABELS = [
    "cause", "manner", "purpose", "transitive-object",
    "degree", "location", "temporal", "other-quality",
]
SUBJECTS = ["lion", "elephant", "bartender", "café owner", "zebra"]
VERBS = ["eat", "hunt", "serve", "mix", "live in", "work at", "protect"]
OBJECTS = ["zebra", "grass", "drinks", "the savanna", "café au lait", ""]
FACET_VALUES = ["in the evening", "mostly", "by night", "in courts", "für alle"]


def _span(sentence: str, phrase: str) -> dict:
    start = sentence.encode("utf-8").index(phrase.encode("utf-8"))
    return {"start": start, "end": start + len(phrase.encode("utf-8")), "text": phrase}


def _provenance(rng: random.Random, s: str, p: str, o: str, n_facets: int) -> Provenance:
    sentence = f"{s} {p} {o}".strip() + "."
    spans = {"subject": _span(sentence, s), "predicate": _span(sentence, p)}
    if o and rng.random() < 0.8:
        spans["object"] = _span(sentence, o)
    holes = [None] * n_facets
    if n_facets and rng.random() < 0.7:
        slot = rng.randrange(n_facets)
        holes[slot] = {"start": 0, "end": len(s.encode("utf-8")), "text": s}
    spans["facets"] = holes
    return Provenance(
        doc_id=f"doc{rng.randint(1, 9):02d}",
        url=f"https://example.org/{rng.randint(1, 99)}",
        sent_id=f"s{rng.randint(1, 30)}",
        sentence=sentence,
        spans=spans,
    )


def random_kb(rng: random.Random) -> KnowledgeBase:
    kb = KnowledgeBase()

    for idx in range(rng.randint(0, 3)):
        name = rng.choice(SUBJECTS).lower()
        if kb.has_concept(name):
            continue
        raw = rng.randint(0, 40)
        profile = ConceptProfile(
            name=name,
            wordnet_synset_id=f"{name}.n.01" if rng.random() < 0.7 else "",
            wikipedia_title=name.title() if rng.random() < 0.5 else "",
            image_url=f"https://example.org/img/{idx}.jpg" if rng.random() < 0.4 else "",
            alternative_lemmas=tuple(
                sorted(rng.sample(["beast", "critter", "mixologist"], rng.randint(0, 2)))
            ),
            subgroups=tuple(
                {
                    "name": f"{adj} {name}",
                    "member_phrases": [f"{adj} {name}"],
                    "frequency": rng.randint(1, 6),
                }
                for adj in rng.sample(["big", "small", "young"], rng.randint(0, 2))
            ),
            aspects=tuple(
                {
                    "name": part,
                    "frequency": rng.randint(1, 4),
                    "source": rng.choice(["possessive", "has-triple"]),
                }
                for part in rng.sample(["mane", "trunk", "apron"], rng.randint(0, 2))
            ),
            stats=KBStats(
                websites_retained=rng.randint(0, 9),
                sentences=rng.randint(0, 99),
                raw_assertions=raw,
                consolidated_assertions=rng.randint(0, raw),
            ),
            hypernym_id=rng.choice(["animal.n.01", "professional.n.01", ""]),
            queries=tuple(f"{name} facts" for _ in range(rng.randint(0, 1))),
        )
        kb.put_concept(profile)

    seen: set[tuple[str, str, str]] = set()
    for _ in range(rng.randint(0, 6)):
        s = rng.choice(SUBJECTS).lower()
        p = rng.choice(VERBS)
        o = rng.choice(OBJECTS)
        if (s, p, o) in seen:
            continue
        seen.add((s, p, o))

        facets = tuple(
            FacetRecord(
                label=rng.choice(LABELS),
                value=rng.choice(FACET_VALUES),
                frequency=rng.randint(1, 5),
            )
            for _ in range(rng.randint(0, 3))
        )

        if rng.random() < 0.5:
            freqs = [rng.randint(1, 5) for _ in range(rng.randint(1, 3))]
            members = tuple(
                {"s": s, "p": f"{p} {i}".strip() if i else p, "o": o, "frequency": f}
                for i, f in enumerate(freqs)
            )
            frequency = sum(freqs)
        else:
            members = ()
            frequency = rng.randint(1, 9)

        provenance = tuple(
            _provenance(rng, s, p, o, len(facets))
            for _ in range(rng.randint(0, 3))
        )
        kb.add_assertion(
            Assertion.build(
                s, p, o,
                facets=facets,
                frequency=frequency,
                cluster_members=members,
                provenance=provenance,
            )
        )
    return kb
