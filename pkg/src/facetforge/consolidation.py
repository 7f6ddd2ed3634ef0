"""Clustering of near-duplicate triples and facet grouping.

The clustering path is deliberately two-staged: a cheap embedding cosine
prefilter picks candidate pairs, then hierarchical agglomerative
clustering runs over 1 - score distances with a cut threshold. Pairs
outside the candidate set are treated as infinitely distant, so the
prefilter can only split clusters, never merge them.

Determinism contract: linkage values are always recomputed from the
original distance matrix over the canonical (sorted-member) ordering,
ties merge the smallest (i, j) pair, and representatives break frequency
ties lexicographically. Identical inputs give identical partitions on
every platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Protocol, Sequence

from .embeddings import EmbeddingTable, cosine, phrase_vector

Triple = tuple[str, str, str]

LINKAGES = ("single", "complete", "average")

INF = math.inf


@dataclass(frozen=True)
class HacParams:
    """Knobs for agglomerative clustering used outside triple merging."""

    linkage: str = "average"
    theta_cut: float = 0.35

    def __post_init__(self):
        if self.linkage not in LINKAGES:
            raise ValueError(f"unknown linkage {self.linkage!r}")
        if self.theta_cut < 0.0:
            raise ValueError("theta_cut must be >= 0")


@dataclass(frozen=True)
class ConsolidationConfig:
    """Settlement parameters for triple merging."""

    tau_fast: float = 0.8
    theta_cut: float = 0.35
    linkage: str = "average"

    def __post_init__(self):
        if not 0.0 <= self.tau_fast <= 1.0:
            raise ValueError("tau_fast must lie in [0, 1]")
        if self.linkage not in LINKAGES:
            raise ValueError(f"unknown linkage {self.linkage!r}")
        if self.theta_cut < 0.0:
            raise ValueError("theta_cut must be >= 0")


class PairScorer(Protocol):
    """Similarity in [0, 1] between two triples; higher means closer."""

    def score(self, a: Triple, b: Triple) -> float: ...


class EmbeddingPairScorer:
    """Cosine of mean word vectors over the predicate and object text.

    The subject is excluded on purpose: consolidation runs per subject,
    so it carries no signal and would only flatten the distances.
    """

    def __init__(self, table: EmbeddingTable):
        self.table = table

    def score(self, a: Triple, b: Triple) -> float:
        va, _ = phrase_vector(f"{a[1]} {a[2]}".strip(), self.table)
        vb, _ = phrase_vector(f"{b[1]} {b[2]}".strip(), self.table)
        return max(0.0, min(1.0, cosine(va, vb)))


def candidate_pairs(
    triples: Sequence[Triple],
    table: EmbeddingTable,
    tau_fast: float = 0.8,
) -> set[tuple[int, int]]:
    """Index pairs whose full-triple embedding cosine reaches ``tau_fast``.

    With ``tau_fast`` 0 every pair qualifies (the prefilter is off); with
    1 only exact-direction matches survive, and anything above 1 is
    vacuously empty. Returned pairs are (i, j) with i < j.
    """
    vectors = [phrase_vector(" ".join(t).strip(), table)[0] for t in triples]
    out: set[tuple[int, int]] = set()
    for i in range(len(triples)):
        for j in range(i + 1, len(triples)):
            sim = max(0.0, min(1.0, cosine(vectors[i], vectors[j])))
            if sim >= tau_fast:
                out.add((i, j))
    return out


def _pair_distance(distances: Mapping[tuple[int, int], float], i: int, j: int) -> float:
    if i == j:
        return 0.0
    key = (i, j) if i < j else (j, i)
    return distances.get(key, INF)


def hac(
    n: int,
    distances: Mapping[tuple[int, int], float],
    linkage: str = "average",
    theta_cut: float = 0.35,
) -> list[list[int]]:
    """Agglomerative clustering over item indices 0..n-1.

    ``distances`` maps (i, j) with i < j to a distance; absent pairs are
    infinitely far apart. Merging stops when the closest pair of clusters
    exceeds ``theta_cut`` (or everything left is unreachable). Returns the
    partition with members sorted inside each cluster and clusters sorted
    by their smallest member.
    """
    if linkage not in LINKAGES:
        raise ValueError(f"unknown linkage {linkage!r}")
    if n < 0:
        raise ValueError("n must be >= 0")
    clusters: list[list[int]] = [[i] for i in range(n)]

    # Linkage is always a function of the original matrix over the merged
    # member lists, recomputed in canonical order. Costs an extra pass per
    # lookup (memoized below) but makes results independent of merge
    # history, which is what the tests pin down.
    memo: dict[tuple[tuple[int, ...], tuple[int, ...]], float] = {}

    def link(a: list[int], b: list[int]) -> float:
        key = (tuple(a), tuple(b))
        if key in memo:
            return memo[key]
        vals = [_pair_distance(distances, i, j) for i in a for j in b]
        if linkage == "single":
            result = min(vals)
        elif linkage == "complete":
            result = max(vals)
        else:
            result = sum(vals) / len(vals) if all(v != INF for v in vals) else INF
        memo[key] = result
        return result

    while len(clusters) > 1:
        best = INF
        best_pair: tuple[int, int] | None = None
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                d = link(clusters[i], clusters[j])
                if d < best:
                    best = d
                    best_pair = (i, j)
        if best_pair is None or best == INF or best > theta_cut:
            break
        i, j = best_pair
        merged = sorted(clusters[i] + clusters[j])
        clusters = [c for k, c in enumerate(clusters) if k not in (i, j)]
        clusters.append(merged)
        clusters.sort(key=lambda c: c[0])

    for c in clusters:
        c.sort()
    clusters.sort(key=lambda c: c[0])
    return clusters


@dataclass(frozen=True)
class TripleCluster:
    """A merged group of surface triples with one representative."""

    representative: Triple
    members: tuple[tuple[Triple, int], ...]
    frequency: int


def cluster_triples(
    items: Sequence[tuple[Triple, int]],
    scorer: PairScorer,
    config: ConsolidationConfig = ConsolidationConfig(),
    candidates: set[tuple[int, int]] | None = None,
) -> list[TripleCluster]:
    """Merge near-duplicate triples into clusters.

    ``items`` pairs each distinct triple with its observed frequency.
    Distance between two triples is 1 - scorer.score, computed only for
    ``candidates`` (all pairs when None). The representative is the most
    frequent member; frequency ties pick the lexicographically smallest
    (s, p, o). Output is sorted by cluster frequency descending, then
    representative ascending.
    """
    if not items:
        return []
    pairs = candidates
    if pairs is None:
        pairs = {(i, j) for i in range(len(items)) for j in range(i + 1, len(items))}
    distances: dict[tuple[int, int], float] = {}
    for i, j in sorted(pairs):
        score = scorer.score(items[i][0], items[j][0])
        distances[(i, j)] = 1.0 - score
    partition = hac(len(items), distances, config.linkage, config.theta_cut)

    out = []
    for cluster in partition:
        members = sorted(
            ((items[k][0], items[k][1]) for k in cluster),
            key=lambda m: (-m[1], m[0]),
        )
        representative = members[0][0]
        out.append(
            TripleCluster(
                representative=representative,
                members=tuple(members),
                frequency=sum(f for _, f in members),
            )
        )
    out.sort(key=lambda c: (-c.frequency, c.representative))
    return out


@dataclass(frozen=True)
class FacetGroup:
    """Facet phrases folded together under a shared head word."""

    head: str
    value: str
    label: str
    frequency: int
    member_values: tuple[str, ...]


def group_facets(
    facets: Sequence[tuple[str, str, int] | tuple[str, str, int, str]],
    stopwords: frozenset[str] | None = None,
) -> list[FacetGroup]:
    """Group facet observations by head word within one assertion.

    Each item is (value_phrase, label, frequency) with an optional fourth
    head-lemma element; without it the head is the last non-stopword
    token. The group keeps the most frequent member value (ties pick the
    lexicographically smallest) and the majority label (ties follow the
    label of that representative value). Sorted by frequency descending,
    then value.
    """
    from .lexicon import head_key, load_stopwords

    stop = stopwords if stopwords is not None else load_stopwords()
    buckets: dict[str, list[tuple[str, str, int]]] = {}
    for item in facets:
        value, label, freq = item[0], item[1], item[2]
        head = item[3] if len(item) > 3 and item[3] else head_key(value, stop)
        if not head:
            head = value
        buckets.setdefault(head, []).append((value, str(label), freq))

    groups = []
    for head in sorted(buckets):
        rows = buckets[head]
        value_freq: dict[str, int] = {}
        label_freq: dict[str, int] = {}
        label_of: dict[str, str] = {}
        for value, label, freq in rows:
            value_freq[value] = value_freq.get(value, 0) + freq
            label_freq[label] = label_freq.get(label, 0) + freq
            label_of.setdefault(value, label)
        best_value = min(value_freq, key=lambda v: (-value_freq[v], v))
        top = max(label_freq.values())
        contenders = sorted(l for l, f in label_freq.items() if f == top)
        rep_label = label_of[best_value]
        label = rep_label if rep_label in contenders else contenders[0]
        groups.append(
            FacetGroup(
                head=head,
                value=best_value,
                label=label,
                frequency=sum(f for _, _, f in rows),
                member_values=tuple(sorted(value_freq)),
            )
        )
    groups.sort(key=lambda g: (-g.frequency, g.value))
    return groups
