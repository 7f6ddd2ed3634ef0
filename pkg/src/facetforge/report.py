"""Delimited stats plus rendered figures for a built knowledge base.

The report directory gets one TSV that spreadsheets open directly and a
small set of PNG charts next to it. Rendering uses the Agg backend so
the command works headless.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .kbstore import KnowledgeBase

STATS_COLUMNS = (
    "concept",
    "websites_retained",
    "sentences",
    "raw_assertions",
    "consolidated_assertions",
    "facet_count",
    "subgroup_count",
    "aspect_count",
)


def write_report(kb: KnowledgeBase, out_dir) -> list[Path]:
    """Write stats.tsv and the charts; returns the created file paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    per_concept_facets: dict[str, int] = {}
    label_counts: Counter[str] = Counter()
    frequencies: list[int] = []
    for a in kb.all_assertions():
        frequencies.append(a.frequency)
        for f in a.facets:
            label_counts[f.label] += f.frequency
            per_concept_facets[a.subject] = per_concept_facets.get(a.subject, 0) + 1

    stats_path = out / "stats.tsv"
    with open(stats_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\t".join(STATS_COLUMNS) + "\n")
        for name in sorted(kb.concepts):
            profile = kb.get_concept(name)
            st = profile.stats
            fh.write("\t".join(str(v) for v in (
                name,
                st.websites_retained,
                st.sentences,
                st.raw_assertions,
                st.consolidated_assertions,
                per_concept_facets.get(name, 0),
                len(profile.subgroups),
                len(profile.aspects),
            )) + "\n")
    written.append(stats_path)

    concepts = sorted(kb.concepts)
    counts = [kb.get_concept(n).stats.consolidated_assertions for n in concepts]
    fig, ax = plt.subplots(figsize=(max(4, len(concepts) * 1.2), 3.2))
    ax.bar(concepts, counts, color="#4878a8")
    ax.set_ylabel("assertions")
    ax.set_title("Consolidated assertions per concept")
    ax.tick_params(axis="x", rotation=30)
    fig.tight_layout()
    path = out / "assertions_per_concept.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    labels = sorted(label_counts)
    fig, ax = plt.subplots(figsize=(6.4, 3.2))
    ax.barh(labels, [label_counts[l] for l in labels], color="#6a9a58")
    ax.set_xlabel("facet observations")
    ax.set_title("Facet label distribution")
    fig.tight_layout()
    path = out / "facet_labels.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(4.8, 3.2))
    if frequencies:
        ax.hist(frequencies, bins=min(20, max(frequencies)), color="#a86048")
    ax.set_xlabel("assertion frequency")
    ax.set_ylabel("assertions")
    ax.set_title("Assertion frequency histogram")
    fig.tight_layout()
    path = out / "frequency_histogram.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    return written
