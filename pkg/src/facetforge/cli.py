"""Command-line entry points.

Defaults can come from a JSON config file with nested sections:

    {
      "corpus": {"min_score": 0.15, "max_keep": 500},
      "embeddings": {"path": "vectors.txt"},
      "consolidation": {"tau_fast": 0.8, "theta_cut": 0.35, "linkage": "average"},
      "retrieval": {"k": 5, "method": "tfidf"},
      "model": {"endpoint": "", "timeout": 10.0},
      "server": {"port": 8080}
    }

Precedence: environment variables (serve only) > command-line flags >
config file > built-in defaults.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from .consolidation import LINKAGES, ConsolidationConfig
from .corpus import FilterPolicy
from .embeddings import load_embeddings
from .kbstore import KnowledgeBase
from .pipeline import (
    consolidate_records,
    extract_subject,
    ingest_subject,
    read_records,
    write_records,
)
from .qa import HttpModelClient, KBRegistry, MockModelClient
from .retrieval import build_index, retrieve

ENV_PORT = "FACETFORGE_PORT"
ENV_MODEL_ENDPOINT = "FACETFORGE_MODEL_ENDPOINT"


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise click.ClickException("config file must hold a JSON object")
    return data


def _cfg(config: dict, dotted: str, default):
    node = config
    for part in dotted.split("."):
        if not isinstance(node, dict) or part not in node:
            return default
        node = node[part]
    return node


def _policy(config: dict, min_score: float | None, max_keep: int | None) -> FilterPolicy:
    if min_score is None:
        min_score = float(_cfg(config, "corpus.min_score", 0.15))
    if max_keep is None:
        max_keep = _cfg(config, "corpus.max_keep", 500)
        max_keep = None if max_keep is None else int(max_keep)
    return FilterPolicy(min_score=min_score, max_keep=max_keep)


def _embedding_table(config: dict, embeddings: str | None):
    path = embeddings or _cfg(config, "embeddings.path", None)
    if not path:
        return None
    return load_embeddings(path)


@click.group()
def main():
    """Build, inspect and serve faceted commonsense knowledge bases."""


@main.command()
@click.option("--subject-dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--min-score", type=float, default=None, help="Relevance cutoff.")
@click.option("--max-keep", type=int, default=None, help="Cap on retained documents.")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def ingest(subject_dir, min_score, max_keep, config_path):
    """Rank a subject's documents by relevance against its reference."""
    config = _load_config(config_path)
    report = ingest_subject(subject_dir, _policy(config, min_score, max_keep))
    click.echo(f"subject\t{report.meta.subject}")
    for query in report.queries:
        click.echo(f"query\t{query}")
    click.echo("doc_id\tscore\tkept")
    for row in report.scored:
        click.echo(f"{row.doc_id}\t{row.score:.4f}\t{'yes' if row.kept else 'no'}")
    click.echo(
        f"retained {len(report.retained)} of {len(report.scored)} documents, "
        f"{report.sentences} sentences"
    )


@main.command()
@click.option("--subject-dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.option("--min-score", type=float, default=None)
@click.option("--max-keep", type=int, default=None)
@click.option("--embeddings", type=click.Path(exists=True), default=None,
              help="Word-vector table for subgroup clustering.")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def extract(subject_dir, out_path, min_score, max_keep, embeddings, config_path):
    """Extract raw faceted assertions from a subject directory."""
    config = _load_config(config_path)
    table = _embedding_table(config, embeddings)
    records = extract_subject(subject_dir, _policy(config, min_score, max_keep), table)
    count = write_records(records, out_path)
    meta = records[0]["meta"]
    click.echo(
        f"{meta['subject']}: {meta['raw_assertions']} raw assertions from "
        f"{meta['websites_retained']} documents -> {out_path} ({count} records)"
    )


@main.command(name="consolidate")
@click.option("--in", "in_paths", required=True, multiple=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Raw record file; repeat to merge subjects.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.option("--tau-fast", type=float, default=None, help="Candidate-pair cosine cutoff.")
@click.option("--theta-cut", type=float, default=None, help="Cluster distance threshold.")
@click.option("--linkage", type=click.Choice(LINKAGES), default=None)
@click.option("--embeddings", type=click.Path(exists=True), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def consolidate_cmd(in_paths, out_path, tau_fast, theta_cut, linkage, embeddings, config_path):
    """Merge raw assertion records into a consolidated KB dump."""
    config = _load_config(config_path)
    cfg = ConsolidationConfig(
        tau_fast=tau_fast if tau_fast is not None
        else float(_cfg(config, "consolidation.tau_fast", 0.8)),
        theta_cut=theta_cut if theta_cut is not None
        else float(_cfg(config, "consolidation.theta_cut", 0.35)),
        linkage=linkage or _cfg(config, "consolidation.linkage", "average"),
    )
    table = _embedding_table(config, embeddings)
    records = []
    for path in in_paths:
        records.extend(read_records(path))
    kb = consolidate_records(records, table, cfg)
    lines = kb.export_path(out_path)
    for name in sorted(kb.concepts):
        click.echo(f"{name}: {kb.get_concept(name).stats.summary()}")
    click.echo(f"wrote {lines} lines to {out_path}")


@main.command(name="retrieve")
@click.option("--kb", "kb_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--q", "query", required=True, help="Question or keyword query.")
@click.option("-k", "top_k", type=int, default=None)
@click.option("--method", type=click.Choice(["overlap", "tfidf"]), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def retrieve_cmd(kb_path, query, top_k, method, config_path):
    """Rank KB assertions against a query."""
    config = _load_config(config_path)
    top_k = top_k if top_k is not None else int(_cfg(config, "retrieval.k", 5))
    method = method or _cfg(config, "retrieval.method", "tfidf")
    kb = KnowledgeBase.import_path(kb_path)
    index = build_index(kb)
    hits = retrieve(index, query, k=top_k, method=method)
    click.echo("rank\tscore\tassertion_id\ttext")
    for rank, hit in enumerate(hits, start=1):
        click.echo(f"{rank}\t{hit.score:.4f}\t{hit.assertion_id}\t{hit.text}")
    if not hits:
        click.echo("no matches", err=True)


@main.command(name="serve")
@click.option("--kb", "kb_paths", required=True, multiple=True,
              type=click.Path(exists=True, dir_okay=False),
              help="KB dump; repeat for multiple KBs. First is the browsing default.")
@click.option("--port", type=int, default=None)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--model-endpoint", default=None,
              help="External inference server URL; omit to use the mock client.")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def serve_cmd(kb_paths, port, host, model_endpoint, config_path):
    """Serve the HTTP API over one or more KB dumps."""
    import uvicorn

    from .server import create_app

    config = _load_config(config_path)
    registry = KBRegistry()
    for path in kb_paths:
        name = Path(path).stem
        registry.add(name, KnowledgeBase.import_path(path))

    if port is None:
        port = int(_cfg(config, "server.port", 8080))
    env_port = os.environ.get(ENV_PORT)
    if env_port:
        port = int(env_port)

    if model_endpoint is None:
        model_endpoint = _cfg(config, "model.endpoint", "") or None
    env_endpoint = os.environ.get(ENV_MODEL_ENDPOINT)
    if env_endpoint:
        model_endpoint = env_endpoint

    if model_endpoint:
        client = HttpModelClient(
            model_endpoint, timeout=float(_cfg(config, "model.timeout", 10.0))
        )
    else:
        default_kb, _ = registry.get(registry.default_name)
        client = MockModelClient(kb=default_kb)

    click.echo(
        f"serving {', '.join(registry.names())} on {host}:{port} "
        f"({'endpoint ' + model_endpoint if model_endpoint else 'mock client'})",
        err=True,
    )
    uvicorn.run(create_app(registry, client), host=host, port=port, log_level="warning")


@main.command(name="report")
@click.option("--kb", "kb_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out-dir", required=True, type=click.Path(file_okay=False))
def report_cmd(kb_path, out_dir):
    """Write per-concept stats as TSV plus summary charts."""
    from .report import write_report

    kb = KnowledgeBase.import_path(kb_path)
    for path in write_report(kb, out_dir):
        click.echo(str(path))


if __name__ == "__main__":
    main(prog_name="facetforge")
