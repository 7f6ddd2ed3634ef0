"""Command-line interface, exercised through click's test runner."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

import facetforge.cli as cli
from facetforge.kbstore import KnowledgeBase, assertion_id
from facetforge.pipeline import read_records


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def kb_dump(tmp_path, demo_kb):
    path = tmp_path / "demo_kb.jsonl"
    demo_kb.export_path(path)
    return path


def test_ingest_prints_score_table(runner, fixtures_dir):
    result = runner.invoke(cli.main, [
        "ingest", "--subject-dir", str(fixtures_dir / "corpus" / "elephant"),
    ])
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0] == "subject\telephant"
    assert lines[1] == "query\telephant animal facts"
    assert lines[2] == "doc_id\tscore\tkept"
    doc06 = next(line for line in lines if line.startswith("doc06"))
    assert doc06.endswith("\tno")
    assert lines[-1].startswith("retained 5 of 6 documents, 27 sentences")


def test_extract_writes_record_file(runner, fixtures_dir, tmp_path):
    out = tmp_path / "raw.jsonl"
    result = runner.invoke(cli.main, [
        "extract",
        "--subject-dir", str(fixtures_dir / "corpus" / "bartender"),
        "--out", str(out),
        "--embeddings", str(fixtures_dir / "vectors.txt"),
    ])
    assert result.exit_code == 0, result.output
    assert "bartender: 12 raw assertions from 4 documents" in result.output
    records = read_records(out)
    assert "meta" in records[0]


def test_consolidate_builds_kb_dump(runner, fixtures_dir, tmp_path):
    raw = tmp_path / "raw.jsonl"
    kb_out = tmp_path / "kb.jsonl"
    extract = runner.invoke(cli.main, [
        "extract",
        "--subject-dir", str(fixtures_dir / "corpus" / "bartender"),
        "--out", str(raw),
        "--embeddings", str(fixtures_dir / "vectors.txt"),
    ])
    assert extract.exit_code == 0
    result = runner.invoke(cli.main, [
        "consolidate",
        "--in", str(raw),
        "--out", str(kb_out),
        "--embeddings", str(fixtures_dir / "vectors.txt"),
    ])
    assert result.exit_code == 0, result.output
    assert ("bartender: 4 websites, 12 sentences, 12 raw assertions, "
            "8 consolidated assertions") in result.output
    assert "wrote" in result.output
    kb = KnowledgeBase.import_path(kb_out)
    assert kb.get_assertion(assertion_id("bartender", "work in", "bar")).frequency == 3


def test_consolidate_merges_multiple_inputs(runner, fixtures_dir, tmp_path):
    paths = []
    for subject in ("lion", "bartender"):
        raw = tmp_path / f"{subject}.jsonl"
        extract = runner.invoke(cli.main, [
            "extract",
            "--subject-dir", str(fixtures_dir / "corpus" / subject),
            "--out", str(raw),
            "--embeddings", str(fixtures_dir / "vectors.txt"),
        ])
        assert extract.exit_code == 0
        paths.append(raw)
    kb_out = tmp_path / "kb.jsonl"
    result = runner.invoke(cli.main, [
        "consolidate",
        "--in", str(paths[0]), "--in", str(paths[1]),
        "--out", str(kb_out),
        "--embeddings", str(fixtures_dir / "vectors.txt"),
    ])
    assert result.exit_code == 0, result.output
    kb = KnowledgeBase.import_path(kb_out)
    assert set(kb.concepts) == {"lion", "bartender"}


def test_retrieve_ranks_verbalized_assertions(runner, kb_dump):
    result = runner.invoke(cli.main, [
        "retrieve", "--kb", str(kb_dump),
        "--q", "Bartenders work in [MASK].",
    ])
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0] == "rank\tscore\tassertion_id\ttext"
    assert lines[1].startswith("1\t")
    assert lines[1].endswith("Bartenders work in bar.")


def test_retrieve_k_and_no_match(runner, kb_dump):
    result = runner.invoke(cli.main, [
        "retrieve", "--kb", str(kb_dump), "--q", "eat grass", "-k", "1",
    ])
    assert result.exit_code == 0
    assert len(result.output.splitlines()) == 2
    empty = runner.invoke(cli.main, [
        "retrieve", "--kb", str(kb_dump), "--q", "xyzzy plugh",
    ])
    assert empty.exit_code == 0
    assert "no matches" in empty.stderr


def test_retrieve_defaults_from_config(runner, kb_dump, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"retrieval": {"k": 1, "method": "overlap"}}))
    result = runner.invoke(cli.main, [
        "retrieve", "--kb", str(kb_dump), "--q", "eat grass",
        "--config", str(config),
    ])
    assert result.exit_code == 0, result.output
    assert len(result.output.splitlines()) == 2


def test_config_must_be_an_object(runner, kb_dump, tmp_path):
    config = tmp_path / "config.json"
    config.write_text("[1, 2]")
    result = runner.invoke(cli.main, [
        "retrieve", "--kb", str(kb_dump), "--q", "grass",
        "--config", str(config),
    ])
    assert result.exit_code != 0
    assert "config file must hold a JSON object" in result.stderr


def test_report_command_lists_written_files(runner, kb_dump, tmp_path):
    out_dir = tmp_path / "report"
    result = runner.invoke(cli.main, [
        "report", "--kb", str(kb_dump), "--out-dir", str(out_dir),
    ])
    assert result.exit_code == 0, result.output
    names = [line.rsplit("/", 1)[-1] for line in result.output.splitlines()]
    assert names == [
        "stats.tsv",
        "assertions_per_concept.png",
        "facet_labels.png",
        "frequency_histogram.png",
    ]
    assert (out_dir / "stats.tsv").exists()


class _ServeProbe:
    """Captures what serve would hand to uvicorn without binding a port."""

    def __init__(self, monkeypatch):
        self.calls = []
        self.endpoints = []
        monkeypatch.setattr("uvicorn.run", self._run)
        probe = self

        class FakeHttpClient:
            def __init__(self, endpoint, timeout=10.0):
                probe.endpoints.append((endpoint, timeout))

            def complete(self, setup, prompt, question, context, num_answers=1):
                raise AssertionError("not called in tests")

        monkeypatch.setattr(cli, "HttpModelClient", FakeHttpClient)

    def _run(self, app, host, port, **kwargs):
        self.calls.append({"app": app, "host": host, "port": port})


def test_serve_port_precedence(runner, kb_dump, tmp_path, monkeypatch):
    probe = _ServeProbe(monkeypatch)
    monkeypatch.delenv(cli.ENV_PORT, raising=False)
    monkeypatch.delenv(cli.ENV_MODEL_ENDPOINT, raising=False)

    config = tmp_path / "config.json"
    config.write_text(json.dumps({"server": {"port": 7777}}))

    default = runner.invoke(cli.main, ["serve", "--kb", str(kb_dump)])
    assert default.exit_code == 0, default.output
    assert probe.calls[-1]["port"] == 8080

    from_config = runner.invoke(cli.main, [
        "serve", "--kb", str(kb_dump), "--config", str(config),
    ])
    assert from_config.exit_code == 0
    assert probe.calls[-1]["port"] == 7777

    from_flag = runner.invoke(cli.main, [
        "serve", "--kb", str(kb_dump), "--config", str(config), "--port", "9999",
    ])
    assert from_flag.exit_code == 0
    assert probe.calls[-1]["port"] == 9999

    monkeypatch.setenv(cli.ENV_PORT, "5555")
    from_env = runner.invoke(cli.main, [
        "serve", "--kb", str(kb_dump), "--config", str(config), "--port", "9999",
    ])
    assert from_env.exit_code == 0
    assert probe.calls[-1]["port"] == 5555


def test_serve_model_endpoint_selection(runner, kb_dump, monkeypatch):
    probe = _ServeProbe(monkeypatch)
    monkeypatch.delenv(cli.ENV_PORT, raising=False)
    monkeypatch.delenv(cli.ENV_MODEL_ENDPOINT, raising=False)

    mock = runner.invoke(cli.main, ["serve", "--kb", str(kb_dump)])
    assert mock.exit_code == 0
    assert "mock client" in mock.stderr
    assert probe.endpoints == []

    flagged = runner.invoke(cli.main, [
        "serve", "--kb", str(kb_dump),
        "--model-endpoint", "http://flag.example/v1",
    ])
    assert flagged.exit_code == 0
    assert probe.endpoints[-1][0] == "http://flag.example/v1"

    monkeypatch.setenv(cli.ENV_MODEL_ENDPOINT, "http://env.example/v1")
    enved = runner.invoke(cli.main, [
        "serve", "--kb", str(kb_dump),
        "--model-endpoint", "http://flag.example/v1",
    ])
    assert enved.exit_code == 0
    assert probe.endpoints[-1][0] == "http://env.example/v1"


def test_serve_names_kbs_after_files(runner, kb_dump, monkeypatch):
    probe = _ServeProbe(monkeypatch)
    monkeypatch.delenv(cli.ENV_PORT, raising=False)
    monkeypatch.delenv(cli.ENV_MODEL_ENDPOINT, raising=False)
    result = runner.invoke(cli.main, ["serve", "--kb", str(kb_dump)])
    assert result.exit_code == 0
    assert "serving demo_kb on 127.0.0.1:8080" in result.stderr
    assert probe.calls[-1]["host"] == "127.0.0.1"
