"""CLI pipeline: build, metrics, export, synth."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from agt.analytics import summarize
from agt.builder import build_graph
from agt.cli import main
from agt.records import emit_record, load_corpus
from agt.storage import load_graph
from agt.synth import SynthParams, generate

from conftest import five_node_record


@pytest.fixture
def runner():
    return CliRunner()


def _write_fixture_corpus(path):
    path.write_text(emit_record(five_node_record()) + "\n", encoding="utf-8")


def test_build_reports_table_numbers(runner, tmp_path):
    corpus_file = tmp_path / "c.jsonl"
    _write_fixture_corpus(corpus_file)
    out = tmp_path / "g.agt"
    result = runner.invoke(main, ["build", "--in", str(corpus_file), "--out", str(out)])
    assert result.exit_code == 0, result.output
    for token in ["# of Nodes", "5", "# of Edges", "4", "# of Trees", "2", "# of Components", "1"]:
        assert token in result.output
    assert out.exists()


def test_build_empty_input_exits_2(runner, tmp_path):
    empty = tmp_path / "empty.jsonl"
    empty.write_text("", encoding="utf-8")
    result = runner.invoke(main, ["build", "--in", str(empty), "--out", str(tmp_path / "g.agt")])
    assert result.exit_code == 2


def test_build_unreadable_input_exits_1(runner, tmp_path):
    result = runner.invoke(
        main, ["build", "--in", str(tmp_path / "nope.jsonl"), "--out", str(tmp_path / "g.agt")]
    )
    assert result.exit_code == 1


def test_build_twice_is_byte_identical(runner, tmp_path):
    corpus_file = tmp_path / "c.jsonl"
    _write_fixture_corpus(corpus_file)
    out1, out2 = tmp_path / "g1.agt", tmp_path / "g2.agt"
    assert runner.invoke(main, ["build", "--in", str(corpus_file), "--out", str(out1)]).exit_code == 0
    assert runner.invoke(main, ["build", "--in", str(corpus_file), "--out", str(out2)]).exit_code == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_metrics_emits_report_and_csvs(runner, tmp_path):
    corpus_file = tmp_path / "c.jsonl"
    _write_fixture_corpus(corpus_file)
    graph_file = tmp_path / "g.agt"
    runner.invoke(main, ["build", "--in", str(corpus_file), "--out", str(graph_file)])
    csv_dir = tmp_path / "csv"
    result = runner.invoke(
        main, ["metrics", "--graph", str(graph_file), "--csv", str(csv_dir)]
    )
    assert result.exit_code == 0, result.output
    doc = json.loads(result.output)
    expected = summarize(load_graph(graph_file)).to_json_dict()
    assert doc == expected
    for name in ["size_cdf.csv", "depth_histogram.csv", "country_table.csv"]:
        assert (csv_dir / name).exists()


def test_metrics_bad_graph_file_exits_1(runner, tmp_path):
    result = runner.invoke(main, ["metrics", "--graph", str(tmp_path / "nope.agt")])
    assert result.exit_code == 1


def test_export_dot_counts(runner, tmp_path):
    corpus_file = tmp_path / "c.jsonl"
    _write_fixture_corpus(corpus_file)
    graph_file = tmp_path / "g.agt"
    runner.invoke(main, ["build", "--in", str(corpus_file), "--out", str(graph_file)])
    result = runner.invoke(main, ["export", "--graph", str(graph_file), "--format", "dot"])
    assert result.exit_code == 0
    assert sum(1 for line in result.output.splitlines() if "label=" in line) == 5
    assert sum(1 for line in result.output.splitlines() if "->" in line) == 4


def test_export_unknown_root_exits_3(runner, tmp_path):
    corpus_file = tmp_path / "c.jsonl"
    _write_fixture_corpus(corpus_file)
    graph_file = tmp_path / "g.agt"
    runner.invoke(main, ["build", "--in", str(corpus_file), "--out", str(graph_file)])
    result = runner.invoke(
        main, ["export", "--graph", str(graph_file), "--root", "999", "--format", "dot"]
    )
    assert result.exit_code == 3


def test_export_subtree_json(runner, tmp_path):
    corpus_file = tmp_path / "c.jsonl"
    _write_fixture_corpus(corpus_file)
    graph_file = tmp_path / "g.agt"
    runner.invoke(main, ["build", "--in", str(corpus_file), "--out", str(graph_file)])
    result = runner.invoke(
        main,
        ["export", "--graph", str(graph_file), "--root", "0", "--format", "json",
         "--up", "1", "--down", "1"],
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["focus"] == 0 and len(doc["nodes"]) == 5


def test_synth_writes_corpus_and_sidecar(runner, tmp_path):
    out = tmp_path / "corpus.jsonl"
    result = runner.invoke(
        main,
        ["synth", "--trees", "2", "--depth", "2", "--branch", "1.5",
         "--seed", "7", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    corpus = load_corpus([out])
    assert len(corpus) > 0
    sidecar = tmp_path / "corpus.jsonl.truth"
    lines = sidecar.read_text(encoding="utf-8").splitlines()
    assert all(len(line.split("\t")) == 3 for line in lines)
    # One line per mention: owners + advisor mentions + mentorship mentions.
    _, truth = generate(SynthParams(num_trees=2, max_depth=2, branching=1.5, seed=7))
    assert len(lines) == len(truth.mentions)


def test_synth_depth_zero_single_record(runner, tmp_path):
    out = tmp_path / "one.jsonl"
    result = runner.invoke(
        main,
        ["synth", "--trees", "1", "--depth", "0", "--branch", "3.0", "--out", str(out)],
    )
    assert result.exit_code == 0
    corpus = load_corpus([out])
    assert len(corpus) == 1
    assert corpus.records[0].mentorships == []


def test_synth_seed_determinism(runner, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    args = ["synth", "--trees", "3", "--depth", "3", "--branch", "2.0", "--seed", "5"]
    assert runner.invoke(main, args + ["--out", str(a)]).exit_code == 0
    assert runner.invoke(main, args + ["--out", str(b)]).exit_code == 0
    assert a.read_bytes() == b.read_bytes()


def test_synth_invalid_probability_rejected(runner, tmp_path):
    result = runner.invoke(
        main,
        ["synth", "--trees", "1", "--depth", "1", "--branch", "1.0",
         "--collide", "2.0", "--out", str(tmp_path / "x.jsonl")],
    )
    assert result.exit_code != 0


def test_cli_pipeline_equals_in_process(runner, tmp_path):
    corpus_file = tmp_path / "c.jsonl"
    args = ["synth", "--trees", "3", "--depth", "3", "--branch", "1.8", "--seed", "13",
            "--out", str(corpus_file)]
    assert runner.invoke(main, args).exit_code == 0
    graph_file = tmp_path / "g.agt"
    assert runner.invoke(
        main, ["build", "--in", str(corpus_file), "--out", str(graph_file)]
    ).exit_code == 0
    result = runner.invoke(main, ["metrics", "--graph", str(graph_file)])
    cli_doc = json.loads(result.output)
    in_process = summarize(build_graph(load_corpus([corpus_file]))).to_json_dict()
    assert cli_doc == in_process


def test_serve_rejects_bad_bind(runner, tmp_path):
    corpus_file = tmp_path / "c.jsonl"
    _write_fixture_corpus(corpus_file)
    graph_file = tmp_path / "g.agt"
    runner.invoke(main, ["build", "--in", str(corpus_file), "--out", str(graph_file)])
    result = runner.invoke(main, ["serve", "--graph", str(graph_file), "--bind", "nonsense"])
    assert result.exit_code == 1


def test_home_country_env_override(runner, tmp_path, monkeypatch):
    lines = [
        '{"id":"A","name":"Ana","degrees":[{"level":"PHD","year":1990,"country":"Portugal"}]}',
    ]
    corpus_file = tmp_path / "c.jsonl"
    corpus_file.write_text("\n".join(lines) + "\n", encoding="utf-8")
    graph_file = tmp_path / "g.agt"
    runner.invoke(main, ["build", "--in", str(corpus_file), "--out", str(graph_file)])
    monkeypatch.setenv("AGT_HOME_COUNTRY", "Portugal")
    result = runner.invoke(main, ["metrics", "--graph", str(graph_file)])
    doc = json.loads(result.output)
    assert doc["country_table"] == []  # Portugal is domestic now
