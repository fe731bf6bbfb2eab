"""Operator command line: ingest, build, analyze, export, serve, synth."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .analytics import distributions_csv, summarize
from .builder import build_graph
from .errors import CorruptFile, IoError, UnknownNode, VersionMismatch
from .exports import export_interchange, export_subtree, graph_view
from .records import load_corpus
from .storage import load_graph, save_graph
from .synth import SynthParams, generate, write_corpus, write_truth_sidecar

EXIT_IO = 1
EXIT_EMPTY = 2
EXIT_UNKNOWN_ROOT = 3

_home_country_option = click.option(
    "--home-country",
    default="Brazil",
    envvar="AGT_HOME_COUNTRY",
    show_default=True,
    help="Country whose degrees are domestic (excluded from the country table).",
)


@click.group()
def main():
    """Academic genealogy toolkit."""


def _load_graph_or_exit(path: str):
    try:
        return load_graph(path)
    except (IoError, VersionMismatch, CorruptFile) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_IO)


def _table(report) -> str:
    rows = [
        ("# of Nodes", f"{report.num_nodes}"),
        ("# of Edges", f"{report.num_edges}"),
        ("# of Trees", f"{report.num_trees}"),
        ("# of Components", f"{report.num_components}"),
        ("Avg. Tree Size", f"{report.avg_tree_size:.2f}"),
        ("Avg. Branching", f"{report.avg_branching:.2f}"),
        ("Avg. Out-Degree", f"{report.avg_out_degree:.2f}"),
    ]
    width = max(len(label) for label, _ in rows)
    return "\n".join(f"{label:<{width}}  {value}" for label, value in rows)


@main.command()
@click.option("--in", "in_paths", multiple=True, required=True, type=click.Path())
@click.option("--out", "out_path", required=True, type=click.Path())
@_home_country_option
def build(in_paths, out_path, home_country):
    """Load a corpus, build the genealogy graph, and save it."""
    try:
        corpus = load_corpus(list(in_paths))
    except IoError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_IO)
    if not corpus.records:
        click.echo("error: no parseable records in the input", err=True)
        sys.exit(EXIT_EMPTY)
    graph = build_graph(corpus)
    try:
        save_graph(graph, out_path)
    except IoError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_IO)
    click.echo(_table(summarize(graph, home_country=home_country)))


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path())
@click.option("--csv", "csv_dir", default=None, type=click.Path(),
              help="Also write distribution CSVs into this directory.")
@_home_country_option
def metrics(graph_path, csv_dir, home_country):
    """Emit the MetricsReport for a saved graph as JSON."""
    graph = _load_graph_or_exit(graph_path)
    report = summarize(graph, home_country=home_country)
    click.echo(json.dumps(report.to_json_dict(), indent=2, ensure_ascii=False))
    if csv_dir:
        directory = Path(csv_dir)
        try:
            directory.mkdir(parents=True, exist_ok=True)
            for filename, content in distributions_csv(report).items():
                (directory / filename).write_text(content, encoding="utf-8")
        except OSError as exc:
            click.echo(f"error: cannot write CSVs: {exc}", err=True)
            sys.exit(EXIT_IO)


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path())
@click.option("--root", "root_id", default=None, type=int,
              help="Focus node; omit to export the whole graph.")
@click.option("--format", "fmt", required=True,
              type=click.Choice(["dot", "graphml", "json"]))
@click.option("--up", default=0, show_default=True, type=int)
@click.option("--down", default=16, show_default=True, type=int)
@click.option("--out", "out_path", default=None, type=click.Path(),
              help="Output file; stdout when omitted.")
def export(graph_path, root_id, fmt, up, down, out_path):
    """Export a graph or a subtree in DOT, GraphML, or VIEW_JSON."""
    graph = _load_graph_or_exit(graph_path)
    format_name = {"dot": "DOT", "graphml": "GRAPHML", "json": "VIEW_JSON"}[fmt]
    if root_id is None:
        source = graph_view(graph)
    else:
        try:
            source = export_subtree(graph, root_id, up, down)
        except UnknownNode:
            click.echo(f"error: unknown root id {root_id}", err=True)
            sys.exit(EXIT_UNKNOWN_ROOT)
    text = export_interchange(source, format_name)
    if out_path:
        try:
            Path(out_path).write_text(text, encoding="utf-8")
        except OSError as exc:
            click.echo(f"error: cannot write {out_path}: {exc}", err=True)
            sys.exit(EXIT_IO)
    else:
        click.echo(text, nl=False)


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path())
@click.option("--bind", default="127.0.0.1:8000", show_default=True,
              help="addr:port to listen on.")
@click.option("--cors-origin", default="*", show_default=True)
@_home_country_option
def serve(graph_path, bind, cors_origin, home_country):
    """Serve the read-only query API over a saved graph."""
    import uvicorn

    from .server import create_app

    graph = _load_graph_or_exit(graph_path)
    host, _, port = bind.rpartition(":")
    if not host or not port.isdigit():
        click.echo(f"error: --bind must be addr:port, got {bind!r}", err=True)
        sys.exit(EXIT_IO)
    app = create_app(graph, home_country=home_country, cors_origin=cors_origin)
    uvicorn.run(app, host=host, port=int(port))


@main.command()
@click.option("--trees", required=True, type=int)
@click.option("--depth", required=True, type=int)
@click.option("--branch", required=True, type=float)
@click.option("--collide", default=0.0, show_default=True, type=float)
@click.option("--dropout", default=0.0, show_default=True, type=float)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--out", "out_path", required=True, type=click.Path())
def synth(trees, depth, branch, collide, dropout, seed, out_path):
    """Generate a synthetic corpus plus its ground-truth sidecar."""
    params = SynthParams(
        num_trees=trees,
        max_depth=depth,
        branching=branch,
        name_collision_rate=collide,
        field_dropout=dropout,
        seed=seed,
    )
    try:
        params.validate()
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None
    corpus, truth = generate(params)
    try:
        write_corpus(corpus, out_path)
        write_truth_sidecar(truth, str(out_path) + ".truth")
    except OSError as exc:
        click.echo(f"error: cannot write {out_path}: {exc}", err=True)
        sys.exit(EXIT_IO)
    click.echo(
        f"wrote {len(corpus.records)} records, "
        f"{len(truth.mentions)} mentions to {out_path}"
    )


if __name__ == "__main__":
    main()
