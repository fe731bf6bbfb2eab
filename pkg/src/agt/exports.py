"""Subtree views and interchange exports (DOT, GraphML, VIEW_JSON).

A SubtreeView assigns each included node a signed level relative to the
focus: advisors and grand-advisors at -1, -2, ..., the focus at 0, advisees
below at +1, +2, ... The explorer UI maps levels to the red/orange/yellow
palette; the core only ever exports integers. All exports are
byte-deterministic for equal inputs.
"""

from __future__ import annotations

import enum
import json
import xml.etree.ElementTree as ET
from collections import deque
from dataclasses import dataclass, field

from .graph import AdvisingEdge, GenealogyGraph


class ExportFormat(str, enum.Enum):
    DOT = "DOT"
    GRAPHML = "GRAPHML"
    VIEW_JSON = "VIEW_JSON"


@dataclass
class SubtreeView:
    focus: int | None
    level_of: dict[int, int]
    nodes: list[int] = field(default_factory=list)
    edges: list[AdvisingEdge] = field(default_factory=list)
    names: dict[int, str] = field(default_factory=dict)
    has_curriculum: dict[int, bool] = field(default_factory=dict)


def _finish_view(graph: GenealogyGraph, focus: int | None, level_of: dict[int, int]) -> SubtreeView:
    names = {n: graph.nodes[n].display_name for n in level_of}
    nodes = sorted(level_of, key=lambda n: (level_of[n], names[n], n))
    included = set(level_of)
    edges = [
        e
        for e in graph.edges()
        if e.advisor in included and e.advisee in included
    ]
    edges.sort(key=lambda e: (e.advisor, e.advisee, e.level.value, e.role.value))
    return SubtreeView(
        focus=focus,
        level_of=level_of,
        nodes=nodes,
        edges=edges,
        names=names,
        has_curriculum={n: graph.nodes[n].has_curriculum for n in level_of},
    )


def export_subtree(graph: GenealogyGraph, focus: int, up: int, down: int) -> SubtreeView:
    """Ancestors within ``up`` levels and descendants within ``down`` levels.

    Levels are BFS distances from the focus (ancestors negative). Raises
    UnknownNode for a missing focus; bounds must be non-negative.
    """
    graph.require_node(focus)
    if up < 0 or down < 0:
        raise ValueError("up and down must be non-negative")
    level_of = {focus: 0}
    queue = deque([(focus, 0)])
    while queue:
        node, depth = queue.popleft()
        if depth == up:
            continue
        for advisor in sorted(graph.advisors(node)):
            if advisor not in level_of:
                level_of[advisor] = -(depth + 1)
                queue.append((advisor, depth + 1))
    queue = deque([(focus, 0)])
    while queue:
        node, depth = queue.popleft()
        if depth == down:
            continue
        for advisee in sorted(graph.advisees(node)):
            if advisee not in level_of:
                level_of[advisee] = depth + 1
                queue.append((advisee, depth + 1))
    return _finish_view(graph, focus, level_of)


def graph_view(graph: GenealogyGraph) -> SubtreeView:
    """Whole-graph view; levels are shortest distances from any root."""
    level_of: dict[int, int] = {}
    queue = deque()
    for n in sorted(graph.nodes):
        if not graph.advisors(n):
            level_of[n] = 0
            queue.append(n)
    while queue:
        node = queue.popleft()
        for advisee in sorted(graph.advisees(node)):
            if advisee not in level_of:
                level_of[advisee] = level_of[node] + 1
                queue.append(advisee)
    return _finish_view(graph, None, level_of)


def export_interchange(source: GenealogyGraph | SubtreeView, format: ExportFormat | str) -> str:
    """Render a graph or subtree view in the requested format."""
    view = graph_view(source) if isinstance(source, GenealogyGraph) else source
    format = ExportFormat(format.upper() if isinstance(format, str) else format)
    if format is ExportFormat.DOT:
        return _to_dot(view)
    if format is ExportFormat.GRAPHML:
        return _to_graphml(view)
    return json.dumps(view_json_dict(view), ensure_ascii=False, separators=(",", ":"))


def view_json_dict(view: SubtreeView) -> dict:
    """The VIEW_JSON wire shape consumed by the query service and the UI."""
    return {
        "focus": view.focus,
        "nodes": [
            {
                "id": n,
                "name": view.names[n],
                "level": view.level_of[n],
                "has_curriculum": view.has_curriculum[n],
            }
            for n in view.nodes
        ],
        "edges": [
            {
                "advisor": e.advisor,
                "advisee": e.advisee,
                "level": e.level.value,
                "role": e.role.value,
            }
            for e in view.edges
        ],
    }


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _to_dot(view: SubtreeView) -> str:
    lines = ["digraph genealogy {"]
    for n in view.nodes:
        lines.append(
            f"  n{n} [label={_dot_quote(view.names[n])} level={view.level_of[n]}];"
        )
    for e in view.edges:
        lines.append(
            f"  n{e.advisor} -> n{e.advisee}"
            f" [level={e.level.value} role={e.role.value}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_graphml(view: SubtreeView) -> str:
    root = ET.Element("graphml", xmlns="http://graphml.graphdrawing.org/xmlns")
    keys = [
        ("d_label", "node", "label", "string"),
        ("d_level", "node", "level", "long"),
        ("d_curr", "node", "has_curriculum", "boolean"),
        ("d_elevel", "edge", "level", "string"),
        ("d_role", "edge", "role", "string"),
    ]
    for key_id, domain, name, kind in keys:
        ET.SubElement(root, "key", id=key_id, attrib={"for": domain},
                      **{"attr.name": name, "attr.type": kind})
    graph_el = ET.SubElement(root, "graph", id="G", edgedefault="directed")
    for n in view.nodes:
        node_el = ET.SubElement(graph_el, "node", id=f"n{n}")
        ET.SubElement(node_el, "data", key="d_label").text = view.names[n]
        ET.SubElement(node_el, "data", key="d_level").text = str(view.level_of[n])
        ET.SubElement(node_el, "data", key="d_curr").text = (
            "true" if view.has_curriculum[n] else "false"
        )
    for i, e in enumerate(view.edges):
        edge_el = ET.SubElement(
            graph_el, "edge", id=f"e{i}", source=f"n{e.advisor}", target=f"n{e.advisee}"
        )
        ET.SubElement(edge_el, "data", key="d_elevel").text = e.level.value
        ET.SubElement(edge_el, "data", key="d_role").text = e.role.value
    return ET.tostring(root, encoding="unicode") + "\n"
