"""Versioned on-disk graph format.

Layout: the magic line ``AGT1``, one canonical JSON payload line, and a
``sha256:<hex>`` trailer over the payload bytes. The payload carries nodes,
edges, logs, provenance maps, and the identity index, all with sorted keys,
so saving the same graph always produces identical bytes.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .errors import CorruptFile, IoError, VersionMismatch
from .graph import (
    CreatedFrom,
    EdgeStatus,
    Evidence,
    GenealogyGraph,
    RejectedEdge,
    RejectReason,
)
from .records import Level, Role, degree_from_dict, degree_to_dict

MAGIC = "AGT1"
VERSION = 1


def _payload(graph: GenealogyGraph) -> dict:
    nodes = []
    for node_id in sorted(graph.nodes):
        node = graph.nodes[node_id]
        nodes.append(
            {
                "id": node.node_id,
                "name": node.display_name,
                "created_from": node.created_from.value,
                "platform_id": node.platform_id,
                "has_curriculum": node.has_curriculum,
                "institutions": sorted(node.institutions),
                "degrees": [degree_to_dict(d) for d in node.degrees],
            }
        )
    edges = [
        {
            "advisor": e.advisor,
            "advisee": e.advisee,
            "level": e.level.value,
            "role": e.role.value,
            "evidence": e.evidence.value,
            "year": e.year,
        }
        for e in sorted(
            graph._edge_index.values(),
            key=lambda e: (e.advisor, e.advisee, e.level.value, e.role.value),
        )
    ]
    index = graph.index
    return {
        "version": VERSION,
        "nodes": nodes,
        "edges": edges,
        "rejected_edges": [
            {"advisor": r.advisor, "advisee": r.advisee, "reason": r.reason.value}
            for r in graph.rejected_edges
        ],
        "anomalies": list(graph.anomalies),
        "mention_map": dict(sorted(graph.mention_map.items())),
        "record_fingerprints": dict(sorted(graph.record_fingerprints.items())),
        "index": {
            "by_platform_id": dict(sorted(index.by_platform_id.items())),
            "by_name": {k: sorted(v) for k, v in sorted(index.by_name.items())},
            "attrs": {
                str(node_id): {
                    "institutions": sorted(attrs.institutions),
                    "titles": sorted([t, y] for t, y in attrs.titles),
                }
                for node_id, attrs in sorted(index._attrs.items())
            },
        },
    }


def save_graph(graph: GenealogyGraph, path: str | Path) -> None:
    """Write the graph to ``path`` in the AGT1 format."""
    payload = json.dumps(_payload(graph), ensure_ascii=False, sort_keys=True,
                         separators=(",", ":"))
    digest = hashlib.sha256(payload.encode("utf-8")).hexdigest()
    try:
        Path(path).write_text(f"{MAGIC}\n{payload}\nsha256:{digest}\n", encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from None


def load_graph(path: str | Path) -> GenealogyGraph:
    """Read a graph written by save_graph, verifying its checksum."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from None
    lines = text.split("\n")
    if not lines or lines[0] != MAGIC:
        raise VersionMismatch(f"{path}: not an {MAGIC} file")
    if len(lines) < 3 or not lines[2].startswith("sha256:"):
        raise CorruptFile(f"{path}: missing checksum trailer")
    payload = lines[1]
    digest = hashlib.sha256(payload.encode("utf-8")).hexdigest()
    if lines[2] != f"sha256:{digest}":
        raise CorruptFile(f"{path}: checksum mismatch")
    doc = json.loads(payload)
    if doc.get("version") != VERSION:
        raise VersionMismatch(f"{path}: format version {doc.get('version')}")
    return _restore(doc, str(path))


def _restore(doc: dict, path: str) -> GenealogyGraph:
    graph = GenealogyGraph()
    for i, n in enumerate(doc["nodes"]):
        if n["id"] != i:
            raise CorruptFile(f"{path}: non-sequential node ids")
        node_id = graph.add_node(n["name"], CreatedFrom(n["created_from"]))
        node = graph.nodes[node_id]
        node.platform_id = n["platform_id"]
        node.has_curriculum = n["has_curriculum"]
        node.institutions = set(n["institutions"])
        node.degrees = [degree_from_dict(d) for d in n["degrees"]]
    for e in doc["edges"]:
        outcome = graph.add_edge_checked(
            e["advisor"],
            e["advisee"],
            Level(e["level"]),
            Role(e["role"]),
            Evidence(e["evidence"]),
            year=e["year"],
        )
        if outcome.status is not EdgeStatus.ADDED:
            raise CorruptFile(f"{path}: invalid edge {e}")
    graph.rejected_edges = [
        RejectedEdge(r["advisor"], r["advisee"], RejectReason(r["reason"]))
        for r in doc["rejected_edges"]
    ]
    graph.anomalies = list(doc["anomalies"])
    graph.mention_map = dict(doc["mention_map"])
    graph.record_fingerprints = dict(doc["record_fingerprints"])

    index = graph.index
    index.by_platform_id = dict(doc["index"]["by_platform_id"])
    for key, node_ids in doc["index"]["by_name"].items():
        for node_id in node_ids:
            index.by_name.setdefault(key, set()).add(node_id)
    for node_key, attrs in doc["index"]["attrs"].items():
        store = index._attrs[int(node_key)]
        store.institutions = set(attrs["institutions"])
        store.titles = {(t, y) for t, y in attrs["titles"]}
    return graph
