"""Shared fixtures and independent oracles.

The brute-force evaluators here deliberately avoid the library's algorithms:
reachability by transitive-closure fixpoint, levels by Bellman-Ford-style
relaxation, components by label propagation, and acyclicity by a standalone
Kahn pass. They exist to check the analytics kernels, not to share code with
them.
"""

from __future__ import annotations

import json
import random

import pytest

from agt.builder import build_graph
from agt.graph import Evidence, GenealogyGraph, CreatedFrom
from agt.records import Corpus, Level, Role, parse_record, sort_records


def make_corpus(records) -> Corpus:
    return Corpus(records=sort_records(list(records)), source_manifest=[])


def five_node_record():
    line = json.dumps(
        {
            "name": "R",
            "degrees": [
                {"level": "PHD", "advisor": "P"},
                {"level": "MASTERS", "advisor": "M"},
            ],
            "mentorships": [
                {"advisee": "X", "level": "PHD"},
                {"advisee": "Y", "level": "MASTERS"},
            ],
        }
    )
    return parse_record(line)


@pytest.fixture
def five_node_graph() -> GenealogyGraph:
    """The worked example: P,M -> R -> X,Y (ids R=0, P=1, M=2, X=3, Y=4)."""
    return build_graph(make_corpus([five_node_record()]))


def node_by_name(graph: GenealogyGraph, name: str) -> int:
    matches = [n.node_id for n in graph.nodes.values() if n.display_name == name]
    assert len(matches) == 1, f"expected exactly one node named {name!r}"
    return matches[0]


# --- brute-force oracles ---------------------------------------------------

def unique_pairs(graph: GenealogyGraph) -> set[tuple[int, int]]:
    return {(u, v) for u in graph.nodes for v in graph.advisees(u)}


def bf_reachable_sets(nodes, pairs) -> dict[int, set[int]]:
    reach = {n: {n} for n in nodes}
    changed = True
    while changed:
        changed = False
        for u, v in pairs:
            missing = reach[v] - reach[u]
            if missing:
                reach[u] |= missing
                changed = True
    return reach


def bf_levels_from(root, pairs) -> dict[int, int]:
    dist = {root: 0}
    changed = True
    while changed:
        changed = False
        for u, v in pairs:
            if u in dist and dist[u] + 1 < dist.get(v, 10**9):
                dist[v] = dist[u] + 1
                changed = True
    return dist


def bf_longest_from(root, pairs) -> int:
    out: dict[int, list[int]] = {}
    for u, v in pairs:
        out.setdefault(u, []).append(v)
    memo: dict[int, int] = {}

    def walk(u: int) -> int:
        if u in memo:
            return memo[u]
        memo[u] = max((1 + walk(v) for v in out.get(u, ())), default=0)
        return memo[u]

    return walk(root)


def bf_component_count(nodes, pairs) -> int:
    label = {n: n for n in nodes}
    changed = True
    while changed:
        changed = False
        for u, v in pairs:
            smallest = min(label[u], label[v])
            if label[u] != smallest or label[v] != smallest:
                label[u] = label[v] = smallest
                changed = True
    return len(set(label.values()))


def assert_acyclic(graph: GenealogyGraph) -> None:
    """Independent full cycle check: Kahn's algorithm must consume all nodes."""
    pairs = unique_pairs(graph)
    in_deg = {n: 0 for n in graph.nodes}
    for _, v in pairs:
        in_deg[v] += 1
    queue = [n for n, d in in_deg.items() if d == 0]
    seen = 0
    while queue:
        u = queue.pop()
        seen += 1
        for x, v in pairs:
            if x == u:
                in_deg[v] -= 1
                if in_deg[v] == 0:
                    queue.append(v)
    assert seen == len(graph.nodes), "cycle detected by independent Kahn pass"


def random_dag(seed: int, max_nodes: int = 200) -> GenealogyGraph:
    """A random DAG fed through add_edge_checked (edges follow a permutation)."""
    rng = random.Random(seed)
    graph = GenealogyGraph()
    n = rng.randrange(1, max_nodes + 1)
    for i in range(n):
        graph.add_node(f"node{i}", CreatedFrom.OWN_CURRICULUM)
    order = list(range(n))
    rng.shuffle(order)
    rank = {node: i for i, node in enumerate(order)}
    m = rng.randrange(0, 2 * n) if n >= 2 else 0
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        if rank[u] > rank[v]:
            u, v = v, u
        level = rng.choice([Level.PHD, Level.MASTERS])
        role = rng.choice([Role.ADVISOR, Role.COADVISOR])
        evidence = rng.choice([Evidence.ADVISEE_SIDE, Evidence.ADVISOR_SIDE])
        graph.add_edge_checked(u, v, level, role, evidence)
    return graph
