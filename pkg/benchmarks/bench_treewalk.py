#!/usr/bin/env python3
"""Benchmark: compiled vs pure-Python tree-profile sweep.

Builds genealogy graphs from seeded synthetic corpora, then times
tree_stats (per-root reachability size, longest-path depth, BFS width)
on both backends over the same CSR arrays.

    python benchmarks/bench_treewalk.py [--big]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from agt import _treewalk_py
from agt.analytics import _csr, _kahn_order, roots
from agt.builder import build_graph
from agt.synth import SynthParams, generate

try:
    from agt import _treewalk
except ImportError:
    _treewalk = None


def bench(fn, indptr, indices, topo, root_ids, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(indptr, indices, topo, root_ids)
        best = min(best, time.perf_counter() - start)
    return best


def run_scale(label: str, params: SynthParams, repeats: int) -> None:
    corpus, _ = generate(params)
    graph = build_graph(corpus)
    indptr, indices = _csr(graph)
    topo = _kahn_order(graph)
    root_ids = np.asarray(sorted(roots(graph)), dtype=np.int32)
    print(
        f"\n{label}: {graph.node_count()} nodes, {graph.edge_count()} edges, "
        f"{len(root_ids)} roots"
    )

    py_time = bench(_treewalk_py.tree_stats, indptr, indices, topo, root_ids, repeats)
    print(f"  pure python : {py_time * 1000:10.2f} ms")
    if _treewalk is None:
        print("  compiled    : extension not built")
        return
    cy_time = bench(_treewalk.tree_stats, indptr, indices, topo, root_ids, repeats)
    print(f"  compiled    : {cy_time * 1000:10.2f} ms   ({py_time / cy_time:.1f}x faster)")

    py_result = _treewalk_py.tree_stats(indptr, indices, topo, root_ids)
    cy_result = _treewalk.tree_stats(indptr, indices, topo, root_ids)
    assert all(np.array_equal(a, b) for a, b in zip(py_result, cy_result)), "backends disagree"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--big", action="store_true", help="add a ~60k-node scale")
    args = parser.parse_args()

    run_scale(
        "small", SynthParams(num_trees=20, max_depth=5, branching=2.2, seed=1), repeats=5
    )
    run_scale(
        "medium", SynthParams(num_trees=40, max_depth=7, branching=2.1, seed=2), repeats=3
    )
    if args.big:
        run_scale(
            "big", SynthParams(num_trees=60, max_depth=8, branching=2.2, seed=3), repeats=1
        )


if __name__ == "__main__":
    main()
