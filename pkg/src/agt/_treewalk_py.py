"""Pure-Python tree-profile sweep; fallback for agt.treewalk.

Semantics are identical to the compiled kernel in _treewalk.pyx: for every
root, size is the number of nodes reachable from it (root included), width
is the largest BFS level by shortest distance, and depth is the longest
directed path leaving it. Depth is a global property (longest downward path
per node, one reverse-topological pass); size and width need one BFS per
root, which is the hot loop.
"""

from __future__ import annotations

import numpy as np


def tree_stats(indptr, indices, topo_order, roots):
    """Per-root (sizes, depths, widths) over a CSR out-adjacency.

    ``topo_order`` lists all nodes, advisors before advisees; ``roots`` may
    be any subset of nodes.
    """
    indptr = [int(x) for x in indptr]
    indices = [int(x) for x in indices]
    topo_order = [int(x) for x in topo_order]
    roots = [int(x) for x in roots]
    n = len(indptr) - 1

    longest = [0] * n
    for u in reversed(topo_order):
        best = 0
        for k in range(indptr[u], indptr[u + 1]):
            cand = longest[indices[k]] + 1
            if cand > best:
                best = cand
        longest[u] = best

    sizes = np.zeros(len(roots), dtype=np.int64)
    depths = np.zeros(len(roots), dtype=np.int64)
    widths = np.zeros(len(roots), dtype=np.int64)

    stamp = [-1] * n
    dist = [0] * n
    queue = [0] * n
    level_count = [0] * (n + 1)

    for r_idx, root in enumerate(roots):
        stamp[root] = r_idx
        dist[root] = 0
        queue[0] = root
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if stamp[v] != r_idx:
                    stamp[v] = r_idx
                    dist[v] = du + 1
                    queue[tail] = v
                    tail += 1
        width = 0
        for k in range(tail):
            d = dist[queue[k]]
            level_count[d] += 1
            if level_count[d] > width:
                width = level_count[d]
        for k in range(tail):
            level_count[dist[queue[k]]] = 0
        sizes[r_idx] = tail
        depths[r_idx] = longest[root]
        widths[r_idx] = width

    return sizes, depths, widths
