# Compiled tree-profile sweep. Same contract as _treewalk_py.tree_stats;
# see that module for the algorithm description.

import numpy as np

cimport numpy as cnp


def tree_stats(indptr_in, indices_in, topo_in, roots_in):
    """Per-root (sizes, depths, widths) over a CSR out-adjacency."""
    cdef cnp.int64_t[::1] indptr = np.ascontiguousarray(indptr_in, dtype=np.int64)
    cdef cnp.int32_t[::1] indices = np.ascontiguousarray(indices_in, dtype=np.int32)
    cdef cnp.int32_t[::1] topo = np.ascontiguousarray(topo_in, dtype=np.int32)
    cdef cnp.int32_t[::1] roots = np.ascontiguousarray(roots_in, dtype=np.int32)

    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t n_roots = roots.shape[0]

    sizes_arr = np.zeros(n_roots, dtype=np.int64)
    depths_arr = np.zeros(n_roots, dtype=np.int64)
    widths_arr = np.zeros(n_roots, dtype=np.int64)
    cdef cnp.int64_t[::1] sizes = sizes_arr
    cdef cnp.int64_t[::1] depths = depths_arr
    cdef cnp.int64_t[::1] widths = widths_arr

    cdef cnp.int64_t[::1] longest = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] stamp = np.full(n, -1, dtype=np.int64)
    cdef cnp.int64_t[::1] dist = np.zeros(n, dtype=np.int64)
    cdef cnp.int32_t[::1] queue = np.zeros(n, dtype=np.int32)
    cdef cnp.int64_t[::1] level_count = np.zeros(n + 1, dtype=np.int64)

    cdef Py_ssize_t i, k, head, tail
    cdef cnp.int64_t r_idx, best, cand, du, d, width
    cdef cnp.int32_t u, v, root

    with nogil:
        for i in range(n - 1, -1, -1):
            u = topo[i]
            best = 0
            for k in range(indptr[u], indptr[u + 1]):
                cand = longest[indices[k]] + 1
                if cand > best:
                    best = cand
            longest[u] = best

        for r_idx in range(n_roots):
            root = roots[r_idx]
            stamp[root] = r_idx
            dist[root] = 0
            queue[0] = root
            head = 0
            tail = 1
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

    return sizes_arr, depths_arr, widths_arr
