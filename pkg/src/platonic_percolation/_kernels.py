"""Compiled hot loops (numba, nogil) behind the pure-Python reference paths.

Importing this module triggers JIT machinery, so callers import it lazily
and only for work sizes where compilation pays off. Kernels release the
GIL so range-partitioned work can fan out over a thread pool; results are
merged by exact integer addition in a fixed order, making every output
independent of the thread schedule.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _popcount(x: np.int64) -> np.int64:
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit(cache=True, nogil=True)
def subset_dfs(masks, n_edges, start, root_union, root_card):
    """Signed subset-union tally over masks[start:], seeded with a root set.

    Depth-first traversal of the subset lattice carrying the running
    union and parity; subsets of odd cardinality add +1 and even subsets
    add -1 at index popcount(union). Visits every subset extending the
    root by elements of masks[start:], the root itself included when
    nonempty. Returns (a, visited).
    """
    K = masks.shape[0]
    a = np.zeros(n_edges + 1, np.int64)
    visited = np.int64(0)
    if root_card > 0:
        if root_card & 1:
            a[_popcount(root_union)] += 1
        else:
            a[_popcount(root_union)] -= 1
        visited += 1
    depth_limit = K - start + 1
    stack_j = np.empty(depth_limit, np.int64)
    stack_u = np.empty(depth_limit, np.int64)
    stack_c = np.empty(depth_limit, np.int64)
    top = 0
    stack_j[0] = start
    stack_u[0] = root_union
    stack_c[0] = root_card
    while top >= 0:
        j = stack_j[top]
        if j == K:
            top -= 1
            continue
        stack_j[top] = j + 1
        union = stack_u[top] | masks[j]
        card = stack_c[top] + 1
        if card & 1:
            a[_popcount(union)] += 1
        else:
            a[_popcount(union)] -= 1
        visited += 1
        top += 1
        stack_j[top] = j + 1
        stack_u[top] = union
        stack_c[top] = card
    return a, visited


@njit(cache=True, nogil=True)
def tally_range(m, n, source, edge_u, edge_v, start, stop):
    """Cluster-size tally over edge configurations start <= cfg < stop.

    For each configuration (bitmask over edge ids) a union-find structure
    is rebuilt from scratch and the component of `source` is measured.
    Returns counts[j][s] = number of configurations in the range with j
    open edges whose source component has s vertices.
    """
    counts = np.zeros((m + 1, n + 1), np.int64)
    parent = np.empty(n, np.int64)
    size = np.empty(n, np.int64)
    for cfg in range(start, stop):
        for v in range(n):
            parent[v] = v
            size[v] = 1
        open_edges = 0
        for e in range(m):
            if (cfg >> e) & 1:
                open_edges += 1
                a = edge_u[e]
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                b = edge_v[e]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    if size[a] < size[b]:
                        a, b = b, a
                    parent[b] = a
                    size[a] += size[b]
        r = source
        while parent[r] != r:
            r = parent[r]
        counts[open_edges, size[r]] += 1
    return counts


@njit(cache=True, nogil=True)
def cluster_sizes_bfs(masks, n, edge_u, edge_v, source):
    """Open-cluster size of `source` for each edge configuration in masks.

    Breadth-first search over the open subgraph using vertex bitmasks.
    """
    m = edge_u.shape[0]
    out = np.empty(masks.shape[0], np.int64)
    adj = np.empty(n, np.int64)
    for i in range(masks.shape[0]):
        cfg = masks[i]
        for v in range(n):
            adj[v] = 0
        for e in range(m):
            if (cfg >> e) & 1:
                adj[edge_u[e]] |= np.int64(1) << edge_v[e]
                adj[edge_v[e]] |= np.int64(1) << edge_u[e]
        reached = np.int64(1) << source
        frontier = reached
        while frontier != 0:
            nxt = np.int64(0)
            f = frontier
            while f != 0:
                v = _popcount((f & -f) - 1)
                nxt |= adj[v]
                f &= f - 1
            frontier = nxt & ~reached
            reached |= frontier
        out[i] = _popcount(reached)
    return out
