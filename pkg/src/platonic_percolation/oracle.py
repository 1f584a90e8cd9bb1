"""Independent ground truth by exhausting all 2^|E| edge configurations.

For each configuration the cluster of a fixed source vertex is measured with
a union-find structure rebuilt from scratch; nothing is shared with the
inclusion-exclusion engine beyond the graph itself. Tallies over
configuration ranges partitioned by the high bits of the configuration
index merge by exact integer addition, so results are deterministic under
any parallel schedule.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .graph import Graph, is_connected
from .inclusion_exclusion import resolve_threads
from .polynomial import IntPolynomial, bernoulli_term

MAX_ORACLE_EDGES = 30
COMPILED_THRESHOLD = 16  # 2^16 configurations is where pure Python stops paying
RANGE_SPLIT_BITS = 6


class GraphTooLargeError(ValueError):
    """Exhaustive enumeration refused: 2^|E| configurations over budget."""


@dataclass(frozen=True)
class ClusterSizeTally:
    """counts[j][s] = number of configurations with j open edges whose
    source cluster has exactly s vertices; dimensions (|E|+1) x (N+1)."""

    n_vertices: int
    n_edges: int
    source: int
    counts: tuple[tuple[int, ...], ...]

    def total(self) -> int:
        return sum(sum(row) for row in self.counts)


def exhaustive_tally(
    g: Graph,
    source: int = 0,
    backend: str = "auto",
    threads: int | None = None,
) -> ClusterSizeTally:
    """Tally source-cluster sizes over every edge configuration."""
    if g.n_edges > MAX_ORACLE_EDGES:
        raise GraphTooLargeError(
            f"{g.n_edges} edges means 2^{g.n_edges} configurations; the "
            f"oracle is budgeted for at most 2^{MAX_ORACLE_EDGES}"
        )
    if not 0 <= source < g.n_vertices:
        raise ValueError(f"source {source} out of range")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if backend == "auto":
        backend = "python" if g.n_edges <= COMPILED_THRESHOLD else "compiled"
    if backend == "python":
        counts = _tally_python(g, source)
    elif backend == "compiled":
        counts = _tally_compiled(g, source, resolve_threads(threads))
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return ClusterSizeTally(
        n_vertices=g.n_vertices,
        n_edges=g.n_edges,
        source=source,
        counts=tuple(tuple(row) for row in counts),
    )


def _tally_python(g: Graph, source: int) -> list[list[int]]:
    n, m = g.n_vertices, g.n_edges
    counts = [[0] * (n + 1) for _ in range(m + 1)]
    endpoints = g.edge_endpoints
    for cfg in range(1 << m):
        parent = list(range(n))
        size = [1] * n
        open_edges = 0
        for e in range(m):
            if (cfg >> e) & 1:
                open_edges += 1
                a, b = endpoints[e]
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
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
        counts[open_edges][size[r]] += 1
    return counts


def _tally_compiled(g: Graph, source: int, threads: int) -> list[list[int]]:
    import numpy as np

    from . import _kernels

    n, m = g.n_vertices, g.n_edges
    edge_u = np.array([e[0] for e in g.edge_endpoints], np.int64)
    edge_v = np.array([e[1] for e in g.edge_endpoints], np.int64)
    split = min(RANGE_SPLIT_BITS, m)
    n_ranges = 1 << split
    span = (1 << m) >> split

    def run(i: int):
        return _kernels.tally_range(
            m, n, source, edge_u, edge_v, i * span, (i + 1) * span
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, range(n_ranges)))
    else:
        parts = [run(i) for i in range(n_ranges)]
    total = parts[0]
    for part in parts[1:]:
        total = total + part
    return [[int(c) for c in row] for row in total]


def tally_to_moment_polynomial(tally: ClusterSizeTally, order: int) -> IntPolynomial:
    """Expand sum_{j,s} s^order * counts[j][s] * p^j (1-p)^(|E|-j) exactly."""
    if order not in (1, 2):
        raise ValueError(f"order must be 1 or 2, got {order}")
    m = tally.n_edges
    poly = IntPolynomial.zero(m)
    for j in range(m + 1):
        weight = sum(
            (s**order) * tally.counts[j][s] for s in range(tally.n_vertices + 1)
        )
        if weight:
            poly = poly + bernoulli_term(j, m, m, weight=weight)
    return poly


def exhaustive_moment(
    g: Graph,
    order: int,
    source: int = 0,
    backend: str = "auto",
    threads: int | None = None,
) -> IntPolynomial:
    """Exact E(S^order) polynomial straight from the exhaustive tally."""
    tally = exhaustive_tally(g, source=source, backend=backend, threads=threads)
    return tally_to_moment_polynomial(tally, order)


def tally_to_csv(tally: ClusterSizeTally) -> str:
    """Dump as `j,s,count` lines (zero rows omitted), with a header."""
    lines = ["j,s,count"]
    for j in range(tally.n_edges + 1):
        for s in range(tally.n_vertices + 1):
            c = tally.counts[j][s]
            if c:
                lines.append(f"{j},{s},{c}")
    return "\n".join(lines) + "\n"
