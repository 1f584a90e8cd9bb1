"""Monte Carlo cluster-size estimation and the generation-by-generation
cluster growth process.

Randomness comes from numpy's Philox counter-based generator keyed by the
configured seed: sample i consumes exactly the i-th row of the draw
matrix (one uniform per edge, plus one source uniform under the
uniform-source policy), so identical configurations reproduce identical
realizations and the sample set is independent of any parallel split.
Per-sample cluster sizes are found by breadth-first search over the open
subgraph; the growth process is an independently coded construction used
to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

COMPILED_THRESHOLD = 5000  # sample counts above this use the compiled BFS


@dataclass(frozen=True)
class SimConfig:
    """Sampling protocol: edge probability, sample count, seed, source.

    source is a fixed vertex id, or None to redraw the source uniformly
    at random for every sample.
    """

    p: float
    samples: int
    seed: int
    source: int | None = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class SampleMoments:
    """Sample mean of S and S^2 with standard errors of those means."""

    p: float
    samples: int
    seed: int
    mean_size: float
    se_size: float
    mean_square: float
    se_square: float


@dataclass(frozen=True)
class GenerationTrace:
    """Growth-process history: occupied[n] is the occupied set after
    generation n (cumulative), births[n] the number of new particles."""

    source: int
    occupied: tuple[frozenset[int], ...]
    births: tuple[int, ...]

    @property
    def total_particles(self) -> int:
        return sum(self.births)

    def layer(self, n: int) -> frozenset[int]:
        """Vertices first occupied at generation n."""
        if n == 0:
            return self.occupied[0]
        return self.occupied[n] - self.occupied[n - 1]


def realization_masks(g: Graph, p: float, samples: int, seed: int) -> np.ndarray:
    """Edge-configuration bitmasks for `samples` independent realizations."""
    draws = np.random.Generator(np.random.Philox(key=seed)).random(
        (samples, g.n_edges)
    )
    return _bits_to_masks(draws < p, g.n_edges)


def _bits_to_masks(bits: np.ndarray, n_edges: int) -> np.ndarray:
    if n_edges > 62:
        raise ValueError("mask sampling supports at most 62 edges (int64 masks)")
    weights = np.int64(1) << np.arange(n_edges, dtype=np.int64)
    return (bits.astype(np.int64) * weights).sum(axis=1)


def open_cluster_vertices(g: Graph, open_edges: int, source: int) -> frozenset[int]:
    """Vertices reachable from source through open edges (BFS)."""
    reached = {source}
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for w, eid in g.adjacency[v]:
                if (open_edges >> eid) & 1 and w not in reached:
                    reached.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(reached)


def cluster_sizes_of_masks(
    g: Graph,
    masks: np.ndarray,
    sources: np.ndarray,
    backend: str = "auto",
) -> np.ndarray:
    if backend == "auto":
        backend = "compiled" if len(masks) > COMPILED_THRESHOLD else "python"
    if backend == "python":
        return np.array(
            [
                len(open_cluster_vertices(g, int(mask), int(src)))
                for mask, src in zip(masks, sources)
            ],
            dtype=np.int64,
        )
    if backend == "compiled":
        from . import _kernels

        edge_u = np.array([e[0] for e in g.edge_endpoints], np.int64)
        edge_v = np.array([e[1] for e in g.edge_endpoints], np.int64)
        if np.all(sources == sources[0]):
            return _kernels.cluster_sizes_bfs(
                masks, g.n_vertices, edge_u, edge_v, int(sources[0])
            )
        out = np.empty(len(masks), np.int64)
        for src in np.unique(sources):
            idx = np.nonzero(sources == src)[0]
            out[idx] = _kernels.cluster_sizes_bfs(
                masks[idx], g.n_vertices, edge_u, edge_v, int(src)
            )
        return out
    raise ValueError(f"unknown backend {backend!r}")


def sample_cluster_size(
    g: Graph, cfg: SimConfig, backend: str = "auto"
) -> SampleMoments:
    """Sample moments of the cluster size under the given configuration."""
    if cfg.source is not None and not 0 <= cfg.source < g.n_vertices:
        raise ValueError(f"source {cfg.source} out of range")
    rng = np.random.Generator(np.random.Philox(key=cfg.seed))
    columns = g.n_edges + (1 if cfg.source is None else 0)
    draws = rng.random((cfg.samples, columns))
    masks = _bits_to_masks(draws[:, : g.n_edges] < cfg.p, g.n_edges)
    if cfg.source is None:
        sources = np.minimum(
            (draws[:, g.n_edges] * g.n_vertices).astype(np.int64), g.n_vertices - 1
        )
    else:
        sources = np.full(cfg.samples, cfg.source, dtype=np.int64)
    sizes = cluster_sizes_of_masks(g, masks, sources, backend=backend)

    n = cfg.samples
    squares = sizes * sizes
    sum1 = int(sizes.sum())
    sum2 = int(squares.sum())
    sum4 = int((squares * squares).sum())
    mean_size = sum1 / n
    mean_square = sum2 / n
    if n > 1:
        var_size = max(0.0, (sum2 - sum1 * sum1 / n) / (n - 1))
        var_square = max(0.0, (sum4 - sum2 * sum2 / n) / (n - 1))
        se_size = (var_size / n) ** 0.5
        se_square = (var_square / n) ** 0.5
    else:
        se_size = se_square = 0.0
    return SampleMoments(
        p=cfg.p,
        samples=n,
        seed=cfg.seed,
        mean_size=mean_size,
        se_size=se_size,
        mean_square=mean_square,
        se_square=se_square,
    )


def birth_process(g: Graph, open_edges: int, source: int) -> GenerationTrace:
    """Grow the source cluster generation by generation on one realization.

    Particles of a generation act in ascending order of their vertex ids;
    each sends a child across every open incident edge whose far vertex is
    still unoccupied, occupation taking effect immediately so that earlier
    particles preempt later ones within the same generation.
    """
    if not 0 <= source < g.n_vertices:
        raise ValueError(f"source {source} out of range")
    if open_edges < 0 or open_edges >> g.n_edges:
        raise ValueError(f"edge set {open_edges:#x} outside the graph")
    occupied = {source}
    snapshots = [frozenset(occupied)]
    births = [1]
    generation = [source]
    while generation:
        new: list[int] = []
        for v in generation:
            for w, eid in g.adjacency[v]:
                if (open_edges >> eid) & 1 and w not in occupied:
                    occupied.add(w)
                    new.append(w)
        if not new:
            break
        births.append(len(new))
        snapshots.append(frozenset(occupied))
        generation = sorted(new)
    return GenerationTrace(
        source=source, occupied=tuple(snapshots), births=tuple(births)
    )
