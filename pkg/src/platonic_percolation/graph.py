"""Finite simple undirected graphs with canonical edge labels.

Ships fixed labelings of the five Platonic solids as static tables; edge
ids are positions in the (lexicographically sorted) edge list, so every
edge-set bitmask produced downstream is reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

MAX_EDGES = 64  # edge sets are single machine words

SOLID_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")

# Vertex labelings: tetrahedron = K4; cube = 3-bit ids, adjacency = one
# differing bit; octahedron = 0..5 with i ~ j unless i + j == 5 (antipodes);
# dodecahedron = four rings (top cycle 0-4, upper 5-9, lower 10-14, bottom
# cycle 15-19, middle rings joined in an alternating 10-cycle); icosahedron =
# pentagonal antiprism 1..10 with apexes 0 and 11. Edge id = table position.
_SOLID_TABLES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "tetrahedron": (4, (
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    )),
    "cube": (8, (
        (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3),
        (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7),
    )),
    "octahedron": (6, (
        (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3),
        (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5),
    )),
    "dodecahedron": (20, (
        (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3),
        (2, 7), (3, 4), (3, 8), (4, 9), (5, 10), (5, 14),
        (6, 10), (6, 11), (7, 11), (7, 12), (8, 12), (8, 13),
        (9, 13), (9, 14), (10, 15), (11, 16), (12, 17), (13, 18),
        (14, 19), (15, 16), (15, 19), (16, 17), (17, 18), (18, 19),
    )),
    "icosahedron": (12, (
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2),
        (1, 5), (1, 6), (1, 7), (2, 3), (2, 7), (2, 8),
        (3, 4), (3, 8), (3, 9), (4, 5), (4, 9), (4, 10),
        (5, 6), (5, 10), (6, 7), (6, 10), (6, 11), (7, 8),
        (7, 11), (8, 9), (8, 11), (9, 10), (9, 11), (10, 11),
    )),
}


class IrregularGraphError(ValueError):
    """Raised when an operation requires a regular graph and finds a witness."""

    def __init__(self, vertex: int, degree: int, expected: int):
        self.vertex = vertex
        self.degree = degree
        self.expected = expected
        super().__init__(
            f"vertex {vertex} has degree {degree}, expected {expected}"
        )


@dataclass(frozen=True)
class Graph:
    """Immutable labeled simple undirected graph.

    adjacency[v] is the sorted tuple of (neighbor, edge id) pairs;
    edge_endpoints[e] is the (lower, higher) vertex pair of edge e.
    degree is the common vertex degree, or None if the graph is irregular.
    """

    n_vertices: int
    n_edges: int
    degree: int | None
    adjacency: tuple[tuple[tuple[int, int], ...], ...]
    edge_endpoints: tuple[tuple[int, int], ...]
    name: str = "graph"


@dataclass(frozen=True)
class DistanceClasses:
    """BFS layers: classes[s] is the sorted tuple of vertices at distance s."""

    source: int
    classes: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]
    radius: int


def from_edges(
    n_vertices: int, edges: Sequence[tuple[int, int]], name: str = "graph"
) -> Graph:
    """Build a graph from (u, v) pairs with u < v; edge id = list position."""
    if n_vertices < 1:
        raise ValueError("graph needs at least one vertex")
    if len(edges) > MAX_EDGES:
        raise ValueError(f"{len(edges)} edges exceed the {MAX_EDGES}-edge cap")
    seen: set[tuple[int, int]] = set()
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n_vertices)]
    endpoints: list[tuple[int, int]] = []
    for eid, (u, v) in enumerate(edges):
        if not (0 <= u < v < n_vertices):
            raise ValueError(f"edge {eid} = ({u}, {v}) must satisfy 0 <= u < v < N")
        if (u, v) in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        endpoints.append((u, v))
        adjacency[u].append((v, eid))
        adjacency[v].append((u, eid))
    degrees = [len(a) for a in adjacency]
    degree = degrees[0] if all(d == degrees[0] for d in degrees) else None
    return Graph(
        n_vertices=n_vertices,
        n_edges=len(endpoints),
        degree=degree,
        adjacency=tuple(tuple(sorted(a)) for a in adjacency),
        edge_endpoints=tuple(endpoints),
        name=name,
    )


def make_solid(name: str) -> Graph:
    """Return the canonical labeled graph of one of the five Platonic solids."""
    if name not in _SOLID_TABLES:
        raise ValueError(
            f"unknown solid {name!r}; expected one of {', '.join(SOLID_NAMES)}"
        )
    n, edges = _SOLID_TABLES[name]
    return from_edges(n, edges, name=name)


def validate_regular(g: Graph) -> int:
    """Return the common degree, or raise naming an offending vertex."""
    expected = len(g.adjacency[0])
    for v in range(1, g.n_vertices):
        d = len(g.adjacency[v])
        if d != expected:
            raise IrregularGraphError(v, d, expected)
    return expected


def is_connected(g: Graph) -> bool:
    return all(d >= 0 for d in _bfs_distances(g, 0))


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n_vertices
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for w, _ in g.adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def distance_classes(g: Graph, source: int) -> DistanceClasses:
    """BFS layers from source; rejects disconnected graphs."""
    if not 0 <= source < g.n_vertices:
        raise ValueError(f"source {source} out of range")
    dist = _bfs_distances(g, source)
    if min(dist) < 0:
        unreached = dist.index(-1)
        raise ValueError(
            f"graph is disconnected: vertex {unreached} unreachable from {source}"
        )
    radius = max(dist)
    classes = tuple(
        tuple(v for v in range(g.n_vertices) if dist[v] == s)
        for s in range(radius + 1)
    )
    return DistanceClasses(
        source=source,
        classes=classes,
        sizes=tuple(len(c) for c in classes),
        radius=radius,
    )


def parse_graph_file(text: str, name: str = "graph") -> Graph:
    """Parse the line-oriented format: first line "N M", then M lines "u v"."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty graph file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"header must be 'N M', got {lines[0]!r}")
    n, m = (int(tok) for tok in header)
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        edges.append((int(toks[0]), int(toks[1])))
    return from_edges(n, edges, name=name)


def load_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    return parse_graph_file(text, name=path)
