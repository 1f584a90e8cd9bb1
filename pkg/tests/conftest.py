"""Shared graph constructions for the test suite."""

import pytest

from platonic_percolation import from_edges, make_solid


def cycle_graph(n):
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return from_edges(n, sorted(edges), name=f"C{n}")


def complete_graph(n):
    return from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n)], name=f"K{n}"
    )


def path_graph(n):
    return from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def complete_bipartite_33():
    return from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)], name="K33")


@pytest.fixture(scope="session")
def solids():
    return {name: make_solid(name) for name in
            ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")}


@pytest.fixture
def triangle():
    return cycle_graph(3)
