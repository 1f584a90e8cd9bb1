import pytest

from platonic_percolation.graph import (
    IrregularGraphError,
    distance_classes,
    from_edges,
    is_connected,
    make_solid,
    parse_graph_file,
    validate_regular,
)

from conftest import path_graph

SOLID_SHAPE = {
    "tetrahedron": (4, 6, 3),
    "cube": (8, 12, 3),
    "octahedron": (6, 12, 4),
    "dodecahedron": (20, 30, 3),
    "icosahedron": (12, 30, 5),
}


@pytest.mark.parametrize("name,shape", SOLID_SHAPE.items())
def test_solid_vertex_edge_degree_counts(name, shape):
    g = make_solid(name)
    assert (g.n_vertices, g.n_edges, g.degree) == shape
    assert validate_regular(g) == shape[2]


def test_unknown_solid_rejected():
    with pytest.raises(ValueError, match="unknown solid"):
        make_solid("hexahedron")


@pytest.mark.parametrize("name", SOLID_SHAPE)
def test_adjacency_consistent_with_endpoints(name):
    g = make_solid(name)
    for eid, (u, v) in enumerate(g.edge_endpoints):
        assert u < v
        assert (v, eid) in g.adjacency[u]
        assert (u, eid) in g.adjacency[v]
    assert sum(len(a) for a in g.adjacency) == 2 * g.n_edges


def test_octahedron_antipodes():
    g = make_solid("octahedron")
    for v in range(6):
        neighbors = {w for w, _ in g.adjacency[v]}
        missing = set(range(6)) - neighbors - {v}
        assert missing == {5 - v}


DISTANCE_PROFILES = {
    "tetrahedron": (1, 3),
    "cube": (1, 3, 3, 1),
    "octahedron": (1, 4, 1),
    "dodecahedron": (1, 3, 6, 6, 3, 1),
    "icosahedron": (1, 5, 5, 1),
}


@pytest.mark.parametrize("name,profile", DISTANCE_PROFILES.items())
def test_distance_class_sizes_from_every_source(name, profile):
    g = make_solid(name)
    for source in range(g.n_vertices):
        classes = distance_classes(g, source)
        assert classes.sizes == profile
        assert classes.classes[0] == (source,)
        assert sum(classes.sizes) == g.n_vertices


@pytest.mark.parametrize("name", SOLID_SHAPE)
def test_every_layer_vertex_touches_previous_layer(name):
    g = make_solid(name)
    classes = distance_classes(g, 0)
    for s in range(1, classes.radius + 1):
        previous = set(classes.classes[s - 1])
        for v in classes.classes[s]:
            assert any(w in previous for w, _ in g.adjacency[v])


def test_dual_pairs_share_vertex_totals():
    assert sum(DISTANCE_PROFILES["octahedron"]) == 6
    assert sum(DISTANCE_PROFILES["cube"]) == 8


def test_validate_regular_witness_is_middle_vertex():
    with pytest.raises(IrregularGraphError) as err:
        validate_regular(path_graph(3))
    assert err.value.vertex == 1


def test_distance_classes_rejects_disconnected():
    g = from_edges(4, [(0, 1), (2, 3)])
    assert not is_connected(g)
    with pytest.raises(ValueError, match="disconnected"):
        distance_classes(g, 0)


def test_distance_classes_rejects_bad_source():
    with pytest.raises(ValueError):
        distance_classes(make_solid("cube"), 8)


def test_from_edges_validation():
    with pytest.raises(ValueError, match="u < v"):
        from_edges(3, [(1, 0)])
    with pytest.raises(ValueError, match="u < v"):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError, match="duplicate"):
        from_edges(3, [(0, 1), (0, 1)])


def test_edge_cap_64():
    edges = [(u, v) for u in range(12) for v in range(u + 1, 12)][:65]
    with pytest.raises(ValueError, match="cap"):
        from_edges(12, edges)


def test_irregular_graph_has_none_degree():
    assert path_graph(3).degree is None
    assert make_solid("cube").degree == 3


def test_parse_graph_file_round_trip():
    g = make_solid("octahedron")
    text = f"{g.n_vertices} {g.n_edges}\n" + "\n".join(
        f"{u} {v}" for u, v in g.edge_endpoints
    )
    parsed = parse_graph_file(text)
    assert parsed.edge_endpoints == g.edge_endpoints
    assert parsed.adjacency == g.adjacency


@pytest.mark.parametrize(
    "text,complaint",
    [
        ("", "empty"),
        ("3\n0 1", "header"),
        ("2 2\n0 1", "edge lines"),
        ("2 1\n0 1 2", "edge line"),
        ("3 1\n1 0", "u < v"),
    ],
)
def test_parse_graph_file_rejects_malformed(text, complaint):
    with pytest.raises(ValueError, match=complaint):
        parse_graph_file(text)
