"""Self-avoiding path enumeration and pair-connection event families.

Paths are stored as edge-set bitmasks over the graph's canonical edge ids.
A pair family collects the unions of one x-to-y path with one x-to-z path,
reduced by absorption (strict supersets removed): the union event over the
reduced family is unchanged, and so is any inclusion-exclusion sum over it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, is_connected


@dataclass(frozen=True)
class PathFamily:
    """A family of edge sets connecting `source` to the target vertex/pair.

    For single-target families every member is a self-avoiding path and
    `lengths` are path lengths; for pair families members are minimal
    unions of two paths and `lengths` count the edges of each union.
    `truncated` marks single-target families where the length cutoff
    excluded at least one path (the union event is then a subset of the
    full connection event).
    """

    source: int
    targets: tuple[int, ...]
    paths: tuple[int, ...]
    lengths: tuple[int, ...]
    cutoff: int | None = None
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.paths)


def enumerate_paths(
    g: Graph, x: int, y: int, cutoff: int | None = None
) -> PathFamily:
    """All self-avoiding paths x -> y with length <= cutoff (None = no limit).

    Deterministic order: lexicographic by vertex sequence under the
    canonical labeling (depth-first search visiting neighbors in
    ascending vertex order).
    """
    _check_pair(g, x, y)
    found_masks: list[int] = []
    found_lengths: list[int] = []

    def extend(v: int, visited: int, mask: int, length: int) -> None:
        if v == y:
            found_masks.append(mask)
            found_lengths.append(length)
            return
        if cutoff is not None and length >= cutoff:
            return
        for w, eid in g.adjacency[v]:
            if not (visited >> w) & 1:
                extend(w, visited | (1 << w), mask | (1 << eid), length + 1)

    extend(x, 1 << x, 0, 0)
    truncated = cutoff is not None and _has_longer_path(g, x, y, cutoff)
    return PathFamily(
        source=x,
        targets=(y,),
        paths=tuple(found_masks),
        lengths=tuple(found_lengths),
        cutoff=cutoff,
        truncated=truncated,
    )


def _has_longer_path(g: Graph, x: int, y: int, cutoff: int) -> bool:
    """Whether any self-avoiding path x -> y longer than cutoff exists."""

    def search(v: int, visited: int, length: int) -> bool:
        if v == y:
            return length > cutoff
        for w, _ in g.adjacency[v]:
            if not (visited >> w) & 1:
                if search(w, visited | (1 << w), length + 1):
                    return True
        return False

    return search(x, 1 << x, 0)


def enumerate_pair_events(g: Graph, x: int, y: int, z: int) -> PathFamily:
    """Minimal unions of an x->y path with an x->z path.

    Every member fully open implies both connections; conversely any
    realization connecting x to both y and z opens some member, so the
    union event over the family is exactly {x<->y and x<->z}.
    """
    if len({x, y, z}) != 3:
        raise ValueError(f"vertices must be pairwise distinct, got {x}, {y}, {z}")
    fam_y = enumerate_paths(g, x, y)
    fam_z = enumerate_paths(g, x, z)
    unions = {a | b for a in fam_y.paths for b in fam_z.paths}
    minimal = minimalize(unions)
    return PathFamily(
        source=x,
        targets=(y, z),
        paths=tuple(minimal),
        lengths=tuple(m.bit_count() for m in minimal),
    )


def minimalize(edge_sets) -> list[int]:
    """Drop every edge set that strictly contains another; deduplicate.

    Sorted by (cardinality, mask value) so output order is deterministic.
    """
    ordered = sorted(set(edge_sets), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for mask in ordered:
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    return kept


def path_vertex_sequence(g: Graph, mask: int, x: int, y: int) -> list[int]:
    """Decode an edge-set mask as the vertex sequence of a path x -> y.

    Raises ValueError if the mask is not a self-avoiding x-to-y path.
    """
    remaining = mask
    seq = [x]
    v = x
    while v != y:
        step = None
        for w, eid in g.adjacency[v]:
            if (remaining >> eid) & 1:
                if step is not None:
                    raise ValueError(f"vertex {v} has two open continuations")
                step = (w, eid)
        if step is None:
            raise ValueError(f"path stops at vertex {v} before reaching {y}")
        w, eid = step
        if w in seq:
            raise ValueError(f"vertex {w} repeated")
        remaining &= ~(1 << eid)
        seq.append(w)
        v = w
    if remaining:
        raise ValueError("edge set has edges beyond the x-to-y walk")
    return seq


def _check_pair(g: Graph, x: int, y: int) -> None:
    if x == y:
        raise ValueError(f"endpoints must differ, got x = y = {x}")
    for v in (x, y):
        if not 0 <= v < g.n_vertices:
            raise ValueError(f"vertex {v} out of range")
    if not is_connected(g):
        raise ValueError("graph must be connected")
