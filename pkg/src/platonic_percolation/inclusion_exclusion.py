"""Inclusion-exclusion over path families: exact connection probabilities
assembled into cluster-size moment polynomials.

The core primitive walks every nonempty subfamily of a path family
depth-first, carrying the running edge-set union, and tallies
(-1)^(card+1) into the coefficient slot of the union's size. Small
families run in pure Python; large ones dispatch to a compiled kernel
with the identical traversal, split over the leading path indices into
independent subtrees whose integer tallies merge deterministically.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, DistanceClasses, distance_classes, is_connected
from .paths import PathFamily, enumerate_paths, enumerate_pair_events
from .polynomial import IntPolynomial

MAX_FAMILY_SIZE = 40          # 2^K subsets beyond this is refused outright
COMPILED_THRESHOLD = 18       # families above this size use the compiled kernel
SPLIT_BITS = 8                # leading indices fanned out as parallel subtrees
DEFAULT_PAIR_BUDGET = 1 << 20
RAW_PAIR_UNION_BUDGET = 1 << 22  # cap on path-pair unions formed before reduction

THREADS_ENV_VAR = "PLATPERC_THREADS"


class FamilyTooLargeError(ValueError):
    """A path family whose 2^K subset lattice is infeasible to traverse."""


class PairBudgetExceededError(ValueError):
    """Second-moment subset work over the configured budget; use the oracle."""


class HomogeneityError(ValueError):
    """Distance classes or class polynomials depend on the source vertex."""


@dataclass(frozen=True)
class CoefficientAccumulator:
    """Signed subset tally: a[j] = sum over nonempty subfamilies B of
    (-1)^(card(B)+1) * [union of B has j edges]."""

    a: tuple[int, ...]
    subsets_visited: int


@dataclass(frozen=True)
class ClassPolynomial:
    """Connection polynomial for one distance class."""

    s: int
    n_s: int
    k_s: int
    poly: IntPolynomial
    subsets_visited: int


@dataclass(frozen=True)
class MomentReport:
    """A moment polynomial plus the per-class pieces and run bookkeeping.

    subsets_visited counts every subset-lattice node of the run, including
    the source-homogeneity verification pass when enabled.
    """

    graph_name: str
    moment: int
    kind: str  # "exact" | "lower_bound"
    poly: IntPolynomial
    per_class: tuple[ClassPolynomial, ...]
    cutoff: int | None
    subsets_visited: int
    wall_time: float

    def to_json_dict(self) -> dict:
        return {
            "solid": self.graph_name,
            "moment": self.moment,
            "kind": self.kind,
            "coeffs": list(self.poly.coeffs),
            "per_class": [
                {
                    "s": c.s,
                    "N_s": c.n_s,
                    "K_s": c.k_s,
                    "coeffs": list(c.poly.coeffs),
                }
                for c in self.per_class
            ],
            "subsets_visited": self.subsets_visited,
            "cutoff": self.cutoff,
        }


def resolve_threads(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get(THREADS_ENV_VAR)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def accumulate_family(
    masks: Sequence[int],
    n_edges: int,
    backend: str = "auto",
    threads: int | None = None,
) -> CoefficientAccumulator:
    """Run the signed subset-union tally over a family of edge sets."""
    K = len(masks)
    if K == 0:
        raise ValueError("family must be nonempty")
    if K > MAX_FAMILY_SIZE:
        raise FamilyTooLargeError(
            f"family of {K} paths needs 2^{K} subsets; the cap is "
            f"2^{MAX_FAMILY_SIZE}"
        )
    for mask in masks:
        if mask <= 0 or mask >> n_edges:
            raise ValueError(f"edge set {mask:#x} outside the {n_edges}-edge graph")
    if backend == "auto":
        backend = "python" if K <= COMPILED_THRESHOLD else "compiled"
    if backend == "compiled" and n_edges > 62:
        backend = "python"  # edge masks must stay positive in int64
    if backend == "python":
        return _accumulate_python(masks, n_edges)
    if backend == "compiled":
        return _accumulate_compiled(masks, n_edges, resolve_threads(threads))
    raise ValueError(f"unknown backend {backend!r}")


def _accumulate_python(masks: Sequence[int], n_edges: int) -> CoefficientAccumulator:
    a = [0] * (n_edges + 1)
    visited = 0
    K = len(masks)

    def walk(start: int, union: int, card: int) -> None:
        nonlocal visited
        for j in range(start, K):
            u = union | masks[j]
            c = card + 1
            a[u.bit_count()] += 1 if c & 1 else -1
            visited += 1
            walk(j + 1, u, c)

    walk(0, 0, 0)
    return CoefficientAccumulator(a=tuple(a), subsets_visited=visited)


def _accumulate_compiled(
    masks: Sequence[int], n_edges: int, threads: int
) -> CoefficientAccumulator:
    import numpy as np

    from . import _kernels

    K = len(masks)
    arr = np.array(list(masks), dtype=np.int64)
    split = SPLIT_BITS if K > SPLIT_BITS + 2 else 0
    jobs = []
    for root in range(1 << split):
        union = 0
        card = 0
        for j in range(split):
            if (root >> j) & 1:
                union |= masks[j]
                card += 1
        jobs.append((union, card))

    def run(job):
        union, card = job
        return _kernels.subset_dfs(
            arr, n_edges, split, np.int64(union), np.int64(card)
        )

    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]

    a = [0] * (n_edges + 1)
    visited = 0
    for part, part_visited in results:
        for j in range(n_edges + 1):
            a[j] += int(part[j])
        visited += int(part_visited)
    return CoefficientAccumulator(a=tuple(a), subsets_visited=visited)


def connection_polynomial(
    family: PathFamily,
    n_edges: int,
    backend: str = "auto",
    threads: int | None = None,
) -> IntPolynomial:
    """P(source <-> target(s)) as an exact polynomial of degree <= n_edges.

    For a cutoff-truncated family this is the probability that some
    family member is fully open, a lower bound on the connection
    probability.
    """
    acc = accumulate_family(family.paths, n_edges, backend=backend, threads=threads)
    return IntPolynomial(acc.a)


def _check_class_size_homogeneity(g: Graph) -> DistanceClasses:
    base = distance_classes(g, 0)
    for source in range(1, g.n_vertices):
        if distance_classes(g, source).sizes != base.sizes:
            raise HomogeneityError(
                f"distance-class sizes from source {source} differ from source 0"
            )
    return base


def _class_polynomials(
    g: Graph,
    source: int,
    cutoff: int | None,
    backend: str,
    threads: int | None,
) -> tuple[list[ClassPolynomial], bool]:
    """Per-class connection polynomials and whether any family was cut off."""
    classes = distance_classes(g, source)
    out = []
    truncated = False
    for s in range(1, classes.radius + 1):
        representative = classes.classes[s][0]
        family = enumerate_paths(g, source, representative, cutoff)
        truncated = truncated or family.truncated
        acc = accumulate_family(family.paths, g.n_edges, backend, threads)
        out.append(
            ClassPolynomial(
                s=s,
                n_s=classes.sizes[s],
                k_s=len(family),
                poly=IntPolynomial(acc.a),
                subsets_visited=acc.subsets_visited,
            )
        )
    return out, truncated


def first_moment(
    g: Graph,
    cutoff: int | None = None,
    source: int = 0,
    check_homogeneity: bool = True,
    backend: str = "auto",
    threads: int | None = None,
) -> MomentReport:
    """Mean cluster size: E(S) = 1 + sum_s N_s * P(source <-> class-s vertex).

    Exact when every path family is complete; a lower bound when a cutoff
    drops paths. Requires source-independent class sizes, and (unless
    check_homogeneity is off) verifies that class polynomials computed
    from a second source agree exactly.
    """
    t0 = time.perf_counter()
    if not is_connected(g):
        raise ValueError("graph must be connected")
    _check_class_size_homogeneity(g)
    per_class, truncated = _class_polynomials(g, source, cutoff, backend, threads)
    total = IntPolynomial.constant(1, g.n_edges)
    visited = 0
    for cls in per_class:
        total = total + cls.poly.scale(cls.n_s)
        visited += cls.subsets_visited
    if check_homogeneity and g.n_vertices > 1:
        other = 0 if source != 0 else 1
        verification, _ = _class_polynomials(g, other, cutoff, backend, threads)
        for mine, theirs in zip(per_class, verification):
            visited += theirs.subsets_visited
            if mine.poly != theirs.poly:
                raise HomogeneityError(
                    f"class-{mine.s} polynomial differs between sources "
                    f"{source} and {other}"
                )
    kind = "lower_bound" if truncated else "exact"
    return MomentReport(
        graph_name=g.name,
        moment=1,
        kind=kind,
        poly=total,
        per_class=tuple(per_class),
        cutoff=cutoff,
        subsets_visited=visited,
        wall_time=time.perf_counter() - t0,
    )


def second_moment(
    g: Graph,
    source: int = 0,
    budget: int = DEFAULT_PAIR_BUDGET,
    backend: str = "auto",
    threads: int | None = None,
) -> MomentReport:
    """Exact E(S^2) by summing pair-connection probabilities.

    Over ordered vertex pairs (y, z): the coincident cases contribute
    1 + 3 * sum_s N_s * P(source <-> class-s vertex), and each ordered
    pair of distinct non-source vertices contributes the probability
    that both are connected to the source, computed from its minimal
    pair-event family. Refused when the total subset work over all pair
    families exceeds `budget` (the exhaustive oracle covers those cases).
    """
    t0 = time.perf_counter()
    if not is_connected(g):
        raise ValueError("graph must be connected")
    _check_class_size_homogeneity(g)
    others = [v for v in range(g.n_vertices) if v != source]
    # cheap guard before forming any cross-unions: the number of raw path
    # pairs per ordered triple is the cost of building its event family
    path_counts = {v: len(enumerate_paths(g, source, v)) for v in others}
    raw_pairs = sum(
        path_counts[y] * path_counts[z] for y in others for z in others if y != z
    )
    if raw_pairs > RAW_PAIR_UNION_BUDGET:
        raise PairBudgetExceededError(
            f"building the pair-event families means forming {raw_pairs} path"
            " unions; exact second moments at this size come from the"
            " exhaustive oracle instead"
        )
    pair_families = []
    work = 0
    for y in others:
        for z in others:
            if y != z:
                family = enumerate_pair_events(g, source, y, z)
                if len(family) > MAX_FAMILY_SIZE:
                    raise PairBudgetExceededError(
                        f"pair family for ({source}, {y}, {z}) has "
                        f"{len(family)} events; exact second moments at this "
                        "size come from the exhaustive oracle instead"
                    )
                work += 1 << len(family)
                pair_families.append(family)
    if work > budget:
        raise PairBudgetExceededError(
            f"pair families need {work} subset visits, over the budget of "
            f"{budget}; exact second moments at this size come from the "
            "exhaustive oracle instead"
        )
    try:
        per_class, _ = _class_polynomials(g, source, None, backend, threads)
    except FamilyTooLargeError as exc:
        raise PairBudgetExceededError(
            f"{exc}; exact second moments at this size come from the "
            "exhaustive oracle instead"
        ) from exc
    total = IntPolynomial.constant(1, g.n_edges)
    visited = 0
    for cls in per_class:
        total = total + cls.poly.scale(3 * cls.n_s)
        visited += cls.subsets_visited
    for family in pair_families:
        acc = accumulate_family(family.paths, g.n_edges, backend, threads)
        total = total + IntPolynomial(acc.a)
        visited += acc.subsets_visited
    return MomentReport(
        graph_name=g.name,
        moment=2,
        kind="exact",
        poly=total,
        per_class=tuple(per_class),
        cutoff=None,
        subsets_visited=visited,
        wall_time=time.perf_counter() - t0,
    )
