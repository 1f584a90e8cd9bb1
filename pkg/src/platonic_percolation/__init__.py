"""Exact cluster-size analysis for bond percolation on finite regular graphs.

Core pieces: canonical graphs of the five Platonic solids, self-avoiding
path enumeration, an inclusion-exclusion engine producing exact
integer-coefficient moment polynomials, closed-form moment bounds, an
exhaustive-enumeration oracle, and seeded Monte Carlo sampling.
"""

from .bounds import (
    BoundInputs,
    branching_first_moment_bound,
    branching_second_moment_bound,
    plarge_first_moment_bound,
    plarge_second_moment_bound,
)
from .graph import (
    DistanceClasses,
    Graph,
    SOLID_NAMES,
    distance_classes,
    from_edges,
    load_graph_file,
    make_solid,
    parse_graph_file,
    validate_regular,
)
from .inclusion_exclusion import (
    MomentReport,
    connection_polynomial,
    first_moment,
    second_moment,
)
from .montecarlo import (
    GenerationTrace,
    SimConfig,
    birth_process,
    sample_cluster_size,
)
from .oracle import (
    ClusterSizeTally,
    exhaustive_moment,
    exhaustive_tally,
    tally_to_moment_polynomial,
)
from .paths import PathFamily, enumerate_pair_events, enumerate_paths
from .polynomial import IntPolynomial, bernoulli_term

__version__ = "0.1.0"

__all__ = [
    "BoundInputs",
    "ClusterSizeTally",
    "DistanceClasses",
    "GenerationTrace",
    "Graph",
    "IntPolynomial",
    "MomentReport",
    "PathFamily",
    "SOLID_NAMES",
    "SimConfig",
    "bernoulli_term",
    "birth_process",
    "branching_first_moment_bound",
    "branching_second_moment_bound",
    "connection_polynomial",
    "distance_classes",
    "enumerate_pair_events",
    "enumerate_paths",
    "exhaustive_moment",
    "exhaustive_tally",
    "first_moment",
    "from_edges",
    "load_graph_file",
    "make_solid",
    "parse_graph_file",
    "plarge_first_moment_bound",
    "plarge_second_moment_bound",
    "sample_cluster_size",
    "second_moment",
    "tally_to_moment_polynomial",
    "validate_regular",
]
