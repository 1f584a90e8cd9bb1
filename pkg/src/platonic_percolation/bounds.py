"""Closed-form upper bounds on cluster-size moments for regular graphs.

Two families: a branching-process comparison that is tight for small p,
and closed-vertex bounds (a vertex with all incident edges closed cannot
be reached) that are tight for large p. Every geometric quotient
(1 - nu^k)/(1 - nu) is evaluated as an explicit power sum, which removes
the nu = 1 singularity exactly instead of patching it numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, validate_regular


@dataclass(frozen=True)
class BoundInputs:
    """Degree, vertex count and edge probability for the bound formulas."""

    degree: int
    n_vertices: int
    p: float

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        if self.n_vertices < 2:
            raise ValueError(f"need at least 2 vertices, got {self.n_vertices}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")

    @property
    def nu(self) -> float:
        """Mean offspring per non-root individual: (D - 1) p."""
        return (self.degree - 1) * self.p

    @property
    def generations(self) -> int:
        """Number of reproducing generations: N - 1."""
        return self.n_vertices - 1


def bound_inputs_for_graph(g: Graph, p: float) -> BoundInputs:
    return BoundInputs(degree=validate_regular(g), n_vertices=g.n_vertices, p=p)


def _power_sums(nu: float, count: int) -> list[float]:
    """sums[k] = 1 + nu + ... + nu^(k-1) for k = 0..count."""
    sums = [0.0] * (count + 1)
    term = 1.0
    for k in range(1, count + 1):
        sums[k] = sums[k - 1] + term
        term *= nu
    return sums


def branching_first_moment_bound(inputs: BoundInputs) -> float:
    """Mean total progeny of the comparison branching process.

    The root has Binomial(D, p) offspring and every later individual
    Binomial(D - 1, p), run for N - 1 reproducing generations:
    1 + D p (1 + nu + ... + nu^(R-1)).
    """
    R = inputs.generations
    g_r = _power_sums(inputs.nu, R)[R]
    return 1.0 + inputs.degree * inputs.p * g_r


def branching_second_moment_bound(inputs: BoundInputs) -> float:
    """Second moment of the comparison process's total progeny.

    Equals (1 + D p G_R)^2 + D p (1 - p) * sum_{j=1..R} nu^(R-j) G_j^2
    with G_j = 1 + nu + ... + nu^(j-1); the sum form is the expansion of
    ((1 - nu^R)(1 + nu^(R+1))/(1 - nu) - 2 R nu^R) / (1 - nu)^2 and is
    finite at nu = 1 by construction.
    """
    D, p, R = inputs.degree, inputs.p, inputs.generations
    nu = inputs.nu
    sums = _power_sums(nu, R)
    mean = 1.0 + D * p * sums[R]
    spread = 0.0
    nu_pow = 1.0  # nu^(R-j), built from j = R downward
    for j in range(R, 0, -1):
        spread += nu_pow * sums[j] * sums[j]
        nu_pow *= nu
    return mean * mean + D * p * (1.0 - p) * spread


def plarge_first_moment_bound(degree: int, n_vertices: int, p: float) -> float:
    """E(S) <= N - (N - 1)(1 - p)^D (closed-vertex exclusion)."""
    BoundInputs(degree, n_vertices, p)
    return n_vertices - (n_vertices - 1) * (1.0 - p) ** degree


def plarge_second_moment_bound(degree: int, n_vertices: int, p: float) -> float:
    """E(S^2) <= N^2 - (N-1)(2N-1)(1-p)^D + (N-1)(N-2)(1-p)^(2D-1)."""
    BoundInputs(degree, n_vertices, p)
    q = 1.0 - p
    n = n_vertices
    return n * n - (n - 1) * (2 * n - 1) * q**degree + (n - 1) * (n - 2) * q ** (
        2 * degree - 1
    )


def clamp_moment_bound(value: float, n_vertices: int, order: int) -> float:
    """Clip a bound to the trivial envelope [1, N^order]."""
    return min(max(value, 1.0), float(n_vertices**order))
