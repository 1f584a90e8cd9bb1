"""Exact integer-coefficient polynomials in the open-edge probability p.

Coefficient vectors are kept at a fixed length (degree bound + 1, trailing
zeros retained) so they compare positionally against reference tuples.
All arithmetic is exact; every result is checked against the signed 64-bit
budget the engine is sized for and rejected instead of silently growing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

_INT64_MIN = -(1 << 63)
_INT64_MAX = (1 << 63) - 1


class CoefficientOverflowError(ArithmeticError):
    """A coefficient left the signed 64-bit range the engine budgets for."""


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial sum_j coeffs[j] * p**j with exact integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("coefficient vector must not be empty")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        for j, c in enumerate(self.coeffs):
            if not _INT64_MIN <= c <= _INT64_MAX:
                raise CoefficientOverflowError(
                    f"coefficient of p^{j} is {c}, outside the 64-bit budget"
                )

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, degree_bound: int) -> "IntPolynomial":
        return cls((0,) * (degree_bound + 1))

    @classmethod
    def constant(cls, value: int, degree_bound: int) -> "IntPolynomial":
        return cls((value,) + (0,) * degree_bound)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], degree_bound: int) -> "IntPolynomial":
        """Build from a possibly short coefficient list, padding with zeros."""
        cs = list(int(c) for c in coeffs)
        if len(cs) > degree_bound + 1:
            raise ValueError(
                f"{len(cs)} coefficients exceed degree bound {degree_bound}"
            )
        cs.extend(0 for _ in range(degree_bound + 1 - len(cs)))
        return cls(tuple(cs))

    def eval(self, p: float) -> float:
        """Evaluate at p by Horner's rule in floating point."""
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {p}")
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * p + c
        return acc

    def add(self, other: "IntPolynomial") -> "IntPolynomial":
        if other.degree_bound != self.degree_bound:
            raise ValueError(
                f"degree bounds differ: {self.degree_bound} vs {other.degree_bound}"
            )
        return IntPolynomial(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self.add(other)

    def scale(self, weight: int) -> "IntPolynomial":
        return IntPolynomial(tuple(weight * c for c in self.coeffs))

    def to_json_dict(self) -> dict:
        return {"degree_bound": self.degree_bound, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json_dict(cls, d: dict) -> "IntPolynomial":
        poly = cls(tuple(d["coeffs"]))
        if poly.degree_bound != d["degree_bound"]:
            raise ValueError("degree_bound inconsistent with coefficient list")
        return poly


def bernoulli_term(
    open_count: int, total: int, degree_bound: int, weight: int = 1
) -> IntPolynomial:
    """Expand weight * p^open_count * (1-p)^(total-open_count) exactly.

    This is the probability weight of one edge configuration with
    `open_count` of `total` edges open, as a degree-`degree_bound` vector.
    """
    if not 0 <= open_count <= total:
        raise ValueError(f"open_count {open_count} outside 0..{total}")
    if total > degree_bound:
        raise ValueError(f"total {total} exceeds degree bound {degree_bound}")
    closed = total - open_count
    coeffs = [0] * (degree_bound + 1)
    sign = 1
    for i in range(closed + 1):
        coeffs[open_count + i] = weight * sign * comb(closed, i)
        sign = -sign
    return IntPolynomial(tuple(coeffs))
