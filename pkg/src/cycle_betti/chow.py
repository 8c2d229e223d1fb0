"""Betti-number bookkeeping for Chow varieties of cycles of low degree.

``C(p, d, n)`` is the Chow variety of effective p-cycles of degree d in
complex projective n-space.  The degree-2 variety splits as the symmetric
square of a Grassmannian (reducible cycles) plus an open stratum of
irreducible quadrics; the homology of the pair is that of a bundle pair
(all quadrics, pairs of hyperplanes) over G(p+2, n+1).  Only ranks are
manipulated here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .descriptor import ChowDescriptor
from .series import PoincareSeries, partition_table
from .spaces import (
    Grassmannian,
    Point,
    Projective,
    SpaceExpr,
    SymProd,
    bundle_series,
    eval_space,
)
from .stability import RangeViolation, iso_ranges

__all__ = [
    "ChowDescriptor",
    "UnknownCase",
    "RankInconsistency",
    "Degree2Strata",
    "RankRelationTable",
    "ContradictionReport",
    "chow_known_space",
    "chow_known_series",
    "strata_series",
    "degree2_rank_relation",
    "hypothetical_stable_deltas",
    "detect_contradiction",
    "d1_multiplication_factor",
]


class UnknownCase(LookupError):
    """No closed form is known for this Chow variety."""


class RankInconsistency(ArithmeticError):
    pass


def chow_known_space(desc: ChowDescriptor) -> SpaceExpr:
    """A catalog space isomorphic to ``desc`` when a closed form exists."""
    p, d, n = desc.p, desc.d, desc.n
    if d == 0 or n == p:
        return Point()
    if d == 1:
        return Grassmannian(p + 1, n + 1)
    if n == p + 1:
        # hypersurfaces of degree d in P^n
        return Projective(comb(n + d, d) - 1)
    if p == 0:
        return SymProd(d, Projective(n))
    raise UnknownCase(f"no closed form for {desc}")


def chow_known_series(desc: ChowDescriptor, trunc: int) -> PoincareSeries:
    return eval_space(chow_known_space(desc), trunc)


@dataclass(frozen=True)
class Degree2Strata:
    p: int
    n: int
    x_series: PoincareSeries  # SP^2(G(p+1, n+1))
    a_series: PoincareSeries  # bundle of all quadrics in P^(p+1)
    b_series: PoincareSeries  # bundle of hyperplane pairs in P^(p+1)


def _check_degree2(p: int, n: int):
    if p < 0:
        raise ValueError(f"cycle dimension must be >= 0, got {p}")
    if n < p + 2:
        raise ValueError(f"the bundle model needs n >= p + 2, got p={p}, n={n}")


def strata_series(p: int, n: int, trunc: int) -> Degree2Strata:
    _check_degree2(p, n)
    base = Grassmannian(p + 2, n + 1)
    x = eval_space(SymProd(2, Grassmannian(p + 1, n + 1)), trunc)
    a = bundle_series(base, Projective(comb(p + 3, 2) - 1), trunc)
    b = bundle_series(base, SymProd(2, Projective(p + 1)), trunc)
    return Degree2Strata(p, n, x, a, b)


@dataclass(frozen=True)
class RankRelationTable:
    """beta_2i(M) - beta_2i+1(M) for M = C(p, 2, n), i = 0..max_i."""

    p: int
    n: int
    max_i: int
    deltas: tuple[int, ...]
    x: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]


def degree2_rank_relation(p: int, n: int, max_i: int) -> RankRelationTable:
    """Even/odd Betti differences of C(p, 2, n) from the two long exact sequences.

    The pair (M, X) with X the reducible locus and the bundle pair (A, B)
    have the same relative homology, and X, A, B have no odd homology, so
    beta_2i(M) - beta_2i+1(M) = x_2i + a_2i - b_2i.
    """
    if max_i < 0:
        raise ValueError(f"max_i must be >= 0, got {max_i}")
    strata = strata_series(p, n, 2 * max_i)
    x = strata.x_series.even_part()
    a = strata.a_series.even_part()
    b = strata.b_series.even_part()
    for name, values in (("x", x), ("a", a), ("b", b)):
        if any(v < 0 for v in values):
            raise RankInconsistency(f"negative rank in {name} stratum: {values}")
    deltas = []
    for i in range(max_i + 1):
        # a[i] - b[i] is rank H_2i(A, B) - rank H_2i+1(A, B)
        deltas.append(x[i] + a[i] - b[i])
    return RankRelationTable(p, n, max_i, tuple(deltas), tuple(x), tuple(a), tuple(b))


def hypothetical_stable_deltas(max_i: int) -> tuple[int, ...]:
    """beta_2i - beta_2i+1 if D(2) had the homotopy groups of K(even, Z): p(i) - 0."""
    if max_i < 0:
        raise ValueError(f"max_i must be >= 0, got {max_i}")
    return partition_table(max_i).values


@dataclass(frozen=True)
class ContradictionReport:
    p: int
    n: int
    max_i: int
    hypothetical_deltas: tuple[int, ...]
    derived_deltas: tuple[int, ...]
    first_mismatch_degree: int | None

    @property
    def verdict(self) -> str:
        return "consistent" if self.first_mismatch_degree is None else "contradiction"

    @property
    def mismatch(self) -> tuple[int, int] | None:
        """(hypothetical, derived) at the first mismatching degree."""
        if self.first_mismatch_degree is None:
            return None
        i = self.first_mismatch_degree // 2
        return self.hypothetical_deltas[i], self.derived_deltas[i]


def detect_contradiction(p: int, n: int, max_i: int) -> ContradictionReport:
    _check_degree2(p, n)
    stable = iso_ranges(p, n).stable_max_k
    if 2 * max_i > stable:
        raise RangeViolation(
            f"degree {2 * max_i} exceeds the stable range {stable} for p={p}, n={n}"
        )
    hyp = hypothetical_stable_deltas(max_i)
    derived = degree2_rank_relation(p, n, max_i).deltas
    first = next((2 * i for i, (h, g) in enumerate(zip(hyp, derived)) if h != g), None)
    return ContradictionReport(p, n, max_i, hyp, derived, first)


def d1_multiplication_factor(k: int) -> int:
    """Degree of pi_k(D(1)) -> pi_k(D(infinity)) for even k, namely (k/2 - 1)!."""
    if k < 2 or k % 2:
        raise ValueError(f"homotopy degree must be even and >= 2, got {k}")
    return factorial(k // 2 - 1)
