"""Exit criteria; every check is an exact integer comparison."""

import random
from itertools import product

import pytest

from cycle_betti.chow import degree2_rank_relation, detect_contradiction, strata_series
from cycle_betti.descriptor import ChowDescriptor
from cycle_betti.series import (
    even_em_product,
    gaussian_binomial,
    macdonald_sp,
    make_series,
    partition_count,
    sym_square,
)
from cycle_betti.spaces import (
    Bundle,
    EilenbergMacLane,
    Grassmannian,
    HypothesisViolation,
    Point,
    Projective,
    Sphere,
    SymProd,
    euler_char,
    eval_space,
)
from cycle_betti.stability import OutOfRange, certify_stability, low_homotopy, verify_certificate

from oracles import binom, count_partitions, q_binomial_by_factorials, symmetric_power_counts

criterion = pytest.mark.criterion


@criterion(1, "strata of C(4,2,9): SP^2 G(5,10), quadric and hyperplane-pair bundles")
def test_strata_tables():
    s = strata_series(4, 9, 8)
    for series, even in (
        (s.x_series, [1, 1, 3, 5, 11]),
        (s.a_series, [1, 2, 4, 7, 12]),
        (s.b_series, [1, 2, 5, 9, 17]),
    ):
        assert series.even_part() == even
        assert series.is_evenly_graded()


@criterion(2, "hypothetical Betti numbers through degree 9 are 1,0,1,0,2,0,3,0,5,0")
def test_hypothetical_betti():
    assert even_em_product(9).coeffs == (1, 0, 1, 0, 2, 0, 3, 0, 5, 0)


@criterion(3, "rank relation 1,1,2,3,6 and contradiction at degree 8 (5 vs 6) for n = 9..15")
def test_contradiction():
    assert degree2_rank_relation(4, 9, 4).deltas == (1, 1, 2, 3, 6)
    for n in range(9, 16):
        assert degree2_rank_relation(4, n, 4).deltas == (1, 1, 2, 3, 6)
        report = detect_contradiction(4, n, 4)
        assert report.verdict == "contradiction"
        assert report.first_mismatch_degree == 8
        assert report.mismatch == (5, 6)


@criterion(4, "Macdonald SP^2 equals (f(t)^2 + f(t^2))/2 on 100 random even series")
def test_macdonald_vs_sym_square():
    rng = random.Random(20261014)
    for _ in range(100):
        trunc = rng.randint(0, 20)
        coeffs = [rng.randint(0, 60) if i % 2 == 0 else 0 for i in range(trunc + 1)]
        f = make_series(coeffs, trunc)
        assert macdonald_sp(f, 2) == sym_square(f)


def _small_atoms():
    yield Point()
    for m in range(6):
        yield Projective(m)
    for m in range(7):
        for k in range(m + 1):
            if binom(m, k) <= 6:
                yield Grassmannian(k, m)
    for n in (1, 2, 3, 4, 5):
        yield Sphere(n)
    for n in (2, 4, 6, 8, 10, 12):
        yield EilenbergMacLane(n)


@criterion(5, "Macdonald matches brute-force multiset enumeration (rank <= 6, d <= 3, trunc <= 12)")
def test_macdonald_vs_enumeration():
    checked = 0
    for atom in _small_atoms():
        for trunc in range(13):
            f = eval_space(atom, trunc)
            if f.total() > 6:
                continue
            for d in range(4):
                assert list(macdonald_sp(f, d).coeffs) == symmetric_power_counts(f.coeffs, d, trunc)
                checked += 1
    assert checked > 500


@criterion(6, "q-binomials: symmetry, q-Pascal, palindromic, Euler characteristic, m <= 12")
def test_q_binomials():
    for m in range(13):
        for k in range(m + 1):
            top = 2 * k * (m - k)
            s = gaussian_binomial(m, k, top)
            q = s.even_part()
            assert q == q_binomial_by_factorials(m, k)
            assert s == gaussian_binomial(m, m - k, top)
            assert q == q[::-1]
            assert s.total() == binom(m, k)
            assert s.is_evenly_graded() and s.is_nonnegative()
            if 0 < k < m:
                left = gaussian_binomial(m - 1, k - 1, top).even_part()
                right = gaussian_binomial(m - 1, k, top).even_part()
                shifted = [0] * k + right[: len(right) - k]
                assert q == [a + b for a, b in zip(left, shifted)]


@criterion(7, "partition counts equal enumeration and the even EM product, m <= 30")
def test_partitions():
    s = even_em_product(60)
    for m in range(31):
        assert partition_count(m) == count_partitions(m) == s[2 * m]


@criterion(8, "certificates: success iff k <= min(2p+1, 2(n-p)); all verify; monotone in n")
def test_certificates():
    for d, p, n, k in product((1, 2, 3), range(9), range(17), range(21)):
        if n < p:
            continue
        try:
            cert = certify_stability(ChowDescriptor(p, d, n), k)
        except OutOfRange:
            assert k > min(2 * p + 1, 2 * (n - p))
            continue
        assert k <= min(2 * p + 1, 2 * (n - p))
        assert verify_certificate(cert)
        if n < 16:
            assert verify_certificate(certify_stability(ChowDescriptor(p, d, n + 1), k))


@criterion(9, "bundles: Euler characteristics multiply; odd-graded fiber is rejected")
def test_bundles():
    grass = [Grassmannian(k, m) for m in range(11) for k in range(m + 1) if k * (m - k) <= 20]
    fibers = [Projective(j) for j in range(6)] + [SymProd(2, Projective(j)) for j in range(4)]
    for base in grass:
        for fiber in fibers:
            assert euler_char(Bundle(base, fiber)) == euler_char(base) * euler_char(fiber)
    with pytest.raises(HypothesisViolation):
        eval_space(Bundle(Grassmannian(2, 4), Sphere(3)), 10)


@criterion(10, "homotopy groups of D(2) itself are not claimed (pi_k for k > 2 is refused)")
def test_no_stable_homotopy_values():
    with pytest.raises(ValueError):
        low_homotopy(ChowDescriptor(4, 2, 9), 3)
