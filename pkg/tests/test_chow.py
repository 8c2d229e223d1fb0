import pytest

from cycle_betti.chow import (
    RankInconsistency,
    UnknownCase,
    chow_known_series,
    chow_known_space,
    d1_multiplication_factor,
    degree2_rank_relation,
    detect_contradiction,
    hypothetical_stable_deltas,
    strata_series,
)
from cycle_betti.descriptor import ChowDescriptor
from cycle_betti.series import even_em_product, gaussian_binomial, make_series
from cycle_betti.spaces import Projective
from cycle_betti.stability import RangeViolation

from oracles import convolve, count_partitions, q_binomial_by_factorials, symmetric_power_counts


def grassmannian_oracle(k, m, n):
    out = [0] * (n + 1)
    for e, c in enumerate(q_binomial_by_factorials(m, k)):
        if 2 * e <= n:
            out[2 * e] = c
    return out


def projective_oracle(m, n):
    return [1 if i % 2 == 0 and i <= 2 * m else 0 for i in range(n + 1)]


class TestKnownSeries:
    def test_degree_one(self):
        assert chow_known_series(ChowDescriptor(4, 1, 9), 8) == gaussian_binomial(10, 5, 8)

    def test_cubic_surfaces(self):
        desc = ChowDescriptor(2, 3, 3)
        assert chow_known_space(desc) == Projective(19)
        assert chow_known_series(desc, 4).coeffs == (1, 0, 1, 0, 1)

    def test_n_equals_p(self):
        assert chow_known_series(ChowDescriptor(3, 5, 3), 6) == make_series([1], 6)

    def test_degree_zero(self):
        assert chow_known_series(ChowDescriptor(1, 0, 5), 4) == make_series([1], 4)

    def test_zero_cycles(self):
        s = chow_known_series(ChowDescriptor(0, 2, 3), 12)
        assert list(s.coeffs) == symmetric_power_counts(projective_oracle(3, 12), 2, 12)

    def test_unknown(self):
        with pytest.raises(UnknownCase):
            chow_known_series(ChowDescriptor(1, 2, 4), 4)

    def test_overlapping_closed_forms_agree(self):
        for p in range(5):
            # d = 1 and n = p + 1 both apply
            n = p + 1
            g = grassmannian_oracle(p + 1, n + 1, 20)
            assert list(chow_known_series(ChowDescriptor(p, 1, n), 20).coeffs) == g
            assert g == projective_oracle(p + 1, 20)
        for d in range(1, 6):
            # p = 0, n = 1: SP^d(P^1) is P^d
            s = chow_known_series(ChowDescriptor(0, d, 1), 2 * d + 4)
            assert list(s.coeffs) == symmetric_power_counts(projective_oracle(1, 2 * d + 4), d, 2 * d + 4)
            assert list(s.coeffs) == projective_oracle(d, 2 * d + 4)

    def test_second_betti_is_one(self):
        for p in range(6):
            for n in range(p + 1, 11):
                for d in range(1, 5):
                    desc = ChowDescriptor(p, d, n)
                    try:
                        s = chow_known_series(desc, 2)
                    except UnknownCase:
                        continue
                    assert s[2] == 1, desc


class TestStrata:
    def test_lemma_tables(self):
        s = strata_series(4, 9, 8)
        assert s.x_series.coeffs == (1, 0, 1, 0, 3, 0, 5, 0, 11)
        assert s.a_series.coeffs == (1, 0, 2, 0, 4, 0, 7, 0, 12)
        assert s.b_series.coeffs == (1, 0, 2, 0, 5, 0, 9, 0, 17)

    def test_degree_zero(self):
        s = strata_series(4, 9, 0)
        assert s.x_series.coeffs == s.a_series.coeffs == s.b_series.coeffs == (1,)

    def test_lines_in_p3(self):
        # conics: quadric fiber P^5, hyperplane-pair fiber SP^2(P^2), base G(3,4)
        n = 4
        base = grassmannian_oracle(3, 4, n)
        a = convolve(base, projective_oracle(5, n), n)
        b = convolve(base, symmetric_power_counts(projective_oracle(2, n), 2, n), n)
        x = symmetric_power_counts(grassmannian_oracle(2, 4, n), 2, n)
        s = strata_series(1, 3, n)
        assert list(s.x_series.coeffs) == x == [1, 0, 1, 0, 3]
        assert list(s.a_series.coeffs) == a == [1, 0, 2, 0, 3]
        assert list(s.b_series.coeffs) == b == [1, 0, 2, 0, 4]

    @pytest.mark.parametrize("p, n", [(4, 5), (0, 1), (2, 3)])
    def test_rejects_small_n(self, p, n):
        with pytest.raises(ValueError):
            strata_series(p, n, 4)

    def test_all_even(self):
        for p in range(6):
            for n in range(p + 2, p + 7):
                s = strata_series(p, n, 16)
                for series in (s.x_series, s.a_series, s.b_series):
                    assert series.is_evenly_graded() and series.is_nonnegative()


class TestRankRelation:
    def test_p4_deltas(self):
        t = degree2_rank_relation(4, 9, 4)
        assert t.deltas == (1, 1, 2, 3, 6)
        assert t.x == (1, 1, 3, 5, 11)
        assert t.a == (1, 2, 4, 7, 12)
        assert t.b == (1, 2, 5, 9, 17)

    def test_degree_zero(self):
        assert degree2_rank_relation(4, 9, 0).deltas == (1,)

    def test_stable_in_n(self):
        base = degree2_rank_relation(4, 9, 4)
        for n in range(10, 16):
            assert degree2_rank_relation(4, n, 4).deltas == base.deltas

    def test_low_degrees_general_p(self):
        for p in range(1, 7):
            t = degree2_rank_relation(p, 2 * p + 1, 1)
            assert t.deltas[:2] == (1, 1)

    def test_rejects_negative_max_i(self):
        with pytest.raises(ValueError):
            degree2_rank_relation(4, 9, -1)

    def test_negative_rank_raises(self, monkeypatch):
        import cycle_betti.chow as chow
        from cycle_betti.chow import Degree2Strata

        real = chow.strata_series

        def broken(p, n, trunc):
            s = real(p, n, trunc)
            bad = make_series([-1] + [0] * trunc, trunc)
            return Degree2Strata(p, n, s.x_series, bad, s.b_series)

        monkeypatch.setattr(chow, "strata_series", broken)
        with pytest.raises(RankInconsistency):
            chow.degree2_rank_relation(4, 9, 2)


class TestHypothetical:
    def test_values(self):
        assert hypothetical_stable_deltas(4) == (1, 1, 2, 3, 5)
        assert hypothetical_stable_deltas(0) == (1,)
        assert hypothetical_stable_deltas(6) == tuple(count_partitions(m) for m in range(7))

    def test_matches_even_product(self):
        s = even_em_product(60)
        assert hypothetical_stable_deltas(30) == tuple(s[2 * i] for i in range(31))


class TestContradiction:
    def test_headline(self):
        r = detect_contradiction(4, 9, 4)
        assert r.verdict == "contradiction"
        assert r.first_mismatch_degree == 8
        assert r.mismatch == (5, 6)

    def test_consistent_below(self):
        r = detect_contradiction(4, 9, 3)
        assert r.verdict == "consistent"
        assert r.first_mismatch_degree is None
        assert r.derived_deltas == r.hypothetical_deltas == (1, 1, 2, 3)

    def test_out_of_range(self):
        with pytest.raises(RangeViolation):
            detect_contradiction(4, 9, 5)

    @pytest.mark.parametrize("n", range(9, 16))
    def test_every_n(self, n):
        r = detect_contradiction(4, n, 4)
        assert r.verdict == "contradiction" and r.first_mismatch_degree == 8


class TestD1Factor:
    @pytest.mark.parametrize("k, expected", [(2, 1), (4, 1), (8, 6), (12, 120)])
    def test_values(self, k, expected):
        assert d1_multiplication_factor(k) == expected

    @pytest.mark.parametrize("k", [0, 3, -2])
    def test_rejects(self, k):
        with pytest.raises(ValueError):
            d1_multiplication_factor(k)
