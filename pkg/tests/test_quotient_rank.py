import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recipro import (
    AbelianGroup,
    CapacityError,
    DiagonalGamma,
    DomainError,
    add,
    corollary_rank_for_primes,
    element_order,
    quotient_rank_report,
    rank2_quotient_enumerated,
    rank2_quotient_formula,
)
from recipro.suites import random_even_factor_lists
from _oracles import quotient_rank_by_cosets

even_lists = st.lists(st.sampled_from([2, 4, 6, 8]), min_size=1, max_size=3)


def enumerated(orders):
    return rank2_quotient_enumerated(DiagonalGamma.for_group(AbelianGroup(orders)))


class TestFormula:
    @pytest.mark.parametrize(
        "orders,expected", [((4, 4), 2), ((2, 4), 1), ((6,), 0)]
    )
    def test_examples(self, orders, expected):
        assert rank2_quotient_formula(orders) == expected

    @pytest.mark.parametrize("bad", [(), (3, 4), (0, 2), (4, 5), (2.0,)])
    def test_domain_errors(self, bad):
        with pytest.raises(DomainError):
            rank2_quotient_formula(bad)


class TestDiagonalGamma:
    def test_for_group(self):
        gamma = DiagonalGamma.for_group(AbelianGroup((4, 6)))
        assert gamma.gamma.coords == (2, 3)
        # the subgroup {0, gamma} really has order 2
        assert element_order(gamma.gamma) == 2
        assert add(gamma.gamma, gamma.gamma) == gamma.group.identity()

    def test_rejects_odd_factor(self):
        with pytest.raises(DomainError):
            DiagonalGamma.for_group(AbelianGroup((4, 3)))
        with pytest.raises(DomainError):
            DiagonalGamma.for_group(AbelianGroup(()))

    def test_rejects_wrong_gamma(self):
        G = AbelianGroup((4, 4))
        with pytest.raises(DomainError):
            DiagonalGamma(G, G.element((2, 0)))


class TestEnumerated:
    @pytest.mark.parametrize(
        "orders,expected", [((4, 4), 2), ((6,), 0), ((2, 2), 1)]
    )
    def test_examples(self, orders, expected):
        assert enumerated(orders) == expected

    def test_capacity(self):
        with pytest.raises(CapacityError):
            enumerated((2,) * 19)

    @given(even_lists)
    @settings(max_examples=60)
    def test_matches_formula(self, orders):
        assert enumerated(orders) == rank2_quotient_formula(orders)

    @given(even_lists)
    @settings(max_examples=30, deadline=None)
    def test_matches_coset_materialization(self, orders):
        assert enumerated(orders) == quotient_rank_by_cosets(orders)

    @given(even_lists)
    @settings(max_examples=60)
    def test_rank_bounds(self, orders):
        # the quotient keeps at least k-1 of the rank and never exceeds k
        k = len(orders)
        assert k - 1 <= enumerated(orders) <= k

    def test_seeded_generator_agreement(self):
        for orders in random_even_factor_lists(40, seed=20260810):
            assert enumerated(orders) == rank2_quotient_formula(orders)


class TestOrderFourCensus:
    @pytest.mark.parametrize("n", [4, 8, 12, 16, 20])
    def test_exactly_two_when_four_divides(self, n):
        G = AbelianGroup((n,))
        count = sum(1 for e in G.elements() if element_order(e) == 4)
        assert count == 2

    @pytest.mark.parametrize("n", [2, 6, 10, 14])
    def test_none_when_twice_odd(self, n):
        G = AbelianGroup((n,))
        assert sum(1 for e in G.elements() if element_order(e) == 4) == 0


class TestCorollary:
    @pytest.mark.parametrize("p,q,expected", [(5, 13, 2), (3, 5, 1), (7, 11, 1)])
    def test_examples(self, p, q, expected):
        assert corollary_rank_for_primes(p, q) == expected

    def test_symmetry(self):
        primes = [3, 5, 7, 11, 13, 17, 19, 23]
        for i, p in enumerate(primes):
            for q in primes[i + 1 :]:
                assert corollary_rank_for_primes(p, q) == corollary_rank_for_primes(q, p)

    @pytest.mark.parametrize("p,q", [(9, 5), (5, 5), (2, 5), (5, 2)])
    def test_domain_errors(self, p, q):
        with pytest.raises(DomainError):
            corollary_rank_for_primes(p, q)


class TestReport:
    def test_both_routes_present(self):
        report = quotient_rank_report((2, 4))
        assert report.k == 2
        assert report.formula_rank == 1
        assert report.enumerated_rank == 1
        assert report.agree is True

    def test_enumeration_skipped_over_cap(self):
        report = quotient_rank_report((2,) * 19)
        assert report.formula_rank == 18
        assert report.enumerated_rank is None
        assert report.agree is None
