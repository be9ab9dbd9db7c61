import pytest

from recipro import (
    CapacityError,
    DomainError,
    GammaPQ,
    Transversal,
    UnitPair,
    build_transversal,
    closed_form_product,
    legendre_euler,
    odd_primes_up_to,
    product_over_transversal,
    qr_identity,
    verify_pair,
    verify_transversal,
)
from recipro.reciprocity_pipeline import _streamed_product

SMALL_PAIRS = [
    (p, q)
    for i, p in enumerate(odd_primes_up_to(60))
    for q in odd_primes_up_to(60)[i + 1 :]
]


class TestBuildTransversal:
    def test_3_5(self):
        L = build_transversal(3, 5)
        # k runs over {1, 2, 4, 7}
        assert L.pairs == (UnitPair(1, 1), UnitPair(2, 2), UnitPair(1, 4), UnitPair(1, 2))
        assert len(L) == 4 == (3 - 1) * (5 - 1) // 2

    def test_3_7(self):
        L = build_transversal(3, 7)
        # k runs over {1, 2, 4, 5, 8, 10}
        assert [(a, b) for a, b in L] == [(1, 1), (2, 2), (1, 4), (2, 5), (2, 1), (1, 3)]
        assert len(L) == 6

    def test_size_formula(self):
        for p, q in SMALL_PAIRS:
            assert len(build_transversal(p, q)) == (p - 1) * (q - 1) // 2

    @pytest.mark.parametrize("p,q", [(3, 3), (4, 5), (3, 2), (3, 9)])
    def test_domain_errors(self, p, q):
        with pytest.raises(DomainError):
            build_transversal(p, q)

    def test_capacity(self):
        # 449 * 457 = 205193 > 200000
        with pytest.raises(CapacityError):
            build_transversal(449, 457)

    def test_env_var_lowers_cap(self, monkeypatch):
        monkeypatch.setenv("RECIPRO_MAX_BUDGET", "1000")
        with pytest.raises(CapacityError):
            build_transversal(31, 37)


class TestProduct:
    def test_3_5(self):
        assert product_over_transversal(build_transversal(3, 5)) == UnitPair(2, 1)

    def test_3_7(self):
        assert product_over_transversal(build_transversal(3, 7)) == UnitPair(2, 1)

    def test_matches_closed_form_small_sweep(self):
        for p, q in SMALL_PAIRS:
            L = build_transversal(p, q)
            assert product_over_transversal(L) == closed_form_product(p, q), (p, q)

    def test_streamed_equals_materialized(self):
        for p, q in [(3, 5), (7, 11), (13, 19), (31, 37)]:
            assert _streamed_product(p, q) == product_over_transversal(
                build_transversal(p, q)
            )


class TestClosedForm:
    @pytest.mark.parametrize(
        "p,q,expected",
        [(3, 5, (2, 1)), (3, 7, (2, 1)), (5, 13, (4, 12))],
    )
    def test_examples(self, p, q, expected):
        assert closed_form_product(p, q) == UnitPair(*expected)

    def test_coordinates_are_signs(self):
        for p, q in SMALL_PAIRS:
            a, b = closed_form_product(p, q)
            assert a in (1, p - 1)
            assert b in (1, q - 1)


class TestGammaPQ:
    def test_members(self):
        gamma = GammaPQ(3, 5)
        assert gamma.members == (UnitPair(1, 1), UnitPair(2, 4))

    def test_nonidentity_member_squares_to_identity(self):
        for p, q in [(3, 5), (7, 11), (13, 17)]:
            a, b = GammaPQ(p, q).members[1]
            assert (a * a % p, b * b % q) == (1, 1)

    def test_equivalence(self):
        gamma = GammaPQ(3, 5)
        assert gamma.equivalent(UnitPair(1, 1), UnitPair(2, 4))
        assert gamma.equivalent(UnitPair(1, 2), UnitPair(1, 2))
        assert not gamma.equivalent(UnitPair(1, 2), UnitPair(1, 3))

    def test_validates_primes(self):
        with pytest.raises(DomainError):
            GammaPQ(4, 5)


class TestVerifyTransversal:
    def test_built_lists_pass(self):
        for p, q in [(3, 5), (3, 7), (5, 13), (17, 19)]:
            assert verify_transversal(build_transversal(p, q))

    def test_duplicate_appended(self):
        L = build_transversal(3, 5)
        tampered = Transversal(3, 5, L.pairs + (L.pairs[0],))
        assert not verify_transversal(tampered)

    def test_entry_replaced_by_negation(self):
        # (2, 4) = -(1, 1) lifts to k = 14, outside (0, pq/2)
        L = build_transversal(3, 5)
        tampered = Transversal(3, 5, (UnitPair(2, 4),) + L.pairs[1:])
        assert not verify_transversal(tampered)

    def test_entry_dropped(self):
        L = build_transversal(3, 5)
        assert not verify_transversal(Transversal(3, 5, L.pairs[1:]))

    def test_non_unit_entry(self):
        L = build_transversal(3, 5)
        tampered = Transversal(3, 5, (UnitPair(0, 1),) + L.pairs[1:])
        assert not verify_transversal(tampered)

    def test_gamma_equivalent_pair_present(self):
        # replace the second entry with the negation of the first
        L = build_transversal(3, 7)
        tampered = Transversal(3, 7, (L.pairs[0], UnitPair(2, 6)) + L.pairs[2:])
        assert not verify_transversal(tampered)


class TestVerifyPair:
    def test_3_5(self):
        v = verify_pair(3, 5)
        assert v.rank == 1
        assert v.legendre_qp == -1 and v.legendre_pq == -1
        assert v.predicted_relation == 1
        assert v.product_L == UnitPair(2, 1)
        assert v.qr_identity_holds
        assert v.all_pass
        assert set(v.checks) == {
            "product_matches_closed_form",
            "transversal_valid",
            "rank_sign_dichotomy",
            "relation_matches_symbols",
            "qr_identity",
        }

    def test_3_7(self):
        v = verify_pair(3, 7)
        assert v.rank == 1
        assert v.legendre_qp == 1 and v.legendre_pq == -1
        assert v.predicted_relation == -1
        assert v.qr_identity_holds and v.all_pass

    def test_5_13(self):
        v = verify_pair(5, 13)
        assert v.rank == 2
        # product lies in {(1,1), (p-1,q-1)}: coordinates are the same sign
        assert v.product_L == UnitPair(4, 12)
        assert v.legendre_qp == v.legendre_pq
        assert v.all_pass

    def test_symmetry(self):
        for p, q in [(3, 5), (3, 7), (5, 13), (7, 19)]:
            a, b = verify_pair(p, q), verify_pair(q, p)
            assert a.qr_identity_holds == b.qr_identity_holds
            assert a.rank == b.rank

    def test_sign_dichotomy_small_sweep(self):
        for p, q in SMALL_PAIRS:
            v = verify_pair(p, q)
            signs = (1 if v.product_L.a == 1 else -1) * (1 if v.product_L.b == 1 else -1)
            assert signs == (1 if v.rank == 2 else -1), (p, q)

    def test_streams_above_transversal_cap(self):
        # 401 * 503 = 201703: over the storage cap, inside the stream cap
        v = verify_pair(401, 503)
        assert "transversal_valid" not in v.checks
        assert v.all_pass

    @pytest.mark.parametrize("p,q", [(3, 3), (4, 5), (3, 2)])
    def test_domain_errors(self, p, q):
        with pytest.raises(DomainError):
            verify_pair(p, q)

    def test_capacity(self):
        # 1021 * 2063 = 2106323 > 2**21
        with pytest.raises(CapacityError):
            verify_pair(1021, 2063)


class TestQrIdentity:
    @pytest.mark.parametrize("p,q", [(3, 5), (3, 7), (5, 13), (7, 11)])
    def test_examples_and_symmetry(self, p, q):
        assert qr_identity(p, q)
        assert qr_identity(q, p) == qr_identity(p, q)

    def test_matches_direct_symbols(self):
        for p, q in SMALL_PAIRS:
            lhs = legendre_euler(p, q) * legendre_euler(q, p)
            rhs = -1 if ((p - 1) // 2) * ((q - 1) // 2) % 2 else 1
            assert qr_identity(p, q) == (lhs == rhs)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            qr_identity(5, 5)
