import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynzeta.dynmap import compose, poly_map
from dynzeta.errors import HypothesisViolated, InseparableSigma
from dynzeta.field import distinct_root_count, field_make, ratfunc_field
from dynzeta.sentinels import INFINITY, TRANSCENDENTAL
from dynzeta.twisted import (TwistedPoly, constant_order, kernel_size_ga,
                             lte_ga, realize_additive, tw_mul, tw_pow,
                             tw_sub, tw_sub_scalar, v_phi, v_phi_pow_minus)


def tw(ctx, *ints):
    return TwistedPoly.from_ints(ctx, list(ints))


class TestTwistRule:
    def test_operator_past_constant(self, F3):
        phi = tw(F3, 0, 1)
        c = tw(F3, 2)
        assert [e.rep for e in tw_mul(phi, c).coeffs] == [0, 2]

    def test_square_of_phi_minus_one(self, F3):
        sq = tw_pow(tw(F3, -1, 1), 2)
        assert [e.rep for e in sq.coeffs] == [1, 1, 1]

    def test_unit(self, F3):
        a = tw(F3, 2, 1, 2)
        assert tw_mul(a, TwistedPoly.one(F3)) == a
        assert tw_mul(TwistedPoly.one(F3), a) == a

    def test_sub_scalar(self, F3):
        sq = tw_pow(tw(F3, -1, 1), 2)
        shifted = tw_sub_scalar(sq, 1)
        assert [e.rep for e in shifted.coeffs] == [0, 1, 1]
        sigma = tw(F3, -1, 1)
        assert tw_sub_scalar(sigma, 0) == sigma

    def test_associativity_random(self, F3):
        rng = random.Random(9)
        for _ in range(30):
            a = tw(F3, *[rng.randrange(3) for _ in range(rng.randint(1, 4))])
            b = tw(F3, *[rng.randrange(3) for _ in range(rng.randint(1, 4))])
            c = tw(F3, *[rng.randrange(3) for _ in range(rng.randint(1, 4))])
            assert tw_mul(tw_mul(a, b), c) == tw_mul(a, tw_mul(b, c))


class TestVPhi:
    def test_examples(self, F3):
        assert v_phi(tw(F3, 0, 1, 1)) == 1
        assert v_phi(tw(F3, -1, 1)) == 0
        assert v_phi(TwistedPoly.zero(F3)) is INFINITY

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.integers(0, 2), min_size=1, max_size=5),
           st.lists(st.integers(0, 2), min_size=1, max_size=5))
    def test_multiplicative(self, a_ints, b_ints):
        F3 = field_make(3)
        a, b = tw(F3, *a_ints), tw(F3, *b_ints)
        if a.is_zero() or b.is_zero():
            return
        assert v_phi(tw_mul(a, b)) == v_phi(a) + v_phi(b)


class TestKernelSize:
    def test_examples(self, F3):
        assert kernel_size_ga(tw(F3, 0, 1, 1)) == 3
        assert kernel_size_ga(tw(F3, 0, 1)) == 1
        assert kernel_size_ga(tw(F3, -1, 1)) == 3

    def test_matches_distinct_roots(self, F3):
        rng = random.Random(17)
        for _ in range(25):
            a = tw(F3, *[rng.randrange(3) for _ in range(rng.randint(2, 5))])
            if a.is_zero() or a.top_index < 1 or a.top_index > 7:
                continue
            assert kernel_size_ga(a) == distinct_root_count(realize_additive(a))


class TestRealizationConsistency:
    def test_ring_homomorphism(self, F3):
        rng = random.Random(21)
        for _ in range(15):
            a = tw(F3, *[rng.randrange(3) for _ in range(rng.randint(2, 3))])
            b = tw(F3, *[rng.randrange(3) for _ in range(rng.randint(2, 3))])
            if a.is_zero() or b.is_zero() or a.top_index + b.top_index > 6:
                continue
            if a.top_index < 1 or b.top_index < 1:
                continue
            lhs = realize_additive(tw_mul(a, b))
            rhs = compose(poly_map(realize_additive(a)),
                          poly_map(realize_additive(b)))
            assert poly_map(lhs) == rhs


class TestExponentLift:
    def test_f2_example(self, F2):
        x = tw(F2, 1, 1)
        assert lte_ga(x, 2) == 2
        sq = tw_sub(tw_pow(x, 2), TwistedPoly.one(F2))
        assert v_phi(sq) == 2

    def test_coprime_exponent_keeps_valuation(self, F3):
        x = tw(F3, 1, 2, 1)
        base = v_phi(tw_sub(x, TwistedPoly.one(F3)))
        assert lte_ga(x, 2) == base
        assert lte_ga(x, 4) == base

    def test_degenerate_identity(self, F2):
        assert lte_ga(TwistedPoly.one(F2), 5) is INFINITY

    def test_hypothesis_checked(self, F3):
        with pytest.raises(HypothesisViolated):
            lte_ga(tw(F3, 2, 1), 3)  # x - 1 has unit constant term

    def test_random_against_direct(self):
        rng = random.Random(63)
        for p in (2, 3):
            F = field_make(p)
            done = 0
            while done < 40:
                tail = [rng.randrange(p) for _ in range(rng.randint(1, 3))]
                x = TwistedPoly.from_elems(
                    F, [F.one()] + [F.from_int(c) for c in tail])
                if v_phi(tw_sub(x, TwistedPoly.one(F))) is INFINITY:
                    continue
                n = rng.randint(1, 20)
                direct = v_phi(tw_sub(tw_pow(x, n), TwistedPoly.one(F)))
                assert lte_ga(x, n) == direct
                done += 1


class TestConstantOrder:
    def test_order_of_minus_one(self, F3):
        assert constant_order(tw(F3, -1, 1)) == 2

    def test_order_of_one(self, F2):
        assert constant_order(tw(F2, 1, 1)) == 1

    def test_transcendental_marker(self, F3u):
        sigma = TwistedPoly.from_elems(F3u, [F3u.u(), F3u.one()])
        assert constant_order(sigma) is TRANSCENDENTAL

    def test_inseparable_rejected(self, F3):
        with pytest.raises(InseparableSigma):
            constant_order(tw(F3, 0, 1))

    def test_extension_field_order(self):
        F9 = field_make(3, 2)
        gen = F9.elem([0, 1])
        sigma = TwistedPoly.from_elems(F9, [gen, F9.one()])
        order = constant_order(sigma)
        assert (gen ** order).is_one()
        for smaller in range(1, order):
            assert not (gen ** smaller).is_one()


class TestConstantTermShortcut:
    def test_transcendental_powers_never_vanish(self, F3u):
        sigma = TwistedPoly.from_elems(F3u, [F3u.u(), F3u.one()])
        for n in (1, 2, 5, 20):
            assert v_phi_pow_minus(sigma, n, F3u.one()) == 0

    def test_algebraic_fallback_matches_direct(self, F3):
        sigma = tw(F3, -1, 1)
        for n in (1, 2, 3, 4, 6):
            direct = v_phi(tw_sub_scalar(tw_pow(sigma, n), F3.one()))
            assert v_phi_pow_minus(sigma, n, F3.one()) == direct
