import random

import pytest

from dynzeta.errors import (HypothesisViolated, InvalidCombination,
                            ZeroInput)
from dynzeta.orders import (B3_ORDER, HURWITZ, QuadRing, QuatElem,
                            aut_group_table, b3_units, hurwitz_units,
                            lte_int, lte_quad, lte_quat, norm_sequence,
                            prime_context, quad_roots_of_unity, v_I,
                            v_frak_p, v_p_int)

ZI = QuadRing(0, 1)       # Z[i]
ZW = QuadRing(-1, 1)      # Z[w], w^2 = -w - 1


class TestIntegerValuation:
    def test_examples(self):
        assert v_p_int(63, 3) == 2
        assert v_p_int(3 ** 2 - 1, 2) == 3
        assert v_p_int(7, 5) == 0

    def test_zero_rejected(self):
        with pytest.raises(ZeroInput):
            v_p_int(0, 3)


class TestIntegerLift:
    def test_hypothesis_needed(self):
        with pytest.raises(HypothesisViolated):
            lte_int(2, 1, 3, 4)

    def test_direct_example(self):
        assert lte_int(4, 1, 3, 3) == 2
        assert v_p_int(4 ** 3 - 1, 3) == 2

    def test_powers_of_four(self):
        for n in (1, 2, 3, 9):
            assert lte_int(4, 1, 3, n) == 1 + v_p_int(n, 3) if n % 3 == 0 \
                else lte_int(4, 1, 3, n) == 1

    def test_random_agreement(self):
        rng = random.Random(41)
        for p in (3, 5, 7):
            done = 0
            while done < 40:
                y = rng.randint(1, 40)
                if y % p == 0:
                    continue
                x = y + p * rng.randint(1, 30)
                if x % p == 0:
                    continue
                n = rng.randint(1, 30)
                v = lte_int(x, y, p, n)
                assert v == v_p_int(x ** n - y ** n, p)
                done += 1

    def test_p2_guard(self):
        with pytest.raises(HypothesisViolated):
            lte_int(3, 1, 2, 2)   # v_2(2) = 1 < 2
        assert lte_int(5, 1, 2, 2) == 3


class TestQuadArithmetic:
    def test_gaussian_norms(self):
        assert ZI.elem(1, 1).norm() == 2
        sq = ZI.elem(1, 1) * ZI.elem(1, 1)
        assert (sq.a, sq.b) == (0, 2)
        assert ZI.elem(-1, 2).norm() == 5

    def test_conj_involution(self):
        rng = random.Random(4)
        for ring in (ZI, ZW, QuadRing(-3, 5)):
            for _ in range(20):
                x = ring.elem(rng.randint(-9, 9), rng.randint(-9, 9))
                assert x.conj().conj() == x
                assert x.conj().norm() == x.norm()
                assert (x * x.conj()).a == x.norm()

    def test_norm_multiplicative(self):
        rng = random.Random(11)
        for ring in (ZI, ZW):
            for _ in range(30):
                x = ring.elem(rng.randint(-9, 9), rng.randint(-9, 9))
                y = ring.elem(rng.randint(-9, 9), rng.randint(-9, 9))
                assert (x * y).norm() == x.norm() * y.norm()

    def test_cayley_hamilton(self):
        rng = random.Random(12)
        for ring in (ZI, ZW, QuadRing(-3, 5)):
            for _ in range(20):
                x = ring.elem(rng.randint(-9, 9), rng.randint(-9, 9))
                val = x * x - ring.elem(x.trace(), 0) * x + ring.elem(x.norm(), 0)
                assert val.is_zero()


class TestSplitPrimeValuation:
    def test_orientation_example(self):
        ctx = prime_context(ZI, 5)
        a = v_frak_p(ZI.elem(1, 2), ctx)
        b = v_frak_p(ZI.elem(1, -2), ctx)
        assert sorted((a, b)) == [0, 1]
        assert a + b == v_p_int(ZI.elem(1, 2).norm(), 5)

    def test_rational_prime_has_valuation_one(self):
        ctx = prime_context(ZI, 5)
        assert v_frak_p(ZI.elem(5, 0), ctx) == 1

    def test_unit_norm_gives_zero(self):
        ctx = prime_context(ZI, 5)
        assert v_frak_p(ZI.elem(1, 1), ctx) == 0   # norm 2, prime to 5

    def test_conjugate_split(self):
        ctx = prime_context(ZW, 7)   # 7 = 1 mod 3 splits in Z[w]
        rng = random.Random(19)
        for _ in range(40):
            x = ZW.elem(rng.randint(-9, 9), rng.randint(-9, 9))
            if x.is_zero():
                continue
            v1 = v_frak_p(x, ctx)
            v2 = v_frak_p(x.conj(), ctx)
            assert v1 + v2 == v_p_int(x.norm(), 7)

    def test_inert_prime_rejected(self):
        with pytest.raises(InvalidCombination):
            prime_context(ZI, 7)   # 7 = 3 mod 4 is inert in Z[i]

    def test_orientation_parameter(self):
        lo = prime_context(ZI, 5, unit_root=2)
        hi = prime_context(ZI, 5, unit_root=3)
        x = ZI.elem(1, 2)
        assert v_frak_p(x, lo) != v_frak_p(x, hi)


class TestQuadLift:
    def test_order_step_then_lift(self):
        ctx = prime_context(ZI, 5)
        sigma = ZI.elem(1, 1)
        m = 1
        while v_frak_p(sigma ** m - ZI.one(), ctx) < 1:
            m += 1
        base = v_frak_p(sigma ** m - ZI.one(), ctx)
        for n in (1, 2, 5, 10, 25):
            bump = v_p_int(n, 5) if n % 5 == 0 else 0
            assert lte_quad(sigma ** m, ZI.one(), ctx, n) == base + bump

    def test_random_agreement(self):
        ctx = prime_context(ZI, 5)
        rng = random.Random(23)
        done = 0
        while done < 40:
            x = ZI.elem(rng.randint(-6, 6), rng.randint(-6, 6))
            y = ZI.elem(rng.randint(-6, 6), rng.randint(-6, 6))
            if x.is_zero() or y.is_zero() or (x - y).is_zero():
                continue
            if v_frak_p(x, ctx) != 0 or v_frak_p(y, ctx) != 0:
                continue
            if v_frak_p(x - y, ctx) < 1:
                continue
            n = rng.randint(1, 25)
            assert lte_quad(x, y, ctx, n) == v_frak_p(x ** n - y ** n, ctx)
            done += 1


class TestQuaternionOrders:
    def test_basic_norms(self):
        assert HURWITZ.elem(0, 1, 0, 0).reduced_norm() == 1
        assert HURWITZ.elem(1, 1, 0, 0).reduced_norm() == 2
        assert QuatElem(HURWITZ, 1, 1, 1, 1).reduced_norm() == 1
        assert QuatElem(B3_ORDER, 1, 0, 1, 0).reduced_norm() == 1

    def test_unit_groups(self):
        hw = hurwitz_units()
        assert len(hw) == 24 and all(u.reduced_norm() == 1 for u in hw)
        b3 = b3_units()
        assert len(b3) == 12 and all(u.reduced_norm() == 1 for u in b3)

    def test_norm_multiplicative(self):
        rng = random.Random(31)
        for order in (HURWITZ, B3_ORDER):
            for _ in range(30):
                x = _random_quat(order, rng)
                y = _random_quat(order, rng)
                assert (x * y).reduced_norm() == x.reduced_norm() * y.reduced_norm()

    def test_cayley_hamilton(self):
        rng = random.Random(37)
        for order in (HURWITZ, B3_ORDER):
            one = order.one()
            for _ in range(30):
                x = _random_quat(order, rng)
                t, n = x.reduced_trace(), x.reduced_norm()
                acc = x * x - QuatElem(order, 2 * t, 0, 0, 0) * x
                acc = acc + QuatElem(order, 2 * n, 0, 0, 0)
                assert acc.is_zero()

    def test_ideal_valuation(self):
        assert v_I(HURWITZ.elem(2, 0, 0, 0)) == 2
        assert v_I(QuatElem(HURWITZ, 1, 1, 1, 1)) == 0
        assert v_I(HURWITZ.elem(1, 1, 0, 0)) == 1
        assert v_I(B3_ORDER.elem(3, 0, 0, 0)) == 2


def _random_quat(order, rng):
    while True:
        if order.p == 2:
            parity = rng.randint(0, 1)
            coords = [2 * rng.randint(-3, 3) + parity for _ in range(4)]
        else:
            a = rng.randint(-6, 6)
            b = rng.randint(-6, 6)
            coords = [a, b, a - 2 * rng.randint(-3, 3), b - 2 * rng.randint(-3, 3)]
        el = QuatElem(order, *coords)
        if not el.is_zero():
            return el


class TestQuatLift:
    def test_coprime_keeps_valuation(self):
        x = QuatElem(HURWITZ, 3, 1, 1, 1)   # norm 3, unit at the ideal
        m = 1
        while v_I(x ** m - HURWITZ.one()) < 3:
            m += 1
        base = v_I(x ** m - HURWITZ.one())
        assert lte_quat(x ** m, HURWITZ.one(), 3) == base

    def test_lift_doubles(self):
        # Commuting pairs: y is drawn from the subring generated by x.
        rng = random.Random(43)
        for order, p, guard in ((HURWITZ, 2, 3), (B3_ORDER, 3, 2)):
            done = 0
            while done < 15:
                x = _random_quat(order, rng)
                scalar = order.elem(rng.randint(-4, 4), 0, 0, 0)
                mult = order.elem(rng.randint(-2, 2), 0, 0, 0)
                y = scalar + mult * x
                if (x - y).is_zero() or y.is_zero():
                    continue
                if x.reduced_norm() % p == 0 or y.reduced_norm() % p == 0:
                    continue
                if v_I(x - y) < guard:
                    continue
                n = rng.randint(1, 25)
                expected = v_I(x - y) + 2 * v_p_int(n, p) if n % p == 0 else v_I(x - y)
                assert lte_quat(x, y, n) == expected
                assert expected == v_I(x ** n - y ** n)
                done += 1

    def test_noncommuting_pair_rejected(self):
        x = QuatElem(B3_ORDER, 3, 2, -3, 2)
        y = QuatElem(B3_ORDER, 0, -4, 6, -10)
        assert v_I(x - y) == 2
        # v_I(x^3 - y^3) is 3, not 2 + 2; the identity needs commuting inputs
        assert v_I(x ** 3 - y ** 3) == 3
        with pytest.raises(HypothesisViolated):
            lte_quat(x, y, 3)

    def test_guard_enforced(self):
        # x - 1 = 2i has ideal valuation 2 < 3, so the p = 2 lift refuses.
        x = HURWITZ.one() + HURWITZ.elem(0, 2, 0, 0)
        assert v_I(x - HURWITZ.one()) == 2
        with pytest.raises(HypothesisViolated):
            lte_quat(x, HURWITZ.one(), 2)

    def test_difference_outside_ideal_rejected(self):
        x = HURWITZ.one() + HURWITZ.elem(1, 1, 1, 0)   # norm(x - 1) = 3, odd
        with pytest.raises(HypothesisViolated):
            lte_quat(x, HURWITZ.one(), 2)


class TestAutGroupTable:
    def test_hurwitz_valuations(self):
        table = aut_group_table(2, True, "quaternion")
        assert len(table) == 24
        dist = {}
        for _, v, c in table:
            dist[v] = dist.get(v, 0) + 1
            assert c == 2 ** v
        assert dist == {0: 17, 1: 6, 2: 1}

    def test_b3_valuations(self):
        table = aut_group_table(3, True, "quaternion")
        assert len(table) == 12
        dist = {}
        for _, v, _ in table:
            dist[v] = dist.get(v, 0) + 1
        assert dist == {0: 10, 1: 2}

    def test_quadratic_groups(self):
        groups = dict(aut_group_table(5, False, "quadratic", ring=ZI))
        assert set(groups) == {2, 4}
        norms = sorted(n for _, n in groups[4] if n)
        assert norms == [2, 2, 4]   # 1-i, 1+i and 2
        groups_w = dict(aut_group_table(5, False, "quadratic", ring=ZW))
        assert set(groups_w) == {2, 3, 6}
        # order-6 group: two primitive sixth roots (norm 1), two cube
        # roots (norm 3), and -1 (norm 4)
        assert sorted(n for _, n in groups_w[6] if n) == [1, 1, 3, 3, 4]

    def test_roots_of_unity_detected(self):
        assert set(quad_roots_of_unity(ZI)) == {1, 2, 4}
        assert set(quad_roots_of_unity(ZW)) == {1, 2, 3, 6}
        assert set(quad_roots_of_unity(QuadRing(-3, 5))) == {1, 2}

    def test_invalid_combo(self):
        with pytest.raises(InvalidCombination):
            aut_group_table(5, False, "quaternion")


class TestNormSequence:
    def test_gaussian_example(self):
        rep = norm_sequence(ZI.elem(1, 1), ZI.one(), 5, 24)
        # a_1 = norm(i) = 1, a_2 = norm(2i - 1) = 5 = 0 mod 5
        assert rep.terms[1] == 1 and rep.terms[2] == 0
        assert (5 - 1) * (5 * 5 - 1) * 5 ** rep.bound_exponent % rep.least_period == 0

    def test_geometric_when_gamma_zero(self):
        rep = norm_sequence(ZI.elem(1, 1), ZI.zero(), 7, 24)
        assert list(rep.terms[:4]) == [1, 2, 4, 1]   # powers of norm 2 mod 7

    def test_constant_when_sigma_gamma_one(self):
        rep = norm_sequence(ZI.one(), ZI.one(), 5, 24)
        assert set(rep.terms) == {0} and rep.least_period == 1

    def test_trace_recurrence_cross_check(self):
        # c_2 = T c_1 - N c_0 for sigma = 1 + i, gammahat = 1
        sigma = ZI.elem(1, 1)
        c = [(sigma ** n).trace() for n in range(4)]
        T, N = sigma.trace(), sigma.norm()
        assert c[2] == T * c[1] - N * c[0]
        assert c[3] == T * c[2] - N * c[1]

    def test_random_rings_and_orders(self):
        rng = random.Random(53)
        for _ in range(25):
            ring = random.Random(rng.random()).choice([ZI, ZW])
            sigma = ring.elem(rng.randint(-5, 5), rng.randint(-5, 5))
            gamma = ring.elem(rng.randint(-3, 3), rng.randint(-3, 3))
            if sigma.is_zero():
                continue
            rep = norm_sequence(sigma, gamma, 11, 40)
            assert rep.bound_exponent <= 4
        for order in (HURWITZ, B3_ORDER):
            for _ in range(8):
                sigma = _random_quat(order, rng)
                gamma = _random_quat(order, rng)
                rep = norm_sequence(sigma, gamma, 13, 40)
                assert rep.bound_exponent <= 4
