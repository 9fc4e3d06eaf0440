import pytest

from dynzeta.dynmap import per_n_oracle
from dynzeta.elliptic import (CurvePoint, EllipticCurve, add, identity,
                              is_supersingular, lattes_oracle,
                              lattes_realize, mul_by_m, negate, point_count,
                              points_over, torsion_count,
                              trace_of_frobenius)
from dynzeta.errors import SpecError


@pytest.fixture(scope="module")
def E51(F5):
    return EllipticCurve(F5, F5.from_int(1), F5.from_int(1))


def curve(ctx, a, b):
    return EllipticCurve(ctx, ctx.from_int(a), ctx.from_int(b))


class TestGroupLaw:
    def test_identity_laws(self, E51):
        pts = points_over(E51, 1)
        for P in pts:
            assert add(P, identity(E51)) == P
            assert add(P, negate(P)).is_identity

    def test_associativity_sample(self, E51):
        pts = [P for P in points_over(E51, 1)][:6]
        for P in pts:
            for Q in pts:
                for R in pts:
                    assert add(add(P, Q), R) == add(P, add(Q, R))

    def test_order_by_enumeration(self, E51):
        order = point_count(E51)
        for P in points_over(E51, 1):
            assert mul_by_m(P, order).is_identity
            k = 1
            acc = P
            while not acc.is_identity:
                acc = add(acc, P)
                k += 1
            assert mul_by_m(P, k).is_identity

    def test_singular_curve_rejected(self, F5):
        with pytest.raises(SpecError):
            curve(F5, 0, 0)

    def test_off_curve_point_rejected(self, E51, F5):
        with pytest.raises(SpecError):
            CurvePoint(E51, F5.from_int(0), F5.from_int(2))


class TestPointCount:
    def test_hasse_window(self, F5, F7):
        for ctx in (F5, F7):
            q = ctx.order
            for a in range(q):
                for b in range(q):
                    try:
                        E = curve(ctx, a, b)
                    except SpecError:
                        continue
                    t = q + 1 - point_count(E)
                    assert t * t <= 4 * q

    def test_count_divisibility_in_towers(self, E51):
        assert point_count(E51, 2) % point_count(E51, 1) == 0

    def test_supersingular_matches_j_classification(self, F5, F7):
        # Over F_5 supersingular iff j = 0; over F_7 iff j = 1728 = 6.
        for ctx, ss_j in ((F5, 0), (F7, 1728 % 7)):
            for a in range(ctx.order):
                for b in range(ctx.order):
                    try:
                        E = curve(ctx, a, b)
                    except SpecError:
                        continue
                    expected = E.j_invariant() == ctx.from_int(ss_j)
                    assert is_supersingular(E) == expected


class TestTorsion:
    def test_trivial(self, E51):
        assert torsion_count(E51, 1, 4) == (1, True)

    def test_full_3_torsion(self, E51):
        count, complete = torsion_count(E51, 3, 4)
        assert (count, complete) == (9, True)

    def test_p_torsion_ordinary(self, E51):
        assert not is_supersingular(E51)
        count, complete = torsion_count(E51, 5, 4)
        assert count == 5 and complete

    def test_p_torsion_supersingular(self, F7):
        E = curve(F7, -1, 0)
        assert is_supersingular(E)
        count, complete = torsion_count(E, 7, 2)
        assert count == 1 and complete

    def test_multiplicative_over_coprime(self, F7):
        E = curve(F7, 1, 3)
        c2, ok2 = torsion_count(E, 2, 4)
        c3, ok3 = torsion_count(E, 3, 4)
        c6, ok6 = torsion_count(E, 6, 4)
        if ok2 and ok3 and ok6:
            assert c6 == c2 * c3


class TestLattesOracle:
    def test_half_sum_of_torsion(self, E51):
        assert lattes_oracle(E51, 2, 1) == 5   # (1 + 9) / 2

    def test_n2_over_f7(self, F7):
        E = curve(F7, 1, 3)
        assert not is_supersingular(E)
        assert lattes_oracle(E, 2, 2) == 17    # (9 + 25) / 2

    def test_p_divides_kernel_index(self, E51):
        # m^n - 1 = 3, m^n + 1 = 5 = p: the 5-part collapses to Z/5.
        assert lattes_oracle(E51, 2, 2) == (9 + 5) // 2


class TestLattesRealize:
    def test_duplication_formula(self, E51, F5):
        f = lattes_realize(E51, 2)
        # (x^4 - 2Ax^2 - 8Bx + A^2) / (4(x^3 + Ax + B)), monic denominator
        num = [c.rep for c in f.num.coeffs]
        den = [c.rep for c in f.den.coeffs]
        assert den == [1, 1, 0, 1]
        assert num == [4, 3, 2, 0, 4]

    def test_pointwise_against_group_law(self, F7):
        E = curve(F7, 2, 3)
        f = lattes_realize(E, 3)
        for P in points_over(E, 1):
            if P.is_identity:
                continue
            img = mul_by_m(P, 3)
            dv = f.den.eval(P.x)
            if img.is_identity:
                assert dv.is_zero()
            else:
                assert f.num.eval(P.x) / dv == img.x

    def test_oracle_cross_check(self, E51):
        f = lattes_realize(E51, 2)
        assert per_n_oracle(f, 1) == lattes_oracle(E51, 2, 1)
        assert per_n_oracle(f, 2) == lattes_oracle(E51, 2, 2)

    def test_degree_is_m_squared(self, F7):
        E = curve(F7, 1, 3)
        for m in (2, 3, 4, 5):
            assert lattes_realize(E, m).degree == m * m

    def test_inseparable_multiplier_refused(self, E51):
        with pytest.raises(SpecError):
            lattes_realize(E51, 5)


def test_frobenius_params_consistent(F5):
    E = curve(F5, 1, 1)
    t = trace_of_frobenius(E)
    assert point_count(E) == 5 + 1 - t
