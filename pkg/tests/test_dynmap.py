import pytest

from dynzeta.dynmap import (compose, cycle_census, is_separable, iterate,
                            per_n_oracle, rat_map)
from dynzeta.errors import InfinitePeriodicPoints, ScaleExceeded
from dynzeta.field import Poly, field_make


@pytest.fixture
def sq3(F3):
    return rat_map(F3, [0, 0, 1])


class TestCompose:
    def test_monomials(self, F3, sq3):
        ff = compose(sq3, sq3)
        assert ff.num == Poly.x_power(F3, 4) and ff.den == Poly.one(F3)

    def test_quadratic_over_f5(self, F5):
        f = rat_map(F5, [-2, 0, 1])
        ff = compose(f, f)
        assert ff.num == Poly.from_ints(F5, [2, 0, 1, 0, 1])

    def test_inversion_is_an_involution(self, F3):
        inv = rat_map(F3, [1], [0, 1])
        assert compose(inv, inv).num == Poly.x_power(F3, 1)

    def test_degree_multiplies(self, F5):
        f = rat_map(F5, [1, 2, 1], [0, 0, 3])
        g = rat_map(F5, [0, 1, 1])
        assert compose(f, g).degree == f.degree * g.degree


class TestIterate:
    def test_power_map(self, F3, sq3):
        assert iterate(sq3, 3).num == Poly.x_power(F3, 8)

    def test_additive_cube(self, F3):
        f = rat_map(F3, [0, -1, 0, 1])
        expected = compose(f, f)
        assert iterate(f, 2) == expected

    def test_identity_of_iteration(self, F3, sq3):
        assert iterate(sq3, 1) == sq3

    def test_degree_law(self, F5):
        f = rat_map(F5, [1, 0, 1], [0, 1])
        for n in range(1, 6):
            assert iterate(f, n).degree == f.degree ** n

    def test_scale_cap(self, F3, sq3):
        with pytest.raises(ScaleExceeded):
            iterate(sq3, 30)


class TestSeparability:
    def test_frobenius_is_inseparable(self, F3):
        assert not is_separable(rat_map(F3, [0, 0, 0, 1]))

    def test_additive_with_linear_term(self, F3):
        assert is_separable(rat_map(F3, [0, -1, 0, 1]))

    def test_sixth_power_over_f3(self, F3):
        assert not is_separable(rat_map(F3, [0, 0, 0, 0, 0, 0, 1]))


class TestPerNOracle:
    def test_squaring_over_f3(self, sq3):
        assert per_n_oracle(sq3, 1) == 3

    def test_frobenius_count(self):
        for p in (2, 3, 5):
            F = field_make(p)
            f = rat_map(F, [0] * p + [1])
            assert per_n_oracle(f, 1) == p + 1

    def test_chebyshev_like(self, F5):
        assert per_n_oracle(rat_map(F5, [-2, 0, 1]), 1) == 3

    def test_identity_iterate_is_flagged(self, F3):
        inv = rat_map(F3, [1], [0, 1])
        with pytest.raises(InfinitePeriodicPoints):
            per_n_oracle(inv, 2)

    def test_upper_bound(self, F5):
        f = rat_map(F5, [1, 3, 0, 1], [2, 1])
        for n in (1, 2, 3):
            assert per_n_oracle(f, n) <= f.degree ** n + 1

    def test_divisibility_monotonicity(self, F3):
        f = rat_map(F3, [0, -1, 0, 1])
        for m, n in ((1, 2), (1, 3), (2, 4), (2, 6), (3, 6)):
            if f.degree ** n > 10_000:
                continue
            assert per_n_oracle(f, m) <= per_n_oracle(f, n)


class TestCycleCensus:
    def test_squaring_over_f9(self, sq3):
        table = dict(cycle_census(sq3, 2, 2))
        assert table.get(1) == 3
        # #Per_2 = #Per_1 + 2 * (number of 2-cycles)
        per2 = per_n_oracle(sq3, 2)
        assert per2 == 3 + 2 * table.get(2, 0)

    def test_additive_fixed_points_in_f9(self, F3):
        f = rat_map(F3, [0, -1, 0, 1])
        assert cycle_census(f, 2, 1) == [(1, 4)]
        assert per_n_oracle(f, 1) == 4

    def test_lone_fixed_point_at_infinity(self, F2):
        # x^2 + x fixes only 0 and infinity; over F_2 both are rational.
        f = rat_map(F2, [0, 1, 1])
        table = dict(cycle_census(f, 1, 2))
        assert table[1] == 2

    def test_census_matches_oracle_totals(self, F3):
        f = rat_map(F3, [1, 0, 1])
        for k in (1, 2):
            census = cycle_census(f, k, 6)
            # points of period dividing n, for n covered by the census field
            for n in (1, 2):
                in_field = sum(length * cnt for length, cnt in census if n % length == 0)
                assert in_field <= per_n_oracle(f, n)

    def test_census_agreement_when_complete(self, sq3):
        # Points of period 3 of x -> x^2 are seventh roots of unity, which
        # live in F_729; periods 1 and 2 need only F_3.
        census = cycle_census(sq3, 6, 3)
        for n in (1, 2, 3):
            total = sum(length * cnt for length, cnt in census if n % length == 0)
            assert total == per_n_oracle(sq3, n)
