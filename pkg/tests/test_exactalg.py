import math
import random
from fractions import Fraction

import pytest

from jortwist.exactalg import DPoly, UPoly, binom_poly

from conftest import random_dpoly


def u():
    return UPoly.u()


def var(legs, i):
    return DPoly.variable(legs, i)


class TestRingOps:
    def test_fraction_arithmetic(self):
        assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)

    def test_upoly_product(self):
        assert u() * (u() - 1) == u() ** 2 - u()

    def test_dpoly_product(self):
        x, y = var(2, 1), var(2, 2)
        assert (x + y) * (x - y) == x**2 - y**2

    def test_leg_mismatch_raises(self):
        with pytest.raises(ValueError):
            var(1, 1) + var(2, 1)
        with pytest.raises(ValueError):
            var(1, 1) * var(2, 2)

    def test_cancellation_is_canonical(self):
        rng = random.Random(11)
        for _ in range(30):
            a = random_dpoly(rng, rng.randint(1, 3))
            assert (a - a).terms == {}


class TestBinomPoly:
    def test_lower_index_two(self):
        x = var(1, 1)
        assert binom_poly(x, 2) == (x**2 - x) * Fraction(1, 2)

    def test_negated_argument(self):
        x = var(1, 1)
        assert binom_poly(-x, 1) == -x

    def test_zero_lower_index(self):
        assert binom_poly(var(2, 1), 0) == DPoly.const(2, 1)

    def test_integer_specialization(self):
        # oracle: the integer binomial coefficient
        x, y = var(2, 1), var(2, 2)
        p = binom_poly(x + y, 2)
        assert p.evaluate([2, 1]) == math.comb(3, 2)

    @pytest.mark.parametrize("k", range(9))
    def test_falling_product(self, k, rng):
        # binom(T,k) * k! must equal the explicit falling product
        for _ in range(5):
            T = random_dpoly(rng, 2, max_deg=2)
            explicit = DPoly.const(2, 1)
            for j in range(k):
                explicit = explicit * (T - j)
            assert binom_poly(T, k) * math.factorial(k) == explicit

    @pytest.mark.parametrize("k", range(1, 9))
    def test_pascal(self, k):
        T = var(1, 1)
        assert binom_poly(T, k) == (binom_poly(T - 1, k)
                                    + binom_poly(T - 1, k - 1))


class TestSplitVariable:
    def test_split_linear(self):
        x = var(1, 1)
        xp, xpp = var(2, 1), var(2, 2)
        assert x.split_variable(1) == xp + xpp

    def test_split_square(self):
        x = var(1, 1)
        xp, xpp = var(2, 1), var(2, 2)
        assert (x**2).split_variable(1) == xp**2 + 2 * xp * xpp + xpp**2

    def test_split_binomial_evaluates_like_integer_binomial(self):
        # oracle: binom(1+1, 2) = 1
        p = binom_poly(var(1, 1), 2).split_variable(1)
        assert p.evaluate([1, 1]) == math.comb(2, 2)

    def test_split_reindexes_other_variables(self):
        x, y = var(2, 1), var(2, 2)
        split = (x * y).split_variable(1)
        a, b, c = var(3, 1), var(3, 2), var(3, 3)
        assert split == (a + b) * c

    def test_split_at_max_legs_raises(self):
        with pytest.raises(ValueError):
            var(3, 1).split_variable(1)


class TestEvaluate:
    def test_polynomial_point(self):
        x, y = var(2, 1), var(2, 2)
        assert (x**2 - y).evaluate([3, 2]) == 7

    def test_u_coefficient(self):
        p = var(1, 1) * u()
        assert p.evaluate([4], u_value=Fraction(1, 2)) == 2

    def test_binomial_point(self):
        assert binom_poly(var(1, 1), 3).evaluate([5]) == math.comb(5, 3)

    def test_missing_assignment_raises(self):
        with pytest.raises(ValueError):
            var(2, 1).evaluate([1])

    def test_evaluate_is_ring_homomorphism(self, rng):
        for _ in range(25):
            legs = rng.randint(1, 3)
            a = random_dpoly(rng, legs)
            b = random_dpoly(rng, legs)
            point = [Fraction(rng.randint(-5, 5)) for _ in range(legs)]
            u0 = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            assert ((a * b).evaluate(point, u0)
                    == a.evaluate(point, u0) * b.evaluate(point, u0))
            assert ((a + b).evaluate(point, u0)
                    == a.evaluate(point, u0) + b.evaluate(point, u0))


def test_upoly_degree_sentinel():
    assert UPoly().degree() == float("-inf")
    assert (u() ** 3).degree() == 3


def test_upoly_no_stored_zeros():
    p = u() - u()
    assert p.coeffs == {}
    assert (UPoly({0: 2, 1: 0})).coeffs == {0: Fraction(2)}
