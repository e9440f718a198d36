from fractions import Fraction

import pytest

from jortwist.exactalg import DPoly, binom_poly, int_binom
from jortwist.identities import (independence_det, independence_matrix,
                                 run_bigident_suite, verify_bigident,
                                 verify_bigident_index_swap,
                                 verify_identity_chain)


class TestBigIdentity:
    def test_all_indices_zero(self):
        inst = verify_bigident(0, 0, 0, 0)
        assert inst.equal
        assert inst.lhs == DPoly.const(3, 1)

    def test_single_momentum(self):
        # oracle: direct term-by-term expansion collapses both sides to z
        inst = verify_bigident(1, 0, 0, 0)
        assert inst.equal
        assert inst.lhs == DPoly.variable(3, 3)

    def test_exhaustive_small_bound(self):
        rep = run_bigident_suite(bound=3)
        assert rep.passed

    def test_index_interchange(self):
        for params in [(2, 1, 1, 0), (3, 2, 2, 1), (1, 3, 0, 2)]:
            assert verify_bigident_index_swap(*params).equal

    def test_bounds_enforced(self):
        with pytest.raises(ValueError):
            verify_bigident(1, 1, 2, 0)
        with pytest.raises(ValueError):
            verify_bigident(1, 1, 0, 2)

    def test_symbolic_agrees_with_point_samples(self):
        # _instance already samples; spot-check one instance by hand too
        inst = verify_bigident(2, 2, 1, 1)
        for point in [(0, 0, 0), (1, 2, 3), (-2, 5, -7)]:
            pt = [Fraction(v) for v in point]
            assert inst.lhs.evaluate(pt) == inst.rhs.evaluate(pt)


class TestChains:
    def test_left_chain(self):
        rep = verify_identity_chain("L", bound=3)
        assert rep.passed, rep.failure

    def test_right_chain(self):
        rep = verify_identity_chain("R", bound=2)
        assert rep.passed, rep.failure

    def test_unknown_chain(self):
        with pytest.raises(ValueError):
            verify_identity_chain("X")

    def test_final_regrouping_at_integers(self):
        # oracle: integer binomials, evaluated at y=0 with l=2, k=1, k'=0
        y = DPoly.variable(2, 2)
        lhs = binom_poly(-y + 2, 1) * binom_poly(-y + 2, 0)
        rhs = binom_poly(-y + 2, 1) * int_binom(1, 0)
        assert lhs.evaluate([0, 0]) == 2
        assert rhs.evaluate([0, 0]) == 2

    def test_reflection_with_trivial_index(self):
        # first chain identity at l1 = 0: both sides are 1
        y = DPoly.variable(2, 2)
        assert binom_poly(y - 1 - 2, 0) == DPoly.const(2, 1)
        assert binom_poly(-y + 2, 0) == DPoly.const(2, 1)


class TestIndependenceDet:
    def test_order_zero(self):
        assert independence_det(0) == 1

    def test_order_one(self):
        assert independence_det(1) == -1

    def test_order_two(self):
        # oracle: exact determinant of [[1,0,0],[1,-1,0],[1,-2,1]]
        assert independence_matrix(2) == [
            [Fraction(1), Fraction(0), Fraction(0)],
            [Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(1), Fraction(-2), Fraction(1)],
        ]
        assert independence_det(2) == -1

    @pytest.mark.parametrize("n", range(9))
    def test_unimodular(self, n):
        assert abs(independence_det(n)) == 1

    @pytest.mark.parametrize("n", range(9))
    def test_signed_value_is_product_of_diagonal(self, n):
        # the matrix is triangular with (-1)^k on the diagonal
        assert independence_det(n) == (-1) ** (n * (n + 1) // 2)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            independence_det(-1)
