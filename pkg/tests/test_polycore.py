"""Contract tests for the exact polynomial substrate."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fzeros.polycore import (
    NonZeroRemainder,
    Poly,
    Rational,
    compose_affine,
    derivative,
    divrem,
    exact_divide,
    is_square_free,
    poly_gcd,
    primitive_part,
    rat_str,
    parse_rational,
)

F = Fraction

small_fractions = st.fractions(
    min_value=-6, max_value=6, max_denominator=4
)
polys = st.lists(small_fractions, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


class TestRationalContract:
    def test_lowest_terms_positive_denominator(self):
        x = Rational(6, -4)
        assert x.numerator == -3 and x.denominator == 2

    def test_exact_arithmetic(self):
        assert Rational(1, 3) + Rational(1, 6) == Rational(1, 2)
        assert Rational(1, 10) * 10 == 1

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Rational(1, 0)
        with pytest.raises(ZeroDivisionError):
            Rational(1) / Rational(0)

    def test_serialization_round_trip(self):
        for x in (F(3, 7), F(-5), F(0), F(22, 7)):
            assert parse_rational(rat_str(x)) == x


class TestPolyBasics:
    def test_normalization_trims_leading_zeros(self):
        assert Poly([1, 2, 0, 0]).coeffs == (F(1), F(2))

    def test_zero_polynomial_degree_sentinel(self):
        assert Poly().degree == float("-inf")
        assert Poly([0, 0]).is_zero()

    def test_additive_identity(self):
        p = Poly([1, -2])
        assert p + Poly() == p

    def test_hand_expansion(self):
        assert Poly([1, -2]) * Poly([1, -2]) == Poly([1, -4, 4])

    def test_coefficientwise_sum(self):
        # sum of the rank-2 and rank-1 B-series face polynomials
        assert Poly([1, -6, 6]) + Poly([1, -2]) == Poly([2, -8, 6])

    def test_degree_of_product(self):
        p, q = Poly([1, 1, 3]), Poly([0, 2])
        assert (p * q).degree == p.degree + q.degree


class TestDerivative:
    def test_simple(self):
        assert derivative(Poly([0, 0, 1])) == Poly([0, 2])

    def test_second_derivative_of_squared_kernel(self):
        p = Poly([0, 0, 1]) * Poly([1, -1]) ** 2  # t^2 (1-t)^2
        assert derivative(p, 2) == Poly([2, -12, 12])

    def test_order_beyond_degree(self):
        assert derivative(Poly([1, -2]), 5).is_zero()

    def test_zeroth(self):
        p = Poly([3, 1, 4])
        assert derivative(p, 0) == p


class TestEval:
    def test_endpoints(self):
        p = Poly([1, -8, 8])
        assert p(0) == 1
        assert p(1) == 1

    def test_half(self):
        assert Poly([1, -6, 6])(F(1, 2)) == F(-1, 2)


class TestDivRem:
    def test_exact_factor(self):
        q, r = divrem(Poly([1, -18, 48, -32]), Poly([1, -2]))
        assert q == Poly([1, -16, 16]) and r.is_zero()

    def test_divide_by_one(self):
        p = Poly([2, 0, 5])
        assert divrem(p, Poly([1])) == (p, Poly())

    def test_by_derivative(self):
        q, r = divrem(Poly([1, -6, 6]), Poly([-6, 12]))
        assert q.degree == 1
        assert r == Poly([F(-1, 2)])

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            divrem(Poly([1]), Poly())


class TestGcdSquareFree:
    def test_monomials(self):
        assert poly_gcd(Poly([0, 0, 1]), Poly([0, 1])) == Poly([0, 1])

    def test_square_free_quadratic(self):
        assert is_square_free(Poly([1, -6, 6]))

    def test_repeated_factor(self):
        assert not is_square_free(Poly([1, -2]) ** 2)


class TestComposeAffine:
    def test_reflection(self):
        assert compose_affine(Poly([1, -2]), -1, 1) == Poly([-1, 2])

    def test_symmetric_quadratic(self):
        p = Poly([1, -6, 6])
        assert compose_affine(p, -1, 1) == p

    def test_rescale(self):
        assert compose_affine(Poly([0, 1]), 2, -1) == Poly([-1, 2])


class TestExactDivide:
    def test_simple(self):
        assert exact_divide(Poly([0, -1, 1]), Poly([0, 1])) == Poly([-1, 1])

    def test_positive_part_factor(self):
        # (1-t)(1-2t) divided by (1-t)
        fplus_a2 = Poly([1, -3, 2])
        assert exact_divide(fplus_a2, Poly([1, -1])) == Poly([1, -2])

    def test_nonzero_remainder(self):
        with pytest.raises(NonZeroRemainder):
            exact_divide(Poly([1, -2]), Poly([0, 1]))


class TestProperties:
    @given(polys, nonzero_polys)
    @settings(max_examples=150, deadline=None)
    def test_divrem_reconstruction(self, p, q):
        quot, rem = divrem(p, q)
        assert q * quot + rem == p
        assert rem.is_zero() or rem.degree < q.degree

    @given(polys, polys)
    @settings(max_examples=100, deadline=None)
    def test_derivative_is_linear_and_leibniz(self, p, q):
        assert derivative(p + q) == derivative(p) + derivative(q)
        assert derivative(p * q) == derivative(p) * q + p * derivative(q)

    @given(polys, small_fractions, small_fractions, small_fractions)
    @settings(max_examples=100, deadline=None)
    def test_compose_affine_commutes_with_eval(self, p, a, b, x):
        assert compose_affine(p, a, b)(x) == p(a * x + b)

    @given(nonzero_polys, nonzero_polys)
    @settings(max_examples=100, deadline=None)
    def test_gcd_divides_both(self, p, q):
        g = poly_gcd(p, q)
        assert divrem(p, g)[1].is_zero()
        assert divrem(q, g)[1].is_zero()
        assert g.lead == 1

    @given(nonzero_polys)
    @settings(max_examples=100, deadline=None)
    def test_primitive_part_preserves_signs(self, p):
        pp = primitive_part(p)
        assert pp.is_integral()
        assert len(pp.coeffs) == len(p.coeffs)
        for c, d in zip(p.coeffs, pp.coeffs):
            assert (c > 0) == (d > 0) and (c < 0) == (d < 0)
