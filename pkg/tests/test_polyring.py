"""Integer/rational polynomial arithmetic and Alexander normalization."""

import random
from fractions import Fraction

import pytest

from alexinv.polyring import (
    ONE,
    T,
    ZERO,
    IntPoly,
    RatPoly,
    content_primitive,
    is_symmetric,
    multiplicity,
    normalize_delta,
    poly_gcd,
)

PHI1 = IntPoly((1, -1, 1))
PHI2 = IntPoly((1, -3, 1))


class TestIntPolyBasics:
    def test_trailing_zeros_are_trimmed(self):
        assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)

    def test_zero_polynomial_has_degree_minus_one(self):
        assert ZERO.degree == -1
        assert IntPoly(()).is_zero

    def test_degree_and_leading(self):
        p = IntPoly((5, 0, -3))
        assert p.degree == 2
        assert p.leading == -3
        assert p.constant == 5

    def test_constants(self):
        assert T.coeffs == (0, 1)
        assert ONE.coeffs == (1,)
        assert IntPoly.const(7).coeffs == (7,)
        assert IntPoly.const(0).coeffs == ()

    def test_addition_and_subtraction(self):
        a = IntPoly((1, 2, 3))
        b = IntPoly((4, -2, -3))
        assert (a + b).coeffs == (5,)
        assert (a - a).is_zero

    def test_multiplication_known_product(self):
        assert (PHI1 * PHI2).coeffs == (1, -4, 5, -4, 1)

    def test_multiplication_by_zero(self):
        assert (PHI1 * ZERO).is_zero

    def test_power(self):
        assert (PHI1 ** 2).coeffs == (1, -2, 3, -2, 1)
        assert (PHI1 ** 0) == ONE

    def test_shift_multiplies_by_t_power(self):
        assert PHI1.shifted(2) == PHI1 * (T ** 2)

    def test_derivative(self):
        assert IntPoly((3, 2, 5)).derivative().coeffs == (2, 10)
        assert IntPoly((3,)).derivative().is_zero

    def test_evaluate_matches_horner(self):
        p = IntPoly((2, -1, 4))
        assert p.evaluate(3) == 2 - 3 + 36
        assert p.evaluate(0) == 2

    def test_exact_division_roundtrip(self):
        prod = PHI1 * PHI2
        assert prod.exact_div(PHI1) == PHI2
        assert prod.divisible_by(PHI2)

    def test_exact_division_failure_raises(self):
        with pytest.raises(ValueError):
            PHI2.exact_div(PHI1)
        assert not PHI2.divisible_by(PHI1)

    def test_pretty_descending_with_signs(self):
        assert str(PHI1) == "t^2 - t + 1"
        assert str(IntPoly((5, -9, 5))) == "5*t^2 - 9*t + 5"
        assert str(ZERO) == "0"
        assert str(IntPoly((-1, 1))) == "t - 1"


class TestRatPoly:
    def test_from_int_and_back(self):
        r = RatPoly.from_int(PHI1)
        assert r.to_int_poly() == PHI1

    def test_divmod_reconstructs(self):
        a = RatPoly.from_int(PHI1 * PHI2 + IntPoly((7,)))
        b = RatPoly.from_int(PHI1)
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_monic(self):
        m = RatPoly.from_int(IntPoly((2, 0, 4))).monic()
        assert m.coeffs[-1] == 1
        assert m.coeffs[0] == Fraction(1, 2)

    def test_denominator_lcm(self):
        r = RatPoly((Fraction(1, 2), Fraction(1, 3)))
        assert r.denominator_lcm() == 6


class TestContentAndNormalization:
    def test_content_primitive_positive_leading(self):
        c, p = content_primitive(IntPoly((6, -9, 12)))
        assert c == 3
        assert p.coeffs == (2, -3, 4)

    def test_content_primitive_keeps_sign_in_primitive_part(self):
        c, p = content_primitive(IntPoly((-6, 9)))
        assert c == 3
        assert p.coeffs == (-2, 3)

    def test_normalize_strips_t_powers(self):
        assert normalize_delta(PHI1.shifted(3)) == PHI1

    def test_normalize_fixes_sign_by_constant_term(self):
        assert normalize_delta(IntPoly((-1, 1, -1))) == PHI1

    def test_normalize_clears_rational_denominators(self):
        r = RatPoly((Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2)))
        assert normalize_delta(r) == PHI1

    def test_normalize_clears_content(self):
        assert normalize_delta(IntPoly((6, -6, 6))) == PHI1

    def test_normalize_zero_rejected(self):
        with pytest.raises(ValueError):
            normalize_delta(ZERO)


class TestGcdAndMultiplicity:
    def test_gcd_of_coprime_is_one(self):
        assert poly_gcd(PHI1, PHI2) == ONE

    def test_gcd_extracts_common_factor(self):
        assert poly_gcd(PHI1 * PHI2, PHI1 * PHI1) == PHI1

    def test_gcd_result_is_primitive_with_positive_leading(self):
        g = poly_gcd(PHI1 * IntPoly.const(4), PHI1 * IntPoly.const(6))
        assert g == PHI1

    def test_gcd_random_common_factor_is_detected(self):
        # For primitive monic inputs, gcd(a*c, b*c) == gcd(a, b) * c.
        rng = random.Random(20240817)
        for _ in range(25):
            c = IntPoly(tuple(rng.randint(-3, 3) for _ in range(3)) + (1,))
            a = IntPoly(tuple(rng.randint(-4, 4) for _ in range(2)) + (1,))
            b = IntPoly(tuple(rng.randint(-4, 4) for _ in range(2)) + (1,))
            g = poly_gcd(a * c, b * c)
            assert g == poly_gcd(a, b) * c

    def test_multiplicity_counts_exact_power(self):
        f = PHI1 * PHI1 * PHI2
        assert multiplicity(f, PHI1) == 2
        assert multiplicity(f, PHI2) == 1
        assert multiplicity(f, IntPoly((1, 1))) == 0


class TestSymmetry:
    def test_palindromes_are_symmetric(self):
        assert is_symmetric(PHI1)
        assert is_symmetric(IntPoly((5, -9, 5)))
        assert is_symmetric(IntPoly((2, -3, 2)))

    def test_non_palindromes_are_not(self):
        assert not is_symmetric(IntPoly((-2, 1)))
        assert not is_symmetric(IntPoly((1, 2, 3)))

    def test_constant_is_symmetric(self):
        assert is_symmetric(ONE)
