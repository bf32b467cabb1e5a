"""Integer polynomial factorization into irreducibles."""

import random

import pytest

from alexinv.factorint import Factorization, factor, is_irreducible, squarefree_decompose
from alexinv.polyring import IntPoly

PHI1 = IntPoly((1, -1, 1))
PHI2 = IntPoly((1, -3, 1))


class TestFactorKnownValues:
    def test_product_of_two_quadratics(self):
        f = factor(PHI1 * PHI1 * PHI2)
        assert f.unit_sign == 1
        assert f.factors == ((PHI2, 1), (PHI1, 2))

    def test_single_irreducible(self):
        f = factor(PHI1)
        assert f.factors == ((PHI1, 1),)

    def test_constant_content_is_dropped(self):
        f = factor(IntPoly((6, -6, 6)))
        assert f.factors == ((PHI1, 1),)

    def test_negative_leading_sign(self):
        f = factor(IntPoly((1, -1)))  # 1 - t
        assert f.unit_sign == -1
        assert f.factors == ((IntPoly((-1, 1)), 1),)
        assert f.expand() == IntPoly((1, -1))

    def test_factors_sorted_by_degree_then_coefficients(self):
        f = factor(IntPoly((-2, 1)) * IntPoly((-1, 2)) * PHI1)
        degrees = [p.degree for p, _ in f.factors]
        assert degrees == sorted(degrees)

    def test_linear_times_quartic(self):
        prod = IntPoly((-2, 1)) * IntPoly((-1, 2)) * PHI1 * PHI1
        f = factor(prod)
        assert f.expand() == prod
        assert {p.coeffs for p, _ in f.factors} == {
            (-2, 1), (-1, 2), (1, -1, 1)}
        assert f.exponent_of(PHI1) == 2

    def test_quartic_power(self):
        f = factor(PHI1 ** 4)
        assert f.factors == ((PHI1, 4),)

    def test_biquadratic_with_nontrivial_split(self):
        # t^4 + 4 = (t^2 - 2t + 2)(t^2 + 2t + 2)
        f = factor(IntPoly((4, 0, 0, 0, 1)))
        assert {p.coeffs for p, _ in f.factors} == {
            (2, -2, 1), (2, 2, 1)}

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor(IntPoly(()))


class TestFactorizationContainer:
    def test_expand_rebuilds_input_primitive_part(self):
        prod = PHI1 * PHI2 * PHI2
        assert factor(prod).expand() == prod

    def test_exponent_of_absent_factor_is_zero(self):
        assert factor(PHI1).exponent_of(PHI2) == 0

    def test_value_semantics(self):
        assert factor(PHI1) == factor(PHI1)
        assert isinstance(factor(PHI1), Factorization)


class TestSquarefreeDecomposition:
    def test_distinct_multiplicities_split(self):
        f = IntPoly((-1, 1)) ** 3 * IntPoly((2, 1)) ** 2
        parts = squarefree_decompose(f)
        by_mult = {m: p for p, m in parts}
        assert by_mult[3] == IntPoly((-1, 1))
        assert by_mult[2] == IntPoly((2, 1))

    def test_squarefree_input_single_block(self):
        parts = squarefree_decompose(PHI1 * PHI2)
        assert len(parts) == 1
        assert parts[0][1] == 1

    def test_product_of_blocks_reconstructs(self):
        f = PHI1 ** 2 * PHI2
        acc = IntPoly((1,))
        for p, m in squarefree_decompose(f):
            acc = acc * p ** m
        assert acc == f


class TestIrreducibility:
    def test_known_irreducibles(self):
        for coeffs in ((1, -1, 1), (1, -3, 1), (0, 1), (-2, 0, 1),
                       (1, -1, 1, -1, 1), (1, 1, -3, 1, 1)):
            assert is_irreducible(IntPoly(coeffs)), coeffs

    def test_known_reducibles(self):
        for coeffs in ((1, -4, 5, -4, 1),  # phi1 * phi2
                       (1, -2, 3, -2, 1),  # phi1^2
                       (4, 0, 0, 0, 1),    # (t^2-2t+2)(t^2+2t+2)
                       (-1, 0, 1)):        # (t-1)(t+1)
            assert not is_irreducible(IntPoly(coeffs)), coeffs

    def test_constants_are_not_irreducible(self):
        assert not is_irreducible(IntPoly((5,)))


class TestRandomizedRoundTrip:
    def test_random_products_factor_back(self):
        rng = random.Random(11001100)
        pool = [PHI1, PHI2, IntPoly((-2, 1)), IntPoly((-1, 2)),
                IntPoly((1, 1)), IntPoly((2, -3, 2)), IntPoly((1, -1, 1, -1, 1))]
        for _ in range(20):
            chosen = [rng.choice(pool) for _ in range(rng.randint(1, 4))]
            prod = IntPoly((1,))
            for p in chosen:
                prod = prod * p
            f = factor(prod)
            assert f.expand() == prod
            total_degree = sum(p.degree * m for p, m in f.factors)
            assert total_degree == prod.degree
