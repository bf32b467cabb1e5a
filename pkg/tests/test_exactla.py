"""Exact linear algebra over Z[t] and over quotient fields."""

import random
from itertools import permutations

import pytest

from alexinv.exactla import (
    FieldMatrix,
    PolyMatrix,
    det_poly,
    inv_denominator_multiplicity,
    nullity_over_field,
    reduce_matrix,
)
from alexinv.numberfield import NumberField
from alexinv.polyring import IntPoly, ZERO

PHI1 = IntPoly((1, -1, 1))
PHI2 = IntPoly((1, -3, 1))


def cofactor_det(rows):
    """Naive cofactor-expansion determinant over IntPoly, as an oracle."""
    n = len(rows)
    if n == 0:
        return IntPoly((1,))
    if n == 1:
        return rows[0][0]
    acc = IntPoly(())
    for j, entry in enumerate(rows[0]):
        if entry.is_zero:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = entry * cofactor_det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def random_poly(rng, max_deg=2, span=3):
    return IntPoly(tuple(rng.randint(-span, span)
                         for _ in range(rng.randint(0, max_deg) + 1)))


class TestDetPoly:
    def test_empty_matrix_det_is_one(self):
        assert det_poly(PolyMatrix(())) == IntPoly((1,))

    def test_identity(self):
        assert det_poly(PolyMatrix.identity(4)) == IntPoly((1,))

    def test_diagonal_product(self):
        m = PolyMatrix.diagonal((PHI1, PHI2))
        assert det_poly(m) == PHI1 * PHI2

    def test_zero_row_gives_zero(self):
        m = PolyMatrix.from_rows([[PHI1, PHI2], [ZERO, ZERO]])
        assert det_poly(m).is_zero

    def test_antidiagonal_sign(self):
        b = PolyMatrix.from_rows([[ZERO, PHI2], [PHI1, ZERO]])
        assert det_poly(b) == IntPoly(()) - PHI1 * PHI2

    def test_matches_cofactor_expansion_on_random_matrices(self):
        rng = random.Random(987123)
        for n in (2, 3, 4):
            for _ in range(8):
                rows = [[random_poly(rng) for _ in range(n)]
                        for _ in range(n)]
                assert det_poly(PolyMatrix.from_rows(rows)) == \
                    cofactor_det(rows)

    def test_multiplicativity_on_random_pairs(self):
        rng = random.Random(31337)
        for _ in range(5):
            a = PolyMatrix.from_rows(
                [[random_poly(rng, 1) for _ in range(3)] for _ in range(3)])
            b = PolyMatrix.from_rows(
                [[random_poly(rng, 1) for _ in range(3)] for _ in range(3)])
            assert det_poly(a * b) == det_poly(a) * det_poly(b)


class TestMatrixHelpers:
    def test_eval_at_integers(self):
        m = PolyMatrix.from_rows([[IntPoly((0, 1)), IntPoly((1,))],
                                  [IntPoly((2,)), IntPoly((-1, 0, 1))]])
        assert m.eval_at(2) == [[2, 1], [2, 3]]

    def test_minor_drops_row_and_column(self):
        m = PolyMatrix.diagonal((PHI1, PHI2, IntPoly((1, 1))))
        sub = m.minor(1, 1)
        assert sub.n == 2
        assert det_poly(sub) == PHI1 * IntPoly((1, 1))


class TestNullity:
    def test_identity_has_zero_nullity(self):
        k = NumberField(PHI1)
        m = FieldMatrix(k, ((k.one(), k.zero()), (k.zero(), k.one())))
        assert nullity_over_field(m) == 0

    def test_zero_matrix_full_nullity(self):
        k = NumberField(PHI1)
        z = k.zero()
        m = FieldMatrix(k, ((z, z, z), (z, z, z), (z, z, z)))
        assert nullity_over_field(m) == 3

    def test_reduced_diagonal_counts_phi_multiples(self):
        # diag(phi1^2, phi1, phi2) over Q[t]/(phi1): two diagonal entries
        # vanish, so the kernel is 2-dimensional.
        k = NumberField(PHI1)
        m = PolyMatrix.diagonal((PHI1 * PHI1, PHI1, PHI2))
        assert nullity_over_field(reduce_matrix(k, m)) == 2


class TestInvDenominatorMultiplicity:
    def test_diagonal_power_pair(self):
        m = PolyMatrix.diagonal((PHI1 * PHI1, PHI1))
        assert inv_denominator_multiplicity(m, PHI1, 3) == 2

    def test_unrelated_phi_gives_zero(self):
        m = PolyMatrix.diagonal((PHI1 * PHI1, PHI1))
        assert inv_denominator_multiplicity(m, PHI2, 0) == 0

    def test_stop_at_early_exit_agrees_with_full_scan(self):
        m = PolyMatrix.diagonal((PHI1 ** 3, PHI1))
        full = inv_denominator_multiplicity(m, PHI1, 4)
        early = inv_denominator_multiplicity(m, PHI1, 4, stop_at=3)
        assert full == early == 3

    def test_singular_matrix_raises(self):
        m = PolyMatrix.from_rows([[PHI1, PHI1], [PHI1, PHI1]])
        with pytest.raises(ValueError):
            inv_denominator_multiplicity(m, PHI1, 2)

    def test_invariant_under_permutation(self):
        m = PolyMatrix.diagonal((PHI1 * PHI1, PHI1, IntPoly((1,))))
        base = inv_denominator_multiplicity(m, PHI1, 3)
        for perm in permutations(range(3)):
            rows = [[m.entries[i][j] for j in perm] for i in perm]
            p = PolyMatrix.from_rows(rows)
            assert inv_denominator_multiplicity(p, PHI1, 3) == base

    def test_invariant_under_unimodular_row_operation(self):
        rng = random.Random(246810)
        m = PolyMatrix.diagonal((PHI1 * PHI1, PHI1))
        base = inv_denominator_multiplicity(m, PHI1, 3)
        for _ in range(10):
            f = random_poly(rng, 1)
            e = [[IntPoly((1,)), f], [ZERO, IntPoly((1,))]]
            if rng.random() < 0.5:
                prod = PolyMatrix.from_rows(e) * m
            else:
                prod = m * PolyMatrix.from_rows(e)
            assert det_poly(prod) == det_poly(m) or \
                det_poly(prod) == IntPoly(()) - det_poly(m)
            assert inv_denominator_multiplicity(prod, PHI1, 3) == base
