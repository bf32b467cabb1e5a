"""Smith normal form oracle: diagonals, transforms, invariance."""

import random

from alexinv.exactla import PolyMatrix, det_poly
from alexinv.knotdiag import alexander_matrix, parse_pd
from alexinv.polyring import IntPoly, ONE, ZERO, normalize_delta
from alexinv.smithoracle import smith_form

PHI1 = IntPoly((1, -1, 1))
PHI2 = IntPoly((1, -3, 1))


def diag(*entries):
    n = len(entries)
    return PolyMatrix.from_rows(
        [[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)]
    )


def test_diagonal_gcd_structure():
    # diag(phi1^2, phi1, phi2) has Smith chain 1 | phi1 | phi1^2*phi2
    res = smith_form(diag(PHI1 ** 2, PHI1, PHI2))
    assert res.invariant_factors == (
        normalize_delta(PHI1 ** 2 * PHI2),
        PHI1,
    )


def test_identity_is_trivial():
    res = smith_form(diag(ONE, ONE, ONE))
    assert res.invariant_factors == ()


def test_already_diagonal_chain():
    res = smith_form(diag(PHI1 ** 2, PHI1))
    assert res.invariant_factors == (normalize_delta(PHI1 ** 2), PHI1)


def test_divisibility_chain_largest_first():
    m = diag(PHI1 * PHI2, PHI1, PHI1 * PHI1)
    factors = smith_form(m).invariant_factors
    for big, small in zip(factors, factors[1:]):
        q, r = divmod(big.to_rat(), small.to_rat())
        assert r.is_zero
    # and the product matches the determinant up to normalization
    prod = ONE
    for f in factors:
        prod = prod * f
    assert normalize_delta(prod) == normalize_delta(det_poly(m))


def test_transform_witnesses_multiply_out():
    m = PolyMatrix.from_rows(
        [
            [PHI1 * PHI1, PHI1, IntPoly((0, 1))],
            [PHI1, PHI2, ONE],
            [ZERO, IntPoly((1, 1)), PHI1],
        ]
    )
    res = smith_form(m, want_transforms=True)
    assert res.full_diagonal is not None
    n = 3
    rat = [[m.entries[i][j].to_rat() for j in range(n)] for i in range(n)]

    def matmul(a, b):
        return [
            [
                sum((a[i][k] * b[k][j] for k in range(n)), ZERO.to_rat())
                for j in range(n)
            ]
            for i in range(n)
        ]

    lhs = matmul(matmul([list(r) for r in res.left], rat),
                 [list(r) for r in res.right])
    for i in range(n):
        for j in range(n):
            expect = res.full_diagonal[i].to_rat() if i == j else ZERO.to_rat()
            assert lhs[i][j] == expect
    # ascending divisibility with units first
    for a, b in zip(res.full_diagonal, res.full_diagonal[1:]):
        if a.is_zero:
            assert b.is_zero
            continue
        q, r = divmod(b.to_rat(), a.to_rat())
        assert r.is_zero


def test_elementary_operations_do_not_change_factors():
    rng = random.Random(90125)
    base = diag(PHI1 ** 2, PHI1, ONE)
    want = smith_form(base).invariant_factors
    rows = [list(r) for r in base.entries]
    n = 3
    for _ in range(25):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2)
        if kind == 0:
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == 1:
            lam = IntPoly(tuple(rng.randint(-2, 2) for _ in range(2)))
            rows[i] = [a + lam * b for a, b in zip(rows[i], rows[j])]
        else:
            for r in rows:
                r[i], r[j] = r[j], r[i]
    got = smith_form(PolyMatrix.from_rows(rows)).invariant_factors
    assert got == want


def test_knot_matrices():
    trefoil = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]")
    res = smith_form(alexander_matrix(trefoil).matrix)
    assert res.invariant_factors == (PHI1,)
    fig8 = parse_pd("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]")
    res = smith_form(alexander_matrix(fig8).matrix)
    assert res.invariant_factors == (PHI2,)


def test_singular_matrix_keeps_zero_factor():
    m = PolyMatrix.from_rows([[PHI1, PHI1], [PHI1, PHI1]])
    res = smith_form(m, want_transforms=True)
    assert res.full_diagonal[-1].is_zero
    assert res.full_diagonal[0] == PHI1


def test_empty_matrix():
    res = smith_form(PolyMatrix.from_rows([]))
    assert res.invariant_factors == ()
