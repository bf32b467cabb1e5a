"""Exact linear algebra over ZZ[t] and over number fields.

Determinants of polynomial matrices are computed by evaluating at enough
integer points, running fraction-free Bareiss elimination on the integer
matrices, and interpolating back; the degree bound, not the observed
degree, decides the number of points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .numberfield import NFElem, NumberField
from .polyring import IntPoly, multiplicity


@dataclass(frozen=True, slots=True)
class PolyMatrix:
    """A square matrix with IntPoly entries."""

    entries: tuple[tuple[IntPoly, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("matrix must be square")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[IntPoly]]) -> "PolyMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        one, zero = IntPoly((1,)), IntPoly()
        return cls(tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)
        ))

    @classmethod
    def diagonal(cls, diag: Iterable[IntPoly]) -> "PolyMatrix":
        d = tuple(diag)
        zero = IntPoly()
        return cls(tuple(
            tuple(d[i] if i == j else zero for j in range(len(d)))
            for i in range(len(d))
        ))

    @property
    def n(self) -> int:
        return len(self.entries)

    def eval_at(self, x: int) -> list[list[int]]:
        return [[e.evaluate(x) for e in row] for row in self.entries]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "PolyMatrix":
        cs = tuple(cols)
        return PolyMatrix(tuple(
            tuple(self.entries[i][j] for j in cs) for i in rows
        ))

    def minor(self, drop_row: int, drop_col: int) -> "PolyMatrix":
        return PolyMatrix(tuple(
            tuple(e for j, e in enumerate(row) if j != drop_col)
            for i, row in enumerate(self.entries) if i != drop_row
        ))

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("size mismatch")
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = IntPoly()
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return PolyMatrix(tuple(rows))


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix; mutates its argument."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                # exact by the Sylvester identity
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _gcd_int(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def det_poly(m: PolyMatrix) -> IntPoly:
    """Determinant of a polynomial matrix, computed exactly.

    Uses Kronecker substitution: every coefficient of the determinant is
    bounded by the product of the row sums of entry 1-norms, so evaluating
    each entry at a single power of two past twice that bound packs the
    whole answer into one integer Bareiss determinant, and the
    coefficients read off as balanced base-B digits.
    """
    n = m.n
    if n == 0:
        return IntPoly((1,))
    deg_bound = 0
    coeff_bound = 1
    for row in m.entries:
        row_deg = -1
        row_norm = 0
        for e in row:
            if e.degree > row_deg:
                row_deg = e.degree
            for c in e.coeffs:
                row_norm += c if c >= 0 else -c
        if row_deg < 0:
            return IntPoly()  # a zero row
        deg_bound += row_deg
        coeff_bound *= max(1, row_norm)
    shift = coeff_bound.bit_length() + 1
    base = 1 << shift
    val = _bareiss_det(m.eval_at(base))
    coeffs = []
    for _ in range(deg_bound + 1):
        if not val:
            break
        val, r = divmod(val, base)
        if r > base >> 1:
            r -= base
            val += 1
        coeffs.append(r)
    if val:
        raise AssertionError("determinant digits exceed the degree bound")
    return IntPoly(tuple(coeffs))


@dataclass(frozen=True, slots=True)
class FieldMatrix:
    """A square matrix over a number field."""

    field: NumberField
    entries: tuple[tuple[NFElem, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.entries)


def reduce_matrix(field: NumberField, m: PolyMatrix) -> FieldMatrix:
    """Reduce every entry of m into the field."""
    return FieldMatrix(field, tuple(
        tuple(field.element(e) for e in row) for row in m.entries
    ))


def nullity_over_field(fm: FieldMatrix) -> int:
    """Dimension of the kernel, by Gaussian elimination.

    The pivot for each column is the first row with a nonzero entry; this
    keeps the elimination deterministic.
    """
    n = fm.n
    if n == 0:
        return 0
    rows = [list(r) for r in fm.entries]
    rank = 0
    for col in range(n):
        pivot_row = None
        for r in range(rank, n):
            if not rows[r][col].is_zero:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [e * inv for e in rows[rank]]
        for r in range(n):
            if r != rank and not rows[r][col].is_zero:
                coef = rows[r][col]
                rows[r] = [a - coef * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == n:
            break
    return n - rank


# -- rank over QQ[t]/phi via a certified modular candidate -------------------

def _px_trim(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a.pop()
    return a


def _px_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _px_trim(out)


def _px_red(a: list[int], mod: list[int], p: int) -> list[int]:
    """Reduce a modulo the monic polynomial mod, over GF(p)."""
    a = [c % p for c in a]
    d = len(mod) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * mod[j]) % p
    return _px_trim(a[:d])


def _px_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _px_red(out, mod, p)


def _px_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q = c * inv % p
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - q * b[j]) % p
    return _px_trim(a[:db])


def _gfp_irreducible(mod: list[int], p: int) -> bool:
    """Irreducibility of the monic polynomial mod over GF(p).

    Any proper factor would have an irreducible factor of degree
    k <= d/2, and those all divide x**(p**k) - x.
    """
    d = len(mod) - 1
    if d == 1:
        return True
    x = _px_red([0, 1], mod, p)
    cur = x
    for _ in range(d // 2):
        nxt = [1]
        base, e = cur, p
        while e:
            if e & 1:
                nxt = _px_mulmod(nxt, base, mod, p)
            base = _px_mulmod(base, base, mod, p)
            e >>= 1
        cur = nxt
        g, h = list(mod), _px_sub(cur, x, p)
        while h:
            g, h = h, _px_rem(g, h, p)
        if len(g) - 1 >= 1:
            return False
    return True


def _kp_rank(
    entries: list[list[list[int]]], mod: list[int], p: int,
) -> tuple[int, list[int], list[int]]:
    """Rank and pivot rows/cols over GF(p)[t]/mod, by inverse-free
    elimination: rows are cross-scaled by pivots instead of normalized,
    which changes nothing about rank over a field."""
    n = len(entries)
    a = [row[:] for row in entries]
    row_ids = list(range(n))
    rank = 0
    piv_rows: list[int] = []
    piv_cols: list[int] = []
    for col in range(n):
        sel = None
        for r in range(rank, n):
            if a[r][col]:
                sel = r
                break
        if sel is None:
            continue
        a[rank], a[sel] = a[sel], a[rank]
        row_ids[rank], row_ids[sel] = row_ids[sel], row_ids[rank]
        piv = a[rank][col]
        for r in range(rank + 1, n):
            head = a[r][col]
            if head:
                top = a[rank]
                a[r] = [
                    _px_sub(_px_mulmod(piv, x, mod, p),
                            _px_mulmod(head, y, mod, p), p)
                    for x, y in zip(a[r], top)
                ]
        piv_rows.append(row_ids[rank])
        piv_cols.append(col)
        rank += 1
        if rank == n:
            break
    return rank, piv_rows, piv_cols


def _next_prime_after(p: int) -> int:
    q = p + 1
    while True:
        if q >= 2 and all(q % r for r in range(2, int(q ** 0.5) + 1)):
            return q
        q += 1


def nullity_mod_phi(m: PolyMatrix, phi: IntPoly) -> int:
    """Nullity of m over QQ[t]/phi, computed exactly.

    A prime keeping phi irreducible at full degree gives a candidate rank
    by elimination over GF(p**d).  The modular rank never exceeds the
    true rank, and the nonzero modular pivot minor already certifies the
    lower bound, so only the bordering minors need exact divisibility
    checks; a prime that fails them is skipped.  If no prime certifies,
    elimination over the number field decides.
    """
    n = m.n
    if n == 0:
        return 0
    if phi.degree < 1:
        raise ValueError("phi must be non-constant")
    lc = phi.leading
    p = 2
    for _ in range(8):
        p = _next_prime_after(p)
        while lc % p == 0:
            p = _next_prime_after(p)
        coeffs = [c % p for c in phi.coeffs]
        inv = pow(coeffs[-1], -1, p)
        mod = [c * inv % p for c in coeffs]
        if not _gfp_irreducible(mod, p):
            continue
        entries = [[_px_red(list(e.coeffs), mod, p) for e in row]
                   for row in m.entries]
        rank, piv_rows, piv_cols = _kp_rank(entries, mod, p)
        if rank == n:
            return 0
        in_r, in_c = set(piv_rows), set(piv_cols)
        certified = True
        for i in (i for i in range(n) if i not in in_r):
            for j in (j for j in range(n) if j not in in_c):
                border = det_poly(m.submatrix(piv_rows + [i], piv_cols + [j]))
                if not (border.is_zero or border.divisible_by(phi)):
                    certified = False
                    break
            if not certified:
                break
        if certified:
            return n - rank
    nf = NumberField(phi)
    return nullity_over_field(reduce_matrix(nf, m))


def _screen_point(phi: IntPoly) -> tuple[int, int]:
    """An integer x0 with |phi_prim(x0)| >= 2, and that absolute value.

    Divisibility of integer polynomial values at x0 by q then mirrors
    divisibility by phi: for primitive phi, phi | f in Q[t] forces
    phi(x0) | f(x0) in Z by Gauss's lemma.
    """
    content = 0
    for c in phi.coeffs:
        content = _gcd_int(content, c)
    prim = phi if content in (0, 1) else IntPoly(
        tuple(c // content for c in phi.coeffs))
    x0 = 2
    while prim.evaluate(x0) in (-1, 0, 1):
        x0 += 1
    return x0, abs(prim.evaluate(x0))


def corank_one_certificate(m: PolyMatrix, phi: IntPoly) -> bool:
    """True when some cofactor of m is certainly not divisible by phi.

    When phi divides det(m), a nonzero adjugate over QQ[t]/phi pins the
    rank of m there at exactly n - 1.  Each cofactor is tested at a single
    integer point: non-divisibility there is conclusive, while
    divisibility everywhere proves nothing, so False only means unknown.
    """
    n = m.n
    if n == 0 or phi.degree < 1:
        return False
    x0, q = _screen_point(phi)
    for i in range(n):
        for j in range(n):
            if _bareiss_det(m.minor(i, j).eval_at(x0)) % q:
                return True
    return False


def inv_denominator_multiplicity(
    m: PolyMatrix,
    phi: IntPoly,
    e_star: int,
    stop_at: Optional[int] = None,
) -> int:
    """Exponent of phi in the lcm of denominators of the inverse matrix.

    e_star must be the multiplicity of phi in det(m); the result is
    e_star minus the minimum multiplicity of phi over all cofactors,
    capped below at zero.  Cofactors certified free of phi by a one-point
    divisibility test settle the minimum immediately; the rest are scanned
    cheapest bound first, and when stop_at is given the scan stops as soon
    as the running minimum certifies a result of at least stop_at.
    """
    n = m.n
    if n == 0:
        raise ValueError("empty matrix has no inverse denominators")
    if phi.degree < 1:
        raise ValueError("phi must be non-constant")
    if _bareiss_det(m.eval_at(2)) == 0 and det_poly(m).is_zero:
        raise ValueError("matrix is singular; the inverse does not exist")
    x0, q = _screen_point(phi)
    screened: list[tuple[int, PolyMatrix]] = []
    for i in range(n):
        for j in range(n):
            sub = m.minor(j, i)
            v = _bareiss_det(sub.eval_at(x0))
            if v:
                k = 0
                while v % q == 0:
                    v //= q
                    k += 1
                if k == 0:
                    return max(0, e_star)
            else:
                k = e_star + 1
            screened.append((k, sub))
    # k is an upper bound on how much each cofactor can matter, so visiting
    # small k first reaches the minimum (and any early exit) soonest.
    screened.sort(key=lambda item: item[0])
    running_min: Optional[int] = None
    for _, sub in screened:
        cof = det_poly(sub)
        if cof.is_zero:
            continue
        mult = multiplicity(cof, phi)
        if running_min is None or mult < running_min:
            running_min = mult
            if stop_at is not None and e_star - running_min >= stop_at:
                return e_star - running_min
            if running_min == 0:
                return max(0, e_star)
    if running_min is None:
        raise ValueError("matrix is singular; the inverse does not exist")
    return max(0, e_star - running_min)
