"""Factorization of integer polynomials into irreducible factors.

The route is classical: Yun's squarefree decomposition, reduction modulo the
smallest odd prime that keeps the polynomial squarefree, deterministic
factorization over GF(p), quadratic Hensel lifting up to a coefficient bound,
and recombination of the lifted factors by subsets of increasing size.  Every
step is deterministic, so repeated runs produce identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import isqrt

from .polyring import IntPoly, content_primitive, poly_gcd


# ---------------------------------------------------------------------------
# dense arithmetic over GF(p); ascending coefficient lists
# ---------------------------------------------------------------------------

def _gf_trim(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a.pop()
    return a

def _gf_from_coeffs(coeffs, p: int) -> list[int]:
    return _gf_trim([c % p for c in coeffs])

def _gf_to_symmetric(a: list[int], p: int) -> list[int]:
    return [c - p if c > p // 2 else c for c in a]

def _gf_add(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _gf_trim(out)

def _gf_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _gf_trim(out)

def _gf_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _gf_trim([c % p for c in out])

def _gf_scale(a: list[int], k: int, p: int) -> list[int]:
    return _gf_trim([c * k % p for c in a])

def _gf_monic(a: list[int], p: int) -> list[int]:
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return _gf_scale(a, inv, p)

def _gf_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("GF(p) polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _gf_trim(rem)
    inv = pow(b[-1], -1, p)
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] % p
        if c:
            q = c * inv % p
            quo[i - db] = q
            for j, bj in enumerate(b):
                rem[i - db + j] = (rem[i - db + j] - q * bj) % p
    return _gf_trim(quo), _gf_trim(rem[:db])

def _gf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    return _gf_monic(a, p)

def _gf_gcdex(g: list[int], h: list[int], p: int) -> tuple[list[int], list[int]]:
    """Bezout pair (s, t) with s*g + t*h = 1 for coprime g, h."""
    r0, r1 = list(g), list(h)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    if len(r0) != 1:
        raise ValueError("gcdex arguments are not coprime")
    inv = pow(r0[0], -1, p)
    return _gf_scale(s0, inv, p), _gf_scale(t0, inv, p)

def _gf_deriv(a: list[int], p: int) -> list[int]:
    return _gf_trim([k * c % p for k, c in enumerate(a) if k][0:] if a else [])

def _gf_is_squarefree(a: list[int], p: int) -> bool:
    return len(_gf_gcd(a, _gf_deriv(a, p), p)) == 1

def _gf_pow_mod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    b = _gf_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, b, p), mod, p)[1]
        b = _gf_divmod(_gf_mul(b, b, p), mod, p)[1]
        e >>= 1
    return result


def _gf_nullspace(m: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the kernel of the square matrix m over GF(p)."""
    d = len(m)
    a = [row[:] for row in m]
    pivot_of_col: dict[int, int] = {}
    row = 0
    for col in range(d):
        sel = None
        for r in range(row, d):
            if a[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        a[row], a[sel] = a[sel], a[row]
        inv = pow(a[row][col], -1, p)
        a[row] = [c * inv % p for c in a[row]]
        for r in range(d):
            if r != row and a[r][col] % p:
                f = a[r][col]
                a[r] = [(c - f * cc) % p for c, cc in zip(a[r], a[row])]
        pivot_of_col[col] = row
        row += 1
    basis = []
    for col in range(d):
        if col in pivot_of_col:
            continue
        v = [0] * d
        v[col] = 1
        for pc, pr in pivot_of_col.items():
            v[pc] = (-a[pr][col]) % p
        basis.append(v)
    return basis


def _berlekamp(a: list[int], p: int) -> list[list[int]]:
    """Irreducible monic factors of a monic squarefree polynomial over GF(p)."""
    d = len(a) - 1
    if d <= 1:
        return [a]
    xp = _gf_pow_mod([0, 1], p, a, p)
    q_rows = []
    cur = [1]
    for _ in range(d):
        row = list(cur) + [0] * (d - len(cur))
        q_rows.append(row)
        cur = _gf_divmod(_gf_mul(cur, xp, p), a, p)[1]
    # v with v^p = v (mod a) solves v(Q - I) = 0; transpose for column form
    n = [[(q_rows[j][i] - (1 if i == j else 0)) % p for j in range(d)]
         for i in range(d)]
    basis = _gf_nullspace(n, p)
    s = len(basis)
    if s == 1:
        return [a]
    factors = [a]
    for v in basis:
        if len(factors) == s:
            break
        vpoly = _gf_trim(list(v))
        split: list[list[int]] = []
        for u in factors:
            if len(u) - 1 <= 1:
                split.append(u)
                continue
            rest = u
            for c in range(p):
                if len(rest) - 1 <= 0:
                    break
                g = _gf_gcd(rest, _gf_sub(vpoly, [c], p), p)
                if 1 <= len(g) - 1 < len(rest) - 1:
                    split.append(g)
                    rest = _gf_divmod(rest, g, p)[0]
            if len(rest) - 1 >= 1:
                split.append(rest)
        factors = split
    factors.sort(key=lambda f: (len(f), tuple(f)))
    return factors


# ---------------------------------------------------------------------------
# Hensel lifting
# ---------------------------------------------------------------------------

def _trunc(a: list[int], m: int) -> list[int]:
    half = m // 2
    out = []
    for c in a:
        r = c % m
        if r > half:
            r -= m
        out.append(r)
    return _gf_trim(out)

def _zdiv_monic(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    # division with remainder in ZZ[t]; b must be monic
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _gf_trim(rem)
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            quo[i - db] = c
            for j, bj in enumerate(b):
                rem[i - db + j] -= c * bj
    return _gf_trim(quo), _gf_trim(rem[:db])

def _zmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _gf_trim(out)

def _zadd(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _gf_trim(out)

def _zsub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _gf_trim(out)


def _hensel_step(m, f, g, h, s, t):
    """Lift f = g*h, s*g + t*h = 1 from mod m to mod m**2 (h monic)."""
    mm = m * m
    e = _trunc(_zsub(f, _zmul(g, h)), mm)
    q, r = _zdiv_monic(_zmul(s, e), h)
    q, r = _trunc(q, mm), _trunc(r, mm)
    u = _zadd(_zmul(t, e), _zmul(q, g))
    g1 = _trunc(_zadd(g, u), mm)
    h1 = _trunc(_zadd(h, r), mm)
    u = _zadd(_zmul(s, g1), _zmul(t, h1))
    b = _trunc(_zsub(u, [1]), mm)
    c, d = _zdiv_monic(_zmul(s, b), h1)
    c, d = _trunc(c, mm), _trunc(d, mm)
    u = _zadd(_zmul(t, b), _zmul(c, g1))
    s1 = _trunc(_zsub(s, d), mm)
    t1 = _trunc(_zsub(t, u), mm)
    return g1, h1, s1, t1


def _hensel_lift(p, f, f_list, l):
    """Lift monic mod-p factors of f to factors mod p**l (f = lc * prod)."""
    r = len(f_list)
    lc = f[-1]
    pl = p ** l
    if r == 1:
        inv = pow(lc % pl, -1, pl)
        return [_trunc([c * inv for c in f], pl)]
    m = p
    k = r // 2
    steps = max(1, (l - 1).bit_length())
    g = [lc % p]
    for fi in f_list[:k]:
        g = _gf_mul(g, _gf_from_coeffs(fi, p), p)
    h = _gf_from_coeffs(f_list[k], p)
    for fi in f_list[k + 1:]:
        h = _gf_mul(h, _gf_from_coeffs(fi, p), p)
    s, t = _gf_gcdex(g, h, p)
    g = _gf_to_symmetric(g, p)
    h = _gf_to_symmetric(h, p)
    s = _gf_to_symmetric(s, p)
    t = _gf_to_symmetric(t, p)
    for _ in range(steps):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, g, f_list[:k], l) + _hensel_lift(p, h, f_list[k:], l)


# ---------------------------------------------------------------------------
# Zassenhaus
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _choose_prime(coeffs: list[int], lc: int, start: int = 3) -> int:
    # smallest odd prime from start keeping the reduction squarefree of
    # full degree
    p = start
    while True:
        if _is_prime(p) and lc % p:
            fp = _gf_from_coeffs(coeffs, p)
            if _gf_is_squarefree(fp, p):
                return p
        p += 2


def _zassenhaus(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree f with positive lc."""
    n = f.degree
    if n == 1:
        return [f]
    coeffs = list(f.coeffs)
    fc = coeffs[0]
    a_norm = max(abs(c) for c in coeffs)
    b = coeffs[-1]
    bound = (isqrt(n + 1) + 1) * (1 << n) * a_norm * b
    p = _choose_prime(coeffs, b)
    modular = _berlekamp(_gf_monic(_gf_from_coeffs(coeffs, p), p), p)
    if len(modular) == 1:
        return [f]
    # One reduction rarely shows the true factor count; a couple more
    # primes often prove irreducibility outright, and otherwise the
    # smallest modular split minimizes lifting and recombination work.
    tried, q = 1, p
    while tried < 3 and len(modular) > 2:
        q = _choose_prime(coeffs, b, q + 2)
        mq = _berlekamp(_gf_monic(_gf_from_coeffs(coeffs, q), q), q)
        tried += 1
        if len(mq) == 1:
            return [f]
        if len(mq) < len(modular):
            p, modular = q, mq
    l = 1
    while p ** l < 2 * bound + 1:
        l += 1
    pl = p ** l
    lifted = _hensel_lift(p, coeffs, [_gf_to_symmetric(m, p) for m in modular], l)

    sorted_t = list(range(len(lifted)))
    t_set = set(sorted_t)
    factors: list[list[int]] = []
    s = 1
    cur = coeffs
    while 2 * s <= len(t_set):
        for sub in combinations(sorted_t, s):
            if b == 1:
                q = 1
                for i in sub:
                    q = q * lifted[i][0]
                q %= pl
                if q > pl // 2:
                    q -= pl
                if q and fc % q:
                    continue
                g = [1]
                for i in sub:
                    g = _zmul(g, lifted[i])
                g = _trunc(g, pl)
            else:
                g = [b]
                for i in sub:
                    g = _zmul(g, lifted[i])
                g = _trunc(g, pl)
                g = [c // _content(g) for c in g] if g else g
                if g and g[0] and fc % g[0]:
                    continue
            rest = set(sub)
            h = [b]
            for i in sorted_t:
                if i not in rest:
                    h = _zmul(h, lifted[i])
            h = _trunc(h, pl)
            g_norm = sum(abs(c) for c in g)
            h_norm = sum(abs(c) for c in h)
            if g_norm * h_norm <= bound:
                t_set -= rest
                sorted_t = [i for i in sorted_t if i not in rest]
                g = [c // _content(g) for c in g]
                cur = [c // _content(h) for c in h]
                factors.append(g)
                b = cur[-1]
                fc = cur[0]
                break
        else:
            s += 1
    factors.append(cur)
    return [IntPoly(fac) for fac in factors]


def _content(a: list[int]) -> int:
    from math import gcd
    g = 0
    for c in a:
        g = gcd(g, c)
    return g or 1


# ---------------------------------------------------------------------------
# public interface
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Factorization:
    """Irreducible factorization of the primitive part of a polynomial.

    Factors are primitive with positive leading coefficients, sorted by
    (degree, coefficients); unit_sign times the product of factor powers
    reproduces the primitive part of the input.
    """

    unit_sign: int
    factors: tuple[tuple[IntPoly, int], ...]

    def expand(self) -> IntPoly:
        out = IntPoly((self.unit_sign,))
        for base, exp in self.factors:
            out = out * base ** exp
        return out

    def exponent_of(self, phi: IntPoly) -> int:
        for base, exp in self.factors:
            if base == phi:
                return exp
        return 0


def squarefree_decompose(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun decomposition of the primitive part of f (sign discarded).

    Returns [(g, m)] with the g primitive, squarefree, pairwise coprime,
    positive leading coefficients, and prod g**m equal to the primitive
    part of f up to sign.
    """
    if f.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    if f.degree < 1:
        raise ValueError("cannot decompose a constant polynomial")
    _, w = content_primitive(f)
    if w.leading < 0:
        w = -w
    out: list[tuple[IntPoly, int]] = []
    df = w.derivative()
    a0 = poly_gcd(w, df)
    if a0.degree == 0:
        return [(w, 1)]
    b = w.exact_div(a0)
    c = df.exact_div(a0)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def factor(f: IntPoly) -> Factorization:
    """Factor a nonzero integer polynomial into irreducibles.

    The content is discarded; unit_sign carries the sign of the primitive
    part.  Factors come out sorted by (degree, coefficients), so the result
    is deterministic.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    _, prim = content_primitive(f)
    unit = 1
    if prim.leading < 0:
        unit = -1
        prim = -prim
    if prim.degree < 1:
        return Factorization(unit, ())
    # A squarefree reduction at one full-degree prime certifies that prim
    # is squarefree, because square factors survive reduction when the
    # leading coefficient does; that skips the gcd cascade entirely.
    coeffs = list(prim.coeffs)
    p = 3
    while not _is_prime(p) or coeffs[-1] % p == 0:
        p += 2
    if _gf_is_squarefree(_gf_from_coeffs(coeffs, p), p):
        parts = [(prim, 1)]
    else:
        parts = squarefree_decompose(prim)
    pieces: list[tuple[IntPoly, int]] = []
    for part, mult in parts:
        for irr in _zassenhaus(part):
            pieces.append((irr, mult))
    pieces.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    result = Factorization(unit, tuple(pieces))
    if result.expand() != IntPoly((unit,)) * prim:
        raise AssertionError("factorization failed to reassemble")
    return result


def is_irreducible(f: IntPoly) -> bool:
    """True for polynomials that are irreducible over QQ (degree >= 1)."""
    if f.degree < 1:
        return False
    fact = factor(f)
    return len(fact.factors) == 1 and fact.factors[0][1] == 1
