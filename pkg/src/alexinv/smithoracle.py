"""Smith normal form over QQ[t], used as a slow independent oracle.

Classical reduction: pick the minimum-degree nonzero entry as pivot, clear
its row and column by polynomial division, repair divisibility of the
remaining block, repeat.  Rows are rescaled to integer primitive form after
each pivot to limit coefficient growth.  Transform matrices are tracked
only on request, since the oracle is mostly used for its diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactla import PolyMatrix
from .polyring import IntPoly, RatPoly, content_primitive

_MAX_ROUNDS = 100_000


@dataclass(frozen=True, slots=True)
class SmithResult:
    """Diagonal of the Smith form, with optional transform witnesses.

    invariant_factors lists the nontrivial entries with the
    divisibility-largest first, normalized modulo units of the Laurent
    ring (constants and powers of t); full_diagonal (when transforms are
    requested) is the raw ascending diagonal including units, satisfying
    left * input * right = diag(full_diagonal).
    """

    invariant_factors: tuple[IntPoly, ...]
    full_diagonal: Optional[tuple[IntPoly, ...]] = None
    left: Optional[tuple[tuple[RatPoly, ...], ...]] = None
    right: Optional[tuple[tuple[RatPoly, ...], ...]] = None


def _normalize_entry(f: RatPoly) -> tuple[IntPoly, Fraction]:
    """Integer-primitive associate with a positive anchor coefficient.

    Returns (g, s) with f = s * g.  The anchor is the constant term when
    nonzero, otherwise the leading coefficient.
    """
    lcm = f.denominator_lcm()
    scaled = (f * lcm).to_int_poly()
    cont, prim = content_primitive(scaled)
    anchor = prim.constant if prim.constant else prim.leading
    if anchor < 0:
        prim = -prim
        cont = -cont
    return prim, Fraction(cont, lcm)


class _Reducer:
    def __init__(self, m: PolyMatrix, track: bool):
        self.n = m.n
        self.a = [[RatPoly.from_int(e) for e in row] for row in m.entries]
        self.track = track
        if track:
            one, zero = RatPoly((Fraction(1),)), RatPoly()
            self.u = [[one if i == j else zero for j in range(self.n)]
                      for i in range(self.n)]
            self.v = [[one if i == j else zero for j in range(self.n)]
                      for i in range(self.n)]

    def swap_rows(self, i: int, k: int) -> None:
        if i == k:
            return
        self.a[i], self.a[k] = self.a[k], self.a[i]
        if self.track:
            self.u[i], self.u[k] = self.u[k], self.u[i]

    def swap_cols(self, j: int, k: int) -> None:
        if j == k:
            return
        for row in self.a:
            row[j], row[k] = row[k], row[j]
        if self.track:
            for row in self.v:
                row[j], row[k] = row[k], row[j]

    def row_submul(self, i: int, k: int, q: RatPoly) -> None:
        self.a[i] = [e - q * f for e, f in zip(self.a[i], self.a[k])]
        if self.track:
            self.u[i] = [e - q * f for e, f in zip(self.u[i], self.u[k])]

    def col_submul(self, j: int, k: int, q: RatPoly) -> None:
        for row in self.a:
            row[j] = row[j] - q * row[k]
        if self.track:
            for row in self.v:
                row[j] = row[j] - q * row[k]

    def row_add(self, i: int, k: int) -> None:
        self.a[i] = [e + f for e, f in zip(self.a[i], self.a[k])]
        if self.track:
            self.u[i] = [e + f for e, f in zip(self.u[i], self.u[k])]

    def scale_row(self, i: int, s: Fraction) -> None:
        self.a[i] = [e * s for e in self.a[i]]
        if self.track:
            self.u[i] = [e * s for e in self.u[i]]

    def clear_content(self, i: int) -> None:
        """Rescale row i so its entries are integer and collectively primitive."""
        lcm = 1
        for e in self.a[i]:
            d = e.denominator_lcm()
            lcm = lcm * d // _gcd(lcm, d)
        gcd_all = 0
        for e in self.a[i]:
            for c in e.coeffs:
                gcd_all = _gcd(gcd_all, abs(int(c * lcm)))
        if gcd_all:
            s = Fraction(lcm, gcd_all)
            if s != 1:
                self.scale_row(i, s)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def smith_form(m: PolyMatrix, want_transforms: bool = False) -> SmithResult:
    """Smith normal form of a matrix over QQ[t].

    The reported invariant factors are normalized, nontrivial, and ordered
    with the divisibility-largest first; unit entries are dropped.  Zero
    diagonal entries of singular input are kept at the end as-is.
    """
    n = m.n
    red = _Reducer(m, want_transforms)
    a = red.a
    rounds = 0
    for k in range(n):
        while True:
            rounds += 1
            if rounds > _MAX_ROUNDS:
                raise RuntimeError("Smith reduction failed to converge")
            best = None
            best_deg = -1
            for i in range(k, n):
                for j in range(k, n):
                    e = a[i][j]
                    if not e.is_zero and (best is None or e.degree < best_deg):
                        best = (i, j)
                        best_deg = e.degree
            if best is None:
                break
            red.swap_rows(k, best[0])
            red.swap_cols(k, best[1])
            pivot = a[k][k]
            dirty = False
            for i in range(k + 1, n):
                if a[i][k].is_zero:
                    continue
                q, _ = divmod(a[i][k], pivot)
                red.row_submul(i, k, q)
                if not a[i][k].is_zero:
                    dirty = True
            for j in range(k + 1, n):
                if a[k][j].is_zero:
                    continue
                q, _ = divmod(a[k][j], pivot)
                red.col_submul(j, k, q)
                if not a[k][j].is_zero:
                    dirty = True
            if dirty:
                continue
            bad_row = None
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    if a[i][j].is_zero:
                        continue
                    _, rem = divmod(a[i][j], pivot)
                    if not rem.is_zero:
                        bad_row = i
                        break
                if bad_row is not None:
                    break
            if bad_row is None:
                break
            red.row_add(k, bad_row)
        for i in range(k, n):
            red.clear_content(i)

    full: list[IntPoly] = []
    for k in range(n):
        e = a[k][k]
        if e.is_zero:
            full.append(IntPoly())
            continue
        norm, scale = _normalize_entry(e)
        if want_transforms:
            red.scale_row(k, 1 / scale)
        full.append(norm)
    # Invariant factors are reported modulo units of the Laurent ring:
    # t-power factors are stripped and the sign re-anchored on the
    # constant term.  full_diagonal keeps the plain QQ[t] associates so
    # the tracked transforms stay polynomial.
    nontrivial = []
    for f in full:
        if f.is_zero:
            continue
        v = 0
        while v < len(f.coeffs) and f.coeffs[v] == 0:
            v += 1
        g = IntPoly(f.coeffs[v:]) if v else f
        if g.constant < 0:
            g = -g
        if g.degree > 0:
            nontrivial.append(g)
    nontrivial.reverse()
    if want_transforms:
        return SmithResult(
            tuple(nontrivial),
            tuple(full),
            tuple(tuple(row) for row in red.u),
            tuple(tuple(row) for row in red.v),
        )
    return SmithResult(tuple(nontrivial))
