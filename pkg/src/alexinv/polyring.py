"""Exact univariate polynomial arithmetic over the integers and rationals.

Polynomials are stored dense in ascending degree order: ``coeffs[k]`` is the
coefficient of ``t**k``.  The zero polynomial is the empty tuple and has
degree -1.  All arithmetic is exact; rational coefficients use
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Union


def _trimmed(coeffs: Iterable[int]) -> tuple:
    c = tuple(coeffs)
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n]


@dataclass(frozen=True, slots=True)
class IntPoly:
    """A polynomial with integer coefficients, ascending degree order."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trimmed(int(a) for a in self.coeffs))

    @classmethod
    def const(cls, a: int) -> "IntPoly":
        return cls((a,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        elif not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        elif not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "IntPoly":
        return IntPoly((other,)) - self

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(other * a for a in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by t**k.  Negative k requires divisibility by t**(-k)."""
        if self.is_zero:
            return self
        if k >= 0:
            return IntPoly((0,) * k + self.coeffs)
        if any(self.coeffs[:-k]):
            raise ValueError("not divisible by the requested power of t")
        return IntPoly(self.coeffs[-k:])

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(k * a for k, a in enumerate(self.coeffs) if k))

    def evaluate(self, x):
        """Evaluate by Horner's rule; exact for int or Fraction arguments."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = _int_gcd(g, a)
        return g

    def to_rat(self) -> "RatPoly":
        return RatPoly(tuple(Fraction(a) for a in self.coeffs))

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Return self / other, raising ValueError unless division is exact."""
        q, r = divmod(self.to_rat(), other.to_rat())
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        num = []
        for c in q.coeffs:
            if c.denominator != 1:
                raise ValueError("quotient is not integral")
            num.append(c.numerator)
        return IntPoly(num)

    def divisible_by(self, other: "IntPoly") -> bool:
        if other.is_zero:
            return self.is_zero
        _, r = divmod(self.to_rat(), other.to_rat())
        return r.is_zero

    def pretty(self) -> str:
        """Human form, descending degree: ``t^2 - t + 1``."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                term = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if a > 0 else f"-{term}")
            else:
                parts.append(f" {sign} {term}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.pretty()


@dataclass(frozen=True, slots=True)
class RatPoly:
    """A polynomial with rational coefficients, ascending degree order."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coeffs", _trimmed(Fraction(a) for a in self.coeffs)
        )

    @classmethod
    def from_int(cls, p: IntPoly) -> "RatPoly":
        return cls(tuple(Fraction(a) for a in p.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Union["RatPoly", int, Fraction]) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            other = RatPoly((Fraction(other),))
        elif not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other: Union["RatPoly", int, Fraction]) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            other = RatPoly((Fraction(other),))
        elif not isinstance(other, RatPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatPoly":
        return RatPoly((Fraction(other),)) - self

    def __mul__(self, other: Union["RatPoly", int, Fraction]) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return RatPoly(tuple(q * a for a in self.coeffs))
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return RatPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        """Division with remainder; the divisor must be nonzero."""
        if not isinstance(other, RatPoly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.leading
        if len(rem) - 1 < db:
            return RatPoly(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c / lb
            quo[i - db] = q
            for j, bj in enumerate(other.coeffs):
                rem[i - db + j] -= q * bj
        return RatPoly(quo), RatPoly(rem)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[1]

    def monic(self) -> "RatPoly":
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic associate")
        inv = 1 / self.leading
        return RatPoly(tuple(inv * a for a in self.coeffs))

    def evaluate(self, x):
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def denominator_lcm(self) -> int:
        lcm = 1
        for a in self.coeffs:
            d = a.denominator
            lcm = lcm // _int_gcd(lcm, d) * d
        return lcm

    def to_int_poly(self) -> IntPoly:
        """Convert exactly; raises ValueError on non-integer coefficients."""
        out = []
        for a in self.coeffs:
            if a.denominator != 1:
                raise ValueError("non-integer coefficient")
            out.append(a.numerator)
        return IntPoly(out)


#: The variable t as a polynomial.
T = IntPoly((0, 1))

ONE = IntPoly((1,))

ZERO = IntPoly()

AnyPoly = Union[IntPoly, RatPoly]


def content_primitive(f: IntPoly) -> tuple[int, IntPoly]:
    """Split f into (content, primitive part) with content > 0.

    The sign of f stays with the primitive part, so that
    content * primitive_part == f.
    """
    if f.is_zero:
        raise ValueError("content of the zero polynomial is undefined")
    c = f.content()
    return c, IntPoly(tuple(a // c for a in f.coeffs))


def normalize_delta(f: AnyPoly) -> IntPoly:
    """Canonical representative of f up to units of the Laurent ring.

    Factors of t are removed, denominators cleared, the result made
    primitive, and the sign fixed so the constant term is positive.
    """
    if isinstance(f, RatPoly):
        if f.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        scaled = f * f.denominator_lcm()
        g = scaled.to_int_poly()
    else:
        g = f
    if g.is_zero:
        raise ValueError("cannot normalize the zero polynomial")
    k = 0
    while not g.coeffs[k]:
        k += 1
    if k:
        g = IntPoly(g.coeffs[k:])
    _, g = content_primitive(g)
    if g.constant < 0:
        g = -g
    return g


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    # Remainder of lc(b)**k * a by b for some k >= 0, computed entirely in ZZ.
    # Callers take primitive parts, so the exact power of lc(b) is immaterial.
    db = b.degree
    lb = b.leading
    rem = list(a.coeffs)
    while len(rem) - 1 >= db:
        while rem and not rem[-1]:
            rem.pop()
        if len(rem) - 1 < db:
            break
        lead = rem[-1]
        rem = [lb * c for c in rem]
        shift = len(rem) - 1 - db
        for j, bj in enumerate(b.coeffs):
            rem[shift + j] -= lead * bj
        rem.pop()
    return IntPoly(rem)


def _canonical_gcd_form(f: IntPoly) -> IntPoly:
    _, p = content_primitive(f)
    return -p if p.leading < 0 else p


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Greatest common divisor in ZZ[t]: primitive, positive leading coefficient.

    Uses the primitive-remainder sequence, so all intermediate arithmetic
    stays in ZZ.
    """
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero:
        return _canonical_gcd_form(g)
    if g.is_zero:
        return _canonical_gcd_form(f)
    a = _canonical_gcd_form(f)
    b = _canonical_gcd_form(g)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b)
        a, b = b, (r if r.is_zero else _canonical_gcd_form(r))
    return a


def multiplicity(f: IntPoly, phi: IntPoly) -> int:
    """Largest k with phi**k dividing f.  Requires f != 0 and deg(phi) >= 1."""
    if f.is_zero:
        raise ValueError("multiplicity in the zero polynomial is undefined")
    if phi.degree < 1:
        raise ValueError("multiplicity divisor must be non-constant")
    count = 0
    cur = f.to_rat()
    div = phi.to_rat()
    while True:
        q, r = divmod(cur, div)
        if not r.is_zero:
            return count
        count += 1
        cur = q


def is_symmetric(f: IntPoly) -> bool:
    """True when f equals its coefficient reversal (palindromic)."""
    if f.is_zero:
        raise ValueError("symmetry of the zero polynomial is undefined")
    return f.coeffs == f.coeffs[::-1]
