"""Arithmetic in the field QQ[t] / (phi) for an irreducible modulus phi.

Elements are represented by their reduced polynomial form of degree less
than deg(phi), with exact rational coefficients.  Inverses come from the
extended Euclidean algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .factorint import is_irreducible
from .polyring import IntPoly, RatPoly


class NotInvertibleError(ZeroDivisionError):
    pass


@dataclass(frozen=True, slots=True)
class NumberField:
    """The quotient field defined by an irreducible integer polynomial."""

    modulus: IntPoly

    def __post_init__(self) -> None:
        if self.modulus.degree < 1:
            raise ValueError("modulus must be non-constant")
        if self.modulus.leading < 0:
            raise ValueError("modulus must have positive leading coefficient")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus} is reducible")

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def element(self, f: IntPoly | RatPoly) -> "NFElem":
        """Reduce an integer or rational polynomial into the field."""
        if isinstance(f, IntPoly):
            f = f.to_rat()
        rem = f % RatPoly.from_int(self.modulus)
        rep = rem.coeffs + (Fraction(0),) * (self.degree - len(rem.coeffs))
        return NFElem(self, rep)

    def zero(self) -> "NFElem":
        return NFElem(self, (Fraction(0),) * self.degree)

    def one(self) -> "NFElem":
        return self.element(IntPoly((1,)))


@dataclass(frozen=True, slots=True)
class NFElem:
    """A field element in reduced form; rep has length deg(modulus)."""

    field: NumberField
    rep: tuple[Fraction, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.rep)

    def _check(self, other: "NFElem") -> None:
        if self.field.modulus != other.field.modulus:
            raise ValueError("elements belong to different fields")

    def __add__(self, other: "NFElem") -> "NFElem":
        if not isinstance(other, NFElem):
            return NotImplemented
        self._check(other)
        return NFElem(self.field, tuple(a + b for a, b in zip(self.rep, other.rep)))

    def __sub__(self, other: "NFElem") -> "NFElem":
        if not isinstance(other, NFElem):
            return NotImplemented
        self._check(other)
        return NFElem(self.field, tuple(a - b for a, b in zip(self.rep, other.rep)))

    def __neg__(self) -> "NFElem":
        return NFElem(self.field, tuple(-a for a in self.rep))

    def __mul__(self, other: "NFElem") -> "NFElem":
        if not isinstance(other, NFElem):
            return NotImplemented
        self._check(other)
        prod = RatPoly(self.rep) * RatPoly(other.rep)
        rem = prod % RatPoly.from_int(self.field.modulus)
        rep = rem.coeffs + (Fraction(0),) * (self.field.degree - len(rem.coeffs))
        return NFElem(self.field, rep)

    def inverse(self) -> "NFElem":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero:
            raise NotInvertibleError("zero has no inverse")
        mod = RatPoly.from_int(self.field.modulus)
        r0, r1 = mod, RatPoly(self.rep)
        s0, s1 = RatPoly(), RatPoly((Fraction(1),))
        while not r1.is_zero:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        # r0 = gcd = s0 * self (mod phi); irreducibility makes it a constant
        if r0.degree != 0:
            raise NotInvertibleError("element shares a factor with the modulus")
        inv_poly = s0 * (1 / r0.leading)
        rem = inv_poly % mod
        rep = rem.coeffs + (Fraction(0),) * (self.field.degree - len(rem.coeffs))
        return NFElem(self.field, rep)

    def __truediv__(self, other: "NFElem") -> "NFElem":
        if not isinstance(other, NFElem):
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NFElem):
            return NotImplemented
        return self.field.modulus == other.field.modulus and self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.field.modulus, self.rep))
