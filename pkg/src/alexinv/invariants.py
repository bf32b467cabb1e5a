"""Invariant factors and higher Alexander polynomials of a knot.

For each irreducible factor phi of the Alexander polynomial, three pieces
of evidence pin down how phi distributes over the invariant factors:

* e_star, the multiplicity of phi in the determinant (free once the
  determinant is factored);
* r_star, the nullity of the matrix reduced over QQ[t]/(phi), computed
  only when e_star >= 2;
* d1_star, the exponent of phi in the lcm of the denominators of the
  inverse matrix, computed only when several partitions of e_star into
  r_star parts exist.

The evidence determines a partition of e_star; the partition's parts are
the phi-exponents of the invariant factors.  Small exponents admit a
unique partition, so most inputs never touch the expensive criteria.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .exactla import (
    PolyMatrix,
    corank_one_certificate,
    det_poly,
    inv_denominator_multiplicity,
    nullity_over_field,
    reduce_matrix,
)
from .factorint import factor
from .knotdiag import AlexanderMatrix
from .numberfield import NumberField
from .polyring import IntPoly, multiplicity, normalize_delta
from .smithoracle import smith_form

POLICIES = ("fast", "fast_with_fallback", "oracle_only")

_ONE = IntPoly((1,))


class Ambiguous:
    """Sentinel: the evidence admits more than one partition."""

    _instance: Optional["Ambiguous"] = None

    def __new__(cls) -> "Ambiguous":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Ambiguous"


AMBIGUOUS = Ambiguous()


@dataclass(frozen=True, slots=True)
class PhiEvidence:
    """Evidence collected for one irreducible factor."""

    phi: IntPoly
    e_star: int
    r_star: int
    d1_star: Optional[int] = None

    def __post_init__(self) -> None:
        if self.e_star < 1:
            raise ValueError("e_star must be at least 1")
        if not 1 <= self.r_star <= self.e_star:
            raise ValueError(
                f"r_star={self.r_star} outside 1..e_star={self.e_star}"
            )
        if self.d1_star is not None and self.d1_star < 1:
            raise ValueError("d1_star must be at least 1 when present")


def partitions_with(e: int, r: int, d1: Optional[int] = None) -> list[tuple[int, ...]]:
    """Partitions of e into exactly r positive parts, weakly decreasing.

    When d1 is given only partitions with largest part d1 are returned.
    The list is ordered lexicographically decreasing.
    """
    if e < 1 or r < 1 or r > e:
        return []
    out: list[tuple[int, ...]] = []

    def rec(total: int, count: int, cap: int, prefix: tuple[int, ...]) -> None:
        if count == 0:
            if total == 0:
                out.append(prefix)
            return
        top = min(cap, total - count + 1)
        low = -(-total // count)  # ceil; keeps parts weakly decreasing
        for first in range(top, low - 1, -1):
            rec(total - first, count - 1, first, prefix + (first,))

    if d1 is None:
        rec(e, r, e, ())
    else:
        if d1 < 1 or d1 > e - r + 1 or d1 * r < e:
            return []
        rec(e - d1, r - 1, d1, (d1,))
    return out


def needs_d1(e: int, r: int) -> bool:
    """True when rank evidence alone leaves several partitions."""
    return len(partitions_with(e, r)) > 1


def resolve_partition(ev: PhiEvidence) -> Union[tuple[int, ...], Ambiguous]:
    """The unique partition fitting the evidence, or the Ambiguous marker.

    Raises ValueError when no partition fits; that signals inconsistent
    evidence, i.e. a bug upstream.
    """
    cands = partitions_with(ev.e_star, ev.r_star, ev.d1_star)
    if not cands:
        raise ValueError(
            f"no partition of {ev.e_star} into {ev.r_star} parts matches "
            f"d1={ev.d1_star}; evidence is inconsistent"
        )
    if len(cands) == 1:
        return cands[0]
    return AMBIGUOUS


@dataclass(frozen=True, slots=True)
class AlexanderInvariants:
    """Invariant factors delta_i and the products Delta_i.

    delta lists the nontrivial invariant factors with the
    divisibility-largest first; a trivial module is reported as (1,).
    higher[i] is the product of delta[i:], so higher[0] is the Alexander
    polynomial.  ambiguous lists factors whose partition was not pinned
    down (possible only under the plain fast policy).
    """

    delta: tuple[IntPoly, ...]
    higher: tuple[IntPoly, ...]
    ambiguous: tuple[IntPoly, ...]
    method: str

    def delta_i(self, i: int) -> IntPoly:
        """1-based invariant factor; 1 beyond the module rank."""
        if i < 1:
            raise IndexError("invariant factors are indexed from 1")
        return self.delta[i - 1] if i <= len(self.delta) else _ONE

    def big_delta(self, i: int) -> IntPoly:
        """1-based Delta_i = product of delta_j for j >= i; 1 beyond the rank."""
        if i < 1:
            raise IndexError("Delta_i is indexed from 1")
        return self.higher[i - 1] if i <= len(self.higher) else _ONE

    def to_json_dict(self) -> dict:
        return {
            "delta": [list(d.coeffs) for d in self.delta],
            "Delta": [list(d.coeffs) for d in self.higher],
            "ambiguous": [list(p.coeffs) for p in self.ambiguous],
            "method": self.method,
        }


def _partition_from_oracle(m: PolyMatrix, phi: IntPoly) -> tuple[tuple[int, ...], tuple[IntPoly, ...]]:
    oracle = smith_form(m).invariant_factors
    parts = []
    for d in oracle:
        k = multiplicity(d, phi)
        if k:
            parts.append(k)
    return tuple(parts), oracle


def compute_invariants(
    am: Union[AlexanderMatrix, PolyMatrix],
    policy: str = "fast_with_fallback",
) -> AlexanderInvariants:
    """Invariant factors of the module presented by a diagram matrix.

    policy chooses between the evidence-based route ('fast'), the same
    route with a Smith-form fallback on ambiguity ('fast_with_fallback'),
    and the Smith form alone ('oracle_only').
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}; choose from {POLICIES}")
    m = am.matrix if isinstance(am, AlexanderMatrix) else am

    if policy == "oracle_only":
        factors = smith_form(m).invariant_factors
        delta = factors if factors else (_ONE,)
        return AlexanderInvariants(delta, _products(delta), (), "oracle")

    det = det_poly(m)
    if det.is_zero:
        raise ValueError("matrix is singular; not a knot diagram matrix")
    alex = normalize_delta(det)
    fact = factor(alex)
    method = "fast"
    ambiguous: list[IntPoly] = []
    per_phi: list[tuple[IntPoly, tuple[int, ...]]] = []
    oracle_cache: Optional[tuple[IntPoly, ...]] = None

    for phi, e_star in fact.factors:
        if e_star == 1:
            per_phi.append((phi, (1,)))
            continue
        if corank_one_certificate(m, phi):
            # rank n - 1 over QQ[t]/phi means the phi-part is cyclic, so
            # the whole exponent sits in a single invariant factor
            per_phi.append((phi, (e_star,)))
            continue
        r_star = nullity_mod_phi(m, phi)
        if not 1 <= r_star <= e_star:
            raise ValueError(
                f"nullity {r_star} for {phi} inconsistent with exponent {e_star}"
            )
        cands = partitions_with(e_star, r_star)
        if len(cands) == 1:
            per_phi.append((phi, cands[0]))
            continue
        stop = e_star - r_star + 1
        d1_star = inv_denominator_multiplicity(m, phi, e_star, stop_at=stop)
        ev = PhiEvidence(phi, e_star, r_star, d1_star)
        resolved = resolve_partition(ev)
        if isinstance(resolved, Ambiguous):
            if policy == "fast":
                ambiguous.append(phi)
                per_phi.append((phi, partitions_with(e_star, r_star, d1_star)[0]))
            else:
                if oracle_cache is None:
                    parts, oracle_cache = _partition_from_oracle(m, phi)
                else:
                    parts = tuple(
                        k for k in (multiplicity(d, phi) for d in oracle_cache) if k
                    )
                if sum(parts) != e_star or len(parts) != r_star:
                    raise ValueError(
                        f"oracle partition {parts} conflicts with evidence for {phi}"
                    )
                per_phi.append((phi, parts))
                method = "fallback"
        else:
            per_phi.append((phi, resolved))

    r_max = max((len(p) for _, p in per_phi), default=0)
    if r_max == 0:
        delta: tuple[IntPoly, ...] = (_ONE,)
    else:
        built = []
        for i in range(r_max):
            d = _ONE
            for phi, parts in per_phi:
                if i < len(parts):
                    d = d * phi ** parts[i]
            built.append(normalize_delta(d))
        delta = tuple(built)
        prod = _ONE
        for d in delta:
            prod = prod * d
        if normalize_delta(prod) != alex:
            raise AssertionError("invariant factors fail to multiply to Delta")
    return AlexanderInvariants(delta, _products(delta), tuple(ambiguous), method)


def _products(delta: tuple[IntPoly, ...]) -> tuple[IntPoly, ...]:
    out = []
    acc = _ONE
    for d in reversed(delta):
        acc = acc * d
        out.append(normalize_delta(acc) if not acc.is_zero else acc)
    out.reverse()
    return tuple(out)
