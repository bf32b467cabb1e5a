"""Exact computation of invariant factors and higher Alexander polynomials."""

from .exactla import PolyMatrix, inv_denominator_multiplicity, nullity_over_field
from .factorint import Factorization, factor
from .invariants import (
    AMBIGUOUS,
    AlexanderInvariants,
    PhiEvidence,
    POLICIES,
    compute_invariants,
    partitions_with,
    resolve_partition,
)
from .knotdiag import AlexanderMatrix, PDCode, alexander_matrix, parse_pd
from .polyring import (
    IntPoly,
    RatPoly,
    T,
    content_primitive,
    is_symmetric,
    multiplicity,
    normalize_delta,
    poly_gcd,
)
from .smithoracle import SmithResult, smith_form

__all__ = [
    "AMBIGUOUS",
    "AlexanderInvariants",
    "AlexanderMatrix",
    "Factorization",
    "IntPoly",
    "PDCode",
    "PhiEvidence",
    "POLICIES",
    "PolyMatrix",
    "RatPoly",
    "SmithResult",
    "T",
    "alexander_matrix",
    "compute_invariants",
    "content_primitive",
    "factor",
    "inv_denominator_multiplicity",
    "is_symmetric",
    "multiplicity",
    "normalize_delta",
    "nullity_over_field",
    "parse_pd",
    "partitions_with",
    "poly_gcd",
    "resolve_partition",
    "smith_form",
]

__version__ = "0.1.0"
