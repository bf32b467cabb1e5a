"""Planar diagram codes of knots and their presentation matrices.

A PD code lists one 4-tuple of edge labels per crossing, starting at the
incoming under-strand and proceeding counterclockwise.  Edge labels run
1..2c along the knot's orientation, so the label after x is x mod 2c + 1.
The derived matrix rows come from free differential calculus applied to
the crossing relations, abelianized to ZZ[t, 1/t]; rows of negative
crossings are scaled by the unit t to keep entries in ZZ[t].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .exactla import PolyMatrix
from .polyring import IntPoly


class PDSyntaxError(ValueError):
    """The text could not be read as a PD code."""


class PDValidationError(ValueError):
    """The tuples do not describe a single-component knot diagram."""


@dataclass(frozen=True, slots=True)
class PDCode:
    """A validated PD code; crossings are 4-tuples of edge labels."""

    crossings: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self) -> None:
        crossings = tuple(tuple(int(x) for x in c) for c in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        _validate(crossings)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_edges(self) -> int:
        return 2 * len(self.crossings)

    def successor(self, label: int) -> int:
        return label % self.n_edges + 1

    def to_json(self) -> str:
        return json.dumps([list(c) for c in self.crossings], separators=(",", ":"))


def _validate(crossings: tuple[tuple[int, ...], ...]) -> None:
    c = len(crossings)
    if c == 0:
        return
    n_edges = 2 * c
    counts: dict[int, int] = {}
    for cr in crossings:
        if len(cr) != 4:
            raise PDValidationError(f"crossing {cr} does not have four labels")
        for x in cr:
            if not 1 <= x <= n_edges:
                raise PDValidationError(
                    f"label {x} outside 1..{n_edges} for {c} crossings"
                )
            counts[x] = counts.get(x, 0) + 1
    for x in range(1, n_edges + 1):
        if counts.get(x, 0) != 2:
            raise PDValidationError(
                f"label {x} appears {counts.get(x, 0)} times; expected exactly 2"
            )

    def succ(x: int) -> int:
        return x % n_edges + 1

    for a, b, cc, d in crossings:
        if succ(a) != cc:
            raise PDValidationError(
                f"under-strand {a} -> {cc} breaks the label succession; "
                "the code may describe a link with several components"
            )
        if succ(b) != d and succ(d) != b:
            raise PDValidationError(
                f"over-strand labels {b}, {d} are not consecutive"
            )


def parse_pd(text: str) -> PDCode:
    """Parse a PD code from bracket syntax or PD[X(...), ...] syntax."""
    s = text.strip()
    if not s:
        raise PDSyntaxError("empty PD code text")
    if s.upper().startswith("PD"):
        return _parse_knot_theory(s)
    try:
        data = json.loads(s)
    except json.JSONDecodeError as exc:
        raise PDSyntaxError(f"cannot read PD code: {exc}") from None
    if not isinstance(data, list) or any(not isinstance(c, list) for c in data):
        raise PDSyntaxError("expected a list of 4-element lists")
    for c in data:
        if len(c) != 4 or any(not isinstance(x, int) for x in c):
            raise PDSyntaxError(f"crossing {c} is not four integers")
    try:
        return PDCode(tuple(tuple(c) for c in data))
    except PDValidationError:
        raise


def _parse_knot_theory(s: str) -> PDCode:
    body = s[2:].strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise PDSyntaxError("expected PD[ ... ]")
    inner = body[1:-1].strip()
    if not inner:
        return PDCode(())
    crossings = []
    pos = 0
    while pos < len(inner):
        while pos < len(inner) and inner[pos] in ", \t\n":
            pos += 1
        if pos >= len(inner):
            break
        if inner[pos] not in "Xx":
            raise PDSyntaxError(f"unexpected token at {inner[pos:pos + 10]!r}")
        pos += 1
        if pos >= len(inner) or inner[pos] not in "([":
            raise PDSyntaxError("expected '(' or '[' after X")
        closer = ")" if inner[pos] == "(" else "]"
        end = inner.find(closer, pos)
        if end < 0:
            raise PDSyntaxError("unbalanced brackets in PD code")
        args = inner[pos + 1:end].split(",")
        if len(args) != 4:
            raise PDSyntaxError(f"X(...) needs 4 labels, got {len(args)}")
        try:
            crossings.append(tuple(int(a.strip()) for a in args))
        except ValueError:
            raise PDSyntaxError(f"non-integer label in X({inner[pos + 1:end]})") from None
        pos = end + 1
    return PDCode(tuple(crossings))


@dataclass(frozen=True, slots=True)
class WirtingerData:
    """Arc generators and crossing relations of a diagram.

    Each relation is (over, under_in, under_out, sign) as generator
    indices; sign +1 means the over-strand runs so that the relation reads
    x_out = x_over x_in x_over^-1.
    """

    n_generators: int
    relations: tuple[tuple[int, int, int, int], ...]


def wirtinger(pd: PDCode) -> WirtingerData:
    """Group the edges into arcs and read one relation per crossing."""
    c = pd.n_crossings
    if c == 0:
        return WirtingerData(0, ())
    n_edges = 2 * c
    parent = list(range(n_edges + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    # the over-strand keeps its arc through the crossing
    for _, b, _, d in pd.crossings:
        union(b, d)
    roots = sorted({find(x) for x in range(1, n_edges + 1)})
    if len(roots) != c:
        raise PDValidationError(
            f"diagram has {len(roots)} arcs for {c} crossings"
        )
    index = {root: i for i, root in enumerate(roots)}

    relations = []
    for a, b, cc, d in pd.crossings:
        sign = 1 if pd.successor(b) == d else -1
        relations.append((index[find(b)], index[find(a)], index[find(cc)], sign))
    return WirtingerData(c, tuple(relations))


@dataclass(frozen=True, slots=True)
class AlexanderMatrix:
    """Presentation matrix of the knot module, one row and column deleted.

    deleted_row is the index of the dropped crossing relation and
    deleted_col the index of the dropped arc generator (both the last);
    None for the crossingless diagram.
    """

    matrix: PolyMatrix
    deleted_row: Optional[int]
    deleted_col: Optional[int]


def _full_matrix_rows(pd: PDCode) -> list[list[IntPoly]]:
    """All crossing relations as rows over the arc generators, undeleted."""
    data = wirtinger(pd)
    c = data.n_generators
    t = IntPoly((0, 1))
    one = IntPoly((1,))
    rows = [[IntPoly() for _ in range(c)] for _ in range(c)]
    for r, (over, under_in, under_out, sign) in enumerate(data.relations):
        if sign > 0:
            rows[r][under_in] = rows[r][under_in] + t
            rows[r][over] = rows[r][over] + (one - t)
            rows[r][under_out] = rows[r][under_out] - one
        else:
            rows[r][under_in] = rows[r][under_in] + one
            rows[r][over] = rows[r][over] + (t - one)
            rows[r][under_out] = rows[r][under_out] - t
    return rows


def alexander_matrix(pd: PDCode) -> AlexanderMatrix:
    """Derived matrix of the diagram over ZZ[t].

    Entries have degree at most one.  A positive crossing contributes
    (t, 1 - t, -1) to the columns of the incoming under-arc, the over-arc
    and the outgoing under-arc; a negative crossing contributes
    (1, t - 1, -t), its row scaled by the unit t.  Contributions add when
    arcs coincide.  The last row and last column are deleted.
    """
    c = pd.n_crossings
    if c == 0:
        return AlexanderMatrix(PolyMatrix(()), None, None)
    rows = _full_matrix_rows(pd)
    reduced = PolyMatrix(tuple(
        tuple(rows[i][j] for j in range(c - 1)) for i in range(c - 1)
    ))
    return AlexanderMatrix(reduced, c - 1, c - 1)
