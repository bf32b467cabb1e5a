"""Diagram curation: structural certificates for naming knots.

For a candidate PD code this module decides:
  * reduced      -- no nugatory crossing (no repeated edge in a row, no
                    cut vertex in the 4-valent crossing graph);
  * visibly prime -- no pair of arcs whose removal disconnects the
                    crossing graph (so no Conway-sphere 2-cut exists);
  * alternating  -- passages alternate over/under along the knot walk.

A reduced, visibly prime, alternating diagram realizes the crossing
number of its knot, and the knot is prime, which is what the naming
arguments need.  Also provides Reidemeister-I untwisting to reduce a
diagram with a nugatory crossing, and connected sums for building
composite look-alikes to exclude by fingerprint.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from alexinv.knotdiag import PDCode  # noqa: E402


def edge_slots(pd: PDCode) -> dict[int, list[tuple[int, int]]]:
    """edge label -> [(crossing index, slot index)] (two slots each)."""
    slots: dict[int, list[tuple[int, int]]] = {}
    for ci, row in enumerate(pd.crossings):
        for si, e in enumerate(row):
            slots.setdefault(e, []).append((ci, si))
    return slots


def crossing_graph(pd: PDCode) -> dict[int, list[tuple[int, int]]]:
    """Adjacency of the 4-valent multigraph: crossing -> [(nbr, edge)]."""
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in
                                             range(pd.n_crossings)}
    for e, ss in edge_slots(pd).items():
        (c1, _), (c2, _) = ss
        adj[c1].append((c2, e))
        adj[c2].append((c1, e))
    return adj


def _connected(adj, skip_vertex=None, skip_edges=()) -> bool:
    verts = [v for v in adj if v != skip_vertex]
    if not verts:
        return True
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for w, e in adj[v]:
            if w == skip_vertex or e in skip_edges or w in seen:
                continue
            seen.add(w)
            stack.append(w)
    return len(seen) == len(verts)


def find_nugatory(pd: PDCode):
    """Index of a nugatory crossing (curl or cut vertex), or None."""
    for ci, row in enumerate(pd.crossings):
        if len(set(row)) < 4:
            return ci
    if pd.n_crossings < 2:
        return None
    adj = crossing_graph(pd)
    for ci in range(pd.n_crossings):
        if not _connected(adj, skip_vertex=ci):
            return ci
    return None


def is_reduced(pd: PDCode) -> bool:
    return find_nugatory(pd) is None


def is_visibly_prime(pd: PDCode) -> bool:
    """No 2-edge cut of the crossing graph with crossings on both sides."""
    if pd.n_crossings < 2:
        return True
    adj = crossing_graph(pd)
    edges = sorted(edge_slots(pd))
    for i, e1 in enumerate(edges):
        for e2 in edges[i + 1:]:
            if not _connected(adj, skip_edges=(e1, e2)):
                return False
    return True


def _passages(pd: PDCode):
    """Walk the knot; yield (crossing, slot-of-entry) per passage.

    Entry at slot s exits at the opposite slot (s+2) mod 4, and the
    outgoing edge of a passage through edge e is succ(e) = e+1 with
    wraparound at 2c.
    """
    n = 2 * pd.n_crossings
    slots = edge_slots(pd)
    out = []
    e = 1
    for _ in range(n):
        nxt = e % n + 1
        # the passage consumed here is the crossing where e enters and
        # nxt leaves at the opposite slot
        hit = None
        for (ci, si) in slots[e]:
            so = (si + 2) % 4
            if (ci, so) in slots[nxt]:
                hit = (ci, si)
                break
        if hit is None:
            raise ValueError("inconsistent walk")
        out.append(hit)
        e = nxt
    return out


def is_alternating(pd: PDCode) -> bool:
    """Passages alternate under (slot 0 entry) / over (slot 1 or 3)."""
    if pd.n_crossings == 0:
        return True
    pars = [(0 if si == 0 else 1) for (_, si) in _passages(pd)]
    return all(pars[i] != pars[i + 1] for i in range(len(pars) - 1))


def untwist(pd: PDCode, ci: int) -> PDCode:
    """Remove nugatory crossing ci by a Reidemeister-I untwist."""
    row = pd.crossings[ci]
    if len(set(row)) < 4:
        # curl: a loop edge occupies two slots; splice the other two
        a, b = [e for e in row if row.count(e) == 1]
        repl = {max(a, b): min(a, b)}
    else:
        # cut vertex: slots pair up by lobe; opposite slots belong to
        # different lobes, so the lobes are {slot0,slot1} vs {slot2,slot3}
        # or {slot0,slot3} vs {slot1,slot2}; decide by connectivity.
        adj = crossing_graph(pd)
        slots = edge_slots(pd)

        def lobe_of(e):
            (c1, _), (c2, _) = slots[e]
            other = c2 if c1 == ci else c1
            comp = {other}
            stack = [other]
            while stack:
                v = stack.pop()
                for w, _ in adj[v]:
                    if w != ci and w not in comp:
                        comp.add(w)
                        stack.append(w)
            return frozenset(comp)

        l0 = lobe_of(row[0])
        partner = next(i for i in (1, 2, 3) if lobe_of(row[i]) == l0)
        i2, i3 = [i for i in (1, 2, 3) if i != partner]
        pairs = [(row[0], row[partner]), (row[i2], row[i3])]
        repl = {}
        for a, b in pairs:
            if a == b:
                raise ValueError("degenerate untwist")
            repl[max(a, b)] = min(a, b)
    out = []
    for cj, r in enumerate(pd.crossings):
        if cj == ci:
            continue
        out.append(tuple(repl.get(e, e) for e in r))
    # renumber edges 1..2(c-1) preserving order, then re-walk to restore
    # the successor convention
    labels = sorted({e for r in out for e in r})
    ren = {e: i + 1 for i, e in enumerate(labels)}
    out = [tuple(ren[e] for e in r) for r in out]
    return _rewalk(out)


def _rewalk(rows: list[tuple[int, ...]]) -> PDCode:
    """Rebuild PD labels so edge k+1 follows edge k along the knot.

    Input rows must be structurally consistent (each label twice, entry
    slot s exits at (s+2)%4) but labels need not follow the successor
    convention; output is a valid PDCode of the same diagram.  The walk
    is tried in both orientations; the one entering understrands at
    slot 0 (as the row convention demands) wins.
    """
    n = 2 * len(rows)
    slots: dict[int, list[tuple[int, int]]] = {}
    for ci, row in enumerate(rows):
        for si, e in enumerate(row):
            slots.setdefault(e, []).append((ci, si))
    start = rows[0][0]
    for occ in (0, 1):
        order = []
        ok = True
        e, (ci, si) = start, slots[start][occ]
        seen = set()
        for _ in range(n):
            if e in seen:
                raise ValueError("walk revisits an edge; not a knot")
            if si == 2:
                ok = False  # understrand entered at its out slot
                break
            order.append(e)
            seen.add(e)
            so = (si + 2) % 4
            e = rows[ci][so]
            a, b = slots[e]
            ci, si = b if a == (ci, so) else a
        if not ok:
            continue
        ren = {e: i + 1 for i, e in enumerate(order)}
        return PDCode(tuple(tuple(ren[e] for e in r) for r in rows))
    raise ValueError("no orientation satisfies the slot convention")


def _in_occurrence(pd: PDCode, e: int) -> tuple[int, int]:
    """(crossing, slot) where edge e enters: its successor leaves from
    the opposite slot of the same crossing."""
    slots = edge_slots(pd)
    nxt = pd.successor(e)
    for (ci, si) in slots[e]:
        if (ci, (si + 2) % 4) in slots[nxt]:
            return (ci, si)
    raise ValueError(f"edge {e} has no entry occurrence")


def mirror_pd(pd: PDCode) -> PDCode:
    """Mirror image: swap over/under at every crossing.

    Swapping strands means the old over-strand now enters at slot 0.
    Its travel direction decides the row rotation: if the successor of
    slot 1 sits at slot 3 the over-strand runs b->d and the row becomes
    (b, c, d, a); otherwise it runs d->b and the row becomes (d, a, b, c).
    Edge labels keep their successor convention, so no rewalk is needed.
    """
    n = pd.n_edges
    rows = []
    for (a, b, c, d) in pd.crossings:
        if b % n + 1 == d:
            rows.append((b, c, d, a))
        else:
            rows.append((d, a, b, c))
    return PDCode(tuple(rows))


def fully_reduce(pd: PDCode) -> PDCode:
    """Untwist nugatory crossings until the diagram is reduced."""
    while True:
        ci = find_nugatory(pd)
        if ci is None:
            return pd
        pd = untwist(pd, ci)


def pd_connected_sum(pd1: PDCode, pd2: PDCode) -> PDCode:
    """Splice pd2 into pd1 by cutting pd1's edge 2a and pd2's edge 2b.

    The composite walk runs pd1's edges 1..2a-1, crosses into pd2 on an
    edge labeled 2a, runs pd2's edges as 2a+1..2a+2b-1, and returns to
    pd1 on edge 2a+2b, whose successor wraps to 1.
    """
    n1, n2 = pd1.n_edges, pd2.n_edges
    in1 = _in_occurrence(pd1, n1)
    in2 = _in_occurrence(pd2, n2)
    rows = []
    for ci, row in enumerate(pd1.crossings):
        new = list(row)
        for si, e in enumerate(row):
            if e == n1 and (ci, si) == in1:
                new[si] = n1 + n2
        rows.append(tuple(new))
    for ci, row in enumerate(pd2.crossings):
        new = []
        for si, e in enumerate(row):
            if e == n2:
                new.append(n1 if (ci, si) == in2 else n1 + n2)
            else:
                new.append(n1 + e)
        rows.append(tuple(new))
    return PDCode(tuple(rows))
