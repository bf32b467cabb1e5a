"""Harvest small-knot diagrams for the bundled fixture pools.

Sources: alternating 3-braid closures (sigma1 positive, sigma2 negative,
run vectors over lengths 4..10), odd pretzels, and a few torus-braid
closures.  Each diagram is fully reduced, checked, fingerprinted, and
stored with its invariants for the assembly step to pick from.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from braidlib import braid_to_pd, bracket_invariant  # noqa: E402
from curate import (  # noqa: E402
    fully_reduce,
    is_alternating,
    is_reduced,
    is_visibly_prime,
)
from tanglegen import pretzel_pd  # noqa: E402
from alexinv.knotdiag import PDCode, alexander_matrix  # noqa: E402
from alexinv.invariants import compute_invariants  # noqa: E402

OUT = Path(__file__).resolve().parent / "out"


def alt_b3_words(length: int):
    """Run vectors (a1,b1,...,ak,bk), entries >= 1, alternating signs."""
    def rec(left, parity, vec):
        if left == 0:
            if len(vec) >= 2 and len(vec) % 2 == 0:
                yield tuple(vec)
            return
        for run in range(1, left + 1):
            yield from rec(left - run, 1 - parity, vec + [run])

    for vec in rec(length, 0, []):
        word = []
        for i, run in enumerate(vec):
            word.extend([1 if i % 2 == 0 else -2] * run)
        yield tuple(word)


def candidate_pds():
    for length in range(4, 11):
        for word in alt_b3_words(length):
            try:
                yield ("b3alt", list(word)), PDCode(tuple(braid_to_pd(list(word), 3)))
            except ValueError:
                continue
    for parts in [(3, 3, 3), (3, 3, 5), (3, 5, 5), (3, 3, 7), (5, 5, 5),
                  (3, 5, 7), (3, 3, 3, 3)]:
        if sum(parts) > 10 + 6:
            continue
        for cl in ("num", "den"):
            try:
                yield ("pretzel", [list(parts), cl]), pretzel_pd(parts, cl)
            except ValueError:
                continue
    for q in (4, 5):  # torus braids: non-alternating spice
        word = [1, 2] * q
        try:
            yield ("torus", word), PDCode(tuple(braid_to_pd(word, 3)))
        except ValueError:
            continue


def main():
    OUT.mkdir(exist_ok=True)
    rows = []
    seen = set()
    for (kind, source), pd in candidate_pds():
        pd = fully_reduce(pd)
        c = pd.n_crossings
        if not 3 <= c <= 10:
            continue
        if not (is_reduced(pd) and is_visibly_prime(pd)):
            continue
        fp = str(bracket_invariant(pd))
        if fp in seen:
            continue
        seen.add(fp)
        inv = compute_invariants(alexander_matrix(pd))
        rows.append({
            "kind": kind,
            "source": source,
            "crossings": c,
            "alternating": is_alternating(pd),
            "delta": [list(d.coeffs) for d in inv.delta],
            "Delta": [list(d.coeffs) for d in inv.higher],
            "method": inv.method,
            "fingerprint": fp,
            "pd": [list(r) for r in pd.crossings],
        })
    rows.sort(key=lambda r: (r["crossings"], r["delta"]))
    with open(OUT / "harvest_small.json", "w") as fh:
        json.dump(rows, fh, indent=1)
    from collections import Counter
    tally = Counter((r["crossings"], r["alternating"]) for r in rows)
    print(f"{len(rows)} distinct diagrams")
    for key in sorted(tally):
        print(key, tally[key])


if __name__ == "__main__":
    main()
