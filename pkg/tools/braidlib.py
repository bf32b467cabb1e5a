"""Build-time helpers for constructing and screening knot diagrams.

Not part of the installed package.  Braid words use nonzero integers
(+j for sigma_j, -j for its inverse) acting on k strands; closures are
converted to PD codes in the same convention the package parses.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from alexinv.exactla import PolyMatrix, det_poly  # noqa: E402
from alexinv.knotdiag import PDCode, alexander_matrix, parse_pd, wirtinger  # noqa: E402
from alexinv.polyring import IntPoly, normalize_delta  # noqa: E402


def braid_width(word) -> int:
    return max(abs(g) for g in word) + 1


def braid_perm(word, k=None):
    """Permutation of strand positions, as a tuple mapping 0..k-1."""
    k = k or braid_width(word)
    perm = list(range(k))
    for g in word:
        j = abs(g) - 1
        perm[j], perm[j + 1] = perm[j + 1], perm[j]
    return tuple(perm)


def closure_components(word, k=None) -> int:
    k = k or braid_width(word)
    perm = braid_perm(word, k)
    seen = [False] * k
    comps = 0
    for s in range(k):
        if seen[s]:
            continue
        comps += 1
        cur = s
        while not seen[cur]:
            seen[cur] = True
            cur = perm.index(cur)
    return comps


def braid_to_pd(word, k=None) -> list[tuple[int, int, int, int]]:
    """PD code of the braid closure; the closure must be a knot.

    Strands flow downward; sigma_j passes the strand from position j over
    the strand from position j+1.
    """
    word = list(word)
    k = k or braid_width(word)
    if not word:
        raise ValueError("empty braid word")
    if closure_components(word, k) != 1:
        raise ValueError("closure is a link, not a knot")
    length = len(word)

    # First pass: walk the knot, recording each crossing passage.
    passages = []  # (level, 'over'|'under')
    pos, level, start = 1, 0, (1, 0)
    visited_levels = 0
    while True:
        g = word[level]
        j = abs(g)
        if pos == j or pos == j + 1:
            if pos == j:
                role = "over" if g > 0 else "under"
                pos = j + 1
            else:
                role = "under" if g > 0 else "over"
                pos = j
            passages.append((level, role))
        level += 1
        if level == length:
            level = 0
        if (pos, level) == start:
            break
    if len(passages) != 2 * length:
        raise ValueError("walk did not traverse every crossing twice")

    n_edges = 2 * length
    roles: dict[int, dict[str, tuple[int, int]]] = {}
    for q, (lvl, role) in enumerate(passages):
        in_label = q + 1
        out_label = q + 2 if q + 2 <= n_edges else 1
        roles.setdefault(lvl, {})[role] = (in_label, out_label)

    crossings = []
    for lvl, g in enumerate(word):
        u_in, u_out = roles[lvl]["under"]
        o_in, o_out = roles[lvl]["over"]
        if g > 0:
            crossings.append((u_in, o_in, u_out, o_out))
        else:
            crossings.append((u_in, o_out, u_out, o_in))
    return crossings


def braid_sum(word_a, width_a, word_b, width_b):
    """Braid word whose closure is the connected sum of the two closures."""
    shift = width_a - 1
    return list(word_a) + [g + shift if g > 0 else g - shift for g in word_b]


def pd_to_text(crossings) -> str:
    return "[" + ",".join("[%d,%d,%d,%d]" % c for c in crossings) + "]"


# ---------------------------------------------------------------------------
# fast integer screening via the reduced Burau matrix
# ---------------------------------------------------------------------------

def _burau_gens(k: int, t: int):
    """Integer matrices: gen[j] for sigma_j at t, and t * sigma_j^-1."""
    n = k - 1
    gens = {}
    for i in range(1, k):
        m = [[t if a == b else 0 for b in range(n)] for a in range(n)]
        # stored matrices carry a factor t so inverses stay integral
        row = i - 1
        for b in range(n):
            m[row][b] = 0
        if row - 1 >= 0:
            m[row][row - 1] = t * t
        m[row][row] = -t * t
        if row + 1 < n:
            m[row][row + 1] = t
        gens[i] = m
        mi = [[t if a == b else 0 for b in range(n)] for a in range(n)]
        for b in range(n):
            mi[row][b] = 0
        if row - 1 >= 0:
            mi[row][row - 1] = t
        mi[row][row] = -1
        if row + 1 < n:
            mi[row][row + 1] = 1
        gens[-i] = mi
    return gens


def _matmul(a, b):
    n = len(a)
    return [
        [sum(a[i][x] * b[x][j] for x in range(n)) for j in range(n)]
        for i in range(n)
    ]


def _int_det(m):
    m = [row[:] for row in m]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for kk in range(n - 1):
        if not m[kk][kk]:
            for r in range(kk + 1, n):
                if m[r][kk]:
                    m[kk], m[r] = m[r], m[kk]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[kk][kk]
        for i in range(kk + 1, n):
            for j in range(kk + 1, n):
                m[i][j] = (m[i][j] * piv - m[i][kk] * m[kk][j]) // prev
            m[i][kk] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


class BurauScreen:
    """Screens braid words by comparing det(Burau - I) at integer points.

    Every stored generator matrix carries one factor of t, so the product
    of L letters equals t**L times the true Burau matrix.  The test
    absorbs the resulting power-of-t ambiguity.
    """

    def __init__(self, k: int, target_delta: IntPoly, points=(2, 3)):
        self.k = k
        self.points = points
        self.gens = {t: _burau_gens(k, t) for t in points}
        self.targets = {}
        for t in points:
            cyc = (t ** k - 1) // (t - 1)
            self.targets[t] = abs(target_delta.evaluate(t)) * cyc

    def matches(self, word) -> bool:
        n = self.k - 1
        for t in self.points:
            gens = self.gens[t]
            m = gens[word[0]]
            for g in word[1:]:
                m = _matmul(m, gens[g])
            tl = t ** len(word)
            shifted = [
                [m[i][j] - (tl if i == j else 0) for j in range(n)]
                for i in range(n)
            ]
            v = abs(_int_det(shifted))
            w = self.targets[t]
            if not v or not w:
                if v != w:
                    return False
                continue
            big, small = (v, w) if v >= w else (w, v)
            if big % small:
                return False
            ratio = big // small
            while ratio % t == 0:
                ratio //= t
            if ratio != 1:
                return False
        return True


# ---------------------------------------------------------------------------
# full exact verification through the package pipeline
# ---------------------------------------------------------------------------

def delta_of_word(word, k=None) -> IntPoly:
    pd = PDCode(tuple(braid_to_pd(word, k)))
    return normalize_delta(det_poly(alexander_matrix(pd).matrix))


def invariants_of_word(word, k=None, policy="fast_with_fallback"):
    from alexinv.invariants import compute_invariants

    pd = PDCode(tuple(braid_to_pd(word, k)))
    return compute_invariants(alexander_matrix(pd), policy)


# ---------------------------------------------------------------------------
# Kauffman bracket, for telling candidate knots apart (mirror-insensitive)
# ---------------------------------------------------------------------------

def _writhe(pd: PDCode) -> int:
    return sum(r[3] for r in wirtinger(pd).relations)


def bracket_invariant(pd: PDCode):
    """Canonical writhe-corrected bracket, identical for mirror images.

    Returns a hashable fingerprint; diagrams of one knot (either
    chirality) share it, so different fingerprints certify different
    knots.
    """
    crossings = pd.crossings
    c = len(crossings)
    n_edges = 2 * c
    bracket: dict[int, int] = {}
    for state in range(1 << c):
        parent = list(range(n_edges + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        a_count = 0
        for idx, (a, b, cc, d) in enumerate(crossings):
            if state >> idx & 1:
                a_count += 1
                pairs = ((a, b), (cc, d))
            else:
                pairs = ((a, d), (b, cc))
            for x, y in pairs:
                parent[find(x)] = find(y)
        loops = len({find(x) for x in range(1, n_edges + 1)}) if c else 1
        exp = 2 * a_count - c  # A^(a - b)
        # multiply by (-A^2 - A^-2)^(loops - 1)
        term: dict[int, int] = {exp: 1}
        for _ in range(loops - 1):
            nxt: dict[int, int] = {}
            for e, co in term.items():
                nxt[e + 2] = nxt.get(e + 2, 0) - co
                nxt[e - 2] = nxt.get(e - 2, 0) - co
            term = nxt
        for e, co in term.items():
            bracket[e] = bracket.get(e, 0) + co
    w = _writhe(pd)
    f: dict[int, int] = {}
    sign = -1 if w % 2 else 1
    for e, co in bracket.items():
        f[e - 3 * w] = sign * co
    norm = tuple(sorted((e, co) for e, co in f.items() if co))
    mirror = tuple(sorted((-e, co) for e, co in f.items() if co))
    return min(norm, mirror)
