"""Independent cross-checks: a Kauffman-bracket Jones oracle at n=1,
two chord-level color identities, and a skew-symmetric matrix lemma.

The bracket oracle shares nothing with the state models beyond the
braid word itself: it enumerates all 2**c smoothings, counts loops with
a union-find sweep, and applies the writhe correction.  With the
variable choice A = t**(1/4) used here its value on a braid closure is
the standard Jones polynomial evaluated at t**(-1); the engine's n=1
invariant matches it up to a global sign depending only on the parity
of the number of components (see the tests for the frozen law).
"""

from __future__ import annotations

from .braid import BraidWord
from .diagram import Diagram
from .qalgebra import LaurentQ, pochhammer
from .states import PLUS, Potential, derive_colors

_LOOP = LaurentQ({2: -1, -2: -1})


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def add(self, x: int) -> None:
        self.parent.setdefault(x, x)

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        self.parent[self.find(x)] = self.find(y)

    def classes(self) -> int:
        return sum(1 for x in self.parent if self.parent[x] == x)


def kauffman_jones(b: BraidWord) -> LaurentQ:
    """Jones polynomial of the braid closure from the Kauffman bracket.

    Enumerates every smoothing state, so braids are capped at 20
    crossings.  Unknot-normalized: the empty 1-braid gives 1.
    """
    c = len(b.letters)
    if c > 20:
        raise ValueError("bracket oracle is limited to 20 crossings")
    s = b.strands
    bracket = LaurentQ.zero()
    for mask in range(1 << c):
        uf = _UnionFind()
        for p in range(s):
            uf.add(p)
        cur = list(range(s))
        nxt = s
        a_minus_b = 0
        for idx, k in enumerate(b.letters):
            g = abs(k)
            pick_b = (mask >> idx) & 1
            a_minus_b += -1 if pick_b else 1
            # A-smoothing of a positive crossing keeps the strands
            # parallel; for a negative crossing the roles swap.
            cupcap = (k > 0) == bool(pick_b)
            if cupcap:
                uf.union(cur[g - 1], cur[g])
                uf.add(nxt)
                cur[g - 1] = cur[g] = nxt
                nxt += 1
        for p in range(s):
            uf.union(cur[p], p)
        loops = uf.classes()
        bracket = bracket + LaurentQ.t_quarter(a_minus_b) * _LOOP ** (loops - 1)
    w = b.writhe
    sign = -1 if w % 2 else 1
    return bracket * LaurentQ.monomial(sign, -3 * w)


def _out_colors(d: Diagram, p: Potential) -> tuple[list[int], list[int]]:
    """(overpass exit, underpass exit) colors per crossing for a
    (+)-convention integer potential."""
    if p.convention != PLUS:
        raise ValueError("color identities are stated for (+) potentials")
    colors = derive_colors(d, p)
    over_out = [colors.arc_colors[cr.over_out] for cr in d.crossings]
    under_out = [colors.arc_colors[cr.under_out] for cr in d.crossings]
    return over_out, under_out


def verify_prop_61(d: Diagram, p: Potential) -> bool:
    """sum of r*(a - b - r) over crossings vanishes, where a and b are
    the overpass and underpass exit colors."""
    over_out, under_out = _out_colors(d, p)
    total = sum(
        p.jumps[c] * (over_out[c] - under_out[c] - p.jumps[c])
        for c in range(d.crossing_count)
    )
    return total == 0


def verify_prop_62(d: Diagram, p: Potential) -> bool:
    """sum of sign*(a - b) equals sum of sign*r over crossings."""
    over_out, under_out = _out_colors(d, p)
    lhs = sum(
        d.crossings[c].sign * (over_out[c] - under_out[c])
        for c in range(d.crossing_count)
    )
    rhs = sum(d.crossings[c].sign * p.jumps[c] for c in range(d.crossing_count))
    return lhs == rhs


def verify_matrix_lemma(a: list[list[int]]) -> bool:
    """For skew-symmetric A with zero column sums,
    sum over j<k of a[j][k]*s[j][k] vanishes, where
    s[j][k] = sum_{i<j} a[i][k] - sum_{i>k} a[j][i]."""
    mu = len(a)
    for row in a:
        if len(row) != mu:
            raise ValueError("matrix must be square")
    for j in range(mu):
        for k in range(mu):
            if a[j][k] != -a[k][j]:
                raise ValueError("matrix must be skew-symmetric")
    for k in range(mu):
        if sum(a[j][k] for j in range(mu)) != 0:
            raise ValueError("column sums must vanish")
    total = 0
    for j in range(mu):
        for k in range(j + 1, mu):
            s_jk = sum(a[i][k] for i in range(j)) - sum(
                a[j][i] for i in range(k + 1, mu)
            )
            total += a[j][k] * s_jk
    return total == 0


def verify_pochhammer_identity(n: int) -> bool:
    """sum over 0 <= r <= n of v**(r(2-n) + r(r-1)/2) {n}_r = v**(2n)."""
    total = LaurentQ.zero()
    for r in range(n + 1):
        quarter = 2 * r * (2 - n) + r * (r - 1)
        total = total + LaurentQ.t_quarter(quarter) * pochhammer(n, r)
    return total == LaurentQ.t_quarter(4 * n)
