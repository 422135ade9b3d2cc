"""Breakpoint graph of a canonical genome pair and the sigma-k distances.

The graph is the classic multigraph on gene extremities whose edges are the
two genomes' adjacencies.  Components alternate between the two edge colors,
so they are even cycles and paths; the census of component sizes carries all
the distance information:

    d_sigma_k = n* - (c_2 + ... + c_k  +  (p_0 + ... + p_{k-2}) / 2)

with k = 2 the breakpoint distance and k = infinity the DCJ distance.
"""

import math
from collections import Counter
from fractions import Fraction

from .model import SINGULAR, adjacencies_and_telomeres, classify, ext_name

INF = math.inf


class CanonicalPairError(ValueError):
    """The two genomes are not both singular over the same family set."""


class InvalidKError(ValueError):
    """k must be an even integer >= 2, or infinity."""


def validate_k(k):
    if k == INF or k == "inf":
        return INF
    if isinstance(k, int) and k >= 2 and k % 2 == 0:
        return k
    raise InvalidKError("k must be an even integer >= 2 or inf, got %r" % (k,))


class BreakpointGraph:
    """Vertices are extremity ids; each side contributes at most one incident
    edge per vertex (nbr arrays, -1 when the vertex is a telomere there)."""

    __slots__ = ("n_vertices", "nbr1", "nbr2", "tel1", "tel2", "n_star", "labels")

    def __init__(self, n_vertices, n_star, labels=None):
        self.n_vertices = n_vertices
        self.n_star = n_star
        self.nbr1 = [-1] * n_vertices
        self.nbr2 = [-1] * n_vertices
        self.tel1 = [False] * n_vertices
        self.tel2 = [False] * n_vertices
        self.labels = labels

    def _add_side(self, nbr, adjacencies, telomeres):
        for (u, v), mult in adjacencies.items():
            if mult != 1:
                raise CanonicalPairError("adjacency multiplicity %d" % mult)
            if nbr[u] != -1 or nbr[v] != -1:
                raise CanonicalPairError("extremity used twice on one side")
            nbr[u] = v
            nbr[v] = u

    def label(self, v):
        return self.labels[v] if self.labels else str(v)


def build_bg(s1, s2):
    """Breakpoint graph of a canonical pair (linear time in n*)."""
    if classify(s1) != SINGULAR or classify(s2) != SINGULAR:
        raise CanonicalPairError("both genomes must be singular")
    if not s1.families.same_family_set(s2.families):
        raise CanonicalPairError("genomes are over different family sets")
    n_star = len(s1.families)
    bg = BreakpointGraph(2 * n_star, n_star,
                         labels=[ext_name(e, s1.families) for e in range(2 * n_star)])
    a1, t1 = adjacencies_and_telomeres(s1)
    if s1.families == s2.families:
        a2, t2 = adjacencies_and_telomeres(s2)
    else:
        # same family set, different interning order: remap s2 onto s1 ids
        remap = [0] * (2 * len(s2.families))
        for name, fid in s2.families.index.items():
            target = s1.families.index[name]
            remap[fid * 2] = target * 2
            remap[fid * 2 + 1] = target * 2 + 1
        raw_a2, raw_t2 = adjacencies_and_telomeres(s2)
        a2 = Counter()
        for (u, v), m in raw_a2.items():
            ru, rv = remap[u], remap[v]
            a2[(ru, rv) if ru <= rv else (rv, ru)] += m
        t2 = Counter({remap[e]: m for e, m in raw_t2.items()})
    bg._add_side(bg.nbr1, a1, t1)
    bg._add_side(bg.nbr2, a2, t2)
    for v in range(2 * n_star):
        bg.tel1[v] = bg.nbr1[v] == -1
        bg.tel2[v] = bg.nbr2[v] == -1
    return bg


class ComponentCensus:
    """Counts of i-cycles (c) and j-paths (p), lengths in edges."""

    __slots__ = ("c", "p")

    def __init__(self, c=None, p=None):
        self.c = dict(c or {})
        self.p = dict(p or {})

    @property
    def c_total(self):
        return sum(self.c.values())

    @property
    def p_even_total(self):
        return sum(n for length, n in self.p.items() if length % 2 == 0)

    def edge_total(self):
        return (sum(l * n for l, n in self.c.items())
                + sum(l * n for l, n in self.p.items()))

    def sigma(self, k):
        """Cumulative score c_2+..+c_k + (p_0+..+p_{k-2})/2 as an exact Fraction."""
        k = validate_k(k)
        cycles = sum(n for length, n in self.c.items() if length <= k)
        paths = sum(n for length, n in self.p.items()
                    if length % 2 == 0 and length <= k - 2)
        return cycles + Fraction(paths, 2)

    def __eq__(self, other):
        return self.c == other.c and self.p == other.p

    def __repr__(self):
        return "ComponentCensus(c=%r, p=%r)" % (self.c, self.p)


def census(bg):
    """Decompose the graph into cycles and paths by iterative traversal."""
    nbr1, nbr2 = bg.nbr1, bg.nbr2
    n = bg.n_vertices
    seen = [False] * n
    c = Counter()
    p = Counter()

    def walk(start, side):
        # follow alternating sides from an endpoint; returns edge count
        length = 0
        v = start
        seen[v] = True
        while True:
            nxt = nbr1[v] if side == 1 else nbr2[v]
            if nxt == -1:
                return length
            length += 1
            v = nxt
            side = 2 if side == 1 else 1
            if seen[v]:
                return length  # can only happen closing a cycle at start
            seen[v] = True

    # paths first: start from vertices missing at least one side
    for v in range(n):
        if seen[v]:
            continue
        d1, d2 = nbr1[v] != -1, nbr2[v] != -1
        if d1 and d2:
            continue
        if not d1 and not d2:
            seen[v] = True
            p[0] += 1
        else:
            p[walk(v, 1 if d1 else 2)] += 1
    # remaining components are cycles
    for v in range(n):
        if not seen[v]:
            length = walk(v, 1)
            if length % 2 != 0:
                raise AssertionError("odd cycle in breakpoint graph")
            c[length] += 1
    return ComponentCensus(c, p)


def distance(cen, n_star, k):
    """d_sigma_k = n* - sigma_k as an exact rational (half-integers arise
    from the path terms)."""
    return Fraction(n_star) - cen.sigma(k)


def sigma_distance(s1, s2, k):
    bg = build_bg(s1, s2)
    return distance(census(bg), bg.n_star, k)


def bg_to_dot(bg, name="breakpoint_graph"):
    """DOT text with edges colored by genome (genome1 blue, genome2 black)
    and telomere status on the vertices."""
    out = ["graph %s {" % name]
    for v in range(bg.n_vertices):
        kinds = []
        if bg.tel1[v]:
            kinds.append("tel1")
        if bg.tel2[v]:
            kinds.append("tel2")
        out.append('  v%d [label="%s"%s];'
                   % (v, bg.label(v),
                      ' comment="%s"' % ",".join(kinds) if kinds else ""))
    for v in range(bg.n_vertices):
        u = bg.nbr1[v]
        if u >= v:
            out.append('  v%d -- v%d [color=blue, genome=s1];' % (v, u))
        u = bg.nbr2[v]
        if u >= v:
            out.append('  v%d -- v%d [color=black, genome=s2];' % (v, u))
    out.append("}")
    return "\n".join(out) + "\n"
