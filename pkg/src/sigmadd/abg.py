"""Ambiguous breakpoint graph of a singular and a duplicated genome.

Vertices are paralog-tagged extremities (4 per family).  The duplicated
genome contributes plain edges; every adjacency gamma-beta of the singular
genome contributes a *square*: the paralogous pair E = {ga-ba, gb-bb} and the
complementary pair Et = {ga-bb, gb-ba}.  Choosing one pair per square
(a solution) induces an ordinary breakpoint graph whose k-score
c_2+..+c_k + (p_0+..+p_{k-2})/2 is to be maximized; the sigma-k double
distance is then 2n* minus the best score.
"""

from collections import Counter
from fractions import Fraction

from . import model
from .bg import BreakpointGraph, census, validate_k
from .model import (DOUBLED, DUPLICATED, SINGULAR, NotDuplicatedError,
                    NotSingularError, adjacencies_and_telomeres, classify,
                    double_adjacencies, paralog_assignment)

ORACLE_CAP_DEFAULT = 24


class FamilyMismatchError(ValueError):
    """The singular and duplicated genomes are over different family sets."""


class FixedSquareError(ValueError):
    """Attempt to switch a square that is fixed."""


class InstanceTooLargeError(ValueError):
    """Too many squares for exhaustive enumeration."""


class UnsupportedKError(ValueError):
    """No structured solver for this k; the oracle must be requested."""


class Square:
    """One ambiguous square: 4 corner vertices and its two paralogous pairs.

    Pair 0 ("straight") joins same-tag corners, pair 1 ("crossed") joins
    opposite tags; double-crossing is the identity.
    """

    __slots__ = ("sid", "gamma", "beta", "corners")

    def __init__(self, sid, gamma, beta):
        self.sid = sid
        self.gamma = gamma
        self.beta = beta
        ga, gb = gamma * 2, gamma * 2 + 1
        ba, bb = beta * 2, beta * 2 + 1
        self.corners = (ga, gb, ba, bb)

    def edges_for(self, bit):
        ga, gb, ba, bb = self.corners
        if bit == 0:
            return ((ga, ba), (gb, bb))
        return ((ga, bb), (gb, ba))

    def all_edges(self):
        """The 4 edges as (u, v, bit-of-pair)."""
        ga, gb, ba, bb = self.corners
        return ((ga, ba, 0), (gb, bb, 0), (ga, bb, 1), (gb, ba, 1))

    def pair_bit(self, u, v):
        """Which pair (0/1) the edge u-v belongs to, or None."""
        ga, gb, ba, bb = self.corners
        e = (u, v) if u <= v else (v, u)
        if e == (ga, ba) or e == (gb, bb):
            return 0
        if e == (ga, bb) or e == (gb, ba):
            return 1
        return None


class AmbiguousBreakpointGraph:
    __slots__ = ("n_star", "families", "squares", "square_at", "dnbr",
                 "s_tel", "kappa_s", "kappa_d", "s_name", "d_name")

    def __init__(self, n_star, families):
        self.n_star = n_star
        self.families = families
        self.squares = []
        self.square_at = [-1] * (4 * n_star)
        self.dnbr = [-1] * (4 * n_star)
        self.s_tel = [False] * (4 * n_star)
        self.kappa_s = 0
        self.kappa_d = 0
        self.s_name = ""
        self.d_name = ""

    @property
    def a_star(self):
        return len(self.squares)

    @property
    def n_vertices(self):
        return 4 * self.n_star

    def d_tel(self, v):
        return self.dnbr[v] == -1

    def vertex_label(self, v):
        fam = self.families.names[v >> 2]
        end = "h" if (v >> 1) & 1 else "t"
        tag = "b" if v & 1 else "a"
        return "%s%s^%s" % (fam, tag, end)

    def count_s_telomeres(self):
        return sum(1 for t in self.s_tel if t)

    def count_d_telomeres(self):
        return sum(1 for v in range(self.n_vertices) if self.dnbr[v] == -1)


def build_abg(s, d):
    """Construct ABG(S, D-check) with squares enumerated in the deterministic
    chromosome-scan order of S and paralogs of D tagged in scan order."""
    if classify(s) != SINGULAR:
        raise NotSingularError("first genome must be singular")
    if classify(d) not in (DUPLICATED, DOUBLED):
        raise NotDuplicatedError("second genome must be duplicated")
    if not s.families.same_family_set(d.families):
        raise FamilyMismatchError("genomes are over different family sets")
    n_star = len(s.families)
    abg = AmbiguousBreakpointGraph(n_star, s.families)
    abg.kappa_s = s.kappa
    abg.kappa_d = d.kappa
    abg.s_name = s.name
    abg.d_name = d.name

    s_adj, s_tel = adjacencies_and_telomeres(s)
    for chrom in s.chromosomes:  # scan order, not Counter order
        genes = chrom.genes
        pairs = [(model.gene_right_ext(genes[i]), model.gene_left_ext(genes[i + 1]))
                 for i in range(len(genes) - 1)]
        if chrom.circular:
            pairs.append((model.gene_right_ext(genes[-1]), model.gene_left_ext(genes[0])))
        for a, b in pairs:
            gamma, beta = (a, b) if a <= b else (b, a)
            sq = Square(len(abg.squares), gamma, beta)
            abg.squares.append(sq)
            for c in sq.corners:
                if abg.square_at[c] != -1:
                    raise FamilyMismatchError("extremity in two adjacencies; not singular")
                abg.square_at[c] = sq.sid
    for ext in s_tel:
        abg.s_tel[ext * 2] = True
        abg.s_tel[ext * 2 + 1] = True
    if abg.a_star != n_star - s.kappa:
        raise AssertionError("square count != n* - kappa(S)")

    # D side: remap families onto S ids, tag paralogs in scan order
    fam_map = [s.families.index[name] for name in d.families.names]
    tags = paralog_assignment(d)
    for chrom, row in zip(d.chromosomes, tags):
        genes = chrom.genes
        verts = []
        for gene, tag in zip(genes, row):
            fam = fam_map[gene.family]
            head = (fam * 2 + model.HEAD) * 2 + tag
            tail = (fam * 2 + model.TAIL) * 2 + tag
            left, right = (tail, head) if gene.forward else (head, tail)
            verts.append((left, right))
        links = [(verts[i][1], verts[i + 1][0]) for i in range(len(verts) - 1)]
        if chrom.circular:
            links.append((verts[-1][1], verts[0][0]))
        for u, v in links:
            if abg.dnbr[u] != -1 or abg.dnbr[v] != -1:
                raise NotDuplicatedError("extremity used twice in duplicated genome")
            abg.dnbr[u] = v
            abg.dnbr[v] = u
    return abg


class Solution:
    """A pair choice per square (bit 0 = straight pair) plus fixed flags."""

    __slots__ = ("bits", "fixed")

    def __init__(self, bits, fixed=None):
        self.bits = tuple(bits)
        self.fixed = tuple(fixed) if fixed is not None else (False,) * len(self.bits)
        if len(self.bits) != len(self.fixed):
            raise ValueError("bits and fixed masks differ in length")

    @classmethod
    def zeros(cls, a_star):
        return cls((0,) * a_star)

    def switch(self, i):
        """Flip square i; switching twice is the identity."""
        if self.fixed[i]:
            raise FixedSquareError("square %d is fixed" % i)
        bits = list(self.bits)
        bits[i] ^= 1
        return Solution(bits, self.fixed)

    def bitstring(self):
        return "".join(str(b) for b in self.bits)

    def __eq__(self, other):
        return self.bits == other.bits

    def __repr__(self):
        return "Solution(%s)" % self.bitstring()


class KScore:
    __slots__ = ("value", "census")

    def __init__(self, value, cen):
        self.value = value
        self.census = cen

    def __repr__(self):
        return "KScore(%s, %r)" % (self.value, self.census)


def _induced_arrays(abg, bits):
    n = abg.n_vertices
    nbr1 = [-1] * n
    for sq, bit in zip(abg.squares, bits):
        for u, v in sq.edges_for(bit):
            nbr1[u] = v
            nbr1[v] = u
    return nbr1


def induce(abg, tau):
    """The plain breakpoint graph selected by a solution: chosen pair edges on
    one side, the duplicated genome's edges on the other."""
    bits = tau.bits if isinstance(tau, Solution) else tau
    bg = BreakpointGraph(abg.n_vertices, abg.n_star,
                         labels=[abg.vertex_label(v) for v in range(abg.n_vertices)])
    bg.nbr1 = _induced_arrays(abg, bits)
    bg.nbr2 = list(abg.dnbr)
    bg.tel1 = list(abg.s_tel)
    bg.tel2 = [abg.dnbr[v] == -1 for v in range(abg.n_vertices)]
    return bg


def census_of_bits(abg, bits):
    bg = BreakpointGraph.__new__(BreakpointGraph)
    bg.n_vertices = abg.n_vertices
    bg.n_star = abg.n_star
    bg.nbr1 = _induced_arrays(abg, bits)
    bg.nbr2 = abg.dnbr
    bg.labels = None
    return census(bg)


def score(abg, tau, k):
    """k-score of a solution, with the census of the induced graph."""
    k = validate_k(k)
    bits = tau.bits if isinstance(tau, Solution) else tau
    cen = census_of_bits(abg, bits)
    return KScore(cen.sigma(k), cen)


def oracle_best(abg, k, require=None, cap=ORACLE_CAP_DEFAULT):
    """Exhaustive maximizer of the k-score over all 2^a* solutions.

    Ties break to the lowest bit pattern.  `require` restricts the search to
    solutions satisfying the predicate.  Instances above `cap` squares are
    refused (the search is exponential by design: it is the test oracle).
    """
    k = validate_k(k)
    a = abg.a_star
    if a > cap:
        raise InstanceTooLargeError("a*=%d exceeds oracle cap %d" % (a, cap))
    best_bits = None
    best_val = None
    bits = [0] * a
    for mask in range(1 << a):
        for i in range(a):
            bits[i] = (mask >> i) & 1
        if require is not None and not require(Solution(bits)):
            continue
        val = census_of_bits(abg, bits).sigma(k)
        if best_val is None or val > best_val:
            best_val = val
            best_bits = tuple(bits)
    if best_bits is None:
        raise ValueError("no solution satisfies the predicate")
    cen = census_of_bits(abg, best_bits)
    return Solution(best_bits), KScore(cen.sigma(k), cen)


def sigma2_double_distance(s, d):
    """Greedy closed form: every adjacency/telomere of D that occurs in 2S is
    fulfilled, so d = 2n* - |A(2S) ^ A(D)| - |T(2S) ^ T(D)| / 2."""
    if classify(d) not in (DUPLICATED, DOUBLED):
        raise NotDuplicatedError("second genome must be duplicated")
    a2s, t2s = double_adjacencies(s)
    ad, td = adjacencies_and_telomeres(d)
    if not s.families.same_family_set(d.families):
        raise FamilyMismatchError("genomes are over different family sets")
    if s.families == d.families:
        remap = None
    else:
        remap = [0] * (2 * len(d.families))
        for name, fid in d.families.index.items():
            tgt = s.families.index[name]
            remap[fid * 2] = tgt * 2
            remap[fid * 2 + 1] = tgt * 2 + 1
    if remap is not None:
        ad = Counter({((remap[u], remap[v]) if remap[u] <= remap[v]
                       else (remap[v], remap[u])): m for (u, v), m in ad.items()})
        td = Counter({remap[e]: m for e, m in td.items()})
    common_adj = sum((a2s & ad).values())
    common_tel = sum((t2s & td).values())
    n_star = len(s.families)
    return 2 * n_star - common_adj - Fraction(common_tel, 2)


def double_distance(s, d, k, method="auto", oracle_cap=ORACLE_CAP_DEFAULT):
    """sigma-k double distance of a singular and a duplicated genome.

    k in {2, 4, 6} runs the structured (linear-time) route; any other even k,
    including infinity, requires method="oracle" and a small instance.
    """
    k = validate_k(k)
    if method == "oracle":
        abg = build_abg(s, d)
        _, ks = oracle_best(abg, k, cap=oracle_cap)
        return 2 * abg.n_star - ks.value
    if k == 2:
        return sigma2_double_distance(s, d)
    if k == 4:
        from .sigma4 import solve_sigma4
        abg = build_abg(s, d)
        _, ks = solve_sigma4(abg)
        return 2 * abg.n_star - ks.value
    if k == 6:
        from .sigma6 import solve_sigma6
        abg = build_abg(s, d)
        _, ks = solve_sigma6(abg)
        return 2 * abg.n_star - ks.value
    raise UnsupportedKError(
        "no structured solver for k=%s; pass method='oracle'" % k)


def abg_to_dot(abg, tau=None, name="ambiguous_breakpoint_graph"):
    """DOT text: black D-edges, red square edges with chosen/masked/open and
    fixed status when a solution is supplied."""
    bits = fixed = None
    if tau is not None:
        bits, fixed = tau.bits, tau.fixed
    out = ["graph %s {" % name]
    for v in range(abg.n_vertices):
        kinds = []
        if abg.s_tel[v]:
            kinds.append("telS")
        if abg.dnbr[v] == -1:
            kinds.append("telD")
        out.append('  v%d [label="%s"%s];'
                   % (v, abg.vertex_label(v),
                      ' comment="%s"' % ",".join(kinds) if kinds else ""))
    for v in range(abg.n_vertices):
        u = abg.dnbr[v]
        if u >= v:
            out.append('  v%d -- v%d [color=black, kind=D];' % (v, u))
    for sq in abg.squares:
        for u, v, bit in sq.all_edges():
            attrs = ["color=red", "square=%d" % sq.sid,
                     "pair=%s" % ("straight" if bit == 0 else "crossed")]
            if bits is not None:
                attrs.append("status=%s" % ("chosen" if bits[sq.sid] == bit else "masked"))
                attrs.append("fixed=%s" % ("true" if fixed[sq.sid] else "false"))
            out.append('  v%d -- v%d [%s];' % (u, v, ", ".join(attrs)))
    out.append("}")
    return "\n".join(out) + "\n"
