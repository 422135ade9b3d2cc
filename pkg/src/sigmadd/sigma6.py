"""Linear-time sigma-6 disambiguation.

Pipeline: fix common-adjacency 2-cycles and symmetric squares, 6-prune the
graph (every edge in no small player is dropped; square classes d/e/gone
auto-resolve), fix triplet components, then solve each remaining ambiguous
component exactly: enumerate its players (valid {4,6}-cycles and {2,4}-paths
over preserved edges), build the weighted intersection graph, and take a
maximum-weight independent set.  The 6-score decomposes as

    sigma_6 = #resolved cycles + #resolved paths / 2 + sum over components

and the final solution's census is checked against that total.
"""

from fractions import Fraction

from .abg import score
from .mwis import StructureError, solve_mwis
from .sigma4 import (SolveState, SolverCorruptionError, fix_symmetric_squares,
                     fix_two_cycles)

GADGET_CAP = 16  # squares a stuck gadget may span before enumeration refuses

CLASS_FIXED = "fixed"
CLASS_A, CLASS_B, CLASS_C, CLASS_D, CLASS_E, CLASS_GONE = "a", "b", "c", "d", "e", "gone"


class DegreeBoundError(AssertionError):
    """A D-edge sits in >2 players or a {6}-square S-edge in !=1 player;
    signals a missed symmetric square or triplet."""


def _skey(u, v):
    return (u, v) if u <= v else (v, u)


def _s_candidates(abg, bits, fixed, v):
    """Possible S-edge partners of v as (partner, sid, bit); one entry when
    the square is already fixed, two otherwise."""
    sid = abg.square_at[v]
    if sid == -1:
        return ()
    sq = abg.squares[sid]
    base = sq.beta * 2 if (v >> 1) == sq.gamma else sq.gamma * 2
    t = v & 1
    if fixed[sid]:
        b = bits[sid]
        return ((base + (t ^ b), sid, b),)
    return ((base + t, sid, 0), (base + (t ^ 1), sid, 1))


# ---------------------------------------------------------------------------
# bounded player search
#
# A player is a valid cycle of length <= 6 or a valid even path of length
# <= 4 whose endpoints are genuine telomeres.  Validity: S-edges from one
# square must come from the same pair.  The search is over "available"
# edges: the present graph during pruning, the preserved graph afterwards.
# ---------------------------------------------------------------------------

class _Avail:
    __slots__ = ("abg", "bits", "fixed", "ps", "pd")

    def __init__(self, abg, bits, fixed, preserved=None):
        self.abg = abg
        self.bits = bits
        self.fixed = fixed
        self.ps, self.pd = preserved if preserved else (None, None)

    def s_cands(self, v):
        cands = _s_candidates(self.abg, self.bits, self.fixed, v)
        if self.ps is None:
            return cands
        return tuple(c for c in cands if _skey(v, c[0]) in self.ps)

    def d_ok(self, u, v):
        return self.pd is None or _skey(u, v) in self.pd

    def s_edge_bit(self, u, v):
        """(sid, bit) when u-v is an available S-edge, else None."""
        for partner, sid, bit in self.s_cands(u):
            if partner == v:
                return (sid, bit)
        return None


def _cycles_through(av, kind, u, v, first_only, out):
    """Alternating simple cycles of <= 6 edges containing edge (kind, u, v)."""
    abg = av.abg
    dnbr = abg.dnbr
    seed = (kind, ) + _skey(u, v)
    sq0 = {}
    if kind == "s":
        hit = av.s_edge_bit(u, v)
        if hit is None:
            return False
        sq0[hit[0]] = hit[1]
    found = [False]

    def rec(cur, nk, edges, vis, sqbits):
        if found[0] and first_only:
            return
        if nk == "d":
            w = dnbr[cur]
            if w == -1 or not av.d_ok(cur, w):
                return
            e = ("d",) + _skey(cur, w)
            if w == u:
                if kind == "s" and len(edges) + 1 <= 6:
                    out.append(frozenset(edges + [e]))
                    found[0] = True
                return
            if w in vis or len(edges) + 1 >= 6:
                return
            rec(w, "s", edges + [e], vis | {w}, sqbits)
        else:
            for partner, sid, bit in av.s_cands(cur):
                prev = sqbits.get(sid)
                if prev is not None and prev != bit:
                    continue
                e = ("s",) + _skey(cur, partner)
                if partner == u:
                    if kind == "d" and len(edges) + 1 <= 6:
                        out.append(frozenset(edges + [e]))
                        found[0] = True
                        if first_only:
                            return
                    continue
                if partner in vis or len(edges) + 1 >= 6:
                    continue
                nb = dict(sqbits)
                nb[sid] = bit
                rec(partner, "d", edges + [e], vis | {partner}, nb)

    rec(v, "d" if kind == "s" else "s", [seed], {u, v}, sq0)
    return found[0]


def _rays(av, start, nk, banned, max_extra):
    """Alternating extensions from `start` that end at a genuine telomere.

    Returns tuples (edges, vis, sqbits); a ray may be empty when the very
    first step is already a genuine telomere end.
    """
    abg = av.abg
    dnbr = abg.dnbr
    results = []

    def rec(cur, k, edges, vis, sqbits):
        if k == "d":
            w = dnbr[cur]
            if w == -1:
                results.append((tuple(edges), frozenset(vis), dict(sqbits)))
                return
            if not av.d_ok(cur, w) or len(edges) >= max_extra or w in vis or w in banned:
                return
            rec(w, "s", edges + [("d",) + _skey(cur, w)], vis | {w}, sqbits)
        else:
            if abg.s_tel[cur]:
                results.append((tuple(edges), frozenset(vis), dict(sqbits)))
                return
            if len(edges) >= max_extra:
                return
            for partner, sid, bit in av.s_cands(cur):
                prev = sqbits.get(sid)
                if prev is not None and prev != bit:
                    continue
                if partner in vis or partner in banned:
                    continue
                nb = dict(sqbits)
                nb[sid] = bit
                rec(partner, "d", edges + [("s",) + _skey(cur, partner)], vis | {partner}, nb)

    rec(start, nk, [], {start}, {})
    return results


def _paths_through(av, kind, u, v, first_only, out):
    """Valid even paths of <= 4 edges containing edge (kind, u, v)."""
    seed = (kind,) + _skey(u, v)
    sq0 = {}
    if kind == "s":
        hit = av.s_edge_bit(u, v)
        if hit is None:
            return False
        sq0[hit[0]] = hit[1]
    nk = "d" if kind == "s" else "s"
    found = False
    left = _rays(av, u, nk, {v}, 3)
    if not left:
        return False
    right = _rays(av, v, nk, {u}, 3)
    for el, vl, sl in left:
        for er, vr, sr in right:
            total = 1 + len(el) + len(er)
            if total > 4 or total % 2 != 0:
                continue
            if (vl & vr) - {u, v}:
                continue
            merged = dict(sq0)
            ok = True
            for d in (sl, sr):
                for sid, bit in d.items():
                    prev = merged.get(sid)
                    if prev is not None and prev != bit:
                        ok = False
                        break
                    merged[sid] = bit
                if not ok:
                    break
            if not ok:
                continue
            out.append(frozenset((seed,) + el + er))
            found = True
            if first_only:
                return True
    return found


def _find_any_player(av, kind, u, v):
    out = []
    if _cycles_through(av, kind, u, v, True, out):
        return out[0]
    out = []
    if _paths_through(av, kind, u, v, True, out):
        return out[0]
    return None


def _all_players_through(av, kind, u, v):
    out = []
    _cycles_through(av, kind, u, v, False, out)
    _paths_through(av, kind, u, v, False, out)
    return out


# ---------------------------------------------------------------------------
# pruning
# ---------------------------------------------------------------------------

class Component:
    """An ambiguous pruned-graph component (at least one {6}-square);
    resolved components are only counted, see PrunedGraph.resolved_components."""

    __slots__ = ("cid", "vertices", "six_squares", "kind", "length")

    def __init__(self, cid, vertices, six_squares, kind, length=0):
        self.cid = cid
        self.vertices = vertices
        self.six_squares = six_squares
        self.kind = kind
        self.length = length

    def __repr__(self):
        return "Component(%d, %s, %d vertices, %d squares)" % (
            self.cid, self.kind, len(self.vertices), len(self.six_squares))


class PrunedGraph:
    __slots__ = ("abg", "preserved_s", "preserved_d", "square_class",
                 "components", "resolved_components", "resolved_cycles",
                 "resolved_paths", "snbrs", "present_s_edges")

    def __init__(self, abg):
        self.abg = abg
        self.preserved_s = set()
        self.preserved_d = set()
        self.square_class = [CLASS_GONE] * abg.a_star
        self.components = []            # ambiguous components only
        self.resolved_components = []   # (kind, length) of trivial components
        self.resolved_cycles = 0
        self.resolved_paths = 0
        self.snbrs = {}
        self.present_s_edges = 0

    def ambiguous(self):
        return self.components

    def resolved_score(self):
        return self.resolved_cycles + Fraction(self.resolved_paths, 2)


def prune(abg, state):
    """6-prune: drop every edge not in a valid <=6-cycle / <=4-even-path,
    auto-fix squares left with at most one usable pair, and split the rest
    into resolved and ambiguous components."""
    bits, fixed = state.bits, state.fixed
    dnbr = abg.dnbr
    s_tel = abg.s_tel
    pg = PrunedGraph(abg)
    ps, pd = pg.preserved_s, pg.preserved_d
    av = _Avail(abg, bits, fixed)

    def mark(player):
        for kind, a, b in player:
            (ps if kind == "s" else pd).add((a, b))

    for sq in abg.squares:
        edges = (sq.edges_for(bits[sq.sid]) if fixed[sq.sid]
                 else [e[:2] for e in sq.all_edges()])
        for u, v in edges:
            pg.present_s_edges += 1
            if (u, v) in ps:
                continue
            if dnbr[u] == v:  # 2-cycle
                ps.add((u, v))
                pd.add((u, v))
                continue
            if dnbr[u] == -1:  # possible 2-path ending at u
                w = dnbr[v]
                if w != -1 and s_tel[w]:
                    ps.add((u, v))
                    pd.add(_skey(v, w))
                    continue
            if dnbr[v] == -1:
                w = dnbr[u]
                if w != -1 and s_tel[w]:
                    ps.add((u, v))
                    pd.add(_skey(u, w))
                    continue
            player = _find_any_player(av, "s", u, v)
            if player is not None:
                mark(player)
    for v in range(abg.n_vertices):
        u = dnbr[v]
        if u <= v:
            continue
        if (v, u) in pd:
            continue
        player = _find_any_player(av, "d", v, u)
        if player is not None:
            mark(player)

    # square preservation classes; d/e/gone auto-resolve
    for sq in abg.squares:
        sid = sq.sid
        if fixed[sid]:
            pg.square_class[sid] = CLASS_FIXED
            continue
        kept = [bit for u, v, bit in sq.all_edges() if (u, v) in ps]
        n0, n1 = kept.count(0), kept.count(1)
        if n0 + n1 == 4:
            pg.square_class[sid] = CLASS_A
        elif n0 + n1 == 3:
            pg.square_class[sid] = CLASS_B
        elif n0 + n1 == 2 and n0 and n1:
            pg.square_class[sid] = CLASS_C
        elif n0 + n1 == 2:
            pg.square_class[sid] = CLASS_D
            state.fix(sid, 0 if n0 else 1)
        elif n0 + n1 == 1:
            pg.square_class[sid] = CLASS_E
            state.fix(sid, 0 if n0 else 1)
        else:
            pg.square_class[sid] = CLASS_GONE
            state.fix(sid, 0)

    # components of the preserved graph; resolved ones (no {6}-square) are
    # counted inline, most of them 2-cycles on large near-identical inputs
    snbrs = {}
    for u, v in ps:
        snbrs.setdefault(u, []).append(v)
        snbrs.setdefault(v, []).append(u)
    pg.snbrs = snbrs
    nv = abg.n_vertices
    d_pres = bytearray(nv)
    for u, v in pd:
        d_pres[u] = 1
        d_pres[v] = 1
    square_at = abg.square_at
    resolved = pg.resolved_components
    comp_of = [-1] * nv
    for v0 in range(nv):
        if comp_of[v0] != -1:
            continue
        sn = snbrs.get(v0)
        if sn is None and not d_pres[v0]:
            comp_of[v0] = -2
            if s_tel[v0] and dnbr[v0] == -1:
                pg.resolved_paths += 1
                resolved.append(("path", 0))
            continue
        u = dnbr[v0]
        if (d_pres[v0] and sn is not None and len(sn) == 1 and sn[0] == u
                and comp_of[u] == -1):
            snu = snbrs.get(u)
            if snu is not None and len(snu) == 1 and snu[0] == v0:
                comp_of[v0] = comp_of[u] = -3  # separated 2-cycle
                pg.resolved_cycles += 1
                resolved.append(("cycle", 2))
                continue
        cid = len(pg.components)
        stack = [v0]
        comp_of[v0] = cid
        vertices = []
        edge_deg_sum = 0
        ends = 0
        bad_degree = False
        has_six = False
        while stack:
            x = stack.pop()
            vertices.append(x)
            deg = 0
            sx = snbrs.get(x)
            if sx:
                deg = len(sx)
                for y in sx:
                    if comp_of[y] == -1:
                        comp_of[y] = cid
                        stack.append(y)
            if d_pres[x]:
                deg += 1
                y = dnbr[x]
                if comp_of[y] == -1:
                    comp_of[y] = cid
                    stack.append(y)
            sid = square_at[x]
            if sid != -1 and not fixed[sid]:
                has_six = True
            edge_deg_sum += deg
            if deg == 1:
                ends += 1
            elif deg != 2:
                bad_degree = True
        if has_six:
            vertices.sort()
            six = sorted({square_at[x] for x in vertices
                          if square_at[x] != -1 and not fixed[square_at[x]]})
            pg.components.append(Component(cid, vertices, six, "ambiguous"))
            continue
        # no {6}-square: must be a valid cycle or even path (pruning fixed point)
        edges = edge_deg_sum // 2
        if bad_degree:
            raise SolverCorruptionError("resolved component with branch vertex")
        if ends == 0:
            if edges % 2 or edges > 6:
                raise SolverCorruptionError("resolved cycle of length %d" % edges)
            pg.resolved_cycles += 1
            resolved.append(("cycle", edges))
        elif ends == 2:
            if edges % 2 or edges > 4:
                raise SolverCorruptionError("resolved path of length %d" % edges)
            pg.resolved_paths += 1
            resolved.append(("path", edges))
        else:
            raise SolverCorruptionError("component with %d endpoints" % ends)
    return pg


def pg_to_dot(pg, name="pruned_graph"):
    """DOT text of the preserved graph; squares carry their preservation class."""
    abg = pg.abg
    out = ["graph %s {" % name]
    used = sorted({v for e in pg.preserved_s for v in e}
                  | {v for e in pg.preserved_d for v in e})
    for v in used:
        out.append('  v%d [label="%s"];' % (v, abg.vertex_label(v)))
    for u, v in sorted(pg.preserved_d):
        out.append('  v%d -- v%d [color=black, kind=D];' % (u, v))
    for u, v in sorted(pg.preserved_s):
        sid = abg.square_at[u]
        out.append('  v%d -- v%d [color=red, square=%d, class=%s];'
                   % (u, v, sid, pg.square_class[sid]))
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# local (per-component) scoring by direct enumeration
# ---------------------------------------------------------------------------

def _local_census(abg, state, pg, comp, assignment):
    """Half-unit 6-score of one pruned component under an assignment of its
    {6}-squares.  Induced pieces that would leave the pruned graph through a
    dropped edge cannot be players and score 0."""
    dnbr = abg.dnbr
    s_tel = abg.s_tel
    ps, pd = pg.preserved_s, pg.preserved_d
    bits, fixed = state.bits, state.fixed
    visited = set()
    total = 0

    def s_step(v):
        """(next_vertex | None, genuine_end, tainted)"""
        sid = abg.square_at[v]
        if sid == -1:
            return None, True, False
        bit = assignment.get(sid)
        if bit is None:
            bit = bits[sid]
        sq = abg.squares[sid]
        base = sq.beta * 2 if (v >> 1) == sq.gamma else sq.gamma * 2
        w = base + ((v & 1) ^ bit)
        if _skey(v, w) in ps:
            return w, False, False
        return None, False, True

    def d_step(v):
        w = dnbr[v]
        if w == -1:
            return None, True, False
        if _skey(v, w) in pd:
            return w, False, False
        return None, False, True

    for v0 in comp.vertices:
        if v0 in visited:
            continue
        visited.add(v0)
        tainted = False
        genuine_ends = 0
        edges = 0
        closed = False
        for first_kind in ("s", "d"):
            if closed:
                break
            v = v0
            kind = first_kind
            while True:
                w, genuine, taint = s_step(v) if kind == "s" else d_step(v)
                if w is None:
                    if taint:
                        tainted = True
                    else:
                        genuine_ends += 1
                    break
                edges += 1
                if w == v0:
                    closed = True
                    break
                if w in visited:  # only possible when closing at v0
                    raise SolverCorruptionError("walk re-entered a visited vertex")
                visited.add(w)
                v = w
                kind = "d" if kind == "s" else "s"
        if tainted:
            continue
        if closed:
            if edges <= 6:
                total += 2
        elif genuine_ends == 2 and edges % 2 == 0 and edges <= 4:
            total += 1
    return total


def _component_best_by_enumeration(abg, state, pg, comp):
    """Exact sigma-6 optimum of one component by trying all square
    assignments (bounded use only); ties resolve to the lowest bit pattern."""
    sids = comp.six_squares
    if len(sids) > GADGET_CAP:
        raise StructureError("component enumeration over %d squares" % len(sids))
    best_bits, best_val = None, -1
    for mask in range(1 << len(sids)):
        assignment = {sid: (mask >> i) & 1 for i, sid in enumerate(sids)}
        val = _local_census(abg, state, pg, comp, assignment)
        if val > best_val:
            best_val = val
            best_bits = assignment
    return best_bits, best_val


# ---------------------------------------------------------------------------
# triplets
# ---------------------------------------------------------------------------

class Triplet:
    __slots__ = ("squares", "kind", "score_halfunits")

    def __init__(self, squares, kind, score_halfunits):
        self.squares = squares
        self.kind = kind  # saturated | unsaturated
        self.score_halfunits = score_halfunits

    @property
    def score(self):
        return Fraction(self.score_halfunits, 2)

    def __repr__(self):
        return "Triplet(squares=%r, %s, score=%s)" % (
            list(self.squares), self.kind, self.score)


def _triplet_shape(abg, pg, comp):
    """None, or 'saturated'/'unsaturated' when the component is three
    pairwise D-connected ambiguous squares with at most two corners missing
    (in distinct squares)."""
    if len(comp.six_squares) != 3:
        return None
    corner_sets = {sid: set(abg.squares[sid].corners) for sid in comp.six_squares}
    corners = set()
    for cs in corner_sets.values():
        corners |= cs
    if not set(comp.vertices) <= corners:
        return None
    internal_d = set()
    matched = set()
    for v in comp.vertices:
        u = abg.dnbr[v]
        if u == -1 or _skey(v, u) not in pg.preserved_d:
            continue
        if u not in corners:
            return None
        sv = abg.square_at[v]
        su = abg.square_at[u]
        if sv == su:
            return None
        internal_d.add(_skey(v, u))
        matched.update((v, u))
    pairs = {frozenset((abg.square_at[u], abg.square_at[v])) for u, v in internal_d}
    if len(pairs) != 3:
        return None
    missing = corners - matched
    if len(missing) > 2:
        return None
    if len({abg.square_at[v] for v in missing}) != len(missing):
        return None
    return "saturated" if len(internal_d) == 6 else "unsaturated"


def detect_and_fix_triplets(abg, state, pg=None):
    """Find triplet components of the pruned graph, fix each to its local
    optimum, and report them.  Downstream phases assume none remain."""
    if pg is None:
        pg = prune(abg, state)
    found = []
    for comp in pg.ambiguous():
        kind = _triplet_shape(abg, pg, comp)
        if kind is None:
            continue
        assignment, val = _component_best_by_enumeration(abg, state, pg, comp)
        for sid in sorted(assignment):
            state.fix(sid, assignment[sid])
        found.append(Triplet(tuple(comp.six_squares), kind, val))
    return found


# ---------------------------------------------------------------------------
# players and the intersection graph
# ---------------------------------------------------------------------------

class Player:
    __slots__ = ("pid", "kind", "edges", "vertices", "s_edges", "d_edges",
                 "endpoints", "inner_d", "weight", "demands")

    def __init__(self, pid, edges, abg, state):
        self.pid = pid
        self.edges = edges
        self.s_edges = frozenset(e[1:] for e in edges if e[0] == "s")
        self.d_edges = frozenset(e[1:] for e in edges if e[0] == "d")
        verts = set()
        for e in edges:
            verts.update(e[1:])
        self.vertices = frozenset(verts)
        degree = {}
        for e in edges:
            for v in e[1:]:
                degree[v] = degree.get(v, 0) + 1
        ends = sorted(v for v, d in degree.items() if d == 1)
        n_edges = len(edges)
        if not ends:
            self.kind = "cycle%d" % n_edges
            self.weight = 2
            self.endpoints = ()
            self.inner_d = frozenset()
        else:
            self.kind = "path%d" % n_edges
            self.weight = 1
            self.endpoints = tuple(ends)
            inner = [e for e in self.d_edges
                     if not (abg.s_tel[e[0]] or abg.s_tel[e[1]])]
            self.inner_d = frozenset(inner)
        demands = {}
        for u, v in self.s_edges:
            sid = abg.square_at[u]
            if sid != -1 and not state.fixed[sid]:
                bit = abg.squares[sid].pair_bit(u, v)
                if sid in demands and demands[sid] != bit:
                    raise SolverCorruptionError("player with incompatible edges")
                demands[sid] = bit
        self.demands = tuple(sorted(demands.items()))

    def is_cycle(self):
        return self.weight == 2

    def __repr__(self):
        return "Player(%d, %s)" % (self.pid, self.kind)


class CycleBubble:
    __slots__ = ("cycles", "is_line", "balanced", "score_straight",
                 "score_complement", "straight", "complement")

    def __init__(self, cycles, is_line, balanced, score_straight,
                 score_complement, straight, complement):
        self.cycles = cycles
        self.is_line = is_line
        self.balanced = balanced
        self.score_straight = score_straight
        self.score_complement = score_complement
        self.straight = straight
        self.complement = complement

    def __repr__(self):
        return "CycleBubble(%d cycles, line=%s, balanced=%s)" % (
            len(self.cycles), self.is_line, self.balanced)


class DoubleLine:
    __slots__ = ("columns", "cyclic", "twisted", "kind")

    def __init__(self, columns, cyclic, twisted, kind):
        self.columns = columns  # [(upper pid, lower pid), ...]
        self.cyclic = cyclic
        self.twisted = twisted
        self.kind = kind  # isolated | terminal | link-single-sided | link-alternate | other

    @property
    def length(self):
        return len(self.columns)

    def __repr__(self):
        return "DoubleLine(length=%d, %s)" % (self.length, self.kind)


class PathLine:
    __slots__ = ("pids", "cyclic")

    def __init__(self, pids, cyclic):
        self.pids = pids
        self.cyclic = cyclic

    def __repr__(self):
        return "PathLine(%r, cyclic=%s)" % (list(self.pids), self.cyclic)


class IntersectionGraph:
    __slots__ = ("players", "adj", "bubbles", "double_lines", "path_lines",
                 "component")

    def __init__(self, players, adj, component):
        self.players = players
        self.adj = adj
        self.component = component
        self.bubbles = []
        self.double_lines = []
        self.path_lines = []


def _enumerate_players(abg, state, pg, comp):
    av = _Avail(abg, state.bits, state.fixed, (pg.preserved_s, pg.preserved_d))
    comp_vertices = set(comp.vertices)
    keys = {}
    ordered = []
    for v in comp.vertices:
        for w in pg.snbrs.get(v, ()):
            if w < v:
                continue
            for player in _all_players_through(av, "s", v, w):
                if player not in keys:
                    keys[player] = None
                    ordered.append(player)
    ordered.sort(key=lambda p: sorted(p))
    players = [Player(pid, edges, abg, state) for pid, edges in enumerate(ordered)]
    for p in players:
        if not p.vertices <= comp_vertices:
            raise SolverCorruptionError("player leaves its component")
    # degree bounds: any D-edge sits in at most two players, and any S-edge
    # of a still-ambiguous square in exactly one
    d_count = {}
    s_count = {}
    for p in players:
        for e in p.d_edges:
            d_count[e] = d_count.get(e, 0) + 1
        for e in p.s_edges:
            s_count[e] = s_count.get(e, 0) + 1
    for e, n in d_count.items():
        if n > 2:
            raise DegreeBoundError(
                "D-edge %r in %d players (missed triplet or symmetric square?)" % (e, n))
    for v in comp.vertices:
        sid = abg.square_at[v]
        if sid == -1 or state.fixed[sid]:
            continue
        for w in pg.snbrs.get(v, ()):
            if w < v or abg.square_at[w] != sid:
                continue
            n = s_count.get((v, w), 0)
            if n != 1:
                raise DegreeBoundError(
                    "{6}-square S-edge %r in %d players" % ((v, w), n))
    return players


def build_intersection_graph(abg, state, pg, comp):
    """Players of one ambiguous component, conflict edges between vertex-
    sharing players, and the gadget decomposition records."""
    players = _enumerate_players(abg, state, pg, comp)
    by_vertex = {}
    for p in players:
        for v in p.vertices:
            by_vertex.setdefault(v, []).append(p.pid)
    adj = {p.pid: set() for p in players}
    for v, pids in by_vertex.items():
        for i in range(len(pids)):
            for j in range(i + 1, len(pids)):
                adj[pids[i]].add(pids[j])
                adj[pids[j]].add(pids[i])
    ig = IntersectionGraph(players, adj, comp)
    _decompose_gadgets(abg, state, pg, ig)
    return ig


def _decompose_gadgets(abg, state, pg, ig):
    players = ig.players
    adj = ig.adj
    cycles = [p.pid for p in players if p.is_cycle()]
    cycle_set = set(cycles)
    seen = set()
    for c0 in cycles:
        if c0 in seen:
            continue
        group = sorted(_closure(c0, lambda x: adj[x] & cycle_set))
        seen.update(group)
        intra_deg = {c: len(adj[c] & set(group)) for c in group}
        is_line = all(d <= 2 for d in intra_deg.values())
        if not is_line and len(group) > 8:
            raise StructureError("non-line cycle-bubble with %d cycles" % len(group))
        straight = straight_solution(abg, state, pg, ig, group)
        ig.bubbles.append(CycleBubble(
            tuple(group), is_line, straight.balanced,
            straight.score_straight, straight.score_complement,
            straight.assign, straight.assign_complement))
        if is_line and len(group) >= 4:
            line = _order_chain(group, adj, cycle_set)
            if line is not None:  # open chain: plug connections only
                interior = set(line[1:-1])
                for c in interior:
                    for q in adj[c]:
                        if q not in cycle_set:
                            raise StructureError(
                                "non-plug connection on a cycle-line of length %d" % len(line))
    path_set = {p.pid for p in players if not p.is_cycle()}
    rung = {}
    for p in players:
        if p.pid not in path_set or p.kind != "path4":
            continue
        for q in adj[p.pid]:
            if q in path_set and players[q].kind == "path4":
                shared = p.inner_d & players[q].inner_d
                if shared:
                    if p.pid in rung and rung[p.pid] != q:
                        raise DegreeBoundError("4-path with two rung partners")
                    rung[p.pid] = q
    in_double = set()
    for pid in sorted(rung):
        if pid in in_double or rung[rung[pid]] != pid:
            continue
        dl = _walk_double_line(players, adj, rung, pid, path_set)
        if dl is not None:
            ig.double_lines.append(dl)
            for a, b in dl.columns:
                in_double.update((a, b))
    rest = sorted(path_set - in_double)
    rest_set = set(rest)
    seen = set()
    for p0 in rest:
        if p0 in seen:
            continue
        group = sorted(_closure(p0, lambda x: adj[x] & rest_set))
        seen.update(group)
        chain = _order_chain(group, adj, rest_set)
        if chain is not None:
            ig.path_lines.append(PathLine(tuple(chain), cyclic=False))
        elif all(len(adj[c] & set(group)) == 2 for c in group):
            ig.path_lines.append(PathLine(tuple(group), cyclic=True))


def _closure(seed, nbrs):
    out = {seed}
    stack = [seed]
    while stack:
        x = stack.pop()
        for y in nbrs(x):
            if y not in out:
                out.add(y)
                stack.append(y)
    return out


def _order_chain(group, adj, within):
    """Order a degree-<=2 group as an open chain; None when it is closed or
    branching."""
    gset = set(group)
    degs = {x: len(adj[x] & gset & within) for x in group}
    ends = sorted(x for x, d in degs.items() if d <= 1)
    if len(group) == 1:
        return list(group)
    if len(ends) != 2 or any(d > 2 for d in degs.values()):
        return None
    chain = [ends[0]]
    prev = None
    cur = ends[0]
    while True:
        nxt = [y for y in sorted(adj[cur] & gset & within) if y != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        chain.append(cur)
    return chain if len(chain) == len(group) else None


def _walk_double_line(players, adj, rung, start, path_set):
    """Assemble the ladder containing the rung pair (start, rung[start])."""
    def tel_nbrs(pid):
        outv = []
        p = players[pid]
        for q in adj[pid]:
            if q in path_set and rung.get(q) is not None and q != rung.get(pid):
                if set(players[q].endpoints) & set(p.endpoints) or \
                   players[q].d_edges & p.d_edges - p.inner_d:
                    outv.append(q)
        return sorted(outv)

    first = (start, rung[start])
    cols = [first]
    used = {start, rung[start]}
    cyclic = twisted = False
    for direction in (0, 1):
        if cyclic:
            break
        prev_top, prev_bot = cols[-1] if direction == 0 else cols[0]
        while True:
            tops = [q for q in tel_nbrs(prev_top) if q not in used or
                    (q in first and len(cols) > 2)]
            nxt = None
            for t in tops:
                b = rung.get(t)
                if b is None:
                    continue
                if b in tel_nbrs(prev_bot) or (t in first and b in first):
                    nxt = (t, b)
                    break
                if b in first and t in first:
                    nxt = (t, b)
                    break
            if nxt is None:
                break
            if nxt[0] in first or nxt[1] in first:
                cyclic = True
                twisted = nxt[0] == first[1]
                break
            cols = cols + [nxt] if direction == 0 else [nxt] + cols
            used.update(nxt)
            prev_top, prev_bot = nxt
    outer = []
    members = {pid for col in cols for pid in col}
    for col_idx, col in enumerate(cols):
        for side, pid in enumerate(col):
            for q in adj[pid]:
                if q not in members:
                    outer.append((col_idx, side, q))
    end_cols = {0, len(cols) - 1}
    if cyclic or not outer:
        kind = "isolated"
    elif any(c not in end_cols for c, _, _ in outer):
        kind = "other"
    elif len(outer) == 1:
        kind = "terminal"
    elif len(outer) == 2 and (len(cols) == 1 or outer[0][0] != outer[1][0]):
        # single-sided: both outer lines attach to the same saturated line
        kind = ("link-single-sided" if outer[0][1] == outer[1][1]
                else "link-alternate")
    else:
        kind = "other"
    return DoubleLine(tuple(cols), cyclic, twisted, kind)


# ---------------------------------------------------------------------------
# straight bubble solution: one edge choice propagated through a bubble
# ---------------------------------------------------------------------------

class StraightSolution:
    __slots__ = ("assign", "assign_complement", "score_straight",
                 "score_complement", "coherent")

    def __init__(self, assign, assign_complement, score_straight,
                 score_complement, coherent=True):
        self.assign = assign
        self.assign_complement = assign_complement
        self.score_straight = score_straight
        self.score_complement = score_complement
        self.coherent = coherent

    @property
    def balanced(self):
        if not self.coherent:
            return None
        return self.score_straight == self.score_complement


def straight_solution(abg, state, pg, ig, bubble_pids):
    """The straight solution of a cycle-bubble and its all-switched
    complement, both scored over the players its squares fully determine.

    Choosing one S-edge forces the unique cycle through it, square by
    square; the whole propagation is equivalent to 2-coloring the bubble's
    cycles (paralogous-pair sharing forces equal status, a demand clash
    forces opposite status) and reading the square bits off the colors,
    starting with the lowest cycle induced.
    """
    players = ig.players
    cycles = sorted(bubble_pids)
    color = {}
    for seed in cycles:
        if seed in color:
            continue
        color[seed] = 1
        stack = [seed]
        while stack:
            p = stack.pop()
            pd = dict(players[p].demands)
            for q in cycles:
                if q == p:
                    continue
                rel = None
                for sid, bit in players[q].demands:
                    if sid in pd:
                        want = "equal" if pd[sid] == bit else "opposite"
                        if rel is not None and rel != want:
                            return StraightSolution({}, {}, 0, 0, coherent=False)
                        rel = want
                if rel is None:
                    continue
                want = color[p] if rel == "equal" else 1 - color[p]
                if q in color:
                    if color[q] != want:
                        return StraightSolution({}, {}, 0, 0, coherent=False)
                else:
                    color[q] = want
                    stack.append(q)

    # induced cycles demand their own bits; broken ones get the complement,
    # so that switching every square induces exactly the other color class
    assign = {}
    for p in cycles:
        for sid, bit in players[p].demands:
            want = bit if color[p] == 1 else bit ^ 1
            if assign.get(sid, want) != want:
                return StraightSolution({}, {}, 0, 0, coherent=False)
            assign[sid] = want
    complement = {sid: bit ^ 1 for sid, bit in assign.items()}

    def score_of(a):
        total = 0
        for p in ig.players:
            if not p.demands:
                continue
            if all(sid in a and a[sid] == bit for sid, bit in p.demands):
                total += p.weight
        return total

    return StraightSolution(assign, complement, score_of(assign),
                            score_of(complement))


# ---------------------------------------------------------------------------
# component solve and the full pipeline
# ---------------------------------------------------------------------------

def solve_component(abg, state, pg, comp, ig=None):
    """Fix the {6}-squares of one ambiguous component optimally; returns the
    component's half-unit score (= max weight independent set of its
    intersection graph)."""
    if ig is None:
        ig = build_intersection_graph(abg, state, pg, comp)
    weights = {p.pid: p.weight for p in ig.players}
    value, selected = solve_mwis(weights, ig.adj)
    for pid in sorted(selected):
        for sid, bit in ig.players[pid].demands:
            state.fix(sid, bit)
    return value, ig


class Sigma6Result:
    __slots__ = ("solution", "kscore", "stats", "pruned", "triplets", "graphs")

    def __init__(self, solution, kscore, stats, pruned, triplets, graphs):
        self.solution = solution
        self.kscore = kscore
        self.stats = stats
        self.pruned = pruned
        self.triplets = triplets
        self.graphs = graphs


def solve_sigma6_detailed(abg):
    state = SolveState(abg)
    rep1 = fix_two_cycles(abg, state)
    rep2 = fix_symmetric_squares(abg, state)
    triplets = []
    while True:
        pg = prune(abg, state)
        new = detect_and_fix_triplets(abg, state, pg)
        if not new:
            break
        triplets.extend(new)
    total = 2 * pg.resolved_cycles + pg.resolved_paths
    graphs = []
    comp_stats = []
    for comp in pg.ambiguous():
        value, ig = solve_component(abg, state, pg, comp)
        total += value
        graphs.append(ig)
        comp_stats.append({
            "squares": len(comp.six_squares),
            "players": len(ig.players),
            "score": Fraction(value, 2),
            "bubbles": len(ig.bubbles),
            "double_lines": len(ig.double_lines),
            "path_lines": len(ig.path_lines),
        })
    solution = state.solution()
    kscore = score(abg, solution, 6)
    if kscore.value != Fraction(total, 2):
        raise SolverCorruptionError(
            "census score %s != decomposition %s" % (kscore.value, Fraction(total, 2)))
    stats = {
        "two_cycles_fixed": rep1.two_cycles_fixed,
        "zero_paths": rep1.zero_paths,
        "symmetric_squares_fixed": rep2.symmetric_squares_fixed,
        "triplets": len(triplets),
        "present_s_edges": pg.present_s_edges,
        "preserved_s_edges": len(pg.preserved_s),
        "preserved_d_edges": len(pg.preserved_d),
        "resolved_cycles": pg.resolved_cycles,
        "resolved_paths": pg.resolved_paths,
        "ambiguous_components": len(pg.ambiguous()),
        "components": comp_stats,
    }
    return Sigma6Result(solution, kscore, stats, pg, triplets, graphs)


def solve_sigma6(abg):
    """Optimal sigma-6 disambiguation; score equals the exhaustive oracle's."""
    res = solve_sigma6_detailed(abg)
    return res.solution, res.kscore
