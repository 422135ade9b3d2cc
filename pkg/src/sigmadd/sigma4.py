"""Greedy linear-time solver for the sigma-4 disambiguation, plus the two
preprocessing passes shared with the sigma-6 solver: fixing the squares of
common-adjacency 2-cycles (which every optimal solution induces, for any k)
and fixing symmetric squares (whose two resolutions always tie).
"""

from .abg import Solution, score


class SolverCorruptionError(AssertionError):
    """Contradictory square fixes; impossible on well-formed input."""


class FixReport:
    __slots__ = ("two_cycles_fixed", "zero_paths", "symmetric_squares_fixed")

    def __init__(self, two_cycles_fixed=0, zero_paths=0, symmetric_squares_fixed=0):
        self.two_cycles_fixed = two_cycles_fixed
        self.zero_paths = zero_paths
        self.symmetric_squares_fixed = symmetric_squares_fixed

    def __repr__(self):
        return ("FixReport(two_cycles_fixed=%d, zero_paths=%d, "
                "symmetric_squares_fixed=%d)" % (
                    self.two_cycles_fixed, self.zero_paths,
                    self.symmetric_squares_fixed))


class SolveState:
    """Mutable working copy of a solution while squares get fixed."""

    __slots__ = ("abg", "bits", "fixed")

    def __init__(self, abg):
        self.abg = abg
        self.bits = [0] * abg.a_star
        self.fixed = [False] * abg.a_star

    def fix(self, sid, bit):
        if self.fixed[sid]:
            if self.bits[sid] != bit:
                raise SolverCorruptionError("square %d refixed differently" % sid)
            return False
        self.bits[sid] = bit
        self.fixed[sid] = True
        return True

    def solution(self):
        return Solution(self.bits, self.fixed)


def fix_two_cycles(abg, state):
    """Resolve every square holding an S-edge that parallels a D-edge, so all
    existing 2-cycles are induced (they are optimal for every k), and count
    the 0-paths (vertices telomeric on both sides)."""
    report = FixReport()
    dnbr = abg.dnbr
    for v in range(abg.n_vertices):
        if abg.s_tel[v] and dnbr[v] == -1:
            report.zero_paths += 1
    for sq in abg.squares:
        for u, v, bit in sq.all_edges():
            if dnbr[u] == v:
                if state.fix(sq.sid, bit):
                    report.two_cycles_fixed += 1
    return report


def _pair_is_symmetric(abg, x, y):
    """x, y are the two paralogous corners on one side of a square."""
    dx, dy = abg.dnbr[x], abg.dnbr[y]
    if dx == y:
        return True  # D-edge joins the paralogous pair
    if dx == -1 and dy == -1:
        return True  # D-telomeres on the pair
    if dx != -1 and dy != -1 and abg.s_tel[dx] and abg.s_tel[dy]:
        return True  # both D-edges dead-end in S-telomeres
    return False


def fix_symmetric_squares(abg, state):
    """Fix every symmetric square to its straight pair; the two resolutions
    provably score the same for any k."""
    report = FixReport()
    for sq in abg.squares:
        if state.fixed[sq.sid]:
            continue
        ga, gb, ba, bb = sq.corners
        if _pair_is_symmetric(abg, ga, gb) or _pair_is_symmetric(abg, ba, bb):
            state.fix(sq.sid, 0)
            report.symmetric_squares_fixed += 1
    return report


def _two_path_bit(abg, sq):
    """Bit inducing a valid 2-path through one of sq's edges, or None.

    A 2-path is Dtel --S-- x --D-- Stel; square corners are never S-telomeres,
    so the far end must be an S-telomere vertex.
    """
    dnbr = abg.dnbr
    s_tel = abg.s_tel
    for u, v, bit in sq.all_edges():
        if dnbr[u] == -1:
            w = dnbr[v]
            if w != -1 and s_tel[w]:
                return bit
        if dnbr[v] == -1:
            w = dnbr[u]
            if w != -1 and s_tel[w]:
                return bit
    return None


def _try_four_cycle(abg, state, sq):
    """Fix sq (and possibly a partner square) to induce a valid 4-cycle
    through sq, if one exists.  Returns True when a cycle was induced."""
    dnbr = abg.dnbr
    square_at = abg.square_at
    for u, v, bit in sq.all_edges():
        w = dnbr[v]
        z = dnbr[u]
        if w == -1 or z == -1 or w == z or w == u or z == v:
            continue
        qsid = square_at[w]
        if qsid == -1 or square_at[z] != qsid:
            continue
        other = abg.squares[qsid]
        bit2 = other.pair_bit(w, z)
        if bit2 is None:
            continue
        if qsid == sq.sid:
            if bit2 != bit:
                continue  # incompatible same-square edges
            state.fix(sq.sid, bit)
            return True
        if state.fixed[qsid] and state.bits[qsid] != bit2:
            continue  # masked by an earlier fix
        state.fix(sq.sid, bit)
        state.fix(qsid, bit2)
        return True
    return False


def solve_sigma4(abg):
    """Optimal sigma-4 disambiguation in one greedy traversal.

    After the preprocessing fixes, every valid 2-path is optimal and every
    valid 4-cycle is optimal or co-optimal, and the two kinds cannot
    intersect; fixing each player as found is exact.  Remaining squares stay
    straight.
    """
    state = SolveState(abg)
    fix_two_cycles(abg, state)
    fix_symmetric_squares(abg, state)
    for sq in abg.squares:
        if state.fixed[sq.sid]:
            continue
        bit = _two_path_bit(abg, sq)
        if bit is not None:
            state.fix(sq.sid, bit)
            continue
        _try_four_cycle(abg, state, sq)
    sol = state.solution()
    return sol, score(abg, sol, 4)
