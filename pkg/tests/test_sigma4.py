"""Preprocessing fixes (2-cycles, symmetric squares) and the greedy sigma-4
solver, cross-checked against the exhaustive oracle."""

import pytest
from fractions import Fraction

from sigmadd.abg import build_abg, oracle_best, score
from sigmadd.model import parse_genome
from sigmadd.sigma4 import (SolveState, fix_symmetric_squares, fix_two_cycles,
                            solve_sigma4)
from conftest import corpus_instance


def _abg(s_text, d_text):
    return build_abg(parse_genome(s_text), parse_genome(d_text))


def test_fix_two_cycles_worked_pair():
    abg = _abg("[ 1 2 3 ]", "[ 1 2 -3 1 ]\n[ -3 2 ]")
    state = SolveState(abg)
    rep = fix_two_cycles(abg, state)
    # square 0 carries the common adjacency 1h2t; the two 0-paths are the
    # vertices telomeric on both sides
    assert rep.two_cycles_fixed == 1
    assert rep.zero_paths == 2
    assert state.fixed == [True, False]
    assert state.bits[0] == 0


def test_fix_two_cycles_none():
    abg = _abg("( 1 2 3 )", "( 1 3 2 )\n( 1 3 2 )")
    state = SolveState(abg)
    rep = fix_two_cycles(abg, state)
    assert rep.two_cycles_fixed == 0


def test_one_fix_induces_both_paralogous_two_cycles():
    # D is a doubling layout: each square fix induces two 2-cycles at once
    abg = _abg("( 1 2 )", "( 1 2 )\n( 1 2 )")
    state = SolveState(abg)
    rep = fix_two_cycles(abg, state)
    assert rep.two_cycles_fixed == 2  # both squares, each inducing 2 cycles
    sol = state.solution()
    assert score(abg, sol, 2).value == 4
    _, best = oracle_best(abg, 6)
    assert best.value == 4  # the maximum keeps all four 2-cycles


SYMMETRIC_CASES = [
    # (i) a D-edge connects the paralogous pair 1h_a - 1h_b
    ("[ 2 -1 ]", "[ 2 1 -1 -2 ]"),
    # (ii) D-telomeres on both corners of a paralogous pair
    ("[ 1 2 ]", "[ -1 2 ]\n[ -1 2 ]"),
    # (iii) D-edges from a paralogous pair lead straight to S-telomeres
    ("[ 1 2 ]\n[ 3 ]", "[ 2 1 -3 ]\n[ 2 1 -3 ]"),
]


@pytest.mark.parametrize("s_text,d_text", SYMMETRIC_CASES)
def test_symmetric_squares_fixed_and_score_neutral(s_text, d_text):
    abg = _abg(s_text, d_text)
    state = SolveState(abg)
    fix_two_cycles(abg, state)
    rep = fix_symmetric_squares(abg, state)
    assert rep.symmetric_squares_fixed >= 1
    # both resolutions of a symmetric square tie: flipping any symmetric
    # square away from the chosen pair must not beat the oracle's best
    for k in (2, 4, 6):
        _, best = oracle_best(abg, k)
        flipped = [b for b in state.bits]
        for sid in range(abg.a_star):
            if state.fixed[sid]:
                flipped[sid] ^= 1
        best_flipped = None
        for mask in range(1 << abg.a_star):
            bits = [(mask >> i) & 1 for i in range(abg.a_star)]
            if all(bits[sid] == flipped[sid] for sid in range(abg.a_star)
                   if state.fixed[sid]):
                val = score(abg, bits, k).value
                if best_flipped is None or val > best_flipped:
                    best_flipped = val
        assert best_flipped == best.value


def test_no_symmetric_squares_in_worked_pair():
    abg = _abg("[ 1 2 3 ]", "[ 1 2 -3 1 ]\n[ -3 2 ]")
    state = SolveState(abg)
    fix_two_cycles(abg, state)
    rep = fix_symmetric_squares(abg, state)
    assert rep.symmetric_squares_fixed == 0


def test_sigma4_worked_pair():
    abg = _abg("[ 1 2 3 ]", "[ 1 2 -3 1 ]\n[ -3 2 ]")
    sol, ks = solve_sigma4(abg)
    assert ks.value == Fraction(5, 2)  # 2-cycle + two 0-paths + the 2-path
    assert sol.bits == (0, 1)


def test_sigma4_trivial_two_cycles_only():
    abg = _abg("( 1 2 )", "( 1 2 )\n( 1 2 )")
    _, ks = solve_sigma4(abg)
    assert ks.value == 4  # c2 + p0/2 with four 2-cycles


def test_sigma4_disjoint_four_cycles():
    abg = _abg("( 1 2 )", "( 1 -2 )\n( 1 -2 )")
    sol, ks = solve_sigma4(abg)
    assert ks.value == 2
    assert ks.census.c == {4: 2}


def test_sigma4_intersecting_four_cycles_co_optimal():
    # twisted doubling: two pairs of intersecting 4-cycles, two co-optimal
    # resolutions; the greedy picks one deterministically
    abg = _abg("( 1 2 )", "( 1 -2 1 -2 )")
    sol, ks = solve_sigma4(abg)
    _, best = oracle_best(abg, 4)
    assert ks.value == best.value == 2
    assert ks.census.c == {4: 2}
    assert sol.bits in ((0, 1), (1, 0))


@pytest.mark.parametrize("i", range(0, 200, 7))
def test_sigma4_matches_oracle_random(i):
    s, d, _ = corpus_instance(i)
    abg = build_abg(s, d)
    _, got = solve_sigma4(abg)
    _, best = oracle_best(abg, 4)
    assert got.value == best.value


@pytest.mark.parametrize("i", range(0, 120, 11))
def test_sigma4_solution_keeps_forced_two_cycles(i):
    s, d, _ = corpus_instance(i)
    abg = build_abg(s, d)
    state = SolveState(abg)
    fix_two_cycles(abg, state)
    sol, _ = solve_sigma4(abg)
    for sid in range(abg.a_star):
        if state.fixed[sid]:
            assert sol.bits[sid] == state.bits[sid]
