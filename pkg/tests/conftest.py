"""Shared fixtures: the seeded small-instance corpus and a multi-k
exhaustive oracle that scores every solution in one enumeration pass."""

import time

import pytest

from sigmadd.abg import build_abg, census_of_bits
from sigmadd.gen import GenSpec, random_singular, scrambled_double
from sigmadd.sigma4 import SolveState, fix_two_cycles

CORPUS_SIZE = 1000
SHAPES = [(0, 1), (1, 0), (2, 0), (0, 2), (1, 1), (2, 1), (1, 2), (3, 0)]


def corpus_instance(i):
    """Deterministic instance i: n* in 2..8, mixed shapes, j in 0..10."""
    n = 2 + (i % 7)
    lin, circ = SHAPES[i % 8]
    while lin + circ > n:
        if circ > 1 or (circ and lin):
            circ -= 1
        else:
            lin -= 1
    if lin + circ == 0:
        circ = 1
    j = i % 11
    s = random_singular(GenSpec(seed=1_000_000 + i, n_star=n,
                                linear_chroms=lin, circular_chroms=circ,
                                dcj_ops=j))
    d = scrambled_double(s, j, seed=2_000_000 + i)
    return s, d, j


@pytest.fixture(scope="session")
def corpus():
    return [corpus_instance(i) for i in range(CORPUS_SIZE)]


def two_cycle_required_bits(abg):
    """Square resolutions forced by common-adjacency 2-cycles."""
    state = SolveState(abg)
    fix_two_cycles(abg, state)
    return {sid: state.bits[sid] for sid in range(abg.a_star) if state.fixed[sid]}


def oracle_all(abg, required_bits=None):
    """Best sigma-4/6 scores over all solutions, and over the solutions that
    honor required_bits, from a single enumeration."""
    a = abg.a_star
    best4 = best6 = None
    req4 = req6 = None
    bits = [0] * a
    req = sorted(required_bits.items()) if required_bits else []
    for mask in range(1 << a):
        for i in range(a):
            bits[i] = (mask >> i) & 1
        cen = census_of_bits(abg, bits)
        s4 = cen.sigma(4)
        s6 = cen.sigma(6)
        if best4 is None or s4 > best4:
            best4 = s4
        if best6 is None or s6 > best6:
            best6 = s6
        if all(bits[sid] == b for sid, b in req):
            if req4 is None or s4 > req4:
                req4 = s4
            if req6 is None or s6 > req6:
                req6 = s6
    return {"best4": best4, "best6": best6, "req4": req4, "req6": req6}


ORACLE_BUILD_SECONDS = {}


@pytest.fixture(scope="session")
def corpus_oracle(corpus):
    """Per-instance oracle scores (free and 2-cycle-constrained) plus the
    built graphs, computed once for the whole session."""
    t0 = time.perf_counter()
    table = []
    for s, d, j in corpus:
        abg = build_abg(s, d)
        required = two_cycle_required_bits(abg)
        scores = oracle_all(abg, required)
        table.append({"abg": abg, "required": required, **scores})
    ORACLE_BUILD_SECONDS["corpus"] = time.perf_counter() - t0
    return table
