"""Random cross-validation of the structured solvers against brute force,
plus a small scaling check of the linear-time claim.

Instances are generated by doubling a random singular genome and applying j
random DCJ operations; with up to 8 families the full solution space stays
enumerable, so the oracle is exact.
"""

import time

from sigmadd import build_abg, double_distance, oracle_best, random_singular, scrambled_double
from sigmadd.gen import GenSpec
from sigmadd.sigma4 import solve_sigma4
from sigmadd.sigma6 import solve_sigma6

N = 150
mismatches = 0
print("checking %d random instances (n* <= 8, j <= 10) ..." % N)
for i in range(N):
    n = 2 + (i % 7)
    lin, circ = [(1, 0), (0, 1), (1, 1), (2, 0)][i % 4]
    while lin + circ > n:
        lin, circ = 1, 0
    s = random_singular(GenSpec(seed=9_000 + i, n_star=n, linear_chroms=lin,
                                circular_chroms=circ, dcj_ops=i % 11))
    d = scrambled_double(s, i % 11, seed=i)
    abg = build_abg(s, d)
    _, got4 = solve_sigma4(abg)
    _, got6 = solve_sigma6(abg)
    _, best4 = oracle_best(abg, 4)
    _, best6 = oracle_best(abg, 6)
    if got4.value != best4.value or got6.value != best6.value:
        mismatches += 1
        print("  mismatch at instance %d!" % i)
print("done: %d mismatches" % mismatches)
print()

print("scaling of the sigma-6 double distance (j = n/100 random DCJs):")
prev = None
for n in (1_000, 10_000, 100_000):
    j = n // 100
    s = random_singular(GenSpec(seed=31, n_star=n, linear_chroms=3,
                                circular_chroms=3, dcj_ops=j))
    d = scrambled_double(s, j, seed=32)
    t0 = time.perf_counter()
    value = double_distance(s, d, 6)
    dt = time.perf_counter() - t0
    ratio = "" if prev is None else "  (x%.1f for x10 input)" % (dt / prev)
    print("  n*=%6d: d2_sigma6 = %-6s in %.3f s%s" % (n, value, dt, ratio))
    prev = dt
