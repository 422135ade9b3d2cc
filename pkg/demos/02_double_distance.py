"""The sigma-k double distance: a singular genome S against a duplicated
genome D, minimized over all doublings of S.

The ambiguous breakpoint graph carries one square of candidate edges per
S-adjacency; resolving every square induces an ordinary breakpoint graph.
The solvers pick resolutions maximizing the k-score, and the exhaustive
oracle confirms them on this small instance.
"""

from sigmadd import (Solution, build_abg, census, double_distance, induce,
                     oracle_best, parse_genome, score)

s = parse_genome(">S\n[ 1 2 3 ]\n")
d = parse_genome(">D\n[ 1 2 -3 1 ]\n[ -3 2 ]\n")

abg = build_abg(s, d)
print("ambiguous breakpoint graph: %d vertices, %d squares, %d S-telomeres,"
      " %d D-telomeres" % (abg.n_vertices, abg.a_star,
                           abg.count_s_telomeres(), abg.count_d_telomeres()))
print()

print("all %d square resolutions:" % (1 << abg.a_star))
for mask in range(1 << abg.a_star):
    bits = tuple((mask >> i) & 1 for i in range(abg.a_star))
    tau = Solution(bits)
    cen = census(induce(abg, tau))
    print("  tau=%s  cycles=%s paths=%s  2-score=%s 6-score=%s"
          % (tau.bitstring(), dict(sorted(cen.c.items())),
             dict(sorted(cen.p.items())),
             score(abg, tau, 2).value, score(abg, tau, 6).value))
print()

for k in (2, 4, 6):
    print("d2_sigma%d = %s" % (k, double_distance(s, d, k)))
_, ks = oracle_best(abg, 6)
print("oracle best 6-score = %s (distance %s)" % (ks.value, 2 * abg.n_star - ks.value))
