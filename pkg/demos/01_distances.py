"""Breakpoint, DCJ and the sigma-k distances of a canonical genome pair.

Walks the textbook pair: builds the breakpoint graph, prints its component
census, and evaluates the whole distance family from it.
"""

from sigmadd import INF, build_bg, census, distance, parse_genome

s1 = parse_genome(">S1\n( 1 2 )\n[ 3 -4 ]\n")
s2 = parse_genome(">S2\n( 1 -3 2 )\n[ 4 ]\n")

print("genome 1: one circular chromosome (1 2), one linear [3 -4]")
print("genome 2: one circular chromosome (1 -3 2), one linear [4]")
print()

bg = build_bg(s1, s2)
cen = census(bg)
print("breakpoint graph over %d extremities" % bg.n_vertices)
print("  cycles by length:", dict(sorted(cen.c.items())))
print("  paths by length: ", dict(sorted(cen.p.items())))
print()

# A common adjacency is a 2-cycle, a common telomere a 0-path.  Each sigma_k
# distance credits cycles up to length k and even paths up to length k-2:
# k=2 is the breakpoint distance, k=infinity the DCJ distance, and the
# values decrease monotonically in between.
for k in (2, 4, 6, 8, INF):
    label = "d_dcj     " if k == INF else "d_sigma_%-2s" % k
    print("%s = %s" % (label, distance(cen, bg.n_star, k)))
