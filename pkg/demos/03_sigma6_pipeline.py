"""Inside the linear-time sigma-6 solver, phase by phase.

The instance below leaves a nontrivial ambiguous component after
preprocessing, so every stage has something to show: 2-cycle and symmetric
square fixes, the 6-pruned graph with its square classes, triplet handling,
player enumeration, the weighted intersection graph with its gadget
decomposition, and the final score decomposition.
"""

from fractions import Fraction

from sigmadd import build_abg, parse_genome
from sigmadd.sigma4 import SolveState, fix_symmetric_squares, fix_two_cycles
from sigmadd.sigma6 import (build_intersection_graph, detect_and_fix_triplets,
                            prune, solve_component, solve_sigma6_detailed)

S = "( -8 6 -1 9 3 7 -2 -5 4 )"
D = "( 8 -1 -3 2 8 9 3 5 -1 9 5 4 -6 )\n( 7 -6 -4 7 -2 )"

abg = build_abg(parse_genome(S), parse_genome(D))
state = SolveState(abg)

rep = fix_two_cycles(abg, state)
print("phase 1: %d squares fixed by common-adjacency 2-cycles, %d 0-paths"
      % (rep.two_cycles_fixed, rep.zero_paths))
rep = fix_symmetric_squares(abg, state)
print("phase 2: %d symmetric squares fixed" % rep.symmetric_squares_fixed)

pg = prune(abg, state)
trips = detect_and_fix_triplets(abg, state, pg)
if trips:
    pg = prune(abg, state)
print("phase 3: triplets fixed: %s" % (trips or "none"))

classes = {}
for c in pg.square_class:
    classes[c] = classes.get(c, 0) + 1
print("phase 4: pruned graph: %d/%d S-edges preserved, square classes %s"
      % (len(pg.preserved_s), pg.present_s_edges, classes))
print("         resolved: %d cycles, %d paths; %d ambiguous components"
      % (pg.resolved_cycles, pg.resolved_paths, len(pg.ambiguous())))

total = pg.resolved_score()
for comp in pg.ambiguous():
    ig = build_intersection_graph(abg, state, pg, comp)
    print("phase 5: component with %d squares -> %d players"
          % (len(comp.six_squares), len(ig.players)))
    for p in ig.players:
        print("           %-7s weight=%s/2 conflicts=%s"
              % (p.kind, p.weight, sorted(ig.adj[p.pid])))
    for b in ig.bubbles:
        print("         bubble: %d cycles, line=%s, balanced=%s (straight %s vs %s)"
              % (len(b.cycles), b.is_line, b.balanced,
                 b.score_straight, b.score_complement))
    for dl in ig.double_lines:
        print("         double-line: length %d, %s" % (dl.length, dl.kind))
    for pl in ig.path_lines:
        print("         path-line: %s%s" % (list(pl.pids), " (cyclic)" if pl.cyclic else ""))
    value, _ = solve_component(abg, state, pg, comp, ig)
    total += Fraction(value, 2)
    print("         component optimum = %s" % Fraction(value, 2))

print()
res = solve_sigma6_detailed(abg)
print("decomposition total = %s;  solver census score = %s"
      % (total, res.kscore.value))
print("solution bits = %s" % res.solution.bitstring())
print("d2_sigma6 = %s" % (2 * abg.n_star - res.kscore.value))
