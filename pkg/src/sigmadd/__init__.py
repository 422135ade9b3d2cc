"""sigmadd: breakpoint, DCJ and sigma-k distances of canonical genome pairs,
and linear-time sigma-2/4/6 double distances of a singular vs. a duplicated
genome, cross-checked by an exponential oracle."""

from .abg import (AmbiguousBreakpointGraph, KScore, Solution, build_abg,
                  double_distance, induce, oracle_best, score,
                  sigma2_double_distance)
from .bg import (INF, BreakpointGraph, ComponentCensus, build_bg, census,
                 distance, sigma_distance)
from .gen import GenSpec, random_singular, scrambled_double
from .model import (Chromosome, FamilyTable, Gene, Genome,
                    adjacencies_and_telomeres, classify, double_adjacencies,
                    num_doubled_layouts, parse_genome, parse_genomes,
                    serialize_genome, singularize)
from .sigma4 import FixReport, fix_two_cycles, fix_symmetric_squares, solve_sigma4
from .sigma6 import solve_sigma6

__version__ = "0.1.0"

__all__ = [
    "AmbiguousBreakpointGraph", "BreakpointGraph", "Chromosome",
    "ComponentCensus", "FamilyTable", "FixReport", "Gene", "GenSpec",
    "Genome", "INF", "KScore", "Solution", "adjacencies_and_telomeres",
    "build_abg", "build_bg", "census", "classify", "distance",
    "double_adjacencies", "double_distance", "fix_symmetric_squares",
    "fix_two_cycles", "induce", "num_doubled_layouts", "oracle_best",
    "parse_genome", "parse_genomes", "random_singular", "scrambled_double",
    "score", "serialize_genome", "sigma2_double_distance", "sigma_distance",
    "singularize", "solve_sigma4", "solve_sigma6",
]
