"""Command-line interface.

Subcommands: distance (sigma-k distance of a canonical pair), double-distance
(sigma-k double distance of a singular vs. duplicated genome), generate
(seeded test instances) and graph (DOT export of the bg/abg/pg stages).
Distances print as exact rationals unless --decimal is given.

Exit codes: 0 ok, 2 parse error, 3 semantic error, 4 resource cap exceeded.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .abg import (InstanceTooLargeError, UnsupportedKError, abg_to_dot,
                  build_abg, census_of_bits, oracle_best,
                  sigma2_double_distance)
from .bg import INF, CanonicalPairError, InvalidKError, bg_to_dot, build_bg, census, distance
from .gen import GenSpec, random_singular, scrambled_double
from .model import GenomeSyntaxError, parse_genomes, serialize_genome
from .sigma4 import SolveState, fix_two_cycles, fix_symmetric_squares, solve_sigma4
from .sigma6 import detect_and_fix_triplets, pg_to_dot, prune, solve_sigma6_detailed

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_CAP = 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _parse_k(text):
    if text in ("inf", "infinity", "dcj"):
        return INF
    try:
        k = int(text)
    except ValueError:
        raise CliError("invalid k: %r" % text, EXIT_SEMANTIC)
    if k < 2 or k % 2:
        raise CliError("k must be an even integer >= 2 or 'inf'", EXIT_SEMANTIC)
    return k


def _k_label(k):
    return "dcj" if k == INF else "sigma%d" % k


def _read_genomes(paths, expect, what):
    genomes = []
    for path in paths:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as e:
            raise CliError(str(e), EXIT_PARSE)
        try:
            genomes.extend(parse_genomes(text))
        except GenomeSyntaxError as e:
            raise CliError("%s: %s" % (path, e), EXIT_PARSE)
    if len(genomes) != expect:
        raise CliError("expected %d genomes for %s, found %d"
                       % (expect, what, len(genomes)), EXIT_SEMANTIC)
    return genomes


def _fmt(value, decimal):
    if decimal:
        return "%g" % float(value)
    return str(value)


def _frac_json(value):
    f = Fraction(value)
    return {"num": f.numerator, "den": f.denominator}


def _census_json(cen):
    return {"cycles": {str(l): n for l, n in sorted(cen.c.items())},
            "paths": {str(l): n for l, n in sorted(cen.p.items())}}


def _distance_one(path_pair, k, args):
    files, genomes = path_pair
    s1, s2 = genomes
    try:
        bg = build_bg(s1, s2)
    except CanonicalPairError as e:
        raise CliError("%s: %s" % (" ".join(files), e), EXIT_SEMANTIC)
    cen = census(bg)
    d = distance(cen, bg.n_star, k)
    if args.json:
        return json.dumps({"files": files, "k": "inf" if k == INF else str(k),
                           "n_star": bg.n_star, "census": _census_json(cen),
                           "distance": _frac_json(d)})
    lines = ["n_star = %d" % bg.n_star,
             "census cycles = %s" % dict(sorted(cen.c.items())),
             "census paths = %s" % dict(sorted(cen.p.items())),
             "d_%s = %s" % (_k_label(k), _fmt(d, args.decimal))]
    return "\n".join(lines)


def cmd_distance(args):
    k = _parse_k(args.k)
    # group the inputs into pairs: two single-genome files form one pair,
    # otherwise every file must hold a two-genome section pair of its own
    counts = []
    for path in args.files:
        try:
            with open(path) as fh:
                counts.append(len(parse_genomes(fh.read())))
        except OSError as e:
            raise CliError(str(e), EXIT_PARSE)
        except GenomeSyntaxError as e:
            raise CliError("%s: %s" % (path, e), EXIT_PARSE)
    pairs = []
    if len(args.files) == 2 and counts == [1, 1]:
        pairs.append((args.files, _read_genomes(args.files, 2, "a canonical pair")))
    else:
        for path in args.files:
            pairs.append(([path], _read_genomes([path], 2, "a canonical pair")))
    if args.jobs > 1 and len(pairs) > 1:
        import multiprocessing
        with multiprocessing.Pool(args.jobs) as pool:
            outputs = pool.starmap(_distance_one, [(p, k, args) for p in pairs])
    else:
        outputs = [_distance_one(p, k, args) for p in pairs]
    for pair, text in zip(pairs, outputs):
        if len(pairs) > 1:
            print("== %s" % " ".join(pair[0]))
        print(text)
    return EXIT_OK


def cmd_double_distance(args):
    k = _parse_k(args.k)
    s = _read_genomes([args.singular], 1, "the singular genome")[0]
    d = _read_genomes([args.duplicated], 1, "the duplicated genome")[0]
    try:
        abg = build_abg(s, d)
    except ValueError as e:
        raise CliError(str(e), EXIT_SEMANTIC)
    n2 = 2 * abg.n_star
    phases = {}
    solution = None
    if k == 2:
        value = sigma2_double_distance(s, d)
        state = SolveState(abg)
        rep = fix_two_cycles(abg, state)
        phases = {"two_cycles_fixed": rep.two_cycles_fixed, "zero_paths": rep.zero_paths}
        solution = state.solution()
    elif k == 4:
        solution, ks = solve_sigma4(abg)
        value = n2 - ks.value
    elif k == 6:
        res = solve_sigma6_detailed(abg)
        solution, value = res.solution, n2 - res.kscore.value
        phases = res.stats
    else:
        if not args.oracle:
            raise CliError("k=%s needs --oracle (no structured solver)" % args.k,
                           EXIT_SEMANTIC)
        value = None
    oracle_report = None
    if args.oracle:
        try:
            osol, oks = oracle_best(abg, k, cap=args.oracle_cap)
        except InstanceTooLargeError as e:
            raise CliError(str(e), EXIT_CAP)
        ovalue = n2 - oks.value
        if value is None:
            value, solution = ovalue, osol
        oracle_report = {"distance": ovalue, "agrees": ovalue == value}
        if k in (2, 4, 6) and ovalue != value:
            raise CliError("oracle disagrees: solver %s vs oracle %s"
                           % (value, ovalue), EXIT_SEMANTIC)
    if args.json:
        out = {"k": "inf" if k == INF else str(k), "n_star": abg.n_star,
               "distance": _frac_json(value), "phases": phases}
        if solution is not None:
            out["solution"] = solution.bitstring()
            out["census"] = _census_json(census_of_bits(abg, solution.bits))
        if oracle_report is not None:
            out["oracle"] = {"distance": _frac_json(oracle_report["distance"]),
                             "agrees": oracle_report["agrees"]}
        print(json.dumps(out))
        return EXIT_OK
    suffix = ""
    if oracle_report is not None:
        suffix = " (oracle agrees)" if oracle_report["agrees"] else " (ORACLE DISAGREES)"
    print("d2_%s = %s%s" % (_k_label(k), _fmt(value, args.decimal), suffix))
    if solution is not None:
        print("solution = %s" % solution.bitstring())
    if args.verbose and phases:
        for key, val in phases.items():
            print("# %s = %s" % (key, val))
    return EXIT_OK


def cmd_generate(args):
    try:
        spec = GenSpec(args.seed, args.n_star, args.linear, args.circular, args.dcj_ops)
    except ValueError as e:
        raise CliError(str(e), EXIT_PARSE)
    s = random_singular(spec)
    d = scrambled_double(s, spec.dcj_ops, seed=spec.seed ^ 0xD1CE)
    meta = "# seed=%d n=%d linear=%d circular=%d j=%d\n" % (
        spec.seed, spec.n_star, spec.linear_chroms, spec.circular_chroms, spec.dcj_ops)
    outdir = os.path.dirname(args.out)
    if outdir:
        os.makedirs(outdir, exist_ok=True)
    s_path = args.out + ".singular.txt"
    d_path = args.out + ".duplicated.txt"
    with open(s_path, "w") as fh:
        fh.write(meta)
        fh.write(serialize_genome(s))
    with open(d_path, "w") as fh:
        fh.write(meta)
        fh.write(serialize_genome(d))
    print(s_path)
    print(d_path)
    return EXIT_OK


def cmd_graph(args):
    if args.stage == "bg":
        genomes = _read_genomes(args.files, 2, "a canonical pair")
        try:
            dot = bg_to_dot(build_bg(*genomes))
        except CanonicalPairError as e:
            raise CliError(str(e), EXIT_SEMANTIC)
    else:
        genomes = _read_genomes(args.files, 2, "a singular/duplicated pair")
        try:
            abg = build_abg(*genomes)
        except ValueError as e:
            raise CliError(str(e), EXIT_SEMANTIC)
        if args.stage == "abg":
            dot = abg_to_dot(abg)
        else:
            state = SolveState(abg)
            fix_two_cycles(abg, state)
            fix_symmetric_squares(abg, state)
            while True:
                pg = prune(abg, state)
                if not detect_and_fix_triplets(abg, state, pg):
                    break
            dot = pg_to_dot(pg)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sigmadd",
        description="breakpoint / DCJ / sigma-k distances and sigma-k double distances")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="sigma-k distance of a canonical pair")
    p.add_argument("files", nargs="+",
                   help="one file with two genomes, two single-genome files, "
                        "or several two-genome files")
    p.add_argument("--k", default="inf")
    p.add_argument("--json", action="store_true")
    p.add_argument("--decimal", action="store_true")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallelize over multiple input pairs")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("double-distance",
                       help="sigma-k double distance of a singular and a duplicated genome")
    p.add_argument("singular")
    p.add_argument("duplicated")
    p.add_argument("--k", default="6")
    p.add_argument("--oracle", action="store_true",
                   help="also run the exhaustive oracle (required for k not in {2,4,6})")
    p.add_argument("--oracle-cap", type=int, default=24)
    p.add_argument("--json", action="store_true")
    p.add_argument("--decimal", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_double_distance)

    p = sub.add_parser("generate", help="seeded random instance files")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n-star", type=int, required=True)
    p.add_argument("--linear", type=int, default=1)
    p.add_argument("--circular", type=int, default=0)
    p.add_argument("--dcj-ops", type=int, default=0)
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("graph", help="DOT export of a graph stage")
    p.add_argument("files", nargs="+")
    p.add_argument("--stage", choices=("bg", "abg", "pg"), default="bg")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print("error: %s" % e, file=sys.stderr)
        return e.code
    except (InvalidKError, UnsupportedKError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
