#!/usr/bin/env python
"""
Summary
-------
Command-line front door. Every subcommand writes JSON lines to stdout
and progress to stderr.

Exit codes: 0 when every record passed, 1 when some record failed,
2 on usage errors, invalid configurations and malformed input.
"""
import argparse
import json
import sys

from .base import InvalidConfig, SymconeError
from .combinat import LABEL_CONVENTIONS, NONNEG
from .directory import subcommand_checks, suite_units
from .ifunction import SeriesCaps, i_restricted
from .run_base import RunConfig, VerificationRun
from .sectors import PRINTED, RC_NORMALIZATIONS, FixedSector, enumerate_edges, enumerate_sectors
from .symgroup import HURWITZ_BACKENDS, ClassList, hurwitz_count
from .trees import DecoratedTree, combinable_pairs, combine_set, minimal_form, validate

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def emit(record, out):
    out.write(json.dumps(record, sort_keys=True, default=str))
    out.write("\n")


def add_space_arguments(parser, beta_cap=3):
    parser.add_argument("--d", type=int, default=1, help="number of points d (default: 1)")
    parser.add_argument("--r", type=int, default=1, help="dimension r of P^r (default: 1)")
    parser.add_argument("--beta-cap", type=int, default=beta_cap, help=f"largest beta (default: {beta_cap})")


def add_series_arguments(parser):
    add_space_arguments(parser)
    parser.add_argument("--x-cap", type=int, default=0, help="largest total x-degree (default: 0)")
    parser.add_argument("--t-cap", type=int, default=0, help="largest total t-degree (default: 0)")
    parser.add_argument("--convention", choices=LABEL_CONVENTIONS, default=NONNEG,
                        help="label positivity convention (default: nonneg)")
    parser.add_argument("--include-exp-factor", action="store_true", help="keep the exponential factor in t")
    parser.add_argument("--hurwitz-backend", choices=HURWITZ_BACKENDS, default="brute",
                        help="factorization counter (default: brute)")


def add_run_arguments(parser):
    parser.add_argument("--seed", type=int, default=0, help="MRG32k3a stream index (default: 0)")
    parser.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: $SYMCONE_WORKERS, else 1)")
    parser.add_argument("--record", default=None, metavar="NAME",
                        help="pickle the run to runs/outputs/NAME.pickle and write its log")
    parser.add_argument("--csv", default=None, metavar="PATH", help="write a PASS/FAIL summary table")
    parser.add_argument("--quiet", action="store_true", help="suppress progress messages")


def build_parser():
    parser = argparse.ArgumentParser(prog="symcone",
                                     description="Fixed-point restrictions of the I-function of Sym^d P^r "
                                                 "and verification of the cone conditions.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    sectors = subparsers.add_parser("sectors", help="list the fixed sectors")
    sectors.add_argument("--d", type=int, default=1)
    sectors.add_argument("--r", type=int, default=1)

    edges = subparsers.add_parser("edges", help="list the one-edge trees leaving a sector")
    add_space_arguments(edges, beta_cap=2)
    edges.add_argument("--sector", default=None, help="sector as JSON, e.g. '[[1],[]]'; all sectors if omitted")

    ifun = subparsers.add_parser("ifun", help="tabulate the restricted series")
    add_series_arguments(ifun)

    verify = subparsers.add_parser("verify", help="check conditions (I) and (II)")
    add_series_arguments(verify)
    add_run_arguments(verify)
    verify.add_argument("--probe", action="store_true",
                        help="look for a normalization explaining failing recursion reports")
    verify.add_argument("--rc-normalization", choices=RC_NORMALIZATIONS, default=PRINTED,
                        help="how r_sigma enters the recursion coefficients (default: printed)")
    verify.add_argument("--accept-uniform-normalization", action="store_true",
                        help="pass failures explained by one global r_sigma exponent or RC normalization")
    verify.add_argument("--n-specializations", type=int, default=5,
                        help="random rational points per recursion report (default: 5)")

    identities = subparsers.add_parser("identities", help="check the closed-form identities")
    add_run_arguments(identities)
    identities.add_argument("--max-k", type=int, default=8, help="largest k of the psi identity (default: 8)")
    identities.add_argument("--max-sigma", type=int, default=4, help="largest pole group (default: 4)")
    identities.add_argument("--ratio-max-d", type=int, default=6, help="largest d of the ratio identity (default: 6)")
    identities.add_argument("--wrc-max-d", type=int, default=3, help="largest d of the W-RC identity (default: 3)")
    identities.add_argument("--beta-cap", type=int, default=2, help="largest edge degree (default: 2)")

    hurwitz = subparsers.add_parser("hurwitz", help="count factorizations of the identity")
    hurwitz.add_argument("--d", type=int, required=True)
    hurwitz.add_argument("--classes", required=True, help="list of partitions as JSON, e.g. '[[2],[2]]'")
    hurwitz.add_argument("--backend", choices=HURWITZ_BACKENDS, default="brute")

    trees = subparsers.add_parser("trees", help="validate, combine or minimize a decorated tree")
    trees.add_argument("action", choices=["validate", "combine", "minimal"])
    trees.add_argument("--in", dest="in_file", required=True, help="JSON tree file")
    trees.add_argument("--pairs", default=None, help="pairs to combine as JSON; all combinable pairs if omitted")

    suite = subparsers.add_parser("suite", help="run the whole acceptance battery")
    add_run_arguments(suite)
    return parser


def run_sectors(args, out):
    for s in enumerate_sectors(args.d, args.r):
        emit({**s.to_json(), "r_sigma": s.r_sigma}, out)
    return EXIT_PASS


def run_edges(args, out):
    if args.sector is None:
        chosen = enumerate_sectors(args.d, args.r)
    else:
        chosen = [FixedSector.from_json(json.loads(args.sector))]
    for s in chosen:
        if (s.d, s.r) != (args.d, args.r):
            raise InvalidConfig(f"Sector {s!r} does not belong to Sym^{args.d} P^{args.r}.")
        for kappa in enumerate_edges(s, args.beta_cap):
            emit({"sector": s.to_json(), **kappa.to_json()}, out)
    return EXIT_PASS


def run_ifun(args, out):
    RunConfig(series_factors(args))
    caps = SeriesCaps(args.beta_cap, args.x_cap, args.t_cap)
    options = {"label_convention": args.convention, "include_exp_factor": args.include_exp_factor,
               "hurwitz_backend": args.hurwitz_backend}
    for s in enumerate_sectors(args.d, args.r):
        for record in i_restricted(s, caps, options).to_records():
            emit(record, out)
    return EXIT_PASS


def series_factors(args):
    return {"d": args.d, "r": args.r, "beta_cap": args.beta_cap, "x_cap": args.x_cap, "t_cap": args.t_cap,
            "convention": args.convention, "include_exp_factor": args.include_exp_factor,
            "hurwitz_backend": args.hurwitz_backend}


def run_factors(args):
    factors = {"seed": args.seed, "verbose": not args.quiet}
    if args.workers is not None:
        factors["workers"] = args.workers
    if args.record is not None:
        factors["output_path"] = f"./runs/outputs/{args.record}.pickle"
    return factors


def execute(run, args, out):
    results = run.run()
    for record in run.records():
        emit(record, out)
    if args.record is not None:
        run.record_run_results()
        run.log_run_results()
    if args.csv is not None:
        run.print_to_csv(args.csv)
    return EXIT_PASS if all(result.passed for result in results) else EXIT_FAIL


def run_verify(args, out):
    config = RunConfig({**series_factors(args), **run_factors(args), "probe": args.probe,
                        "rc_normalization": args.rc_normalization})
    overrides = {"CONDITION-II": {"n_specializations": args.n_specializations,
                                  "accept_uniform_normalization": args.accept_uniform_normalization}}
    units = [(name, config.check_factors(name, overrides.get(name))) for name in subcommand_checks["verify"]]
    return execute(VerificationRun(units, config, name=args.record or "verify"), args, out)


def run_identities(args, out):
    config = RunConfig(run_factors(args))
    verbose = config.factors["verbose"]
    overrides = {
        "SIGN-SUM": {"max_sigma": args.max_sigma},
        "PSI-BINOMIAL": {"max_k": args.max_k},
        "RATIO-IDENTITY": {"max_d": args.ratio_max_d, "beta_cap": args.beta_cap},
        "W-RC": {"max_d": args.wrc_max_d, "beta_cap": args.beta_cap}
    }
    units = [(name, {**overrides[name], "verbose": verbose}) for name in subcommand_checks["identities"]]
    return execute(VerificationRun(units, config, name=args.record or "identities"), args, out)


def run_hurwitz(args, out):
    count = hurwitz_count(ClassList(args.d, json.loads(args.classes)), backend=args.backend)
    emit({"d": args.d, "classes": json.loads(args.classes), "count": count, "backend": args.backend}, out)
    return EXIT_PASS


def read_tree(path):
    with open(path, "r") as file:
        return DecoratedTree.from_json(json.load(file))


def run_trees(args, out):
    t = read_tree(args.in_file)
    verdict = validate(t)
    if args.action == "validate":
        emit(verdict.to_json(), out)
        return EXIT_PASS if verdict.passed else EXIT_FAIL
    if args.action == "minimal":
        emit({"tree": minimal_form(t).to_json()}, out)
        return EXIT_PASS
    pairs = combinable_pairs(t) if args.pairs is None else [tuple(pair) for pair in json.loads(args.pairs)]
    combined, phi = combine_set(t, pairs)
    emit({"tree": combined.to_json(), "edge_map": phi, "valid": validate(combined).passed}, out)
    return EXIT_PASS


def run_suite(args, out):
    config = RunConfig(run_factors(args))
    verbose = config.factors["verbose"]
    units = [(name, {**factors, "verbose": verbose}) for name, factors in suite_units]
    return execute(VerificationRun(units, config, name=args.record or "suite"), args, out)


commands = {
    "sectors": run_sectors,
    "edges": run_edges,
    "ifun": run_ifun,
    "verify": run_verify,
    "identities": run_identities,
    "hurwitz": run_hurwitz,
    "trees": run_trees,
    "suite": run_suite
}


def main(argv=None, out=None):
    """Parse ``argv``, run the subcommand and return the exit code."""
    if out is None:
        out = sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_USAGE if error.code else EXIT_PASS
    try:
        return commands[args.command](args, out)
    except (SymconeError, ValueError, OSError) as error:
        print(f"symcone {args.command}: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
