#! /usr/bin/env python
"""
Command line front end: check axioms, decompose into alpha-cut norms, sample
t-curves, compare convergence, and verify the round trip between generators and
fuzzy norms.

Exit codes are 0 (pass), 1 (fail), 2 (inconclusive only), 3 (usage or format
error), and 4 (an internal invariant was breached).
"""

from __future__ import print_function

__author__ = "FuzzNorm developers"

import argparse
import os
import sys

import numpy as np

from . import __version__, __date__
from . import flags
from .correspondence import norm_from_generator, t_curve, roundtrip_check, CurveError, MembershipError
from .decomposition import decompose_table, BracketError, DEFAULT_TOL
from .generators import as_vector, describe_generator, GeneratorError, DimensionError
from .tables import (load_spec, load_points, write_csv, alpha_table, curve_table, report_table,
                     FormatError)
from .verification import (CheckConfig, CheckReport, SequenceRule, SEQUENCE_RULES, GENERATOR_LABELS,
                           check_fuzzy_norm_axioms, check_generator_axioms, check_fuzzy_convergence,
                           expand_labels, sample_vectors)

import logging
log = logging.getLogger('FuzzNorm')

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3
EXIT_INVARIANT = 4

SEED_ENV = 'FUZZNORM_SEED'


class UsageError(Exception):
    """Bad command line arguments, reported with exit code 3."""
    pass


class ArgumentParser(argparse.ArgumentParser):
    """An argument parser that exits with the usage error code"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "{0}: error: {1}\n".format(self.prog, message))


def parse_vector(text):
    """Parse '1,2.5,-3' into a vector"""
    try:
        return as_vector([float(v) for v in text.split(',')])
    except (ValueError, DimensionError):
        raise UsageError("Cannot interpret {0!r} as a vector".format(text))


def parse_reals(text):
    """Parse '0.25,0.5' into an array of reals"""
    try:
        return np.array([float(v) for v in text.split(',') if v.strip()])
    except ValueError:
        raise UsageError("Cannot interpret {0!r} as a list of numbers".format(text))


def get_seed(args):
    """The seed from the environment if set, otherwise from the command line"""
    env = os.environ.get(SEED_ENV, None)
    if env is not None and env.strip():
        try:
            seed = int(env)
        except ValueError:
            raise UsageError("{0}={1!r} is not an integer".format(SEED_ENV, env))
        log.info("Using seed {0} from {1}".format(seed, SEED_ENV))
        return seed
    return args.seed


def build_norm(gen):
    """Wrap the generator, without validation if it is not a member of the generator class"""
    if gen.member:
        return norm_from_generator(gen)
    log.warning("{0} is not quasiconcave; wrapping it unchecked".format(gen.kind))
    return norm_from_generator(gen, checked=False)


def _out_name(args, suffix):
    if args.out is not None:
        return args.out
    return "{0}_{1}.csv".format(os.path.splitext(os.path.basename(args.spec))[0], suffix)


def cmd_check(args):
    """
    Check the requested axioms and write a report.

    Returns
    -------
    code : int
        0 if all pass, 1 if any fail, 2 if some are inconclusive and none fail.
    """
    gen, label = load_spec(args.spec)
    try:
        labels = expand_labels(args.axioms)
        cfg = CheckConfig(seed=get_seed(args), samples=args.samples, tol=args.tol, cores=args.cores)
    except ValueError as e:
        raise UsageError(str(e))
    if args.alpha is not None:
        labels = expand_labels(labels + ['crisp-definite..crisp-triangle', 'ascending'])
    log.debug("spec {0}: {1}".format(label, describe_generator(gen)))

    norm = build_norm(gen)
    gen_labels = [l for l in labels if l in GENERATOR_LABELS]
    other = [l for l in labels if l not in GENERATOR_LABELS]
    reports = {}
    if other:
        for r in check_fuzzy_norm_axioms(norm, cfg, other, alpha=args.alpha):
            reports[r.axiom] = r
    if gen_labels:
        for r in check_generator_axioms(gen, cfg, gen_labels):
            reports[r.axiom] = r
    reports = [reports[l] for l in labels]

    print("# {0} ({1}), seed={2}, samples={3}".format(label, gen.kind, cfg.seed, cfg.samples))
    print(CheckReport.header)
    for r in reports:
        print(str(r))
        if r.verdict != flags.PASS and r.witness is not None:
            print("    witness: {0}".format(r.witness_json()))
    write_csv(report_table(reports), _out_name(args, 'check'))

    verdicts = set(r.verdict for r in reports)
    if flags.FAIL in verdicts:
        return EXIT_FAIL
    if flags.INCONCLUSIVE in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def cmd_decompose(args):
    """
    Tabulate p_alpha over alphas and points and write the table as CSV.
    """
    gen, label = load_spec(args.spec)
    alphas = parse_reals(args.alphas)
    points = load_points(args.points, gen.dim)
    norm = build_norm(gen)
    try:
        table = decompose_table(norm, alphas, points, args.tol, cores=args.cores)
    except ValueError as e:
        raise UsageError(str(e))
    write_csv(alpha_table(table), _out_name(args, 'alpha'))
    ndegen = int(np.sum(table.flags & flags.DEGENERATE > 0))
    print("# {0}: {1} alphas x {2} points, {3} degenerate cells".format(label, len(table.alphas),
                                                                        len(table.points), ndegen))
    return EXIT_PASS


def cmd_curve(args):
    """
    Sample t -> N(x, t) and write the curve as CSV.
    """
    gen, label = load_spec(args.spec)
    x = parse_vector(args.point)
    if not 0 <= args.tmin < args.tmax:
        raise UsageError("Need 0 <= tmin < tmax, got {0} and {1}".format(args.tmin, args.tmax))
    if args.steps < 2:
        raise UsageError("Need steps >= 2, got {0}".format(args.steps))
    if args.log:
        if args.tmin <= 0:
            raise UsageError("Log spacing needs tmin > 0")
        grid = np.geomspace(args.tmin, args.tmax, args.steps)
    else:
        grid = np.linspace(args.tmin, args.tmax, args.steps)
    norm = build_norm(gen)
    values = t_curve(norm, x, grid)
    write_csv(curve_table(grid, values), _out_name(args, 'curve'))
    return EXIT_PASS


def cmd_converge(args):
    """
    Compare fuzzy and crisp convergence of a named sequence and print the verdicts.

    Returns
    -------
    code : int
        0 if the fuzzy and crisp verdicts agree, 1 otherwise.
    """
    gen, label = load_spec(args.spec)
    try:
        rule = SequenceRule(args.sequence, parse_vector(args.vector))
        cfg = CheckConfig(eps_conv=args.eps)
    except ValueError as e:
        raise UsageError(str(e))
    if len(rule.vector) != gen.dim:
        raise UsageError("Vector has dimension {0} but the norm has {1}".format(len(rule.vector), gen.dim))
    if args.nmax < 10:
        raise UsageError("Need nmax >= 10, got {0}".format(args.nmax))
    report = check_fuzzy_convergence(build_norm(gen), rule, args.nmax, cfg)
    lines = ["# {0}: {1} sequence, n_max={2}".format(label, rule.name, args.nmax)] + report.lines()
    for l in lines:
        print(l)
    if args.out is not None:
        with open(args.out, 'w') as f:
            f.write('\n'.join(lines) + '\n')
        log.info("Wrote {0}".format(args.out))
    return EXIT_PASS if report.agree else EXIT_FAIL


def _boundary_points(gen):
    """Points r*e_i/||e_i|| on the boundary of every indicator ball in the generator"""
    pts = []
    if gen.kind == 'indicator':
        for i in range(gen.dim):
            e = np.zeros(gen.dim)
            e[i] = 1.
            e /= gen.base(e)
            pts.extend([gen.radius * e, -gen.radius * e])
    for c in gen.children:
        pts.extend(_boundary_points(c))
    return pts


def cmd_roundtrip(args):
    """
    Check f -> N_f -> f and N -> f_N -> N with exact equality on sampled points.
    """
    gen, label = load_spec(args.spec)
    try:
        cfg = CheckConfig(seed=get_seed(args), samples=args.samples)
    except ValueError as e:
        raise UsageError(str(e))
    points = sample_vectors(cfg, gen.dim)
    boundary = _boundary_points(gen)
    if boundary:
        points = np.vstack([points, boundary])
    t_values = np.concatenate([[0.], cfg.t_grid])
    n_checked, mismatches = roundtrip_check(gen, points, t_values)
    print("# {0}: {1} equalities checked, {2} mismatches".format(label, n_checked, len(mismatches)))
    for m in mismatches[:10]:
        print("    {direction} x={x} t={t!r}: {lhs!r} != {rhs!r}".format(**m))
    return EXIT_FAIL if mismatches else EXIT_PASS


def build_parser():
    """
    Construct the argument parser with one sub-command per operation.
    """
    parser = ArgumentParser(prog='fuzznorm', description="Fuzzy norms from quasiconcave generators.")
    parser.add_argument('--version', action='version', version='%(prog)s {0}-({1})'.format(__version__, __date__))
    parser.add_argument('--debug', dest='debug', action='store_true', default=False,
                        help='Enable debug mode.')
    parser.add_argument('--quiet', dest='quiet', action='store_true', default=False,
                        help='Only report warnings and errors.')
    sub = parser.add_subparsers(dest='command', metavar='<command>', parser_class=ArgumentParser)

    check = sub.add_parser('check', help='Check fuzzy norm and generator axioms.')
    check.add_argument('spec', metavar='<spec.json>', help='The norm spec file.')
    check.add_argument('--axioms', dest='axioms', default='N1..N5',
                       help='Comma separated labels or ranges. Default = N1..N5')
    check.add_argument('--samples', dest='samples', type=int, default=2000,
                       help='Number of random samples per check. Default = 2000')
    check.add_argument('--seed', dest='seed', type=int, default=0,
                       help='Random seed, overridden by ${0}. Default = 0'.format(SEED_ENV))
    check.add_argument('--tol', dest='tol', type=float, default=DEFAULT_TOL,
                       help='Tolerance for the alpha-cut checks. Default = 1e-9')
    check.add_argument('--alpha', dest='alpha', type=float, default=None,
                       help='Also check that p_alpha is a crisp norm and that the alpha-cut family ascends.')
    check.add_argument('--cores', dest='cores', type=int, default=1,
                       help='Number of processes. Default = 1')
    check.add_argument('--out', dest='out', default=None, metavar='<file.csv>',
                       help='Report file. Default = <spec>_check.csv')
    check.set_defaults(func=cmd_check)

    decompose = sub.add_parser('decompose', help='Tabulate the alpha-cut norms.')
    decompose.add_argument('spec', metavar='<spec.json>', help='The norm spec file.')
    decompose.add_argument('--alphas', dest='alphas', default='0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9',
                           help='Comma separated, strictly increasing levels in (0,1).')
    decompose.add_argument('--points', dest='points', required=True, metavar='<points.csv>',
                           help='CSV file with header x1,...,xd.')
    decompose.add_argument('--tol', dest='tol', type=float, default=DEFAULT_TOL,
                           help='Bisection tolerance. Default = 1e-9')
    decompose.add_argument('--cores', dest='cores', type=int, default=1,
                           help='Number of processes. Default = 1')
    decompose.add_argument('--out', dest='out', default=None, metavar='<file.csv>',
                           help='Output file. Default = <spec>_alpha.csv')
    decompose.set_defaults(func=cmd_decompose)

    curve = sub.add_parser('curve', help='Sample the t-curve N(x, t).')
    curve.add_argument('spec', metavar='<spec.json>', help='The norm spec file.')
    curve.add_argument('--point', dest='point', required=True, metavar='x1,...,xd',
                       help='The vector x.')
    curve.add_argument('--tmin', dest='tmin', type=float, default=0.)
    curve.add_argument('--tmax', dest='tmax', type=float, default=10.)
    curve.add_argument('--steps', dest='steps', type=int, default=101)
    curve.add_argument('--log', dest='log', action='store_true', default=False,
                       help='Log spaced t (needs tmin > 0).')
    curve.add_argument('--out', dest='out', default=None, metavar='<file.csv>',
                       help='Output file. Default = <spec>_curve.csv')
    curve.set_defaults(func=cmd_curve)

    converge = sub.add_parser('converge', help='Compare fuzzy and crisp convergence to 0.')
    converge.add_argument('spec', metavar='<spec.json>', help='The norm spec file.')
    converge.add_argument('--sequence', dest='sequence', choices=SEQUENCE_RULES, default='inverse_n')
    converge.add_argument('--vector', dest='vector', required=True, metavar='v1,...,vd',
                          help='The base vector v.')
    converge.add_argument('--nmax', dest='nmax', type=int, default=10000)
    converge.add_argument('--eps', dest='eps', type=float, default=1e-3,
                          help='Closeness to 1 for fuzzy convergence. Default = 1e-3')
    converge.add_argument('--out', dest='out', default=None, metavar='<file.txt>',
                          help='Also write the report to this file.')
    converge.set_defaults(func=cmd_converge)

    roundtrip = sub.add_parser('roundtrip', help='Check the generator/norm round trip.')
    roundtrip.add_argument('spec', metavar='<spec.json>', help='The norm spec file.')
    roundtrip.add_argument('--samples', dest='samples', type=int, default=2000)
    roundtrip.add_argument('--seed', dest='seed', type=int, default=0)
    roundtrip.set_defaults(func=cmd_roundtrip)
    return parser


def main(argv=None):
    """
    Run the command line interface.

    Parameters
    ----------
    argv : list
        Arguments, default = sys.argv[1:].

    Returns
    -------
    code : int
        The exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    logging.basicConfig(format="%(module)s:%(levelname)s %(message)s")
    level = logging.INFO
    if args.debug:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    log.setLevel(level)

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    try:
        return args.func(args)
    except CurveError as e:
        log.error("Internal invariant breached: {0}".format(e))
        return EXIT_INVARIANT
    except BracketError as e:
        log.error("{0}".format(e))
        return EXIT_INVARIANT
    except (UsageError, FormatError, GeneratorError, DimensionError, MembershipError, ValueError) as e:
        log.error("{0}".format(e))
        return EXIT_USAGE
    except (IOError, OSError) as e:
        log.error("{0}".format(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
