# -*- coding: utf-8 -*-

"""
Command line front end: counts, enumeration, sampling, Monte Carlo
statistics, exact moments, series dumps, identity checks and asymptotics.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
or capacity errors.
"""

import argparse
import contextlib
import csv
import json
import sys

import mpmath

from . import las, perm, sampler, schroder, series
from .exceptions import DomainError, SeplasException
from .utils import (default_workers, enumeration_cap, format_decimal,
                    format_rational, working_precision)


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_N_LIST = [250, 500, 1000, 2000]


def build_parser():
    # parser options applicable to all subcommands
    parser = argparse.ArgumentParser(
        prog='seplas',
        description='Longest alternating subsequences of random separable permutations',
    )
    parser.add_argument(
        '-v',
        '--verbose',
        action='store_true',
        help='print status messages to standard error',
    )
    parser.add_argument(
        '-f',
        '--format',
        choices=['csv', 'json'],
        default=None,
        help='machine-readable output format; each subcommand has its own default',
    )
    parser.add_argument(
        '-o',
        '--output',
        type=str,
        default=None,
        help='write output to this file instead of standard output',
    )
    parser.add_argument(
        '-p',
        '--precision',
        type=int,
        default=None,
        help='working precision in bits for asymptotics (default SEPLAS_PRECISION or 256)',
    )
    subparsers = parser.add_subparsers(
        dest='subparser',
        help='Subcommands available from the seplas CLI module',
    )

    # count subcommand
    parser_count = subparsers.add_parser(
        'count',
        help='print the Schröder numbers s_1..s_N',
    )
    parser_count.add_argument(
        'N',
        type=int,
        help='number of terms',
    )

    # enum subcommand
    parser_enum = subparsers.add_parser(
        'enum',
        help='stream every separable permutation of length n, one per line',
    )
    parser_enum.add_argument(
        'n',
        type=int,
        help='length, at most SEPLAS_ENUM_CAP',
    )

    # sample subcommand
    parser_sample = subparsers.add_parser(
        'sample',
        help='stream random permutations, one per line',
    )
    parser_sample.add_argument(
        'n',
        type=int,
        help='length',
    )
    _add_sampling_arguments(parser_sample)

    # stats subcommand
    parser_stats = subparsers.add_parser(
        'stats',
        help='Monte Carlo mean and variance of every flavor',
    )
    parser_stats.add_argument(
        'n',
        type=int,
        help='length',
    )
    _add_sampling_arguments(parser_stats)
    parser_stats.add_argument(
        '-w',
        '--workers',
        type=int,
        default=None,
        help='worker processes (default SEPLAS_WORKERS or 1)',
    )

    # moments subcommand
    parser_moments = subparsers.add_parser(
        'moments',
        help='exact moments of the typed lengths from the generating functions',
    )
    parser_moments.add_argument(
        'n',
        type=int,
        help='length',
    )
    parser_moments.add_argument(
        '--order',
        type=int,
        default=None,
        help='catalog order, default max(n, 4)',
    )

    # series subcommand
    parser_series = subparsers.add_parser(
        'series',
        help='dump the coefficients of a catalog series',
    )
    parser_series.add_argument(
        'name',
        choices=list(series.CATALOG_NAMES),
        help='series to dump',
    )
    parser_series.add_argument(
        '--order',
        type=int,
        default=64,
        help='catalog order',
    )

    # verify subcommand
    parser_verify = subparsers.add_parser(
        'verify',
        help='check recursions by enumeration and series identities to a given order',
    )
    parser_verify.add_argument(
        '--max-n',
        type=int,
        default=8,
        help='largest n for the enumeration checks, at least 3',
    )
    parser_verify.add_argument(
        '--order',
        type=int,
        default=64,
        help='series order for the identity checks, at least 16',
    )

    # asymptotics subcommand
    parser_asymptotics = subparsers.add_parser(
        'asymptotics',
        help='compare exact sequences with their asymptotic expansions',
    )
    parser_asymptotics.add_argument(
        '--n-list',
        type=int,
        nargs='+',
        default=DEFAULT_N_LIST,
        help='indices to evaluate',
    )

    return parser


def _add_sampling_arguments(subparser):
    subparser.add_argument(
        '--samples',
        type=int,
        default=1000,
        help='number of permutations',
    )
    subparser.add_argument(
        '--seed',
        type=int,
        default=0,
        help='64-bit seed',
    )
    subparser.add_argument(
        '--ensemble',
        choices=list(sampler.ENSEMBLES),
        default='separable',
        help='distribution of the permutations',
    )


def _write_json(out, payload):
    out.write(json.dumps(payload, indent=4) + '\n')


def _write_csv(out, header, rows):
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)


def do_count(args, out):
    values = schroder.schroder_numbers(args.N)
    if args.format == 'json':
        _write_json(out, values)
    elif args.format == 'csv':
        _write_csv(out, ['n', 'value'], enumerate(values, start=1))
    else:
        out.write(' '.join(str(v) for v in values) + '\n')
    return EXIT_OK


def do_enum(args, out):
    for p in perm.enumerate_separable(args.n):
        out.write('{}\n'.format(p))
    return EXIT_OK


def do_sample(args, out):
    for p in sampler.sample_stream(args.n, args.samples, args.seed, args.ensemble):
        out.write('{}\n'.format(p))
    return EXIT_OK


def do_stats(args, out):
    workers = args.workers if args.workers is not None else default_workers()
    estimate = sampler.mc_stats(args.n, args.samples, args.seed, workers=workers,
                                ensemble=args.ensemble, verbose=args.verbose)
    if args.format == 'csv':
        _write_csv(out, ['flavor', 'mean', 'variance', 'stderr'],
                   [(key, repr(estimate.mean[key]), repr(estimate.variance[key]),
                     repr(estimate.stderr[key])) for key in las.KEYS])
    else:
        _write_json(out, estimate.to_dict())
    return EXIT_OK


def do_moments(args, out):
    order = args.order if args.order is not None else max(args.n, 4)
    catalog = series.build_catalog(order, verbose=args.verbose)
    report = series.exact_moments(args.n, catalog).to_dict()

    if args.n <= enumeration_cap():
        table = las.moment_table(args.n, verbose=args.verbose)
        report['enumerated'] = {
            'mean_pm': format_rational(table.mean['pm']),
            'c_mm': format_rational(table.c['mm']),
            'mean_pp': format_rational(table.mean['pp']),
            'mean_mm': format_rational(table.mean['mm']),
            'mean_mm_decimal': format_decimal(table.mean['mm']),
        }

    if args.format == 'csv':
        rows = [(name, report[name], report[name + '_decimal'])
                for name in ('mean_pm', 'c_mm', 'secmom_pm', 'C_mm', 'var_pm', 'var_mm',
                             'translation')]
        for name, value in report.get('enumerated', {}).items():
            if not name.endswith('_decimal'):
                rows.append(('enumerated_' + name, value, ''))
        _write_csv(out, ['quantity', 'exact', 'decimal'], rows)
    else:
        _write_json(out, report)
    return EXIT_OK


def do_series(args, out):
    catalog = series.build_catalog(args.order, verbose=args.verbose)
    target = catalog[args.name]
    rows = [(n, c.numerator, c.denominator) for n, c in enumerate(target.coefficients())]
    if args.format == 'json':
        _write_json(out, [{'n': n, 'numerator': p, 'denominator': q} for n, p, q in rows])
    else:
        _write_csv(out, ['n', 'numerator', 'denominator'], rows)
    return EXIT_OK


def do_verify(args, out):
    if args.max_n < 3:
        raise DomainError('--max-n must be at least 3, got {}'.format(args.max_n))
    structure = []
    for n in range(3, args.max_n + 1):
        structure.extend(las.verify_structure(n, verbose=args.verbose))
    identities = series.verify_identities(args.order, verbose=args.verbose)

    if args.format == 'csv':
        rows = [('structure', row['identity'], row['n'], row['status'], '')
                for row in structure]
        rows.extend(('series', row['identity'], row['order'], row['status'],
                     '' if row['first_difference'] is None else row['first_difference'])
                    for row in identities)
        _write_csv(out, ['source', 'identity', 'n_or_order', 'status', 'first_difference'], rows)
    else:
        _write_json(out, {'structure': structure, 'identities': identities})

    if las.report_passed(structure) and series.report_passed(identities):
        return EXIT_OK

    failed = ['{} (n={})'.format(row['identity'], row['n'])
              for row in structure if row['status'] != 'pass']
    failed.extend('{} (order={})'.format(row['identity'], row['order'])
                  for row in identities if row['status'] == 'fail')
    for name in failed:
        print('Verification failed: {}'.format(name), file=sys.stderr)
    return EXIT_FAILED


def do_asymptotics(args, out):
    precision = args.precision if args.precision is not None else working_precision()
    rows = schroder.asymptotic_report(args.n_list, precision)

    # measured leading constant of s_n next to 2^(-3/4) and the literature's 1/2
    largest = max(args.n_list)
    measured = schroder.leading_constant_estimate(largest, precision)
    with mpmath.workprec(precision):
        expected = mpmath.mpf(2) ** (-mpmath.mpf(3) / 4)
        ratio = measured / expected
    rows.append({
        'kind': 's_constant',
        'n': largest,
        'value': format_decimal(measured),
        'lead_formula': format_decimal(expected),
        'refined_formula': format_decimal(mpmath.mpf(1) / 2),
        'ratio': format_decimal(ratio),
        'scaled_residual': '',
    })

    columns = ['kind', 'n', 'value', 'lead_formula', 'refined_formula', 'ratio', 'scaled_residual']
    if args.format == 'json':
        _write_json(out, rows)
    else:
        _write_csv(out, columns, [[row[c] for c in columns] for row in rows])
    return EXIT_OK


COMMANDS = {
    'count': do_count,
    'enum': do_enum,
    'sample': do_sample,
    'stats': do_stats,
    'moments': do_moments,
    'series': do_series,
    'verify': do_verify,
    'asymptotics': do_asymptotics,
}


@contextlib.contextmanager
def _open_output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, 'w', newline='') as outfile:
            yield outfile


def run(argv=None):
    """
    Parse argv, dispatch to a subcommand and return the exit status.

    :param list argv: arguments without the program name
    :return: 0 on success, 1 on verification failure, 2 on usage or capacity errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if not args.subparser:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        with _open_output(args.output) as out:
            return COMMANDS[args.subparser](args, out)
    except SeplasException as exc:
        print('Error: {}'.format(exc), file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()


# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
