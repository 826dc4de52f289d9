# SPDX-License-Identifier: GPL-3.0-or-later
# vim: et:ts=4
"""
This is the command line interface for toeplitz-involution.

Exit status: 0 on success, 1 when a verification fails, 2 on usage, parse
or range errors. Results go to standard output, everything else to
standard error.
"""

import argparse
import json
import sys

import logging
msg = logging.getLogger(__name__)
import toeplitz_involution
from toeplitz_involution import GenericError, ParseError, UsageError
from toeplitz_involution.config import load_settings
from toeplitz_involution.involution import apply_phi, apply_phi_twice, verify_involution
from toeplitz_involution.poly import poly_format, poly_parse, poly_to_json
from toeplitz_involution.ring import parse_ring_spec
from toeplitz_involution.toeplitz import (DETERMINANT_METHODS, build_toeplitz, determinant,
                                          first_column_det, minor_table)
from toeplitz_involution.util import _, _format, caret, split_csv

try:
    import toeplitz_involution.version
    # pylint: disable=E1101
    VERSION = toeplitz_involution.version.version
except ImportError:
    VERSION = "unknown"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def parse_opts(argv):
    # --config must be known before the other defaults are computed.
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument('--config', metavar='FILE')
    known, _rest = pre.parse_known_args(argv)
    settings = load_settings(known.config)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--n',
                        type=int,
                        required=True,
                        metavar='N',
                        help='number of variables x1..xN')
    common.add_argument('--ring',
                        default=settings.ring,
                        metavar='z|zmod:M',
                        help='coefficient ring (default %(default)s)')
    common.add_argument('--format',
                        choices=('text', 'json'),
                        default=settings.format,
                        help='output format (default %(default)s)')
    common.add_argument('--max-n',
                        type=int,
                        default=settings.max_n,
                        metavar='N',
                        help='refuse larger variable counts (default %(default)i)')
    common.add_argument('--config',
                        metavar='FILE',
                        help='read defaults from FILE after the packaged ones')
    common.add_argument('-q',
                        '--quiet',
                        action='count',
                        help='decrease verbosity (may be repeated)')
    common.add_argument('-v',
                        '--verbose',
                        action='count',
                        help='increase verbosity (may be repeated)')

    parser = argparse.ArgumentParser(
        prog='toeplitz-involution',
        description='Principal minors of the Toeplitz matrices T(k) and the involution x_k -> m_k.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + VERSION)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    minors = commands.add_parser('minors', parents=[common], help='print m1..mN')
    minors.add_argument('--k', type=int, metavar='K', help='print only mK')
    minors.add_argument('--method',
                        choices=('recursion',) + tuple(DETERMINANT_METHODS),
                        default='recursion',
                        help='how to compute the minors (default %(default)s)')

    phi = commands.add_parser('phi', parents=[common], help='apply x_k -> m_k to a polynomial')
    phi.add_argument('--poly', required=True, metavar='POLY', help='the polynomial to map')
    phi.add_argument('--twice', action='store_true', help='apply the map twice')

    verify = commands.add_parser('verify', parents=[common],
                                 help='check phi(phi(x_k)) = x_k for every generator')
    verify.set_defaults(replace_minor=[])
    verify.add_argument('--replace-minor',
                        action='append',
                        metavar='K=POLY',
                        help='replace mK by POLY before checking (may be repeated)')

    colsdet = commands.add_parser('colsdet', parents=[common],
                                  help='determinant of T(k) with a given first column')
    colsdet.add_argument('--column', required=True, metavar='A1,...,AK',
                         help='comma-separated first column entries')

    matrix = commands.add_parser('matrix', parents=[common], help='print the matrix T(k)')
    matrix.add_argument('--k', type=int, metavar='K', help='order of the matrix (default N)')

    options = parser.parse_args(argv)

    logLevel = logging.WARNING
    if options.verbose:
        logLevel -= 10 * options.verbose
    if options.quiet:
        logLevel += 10 * options.quiet
    if logging.ERROR < logLevel:
        logLevel = logging.ERROR
    if logLevel < logging.DEBUG:
        logLevel = logging.DEBUG
    logging.basicConfig(level=logLevel)

    if options.n < 1:
        raise UsageError(_("--n must be a positive integer, got %d") % options.n)
    if options.n > options.max_n:
        raise UsageError(_("--n %d exceeds the limit of %d (raise it with --max-n)")
                         % (options.n, options.max_n))
    k = getattr(options, 'k', None)
    if k is not None and not 1 <= k <= options.n:
        raise UsageError(_("--k must lie in 1..%d, got %d") % (options.n, k))

    options.settings = settings
    return options


def parse_option_poly(ring, n, text, option, offset=0, whole=None, entry=None):
    """
    Parse a polynomial given on the command line. Parse errors are annotated
    with the option and the column within the full option value.
    """
    try:
        return poly_parse(ring, n, text)
    except ParseError as e:
        e.where = {'option': option, 'column': offset + e.position + 1}
        if entry is not None:
            e.where['entry'] = entry
        e.whole = whole if whole is not None else text
        e.offset = offset
        raise


def emit_json(obj):
    print(json.dumps(obj, indent=2))


#-- Commands --{{{1


def cmd_minors(options, ring):
    n = options.n
    orders = [options.k] if options.k is not None else range(1, n + 1)
    if options.method == 'recursion':
        table = minor_table(ring, n)
        minors = [(k, table[k]) for k in orders]
    else:
        limit = options.settings.leibniz_max_size
        minors = [(k, determinant(build_toeplitz(ring, n, k), options.method, max_size=limit))
                  for k in orders]

    if options.format == 'json':
        emit_json([{"k": k, "poly": poly_to_json(m)} for k, m in minors])
    else:
        for k, m in minors:
            print("m%d = %s" % (k, poly_format(m)))
    return EXIT_OK


def cmd_phi(options, ring):
    p = parse_option_poly(ring, options.n, options.poly, '--poly')
    if options.twice:
        result = apply_phi_twice(p, ring, options.n)
    else:
        result = apply_phi(p, ring, options.n)
    if options.format == 'json':
        emit_json(poly_to_json(result))
    else:
        print(poly_format(result))
    return EXIT_OK


def cmd_verify(options, ring):
    n = options.n
    table = minor_table(ring, n)
    for spec in options.replace_minor:
        index, sep, text = spec.partition('=')
        if not sep:
            raise UsageError(_("--replace-minor expects K=POLY, got '%s'") % spec)
        try:
            k = int(index)
        except ValueError:
            raise UsageError(_("--replace-minor: '%s' is not an index") % index)
        p = parse_option_poly(ring, n, text, '--replace-minor',
                              offset=len(index) + 1, whole=spec)
        msg.info(_("replacing m%d by %s"), k, poly_format(p))
        table = table.replace(k, p)

    report = verify_involution(ring, n, table)
    if options.format == 'json':
        emit_json(report.to_json())
    else:
        for check in report.per_generator:
            print("%s k=%d phi(x%d) = %s; phi(phi(x%d)) = %s"
                  % ("PASS" if check.passed else "FAIL", check.k, check.k,
                     poly_format(check.image), check.k, poly_format(check.double_image)))
    if report.overall:
        msg.info(_("phi o phi fixes x1..x%d over %s"), n, ring)
        return EXIT_OK
    msg.warning(_("phi o phi moves x%s over %s"),
                ", x".join(str(k) for k in report.failures()), ring)
    return EXIT_FAILED


def cmd_colsdet(options, ring):
    column = []
    for entry, (offset, text) in enumerate(split_csv(options.column), 1):
        column.append(parse_option_poly(ring, options.n, text, '--column',
                                        offset=offset, whole=options.column, entry=entry))
    result = first_column_det(ring, options.n, column)
    if options.format == 'json':
        emit_json({"k": len(column), "poly": poly_to_json(result)})
    else:
        print(poly_format(result))
    return EXIT_OK


def cmd_matrix(options, ring):
    k = options.k if options.k is not None else options.n
    M = build_toeplitz(ring, options.n, k)
    if options.format == 'json':
        emit_json({"k": k, "rows": [[poly_format(e) for e in row] for row in M.rows()]})
    else:
        print(M)
    return EXIT_OK


COMMANDS = {
    'minors': cmd_minors,
    'phi': cmd_phi,
    'verify': cmd_verify,
    'colsdet': cmd_colsdet,
    'matrix': cmd_matrix,
}


def main(argv=None):
    try:
        options = parse_opts(argv)
        msg.debug(_("This is toeplitz-involution version %s."), VERSION)
        try:
            ring = parse_ring_spec(options.ring)
        except ParseError as e:
            e.where = {'option': '--ring'}
            raise
        status = COMMANDS[options.command](options, ring)

    except ParseError as e:
        print('error: ' + _format(getattr(e, 'where', None), e.reason), file=sys.stderr)
        if hasattr(e, 'whole'):
            print(caret(e.whole, e.offset + e.position), file=sys.stderr)
        sys.exit(EXIT_USAGE)
    except GenericError as e:
        print('error: ' + str(e), file=sys.stderr)
        sys.exit(EXIT_USAGE)

    sys.exit(status)
