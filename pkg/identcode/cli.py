# -*- coding: utf-8 -*-
"""
    cli

    Command line entry point: ``identcode <subcommand> ...``.

    Exit codes: 0 success, 1 invalid verdict or infeasible instance, 2 input
    error, 3 size limit exceeded.

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import argparse
import concurrent.futures
import io
import logging
import sys

from .code_core import (
    exact_min_id_code, exact_min_set_cover, greedy_id_code, log_lower_bound,
    verify_discriminating_code, verify_identifying_code
)
from .constructions import FAMILIES
from .exceptions import (
    DegenerateInstanceError, TwinsError, UserError, raise_user_error,
    register_error_messages
)
from .graph_core import (
    VertexSet, format_edge_list, interval_graph, read_edge_list,
    write_edge_list
)
from .interval_approx import (
    approx_id_code_interval, read_intervals, write_intervals
)
from .reductions import (
    build_dc_instance, build_ic_instance, dc_solution_to_setcover,
    ic_repair, read_setcover
)
from .vc_dim import sauer_lower_bound, sauer_sum_lower_bound, vc_dimension

__all__ = ['main', 'build_parser', 'Report']

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

register_error_messages({
    'malformed_code': 'Code "%s" is not a comma separated list of ids.',
})


class Report(object):
    """
    Result of one subcommand run.

    :param headline: first line of the human output
    :param fields: ordered ``(key, value)`` pairs of the ``kv`` output
    :param extra: further lines of the human output
    :param exit_code: process exit status contributed by this result
    """

    def __init__(self, headline, fields=(), extra=(), exit_code=0):
        self.headline = headline
        self.fields = list(fields)
        self.extra = list(extra)
        self.exit_code = exit_code

    @classmethod
    def from_error(cls, error):
        if isinstance(error, TwinsError):
            pair = ','.join(map(str, error.pair))
            return cls('twins: %s' % pair, [
                ('status', 'twins'), ('twins', pair)
            ], exit_code=error.exit_code)
        return cls('error: %s' % error.message, [
            ('status', 'error'), ('error', error.key),
            ('message', error.message),
        ], exit_code=error.exit_code)

    def render(self, fmt):
        if fmt == 'kv':
            return ['%s=%s' % (key, value) for key, value in self.fields]
        return [self.headline] + self.extra


def _ids(vertices):
    return ','.join(map(str, vertices))


def parse_code(text, n):
    "Parse ``'v1,v2,...'`` into a :class:`VertexSet` of a graph of order n"
    text = (text or '').strip()
    if not text:
        return VertexSet((), n)
    try:
        members = [int(part) for part in text.split(',')]
    except ValueError:
        raise_user_error('malformed_code', (text,))
    return VertexSet(members, n)


def _verify(args):
    g = read_edge_list(args.graph)
    code = parse_code(args.code, g.n)
    if args.x_side is not None:
        x_side = parse_code(args.x_side, g.n)
        y_side = VertexSet(set(range(g.n)) - set(x_side), g.n)
        verdict = verify_discriminating_code(g, (x_side, y_side), code)
    else:
        verdict = verify_identifying_code(g, code)
    return Report(str(verdict), [
        ('verdict', str(verdict)), ('code_size', len(code)),
    ], exit_code=0 if verdict.valid else 1)


def _solve_exact(path, params):
    g = read_edge_list(path)
    code = exact_min_id_code(g, cap=params.get('cap'))
    return Report('gamma_id: %d' % len(code), [
        ('gamma_id', len(code)), ('code', _ids(code)),
        ('nodes', code.metadata['nodes']),
    ], extra=['code: %s' % _ids(code)])


def _approx_greedy(path, params):
    g = read_edge_list(path)
    code = greedy_id_code(g)
    lower = log_lower_bound(g.n)
    factor = code.metadata['bound_factor']
    return Report('size: %d' % len(code), [
        ('size', len(code)), ('code', _ids(code)),
        ('requirements', code.metadata['requirements']),
        ('bound_factor', '%.6f' % factor),
        ('log_lower_bound', lower),
    ], extra=[
        'code: %s' % _ids(code),
        'requirements: %d' % code.metadata['requirements'],
        'ratio bound: |C| <= %.6f * gamma_id' % factor,
        'log lower bound: gamma_id >= %d' % lower,
    ])


def _approx_interval(path, params):
    rep = read_intervals(path)
    g = interval_graph(rep)
    code = approx_id_code_interval(g, rep)
    ledger = code.metadata['ledger']
    fields = [
        ('size', len(code)), ('code', _ids(code)),
        ('opt_p', ledger.opt_p), ('opt_inter', ledger.opt_inter),
        ('opt_disj', ledger.opt_disj),
    ]
    extra = [
        'code: %s' % _ids(code),
        'OPT(P*): %s' % ledger.opt_p,
    ]
    for index, (name, lhs, rhs, holds) in enumerate(ledger.links()):
        fields.append(('link%d' % index, '%s;%s;%s;%s' % (
            name, lhs, rhs, 'ok' if holds else 'FAILED')))
        extra.append('%s: %s <= %s %s' % (
            name, lhs, rhs, 'ok' if holds else 'FAILED'))
    holds = ledger.chain_holds()
    fields.append(('chain', 'ok' if holds else 'failed'))
    return Report('size: %d' % len(code), fields, extra,
                  exit_code=0 if holds else 1)


def _vcdim(path, params):
    g = read_edge_list(path)
    result = vc_dimension(g, params.get('max_d'))
    fields = [
        ('dimension', result.dimension),
        ('lower_bound', int(result.lower_bound)),
    ]
    extra = []
    if result.lower_bound:
        extra.append('search stopped at the requested depth')
    if result.certificate is not None:
        shattered = _ids(result.certificate.shattered_set)
        fields.append(('shattered', shattered))
        extra.append('shattered: %s' % shattered)
        for subset, w in sorted(result.certificate.trace_witnesses.items()):
            extra.append('  {%s} <- %d' % (_ids(subset), w))
    return Report('dimension: %d' % result.dimension, fields, extra)


#: subcommands that accept several input files and ``--jobs``
BATCH = {
    'solve-exact': _solve_exact,
    'approx-greedy': _approx_greedy,
    'approx-interval': _approx_interval,
    'vcdim': _vcdim,
}


def _run_task(task):
    "Process-pool worker: run one batch subcommand on one file"
    command, path, params = task
    try:
        report = BATCH[command](path, params)
    except UserError as error:
        report = Report.from_error(error)
    report.fields.insert(0, ('file', path))
    return report


def _lowerbound(args):
    bound = sauer_lower_bound(args.n, args.d)
    return Report(str(bound), [
        ('sauer_lower_bound', bound),
        ('sauer_sum_lower_bound', sauer_sum_lower_bound(args.n, args.d)),
    ])


def _gen(args):
    built = FAMILIES[args.family](args.param)
    g = built[0]
    if args.output is None:
        return Report(format_edge_list(g).rstrip('\n'), [
            ('vertices', g.n), ('edges', g.m),
        ])
    written = [args.output + '.graph']
    write_edge_list(g, written[0])
    if args.family == 'path':
        written.append(args.output + '.intervals')
        write_intervals(built[1], written[-1])
    else:
        written.append(args.output + '.code')
        with io.open(written[-1], 'w', encoding='utf-8',
                     newline='\n') as handle:
            handle.write(_ids(built[1]) + '\n')
    return Report('wrote %s' % ', '.join(written), [
        ('vertices', g.n), ('edges', g.m), ('files', ','.join(written)),
    ])


def _reduce(args):
    sc = read_setcover(args.setcover)
    builder = build_dc_instance if args.target == 'dc' else build_ic_instance
    try:
        reduced = builder(sc)
    except DegenerateInstanceError as error:
        report = Report.from_error(error)
        report.extra.append(
            'hint: run solve-setcover on this instance instead')
        return report
    g = reduced.graph
    labels = ['# %d %s' % (v, reduced.label(v)) for v in range(g.n)]
    fields = [
        ('target', args.target), ('vertices', g.n), ('edges', g.m),
        ('ell', reduced.ell), ('x_side', _ids(reduced.x_side)),
        ('y_side', _ids(reduced.y_side)),
    ]
    if args.output is not None:
        write_edge_list(g, args.output + '.graph')
        with io.open(args.output + '.labels', 'w', encoding='utf-8',
                     newline='\n') as handle:
            handle.write('\n'.join(labels) + '\n')
        return Report('wrote %s.graph, %s.labels' % (
            args.output, args.output), fields)
    return Report(format_edge_list(g).rstrip('\n'), fields, labels)


def _map_back(args):
    sc = read_setcover(args.setcover)
    if args.target == 'dc':
        reduced = build_dc_instance(sc)
        code = parse_code(args.code, reduced.graph.n)
        cover = dc_solution_to_setcover(sc, code, reduced)
        fields = []
    else:
        reduced = build_ic_instance(sc)
        code = parse_code(args.code, reduced.graph.n)
        repair = ic_repair(sc, code, reduced)
        cover = repair.cover
        fields = [('repair_steps', len(repair.steps))]
    return Report('cover: %s' % _ids(cover), [
        ('cover', _ids(cover)), ('size', len(cover)),
        ('code_size', len(code)), ('ell', reduced.ell),
    ] + fields)


def _solve_setcover(args):
    sc = read_setcover(args.setcover)
    cover = exact_min_set_cover(sc)
    return Report('cover: %s' % _ids(cover), [
        ('cover', _ids(cover)), ('size', len(cover)),
    ])


SINGLE = {
    'verify': _verify,
    'lowerbound': _lowerbound,
    'gen': _gen,
    'reduce': _reduce,
    'map-back': _map_back,
    'solve-setcover': _solve_setcover,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog='identcode',
        description='Identifying codes: verification, exact and '
                    'approximate solvers, VC-dimension bounds and '
                    'set cover reductions.')
    parser.add_argument('--format', choices=('human', 'kv'),
                        default='human', help='output format')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for info, -vv for debug logging')
    parser.add_argument('--jobs', type=int, default=1,
                        help='worker processes for multi-file commands')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('verify', help='check an identifying code')
    p.add_argument('--graph', required=True)
    p.add_argument('--code', required=True)
    p.add_argument('--x-side', default=None,
                   help='check a discriminating code against this X side')

    p = sub.add_parser('solve-exact', help='minimum identifying code')
    p.add_argument('--graph', required=True, nargs='+')
    p.add_argument('--cap', type=int, default=None)

    p = sub.add_parser('approx-interval',
                       help='factor-6 code of an interval graph')
    p.add_argument('--intervals', required=True, nargs='+')

    p = sub.add_parser('approx-greedy', help='greedy logarithmic code')
    p.add_argument('--graph', required=True, nargs='+')

    p = sub.add_parser('vcdim', help='VC-dimension with a shattered set')
    p.add_argument('--graph', required=True, nargs='+')
    p.add_argument('--max-d', type=int, default=None)

    p = sub.add_parser('lowerbound', help='Sauer lower bound')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--d', type=int, required=True)

    p = sub.add_parser('gen', help='write a family instance')
    p.add_argument('--family', choices=sorted(FAMILIES), required=True)
    p.add_argument('--param', type=int, required=True)
    p.add_argument('--output', default=None, metavar='PREFIX')

    p = sub.add_parser('reduce', help='reduce a Set-Cover1 instance')
    p.add_argument('--setcover', required=True)
    p.add_argument('--target', choices=('dc', 'ic'), required=True)
    p.add_argument('--output', default=None, metavar='PREFIX')

    p = sub.add_parser('map-back', help='set cover from a reduced code')
    p.add_argument('--setcover', required=True)
    p.add_argument('--target', choices=('dc', 'ic'), default='ic')
    p.add_argument('--code', required=True)

    p = sub.add_parser('solve-setcover', help='exact Set-Cover1 optimum')
    p.add_argument('--setcover', required=True)
    return parser


def _batch_reports(args):
    paths = args.intervals if args.command == 'approx-interval' \
        else args.graph
    params = {
        'cap': getattr(args, 'cap', None),
        'max_d': getattr(args, 'max_d', None),
    }
    tasks = [(args.command, path, params) for path in paths]
    if args.jobs > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(
                max_workers=args.jobs) as executor:
            return list(executor.map(_run_task, tasks))
    return [_run_task(task) for task in tasks]


def main(argv=None, stdout=None):
    """
    Run the command line.

    :returns: the exit code
    """
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(
        args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)

    if args.command in BATCH:
        reports = _batch_reports(args)
        several = len(reports) > 1
        for report in reports:
            if several and args.format == 'human':
                stdout.write('%s:\n' % report.fields[0][1])
            for line in report.render(args.format):
                stdout.write(line + '\n')
        return max(report.exit_code for report in reports)

    try:
        report = SINGLE[args.command](args)
    except UserError as error:
        logger.debug('%s failed: %s', args.command, error.key)
        report = Report.from_error(error)
    for line in report.render(args.format):
        stdout.write(line + '\n')
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
