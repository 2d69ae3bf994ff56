# -*- coding: utf-8 -*-
"""
    interval_approx

    Factor-6 approximation of the minimum identifying code of an interval
    graph: LP rounding over the left and right windows of every edge for the
    separation of adjacent pairs, and a greedy independent set for the
    separation of non-adjacent pairs and domination.

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import io
import logging
from collections import namedtuple
from fractions import Fraction

from .code_core import (
    Code, IDENTIFYING, check_twin_free, requirements, verify_identifying_code
)
from .exceptions import SolverError, raise_user_error, register_error_messages
from .graph_core import (
    IntervalRep, VertexSet, interval_graph, iter_bits, read_text
)
from .lp_solver import LinearProgram, solve_lp

__all__ = [
    'WindowPair', 'Programs', 'InterRounding', 'ApproxLedger',
    'canonicalize', 'windows', 'build_programs', 'inter_rounding',
    'solve_inter', 'greedy_stab', 'solve_disj', 'approx_id_code_interval',
    'opt_fractional', 'consecutive_pair_load', 'parse_intervals',
    'format_intervals', 'read_intervals', 'write_intervals', 'THRESHOLD',
]

logger = logging.getLogger(__name__)

#: a window whose fractional weight reaches this is rounded on its side
THRESHOLD = Fraction(1, 2)

register_error_messages({
    'not_adjacent': 'Vertices %s and %s are not adjacent.',
    'representation_mismatch':
        'The interval representation does not match the graph: %s.',
    'empty_range': 'Range [%s, %s] is empty.',
    'unknown_program': 'Unknown program "%s"; expected P, P_inter or P_disj.',
    'malformed_interval_file': 'Interval file line %s: %s',
    'approx_invalid': 'Approximate code is not identifying: %s.',
    'window_uncovered':
        'Edge %s is in neither window class (sums %s and %s).',
})


def canonicalize(rep):
    """
    Rank all ``2n`` endpoints: by coordinate, begins before ends at equal
    coordinates, then by vertex id. Touching intervals keep intersecting.
    """
    events = []
    for v, (begin, end) in enumerate(rep.intervals()):
        events.append((begin, 0, v))
        events.append((end, 1, v))
    events.sort()
    begin_rank = [0] * rep.n
    end_rank = [0] * rep.n
    for rank, (_, kind, v) in enumerate(events, 1):
        if kind == 0:
            begin_rank[v] = rank
        else:
            end_rank[v] = rank
    return IntervalRep(rep.intervals(), begin_rank, end_rank)


def _canonical(rep):
    return rep if rep.is_canonical else canonicalize(rep)


class WindowPair(namedtuple('WindowPair', 'edge left_window right_window')):
    """
    Windows of an edge ``(j, k)``.

    ``left_window = (b1, b2)`` covers the end ranks in ``[b1, b2)`` where
    ``b1 < b2`` are the begin ranks of ``j`` and ``k``; ``right_window =
    (e1, e2)`` covers the begin ranks in ``(e1, e2]`` where ``e1 < e2`` are
    their end ranks.
    """
    __slots__ = ()

    def left_members(self, rep):
        b1, b2 = self.left_window
        return VertexSet(
            [i for i in range(rep.n) if b1 <= rep.end_rank[i] < b2], rep.n)

    def right_members(self, rep):
        e1, e2 = self.right_window
        return VertexSet(
            [i for i in range(rep.n) if e1 < rep.begin_rank[i] <= e2],
            rep.n)


def windows(rep, j, k):
    """
    :class:`WindowPair` of the adjacent vertices ``j`` and ``k``; the two
    member sets partition N[j] symmetric-difference N[k].
    """
    rep = _canonical(rep)
    if j == k or not rep.intersect(j, k):
        raise_user_error('not_adjacent', (j, k))
    begins = sorted((rep.begin_rank[j], rep.begin_rank[k]))
    ends = sorted((rep.end_rank[j], rep.end_rank[k]))
    return WindowPair((min(j, k), max(j, k)), tuple(begins), tuple(ends))


Programs = namedtuple('Programs', 'full inter disj')


def build_programs(g, rep):
    """
    The covering program of identifying codes and its split.

    :returns: :class:`Programs` ``(full, inter, disj)``; ``inter`` holds the
        separation rows of adjacent pairs, ``disj`` those of non-adjacent
        pairs followed by the domination rows, ``full`` every row in the
        order of :func:`identcode.code_core.requirements`
    """
    if rep.n != g.n:
        raise_user_error('representation_mismatch',
                         ('%d intervals for %d vertices' % (rep.n, g.n),))
    if interval_graph(rep) != g:
        raise_user_error('representation_mismatch',
                         ('adjacency differs from interval intersection',))
    check_twin_free(g)
    full, inter, disj_separation, domination = [], [], [], []
    for req in requirements(g):
        row = (tuple(req.covered_by), 1, (req.kind,) + tuple(req.vertices))
        full.append(row)
        if req.kind == 'domination':
            domination.append(row)
        elif g.has_edge(*req.vertices):
            inter.append(row)
        else:
            disj_separation.append(row)
    return Programs(
        LinearProgram(g.n, full),
        LinearProgram(g.n, inter),
        LinearProgram(g.n, disj_separation + domination))


def greedy_stab(ranges):
    """
    Fewest positions meeting every inclusive range ``(lo, hi)``: scan by
    right end and take the right end of each range not yet met.

    :returns: sorted list of positions
    """
    for lo, hi in ranges:
        if lo > hi:
            raise_user_error('empty_range', (lo, hi))
    stabs = []
    last = None
    for lo, hi in sorted(set(ranges), key=lambda r: (r[1], r[0])):
        if last is None or last < lo:
            stabs.append(hi)
            last = hi
    return stabs


class InterRounding(namedtuple('InterRounding', [
        'point', 'value', 'windows', 'sums', 'left_edges', 'right_edges',
        'left_program', 'right_program', 'left_stabs', 'right_stabs',
        'result'])):
    """
    Every intermediate object of the rounding for adjacent pairs.

    ``sums[edge]`` is ``(left_sum, right_sum)`` of the fractional optimum over
    the edge's windows; ``left_program``/``right_program`` are the window
    covering programs whose optima equal the stab counts.
    """
    __slots__ = ()


def _window_ranges(members, order_position):
    positions = [order_position[v] for v in members]
    return min(positions), max(positions)


def inter_rounding(g, rep):
    """
    Round the fractional optimum of the adjacent-pair program.

    Each edge whose left window carries weight at least 1/2 joins the left
    class, and likewise on the right; an edge may join both. The left class
    becomes ranges of consecutive vertices in end order, the right class in
    begin order, and each side is solved exactly by :func:`greedy_stab`.
    """
    rep = _canonical(rep)
    programs = build_programs(g, rep)
    solution = solve_lp(programs.inter)
    point = solution.point
    end_order = sorted(range(g.n), key=lambda v: rep.end_rank[v])
    begin_order = sorted(range(g.n), key=lambda v: rep.begin_rank[v])
    end_position = dict((v, i) for i, v in enumerate(end_order))
    begin_position = dict((v, i) for i, v in enumerate(begin_order))

    pairs, sums = {}, {}
    left_edges, right_edges = [], []
    left_rows, right_rows = [], []
    for edge in g.edges():
        pair = windows(rep, *edge)
        left = pair.left_members(rep)
        right = pair.right_members(rep)
        left_sum = sum((point[i] for i in left), Fraction(0))
        right_sum = sum((point[i] for i in right), Fraction(0))
        pairs[edge] = pair
        sums[edge] = (left_sum, right_sum)
        if left_sum >= THRESHOLD:
            left_edges.append(edge)
            left_rows.append(left)
        if right_sum >= THRESHOLD:
            right_edges.append(edge)
            right_rows.append(right)
        if left_sum < THRESHOLD and right_sum < THRESHOLD:
            raise_user_error('window_uncovered', (edge, left_sum, right_sum),
                             exception=SolverError)

    left_ranges = [_window_ranges(r, end_position) for r in left_rows]
    right_ranges = [_window_ranges(r, begin_position) for r in right_rows]
    left_stabs = [end_order[p] for p in greedy_stab(left_ranges)]
    right_stabs = [begin_order[p] for p in greedy_stab(right_ranges)]
    result = VertexSet(set(left_stabs) | set(right_stabs), g.n)
    logger.debug('%d edges: %d left, %d right, %d vertices chosen',
                 g.m, len(left_edges), len(right_edges), len(result))
    return InterRounding(
        point=point,
        value=solution.value,
        windows=pairs,
        sums=sums,
        left_edges=tuple(left_edges),
        right_edges=tuple(right_edges),
        left_program=LinearProgram.covering(g.n, left_rows, left_edges),
        right_program=LinearProgram.covering(g.n, right_rows, right_edges),
        left_stabs=tuple(sorted(left_stabs)),
        right_stabs=tuple(sorted(right_stabs)),
        result=result,
    )


def solve_inter(g, rep):
    """
    Vertex set satisfying every separation row of an adjacent pair, at most
    four times the fractional optimum of those rows.
    """
    return inter_rounding(g, rep).result


def solve_disj(g, rep):
    """
    Greedy independent set: take the remaining interval that ends first and
    discard its closed neighbourhood, until nothing remains.

    The set dominates every vertex and separates every non-adjacent pair,
    and has at most twice the fractional optimum of those rows.
    """
    rep = _canonical(rep)
    remaining = (1 << g.n) - 1
    chosen = []
    for v in sorted(range(g.n), key=lambda u: rep.end_rank[u]):
        if remaining >> v & 1:
            chosen.append(v)
            remaining &= ~g.closed_mask(v)
    return VertexSet(chosen, g.n)


def consecutive_pair_load(g, rep, s):
    """
    For every vertex, the number of consecutive pairs of ``s`` (in end
    order) whose neighbourhood difference contains it.
    """
    rep = _canonical(rep)
    ordered = sorted(s, key=lambda v: rep.end_rank[v])
    load = [0] * g.n
    for a, b in zip(ordered, ordered[1:]):
        for v in iter_bits(g.closed_mask(a) ^ g.closed_mask(b)):
            load[v] += 1
    return load


class ApproxLedger(namedtuple('ApproxLedger', [
        'code_size', 'inter_size', 'disj_size', 'opt_p', 'opt_inter',
        'opt_disj'])):
    """
    Sizes and fractional optima behind the factor-6 guarantee.
    """
    __slots__ = ()

    def links(self):
        """
        The bound chain as ``(name, lhs, rhs, holds)`` tuples.
        """
        combined = 4 * self.opt_inter + 2 * self.opt_disj
        return [
            ('|C| <= |C_inter| + |C_disj|', self.code_size,
             self.inter_size + self.disj_size,
             self.code_size <= self.inter_size + self.disj_size),
            ('|C_inter| <= 4*OPT(P_inter*)', self.inter_size,
             4 * self.opt_inter, self.inter_size <= 4 * self.opt_inter),
            ('|C_disj| <= 2*OPT(P_disj*)', self.disj_size,
             2 * self.opt_disj, self.disj_size <= 2 * self.opt_disj),
            ('4*OPT(P_inter*) + 2*OPT(P_disj*) <= 6*OPT(P*)', combined,
             6 * self.opt_p, combined <= 6 * self.opt_p),
        ]

    def chain_holds(self):
        return all(link[3] for link in self.links())


def approx_id_code_interval(g, rep):
    """
    Identifying code of an interval graph of size at most six times the
    fractional optimum, hence at most six times the minimum.

    :returns: :class:`Code` with the :class:`ApproxLedger` under
        ``metadata['ledger']``
    """
    rep = _canonical(rep)
    programs = build_programs(g, rep)
    rounding = inter_rounding(g, rep)
    disj = solve_disj(g, rep)
    code = rounding.result.union(disj)
    verdict = verify_identifying_code(g, code)
    if not verdict.valid:
        raise_user_error('approx_invalid', (str(verdict),),
                         exception=SolverError)
    ledger = ApproxLedger(
        code_size=len(code),
        inter_size=len(rounding.result),
        disj_size=len(disj),
        opt_p=solve_lp(programs.full).value,
        opt_inter=rounding.value,
        opt_disj=solve_lp(programs.disj).value,
    )
    if not ledger.chain_holds():
        logger.warning('Bound chain broken: %r', ledger)
    return Code(code, IDENTIFYING, {
        'solver': 'interval', 'ledger': ledger,
        'inter': rounding.result, 'disj': disj,
    })


def opt_fractional(g, rep, which='P'):
    """
    Exact optimum of the fractional relaxation of ``'P'``, ``'P_inter'`` or
    ``'P_disj'``.
    """
    programs = build_programs(g, rep)
    lp = {
        'P': programs.full, 'P_inter': programs.inter,
        'P_disj': programs.disj,
    }.get(which)
    if lp is None:
        raise_user_error('unknown_program', (which,))
    return solve_lp(lp).value


def parse_intervals(text):
    """
    Parse the interval format: ``n`` then ``n`` lines ``id begin end``.
    Endpoints are integers, decimals or ``p/q`` fractions.
    """
    count = None
    intervals = {}
    for number, line in enumerate(io.StringIO(text), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        if count is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise_user_error('malformed_interval_file',
                                 (number, 'expected the interval count'))
            count = int(fields[0])
            continue
        if len(fields) != 3:
            raise_user_error('malformed_interval_file',
                             (number, 'expected "id begin end"'))
        try:
            v = int(fields[0])
            begin, end = Fraction(fields[1]), Fraction(fields[2])
        except (ValueError, ZeroDivisionError):
            raise_user_error('malformed_interval_file',
                             (number, 'unreadable number'))
        if not 0 <= v < count or v in intervals:
            raise_user_error('malformed_interval_file',
                             (number, 'bad or repeated id %d' % v))
        if begin > end:
            raise_user_error('malformed_interval_file',
                             (number, 'begin after end'))
        intervals[v] = (begin, end)
    if count is None:
        raise_user_error('malformed_interval_file', (0, 'empty file'))
    if len(intervals) != count:
        raise_user_error('malformed_interval_file', (
            0, 'expected %d intervals, found %d' % (count, len(intervals))))
    return IntervalRep([intervals[v] for v in range(count)])


def format_intervals(rep):
    lines = [str(rep.n)]
    lines.extend(
        '%d %s %s' % (v, begin, end)
        for v, (begin, end) in enumerate(rep.intervals()))
    return '\n'.join(lines) + '\n'


def read_intervals(path):
    return parse_intervals(read_text(path))


def write_intervals(rep, path):
    with io.open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(format_intervals(rep))
