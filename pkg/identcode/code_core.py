# -*- coding: utf-8 -*-
"""
    code_core

    Verification of identifying and discriminating codes, the exact
    branch-and-bound solvers and the greedy logarithmic approximation.

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import logging
import math
from collections import namedtuple

from .configuration import get_limit
from .exceptions import (
    CapExceededError, InfeasibleError, TwinsError, raise_user_error,
    register_error_messages
)
from .graph_core import VertexSet, find_twins, iter_bits

__all__ = [
    'Code', 'Requirement', 'Verdict', 'requirements',
    'verify_identifying_code', 'verify_discriminating_code',
    'min_hitting_set', 'exact_min_id_code', 'exact_min_discriminating_code',
    'exact_min_set_cover', 'greedy_id_code', 'log_lower_bound',
    'check_bipartition', 'check_twin_free',
]

logger = logging.getLogger(__name__)

IDENTIFYING = 'identifying'
DISCRIMINATING = 'discriminating'

register_error_messages({
    'twins_present':
        'Vertices %s and %s are twins; no identifying code exists.',
    'exact_cap': 'Instance with %s %s exceeds the exact solver limit of %s.',
    'code_outside_graph': 'Code vertex %s is not a vertex of the graph.',
    'code_outside_side': 'Code vertex %s does not lie in the Y side.',
    'bad_bipartition': 'Sides do not form a bipartition of the graph: %s.',
    'infeasible_row': 'Requirement %s cannot be satisfied by any column.',
    'uncovered_element': 'Element %s lies in no set.',
})


class Code(object):
    """
    Vertex subset proposed as an identifying or discriminating code.

    :param vertices: :class:`VertexSet`
    :param kind: ``'identifying'`` or ``'discriminating'``
    :param metadata: free-form certificate data (solver statistics,
        construction provenance, ...)
    """
    __slots__ = ('vertices', 'kind', 'metadata')

    def __init__(self, vertices, kind=IDENTIFYING, metadata=None):
        self.vertices = vertices
        self.kind = kind
        self.metadata = dict(metadata or {})

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    def __eq__(self, other):
        if isinstance(other, Code):
            return (self.vertices, self.kind) == (other.vertices, other.kind)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.vertices, self.kind))

    def __repr__(self):
        return 'Code(%s, %r)' % (self.vertices, self.kind)


class Requirement(namedtuple('Requirement', 'kind vertices covered_by')):
    """
    One row of program P.

    ``kind`` is ``'domination'`` (``vertices == (v,)``, ``covered_by`` is
    N[v]) or ``'separation'`` (``vertices == (u, v)`` with ``u < v``,
    ``covered_by`` is N[u] symmetric-difference N[v]).
    """
    __slots__ = ()


class Verdict(namedtuple('Verdict', 'status vertices')):
    "Outcome of a code verification"
    __slots__ = ()

    @property
    def valid(self):
        return self.status == 'valid'

    def __bool__(self):
        return self.valid

    __nonzero__ = __bool__

    def __str__(self):
        if self.valid:
            return 'valid'
        return '%s(%s)' % (self.status, ','.join(map(str, self.vertices)))


VALID = Verdict('valid', ())


def requirements(g):
    """
    Domination rows by ascending vertex, then separation rows by
    lexicographic pair.
    """
    closed = g.closed_masks()
    rows = [
        Requirement('domination', (v,), VertexSet.from_mask(mask, g.n))
        for v, mask in enumerate(closed)
    ]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            rows.append(Requirement(
                'separation', (u, v),
                VertexSet.from_mask(closed[u] ^ closed[v], g.n)))
    return rows


def _code_mask(vertices, n, key='code_outside_graph'):
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise_user_error(key, (v,))
        mask |= 1 << v
    return mask


def _first_failure(candidates, closed, cmask):
    """
    First violated requirement among ``candidates`` (ascending ids):
    domination first, then the lexicographically first unseparated pair.
    """
    for v in candidates:
        if not closed[v] & cmask:
            return Verdict('not_dominating', (v,))
    groups = {}
    for v in candidates:
        groups.setdefault(closed[v] & cmask, []).append(v)
    pairs = [members[:2] for members in groups.values() if len(members) > 1]
    if pairs:
        return Verdict('not_separating', tuple(min(pairs)))
    return VALID


def verify_identifying_code(g, code):
    """
    Check that every vertex has a nonempty trace on ``code`` and that all
    traces are pairwise distinct.

    :param code: :class:`Code`, :class:`VertexSet` or iterable of ids
    :returns: :class:`Verdict`, reporting the first failing requirement in
        the order of :func:`requirements`
    """
    cmask = _code_mask(code, g.n)
    return _first_failure(range(g.n), g.closed_masks(), cmask)


def check_bipartition(g, sides):
    """
    Validate ``(X, Y)`` as the two sides of bipartite ``g``.

    :returns: ``(x_mask, y_mask)``
    """
    x_side, y_side = sides
    x_mask = _code_mask(x_side, g.n)
    y_mask = _code_mask(y_side, g.n)
    if x_mask & y_mask:
        raise_user_error('bad_bipartition', ('sides overlap',))
    if x_mask | y_mask != (1 << g.n) - 1:
        raise_user_error('bad_bipartition', ('sides miss a vertex',))
    for v in range(g.n):
        own = x_mask if x_mask >> v & 1 else y_mask
        if g.neighbor_mask(v) & own:
            raise_user_error('bad_bipartition', ('edge inside a side',))
    return x_mask, y_mask


def verify_discriminating_code(g, sides, code):
    """
    Check that ``code`` (a subset of Y) dominates X and separates every pair
    of X vertices.
    """
    x_mask, y_mask = check_bipartition(g, sides)
    cmask = _code_mask(code, g.n)
    outside = cmask & ~y_mask
    if outside:
        raise_user_error('code_outside_side', (next(iter_bits(outside)),))
    return _first_failure(list(iter_bits(x_mask)), g.closed_masks(), cmask)


def check_twin_free(g):
    "Raise :class:`TwinsError` naming the first pair of twins, if any"
    twins = find_twins(g)
    if twins:
        raise_user_error('twins_present', twins[0], exception=TwinsError)


def _drop_superset_rows(rows):
    """
    Remove duplicate rows and rows containing another row; a hitting set of
    the remaining rows hits the removed ones.
    """
    kept = []
    for row in sorted(set(rows), key=lambda r: (bin(r).count('1'), r)):
        if not any(other & row == other for other in kept):
            kept.append(row)
    return kept


def _disjoint_rows_bound(rows):
    "Greedy packing of pairwise disjoint rows; each needs its own column"
    used = 0
    count = 0
    for row in rows:
        if not row & used:
            used |= row
            count += 1
    return count


def min_hitting_set(num_columns, rows):
    """
    Minimum set of columns meeting every row (rows are column bitsets).

    Branch and bound: branch on the columns of the shortest unhit row in
    ascending order, forbidding the columns already tried in earlier
    branches; prune when the chosen count plus a disjoint-row packing bound
    reaches the incumbent.

    :returns: ``(columns, explored_nodes)`` with ``columns`` sorted
    """
    rows = _drop_superset_rows(rows)
    if any(row == 0 for row in rows):
        raise_user_error('infeasible_row', ('(empty)',),
                         exception=InfeasibleError)
    full = (1 << num_columns) - 1
    best = [bin(full).count('1'), full]
    # all columns always hit every nonempty row
    stats = [0]

    def search(chosen, count, pending):
        stats[0] += 1
        if not pending:
            if count < best[0]:
                best[0], best[1] = count, chosen
            return
        pending.sort(key=lambda r: (bin(r).count('1'), r))
        if count + _disjoint_rows_bound(pending) >= best[0]:
            return
        row = pending[0]
        forbidden = 0
        for column in iter_bits(row):
            bit = 1 << column
            rest = []
            feasible = True
            for other in pending:
                if other & bit:
                    continue
                other &= ~forbidden
                if not other:
                    feasible = False
                    break
                rest.append(other)
            if feasible:
                search(chosen | bit, count + 1, rest)
            forbidden |= bit

    search(0, 0, list(rows))
    logger.debug('Hitting set of size %d found after %d nodes',
                 best[0], stats[0])
    return tuple(iter_bits(best[1])), stats[0]


def exact_min_id_code(g, cap=None):
    """
    Minimum identifying code of twin-free ``g``; its size is gamma^ID(g).

    :param cap: vertex limit, default ``exact_vertex_cap``
    """
    cap = get_limit('exact_vertex_cap', cap)
    if g.n > cap:
        raise_user_error('exact_cap', (g.n, 'vertices', cap),
                         exception=CapExceededError)
    check_twin_free(g)
    closed = g.closed_masks()
    rows = list(closed)
    rows.extend(
        closed[u] ^ closed[v]
        for u in range(g.n) for v in range(u + 1, g.n))
    columns, nodes = min_hitting_set(g.n, rows)
    return Code(VertexSet(columns, g.n), IDENTIFYING,
                {'solver': 'exact', 'nodes': nodes})


def exact_min_discriminating_code(g, sides, cap=None):
    """
    Minimum discriminating code: smallest subset of Y dominating and
    separating X.

    :param cap: limit on ``|Y|``, default ``exact_column_cap``
    """
    x_mask, y_mask = check_bipartition(g, sides)
    y_ids = list(iter_bits(y_mask))
    cap = get_limit('exact_column_cap', cap)
    if len(y_ids) > cap:
        raise_user_error('exact_cap', (len(y_ids), 'Y vertices', cap),
                         exception=CapExceededError)
    position = dict((y, i) for i, y in enumerate(y_ids))
    closed = g.closed_masks()

    def compress(mask):
        return sum(1 << position[y] for y in iter_bits(mask & y_mask))

    x_ids = list(iter_bits(x_mask))
    rows = []
    for x in x_ids:
        row = compress(closed[x])
        if not row:
            raise_user_error('infeasible_row', ('domination(%d)' % x,),
                             exception=InfeasibleError)
        rows.append(row)
    for a in range(len(x_ids)):
        for b in range(a + 1, len(x_ids)):
            row = compress(closed[x_ids[a]] ^ closed[x_ids[b]])
            if not row:
                raise_user_error(
                    'infeasible_row',
                    ('separation(%d,%d)' % (x_ids[a], x_ids[b]),),
                    exception=InfeasibleError)
            rows.append(row)
    columns, nodes = min_hitting_set(len(y_ids), rows)
    return VertexSet([y_ids[c] for c in columns], g.n)


def exact_min_set_cover(instance, cap=None):
    """
    Minimum set cover of a Set-Cover1 instance.

    :param instance: object with ``ground_size`` and ``sets`` (subsets of
        ``1 .. ground_size``)
    :param cap: limit on the number of sets, default ``exact_column_cap``
    :returns: sorted tuple of set indices
    """
    cap = get_limit('exact_column_cap', cap)
    if len(instance.sets) > cap:
        raise_user_error('exact_cap', (len(instance.sets), 'sets', cap),
                         exception=CapExceededError)
    rows = []
    for element in range(1, instance.ground_size + 1):
        row = 0
        for index, members in enumerate(instance.sets):
            if element in members:
                row |= 1 << index
        if not row:
            raise_user_error('uncovered_element', (element,),
                             exception=InfeasibleError)
        rows.append(row)
    columns, _ = min_hitting_set(len(instance.sets), rows)
    return columns


def greedy_id_code(g):
    """
    Greedy set cover over the requirements of ``g``: repeatedly take the
    vertex meeting most unsatisfied requirements, lowest id on ties.

    The result is within ``ln(R) + 1`` of gamma^ID(g), ``R = n + n(n-1)/2``.
    """
    check_twin_free(g)
    closed = g.closed_masks()
    pending = list(closed)
    pending.extend(
        closed[u] ^ closed[v]
        for u in range(g.n) for v in range(u + 1, g.n))
    total = len(pending)
    chosen = []
    while pending:
        counts = [0] * g.n
        for row in pending:
            for v in iter_bits(row):
                counts[v] += 1
        best = max(range(g.n), key=lambda v: (counts[v], -v))
        chosen.append(best)
        pending = [row for row in pending if not row >> best & 1]
    factor = math.log(total) + 1 if total else 1.0
    return Code(VertexSet(chosen, g.n), IDENTIFYING, {
        'solver': 'greedy',
        'requirements': total,
        'bound_factor': factor,
        'pick_order': tuple(chosen),
    })


def log_lower_bound(n):
    """
    ``ceil(log2(n + 1))``: traces on a code C are distinct and nonempty, so
    ``n <= 2^|C| - 1``.
    """
    return (n).bit_length() if n > 0 else 0
