# -*- coding: utf-8 -*-
"""
    vc_dim

    VC-dimension of the closed-neighbourhood hypergraph, Sauer-type lower
    bounds on identifying codes and the search for graphs of a class that
    shatter a set of a given size.

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import logging
import random
from collections import namedtuple
from itertools import combinations
from math import comb

from .code_core import Code, IDENTIFYING
from .configuration import Configuration, get_limit
from .exceptions import (
    CapExceededError, raise_user_error, register_error_messages
)
from .graph_core import (
    Graph, VertexSet, girth, is_bipartite, is_c4_free,
    is_chordal_bipartite, iter_bits, path_intersection_graph,
    random_interval_graph, unit_disk_graph
)

__all__ = [
    'ShatterCertificate', 'VcDimension', 'is_shattered', 'vc_dimension',
    'sauer_lower_bound', 'sauer_trace_bound', 'sauer_sum_lower_bound',
    'code_from_shattered', 'witness_search', 'WITNESS_CLASSES',
    'find_shattered_set',
]

logger = logging.getLogger(__name__)

register_error_messages({
    'shatter_cap':
        'A candidate set of %s vertices exceeds the shattering limit of %s.',
    'sauer_domain': 'The Sauer bound needs n >= 2 and d >= 1, got n=%s, d=%s.',
    'not_shattered': 'Vertex set %s is not shattered.',
    'empty_shattered_set': 'A nonempty shattered set is required.',
    'unknown_graph_class': 'Unknown graph class "%s"; expected one of %s.',
    'bad_target_dim': 'Target dimension must be at least 1, got %s.',
})


class ShatterCertificate(namedtuple('ShatterCertificate',
                                    'shattered_set trace_witnesses')):
    """
    Proof that ``shattered_set`` is shattered: ``trace_witnesses`` maps every
    subset (a sorted tuple) to a vertex whose closed neighbourhood meets the
    set in exactly that subset.
    """
    __slots__ = ()

    def witness(self, subset):
        return self.trace_witnesses[tuple(sorted(subset))]

    def holds_in(self, g):
        "Recheck every witness against ``g``"
        members = set(self.shattered_set)
        if len(self.trace_witnesses) != 1 << len(members):
            return False
        for subset, w in self.trace_witnesses.items():
            trace = set(g.neighbors(w)) | {w}
            if trace & members != set(subset):
                return False
        return True


VcDimension = namedtuple('VcDimension', 'dimension certificate lower_bound')
VcDimension.__doc__ = """
VC-dimension of a graph. ``lower_bound`` is set when the search stopped at
``max_d`` (or the shattering limit) with sets of that size still shattered.
"""


def _trace_table(closed, xmask, k):
    """
    Lowest-id witness per trace on ``xmask``, or ``None`` when fewer than
    ``2^k`` traces occur.
    """
    need = 1 << k
    if len(closed) < need:
        return None
    found = {}
    for v, mask in enumerate(closed):
        trace = mask & xmask
        if trace not in found:
            found[trace] = v
            if len(found) == need:
                return found
    return None


def _certificate(xmask, table, n):
    return ShatterCertificate(
        VertexSet.from_mask(xmask, n),
        dict((tuple(iter_bits(trace)), w) for trace, w in table.items()))


def is_shattered(g, x, cap=None):
    """
    Certificate that every subset of ``x`` is the trace of some closed
    neighbourhood, or ``None``.

    :param cap: largest accepted ``|x|``, default ``shatter_cap``
    """
    members = sorted(set(x))
    cap = get_limit('shatter_cap', cap)
    if len(members) > cap:
        raise_user_error('shatter_cap', (len(members), cap),
                         exception=CapExceededError)
    xmask = VertexSet(members, g.n).mask
    table = _trace_table(g.closed_masks(), xmask, len(members))
    if table is None:
        return None
    return _certificate(xmask, table, g.n)


def _shattered_levels(g, limit):
    """
    Shattered sets grown by size. A set of size ``d + 1`` is only tried when
    all its ``d``-subsets are shattered.

    Yields ``(d, [(mask, table), ...])`` in lexicographic order of the sets.
    """
    closed = g.closed_masks()
    table = _trace_table(closed, 0, 0)
    if table is None:
        return
    level = [(0, table)]
    d = 0
    yield d, level
    while d < limit:
        shattered = set(mask for mask, _ in level)
        nxt = []
        for xmask, _ in level:
            for v in range(xmask.bit_length(), g.n):
                candidate = xmask | 1 << v
                if any(candidate & ~(1 << u) not in shattered
                       for u in iter_bits(xmask)):
                    continue
                table = _trace_table(closed, candidate, d + 1)
                if table is not None:
                    nxt.append((candidate, table))
        if not nxt:
            return
        d += 1
        level = nxt
        logger.debug('%d shattered sets of size %d', len(level), d)
        yield d, level


def vc_dimension(g, max_d=None):
    """
    Size of the largest shattered set, searched up to ``max_d``.

    :returns: :class:`VcDimension`; the certificate is for the
        lexicographically first shattered set of maximum size
    """
    cap = get_limit('shatter_cap')
    limit = cap if max_d is None else min(max_d, cap)
    best = None
    for d, level in _shattered_levels(g, limit):
        best = (d, level)
    if best is None:
        return VcDimension(0, None, False)
    d, level = best
    xmask, table = level[0]
    return VcDimension(d, _certificate(xmask, table, g.n), d == limit)


def find_shattered_set(g, size):
    """
    First shattered set of exactly ``size`` vertices, as a certificate, or
    ``None``.
    """
    for d, level in _shattered_levels(g, size):
        if d == size:
            xmask, table = level[0]
            return _certificate(xmask, table, g.n)
    return None


def _least(holds, high):
    "Smallest ``c`` in ``[1, high]`` with ``holds(c)``; ``holds`` is monotone"
    low = 1
    while low < high:
        middle = (low + high) // 2
        if holds(middle):
            high = middle
        else:
            low = middle + 1
    return low


def sauer_lower_bound(n, d):
    """
    Smallest ``c`` with ``c^d >= n - 1``.

    Every identifying code of a twin-free graph on ``n`` vertices with
    VC-dimension ``d`` has at least this many vertices. The integer d-th
    root is found by bisection, so ``n`` may have any size.
    """
    if n < 2 or d < 1:
        raise_user_error('sauer_domain', (n, d))
    target = n - 1
    high = 1 << (target.bit_length() // d + 1)
    return _least(lambda c: c ** d >= target, high)


def sauer_trace_bound(size, d):
    "Largest number of distinct traces a set of ``size`` vertices can carry"
    return sum(comb(size, i) for i in range(d + 1))


def sauer_sum_lower_bound(n, d):
    """
    Smallest ``c`` with ``sauer_trace_bound(c, d) >= n``; never below
    :func:`sauer_lower_bound` since the trace bound is at most ``c^d + 1``.
    """
    if n < 2 or d < 1:
        raise_user_error('sauer_domain', (n, d))
    high = 1
    while sauer_trace_bound(high, d) < n:
        high *= 2
    return _least(lambda c: sauer_trace_bound(c, d) >= n, high)


def code_from_shattered(g, x):
    """
    Build a small identifying code from a shattered set.

    One witness per nonempty trace on ``x`` is kept, preferring vertices of
    ``x`` itself and otherwise the lowest id. On the subgraph induced by
    ``x`` and the witnesses, ``x`` plus the witnesses of the singleton traces
    is an identifying code of at most ``2|x|`` vertices.

    :returns: ``(subgraph, code)``; the code uses the ids of the subgraph
        and ``code.metadata["original_ids"][i]`` is the id in ``g`` of
        subgraph vertex ``i``
    """
    members = sorted(set(x))
    if not members:
        raise_user_error('empty_shattered_set')
    if is_shattered(g, members) is None:
        raise_user_error('not_shattered', (','.join(map(str, members)),))
    xmask = VertexSet(members, g.n).mask
    closed = g.closed_masks()
    chosen = {}
    for v in members:
        chosen.setdefault(closed[v] & xmask, v)
    for v in range(g.n):
        trace = closed[v] & xmask
        if trace:
            chosen.setdefault(trace, v)
    singles = [chosen[1 << v] for v in members]
    kept = set(members) | set(chosen.values())
    subgraph, original_ids = g.induced_subgraph(sorted(kept))
    position = dict((v, i) for i, v in enumerate(original_ids))
    code_ids = set(position[v] for v in members)
    code_ids.update(position[v] for v in singles)
    code = Code(VertexSet(code_ids, subgraph.n), IDENTIFYING, {
        'construction': 'shattered set',
        'shattered_set': tuple(members),
        'original_ids': original_ids,
    })
    return subgraph, code


def _girth5(g):
    return girth(g) >= 5


def _c4_free_bipartite(g):
    return is_bipartite(g) is not None and is_c4_free(g)[0]


def _chordal_bipartite(g):
    return is_chordal_bipartite(g)


#: graph classes searched by trace completion
_CHECKERS = {
    'girth5': _girth5,
    'chordal_bipartite': _chordal_bipartite,
    'c4_free_bipartite': _c4_free_bipartite,
}


def _completion_bases(k, max_n, rng, budget):
    """
    Bases for trace completion: the path on ``2k + 2`` vertices with every
    other vertex as candidate, then every graph on the ``k`` candidate
    vertices, then random graphs with extra vertices.
    """
    yield (Graph(2 * k + 2, [(v, v + 1) for v in range(2 * k + 1)]),
           sum(1 << v for v in range(1, 2 * k, 2)))
    pairs = list(combinations(range(k), 2))
    for edge_mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in iter_bits(edge_mask)]
        yield Graph(k, edges), (1 << k) - 1
    for _ in range(budget):
        size = rng.randint(k, max(k, max_n - 1))
        edges = [pair for pair in combinations(range(size), 2)
                 if rng.random() < 0.3]
        members = rng.sample(range(size), k)
        yield Graph(size, edges), sum(1 << v for v in members)


def _completion_search(checker, k, max_n, budget, rng):
    attempts = 0
    for base, xmask in _completion_bases(k, max_n, rng, budget):
        if attempts >= budget:
            break
        attempts += 1
        g = _complete_traces_on(base, xmask, k, max_n)
        if g is None:
            continue
        try:
            accepted = checker(g)
        except CapExceededError:
            continue
        if not accepted:
            continue
        table = _trace_table(g.closed_masks(), xmask, k)
        if table is not None:
            logger.debug('Witness found after %d attempts', attempts)
            return g, _certificate(xmask, table, g.n)
    return None


def _complete_traces_on(base, xmask, k, max_n):
    """
    Trace completion for a candidate set given as a vertex mask of ``base``.
    """
    closed = base.closed_masks()
    present = set(mask & xmask for mask in closed)
    universe = list(iter_bits(xmask))
    missing = []
    for size in range(k + 1):
        for subset in combinations(universe, size):
            trace = sum(1 << v for v in subset)
            if trace not in present:
                missing.append(trace)
    if base.n + len(missing) > max_n:
        return None
    masks = [base.neighbor_mask(v) for v in range(base.n)]
    for trace in missing:
        new = len(masks)
        for v in iter_bits(trace):
            masks[v] |= 1 << new
        masks.append(trace)
    return Graph.from_masks(masks)


def _interval_candidates(k, max_n, rng, budget):
    for _ in range(budget):
        n = rng.randint(1 << k, max(1 << k, max_n))
        g, _ = random_interval_graph(n, 2 * n, seed=rng.getrandbits(32))
        yield g


def _unit_disk_candidates(k, max_n, rng, budget):
    for _ in range(budget):
        n = rng.randint(1 << k, max(1 << k, max_n))
        centers = [(rng.randint(0, 12) / 2, rng.randint(0, 12) / 2)
                   for _ in range(n)]
        yield unit_disk_graph(centers)


def _undirected_path_candidates(k, max_n, rng, budget):
    for _ in range(budget):
        size = rng.randint(3, 10)
        tree = [(v, rng.randrange(v)) for v in range(1, size)]
        adjacency = dict((v, set()) for v in range(size))
        for a, b in tree:
            adjacency[a].add(b)
            adjacency[b].add(a)
        paths = []
        for _ in range(rng.randint(1 << k, max(1 << k, max_n))):
            path = [rng.randrange(size)]
            while len(path) < size and rng.random() < 0.6:
                options = sorted(adjacency[path[-1]] - set(path))
                if not options:
                    break
                path.append(rng.choice(options))
            paths.append(path)
        yield path_intersection_graph(tree, paths, size)


#: graph classes searched by sampling representations
_SAMPLERS = {
    'interval': _interval_candidates,
    'unit_disk': _unit_disk_candidates,
    'undirected_path': _undirected_path_candidates,
}

WITNESS_CLASSES = tuple(sorted(list(_CHECKERS) + list(_SAMPLERS)))


def witness_search(graph_class, target_dim, max_n=12, budget=None,
                   seed=None):
    """
    Look for a graph of ``graph_class`` on at most ``max_n`` vertices with a
    shattered set of ``target_dim`` vertices.

    Checker classes (``girth5``, ``chordal_bipartite``,
    ``c4_free_bipartite``) are searched by trace completion: take a base
    graph and a candidate set, add one vertex per missing trace and keep the
    result if the class still accepts it. A path with every other vertex as
    candidate is tried first, then every graph on the candidate set, then
    random bases. Representation classes (``interval``, ``unit_disk``,
    ``undirected_path``) sample random representations.

    :param budget: number of attempts, default ``witness_budget``
    :param seed: default is the configured ``seed``
    :returns: ``(graph, certificate)`` or ``None`` when the budget runs out
    """
    if graph_class not in WITNESS_CLASSES:
        raise_user_error('unknown_graph_class',
                         (graph_class, ', '.join(WITNESS_CLASSES)))
    if target_dim < 1:
        raise_user_error('bad_target_dim', (target_dim,))
    search = Configuration().get_search()
    budget = search['witness_budget'] if budget is None else budget
    rng = random.Random(search['seed'] if seed is None else seed)

    if graph_class in _CHECKERS:
        found = _completion_search(
            _CHECKERS[graph_class], target_dim, max_n, budget, rng)
    else:
        found = None
        for g in _SAMPLERS[graph_class](target_dim, max_n, rng, budget):
            certificate = find_shattered_set(g, target_dim)
            if certificate is not None:
                found = g, certificate
                break
    if found is None:
        logger.info('No %s witness of dimension %d within %d attempts',
                    graph_class, target_dim, budget)
    return found
