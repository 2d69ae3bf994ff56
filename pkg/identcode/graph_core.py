# -*- coding: utf-8 -*-
"""
    graph_core

    Simple undirected graphs over dense integer ids, closed neighbourhoods,
    class checkers, generators and the edge-list file format.

    Adjacency is kept as one Python integer per vertex used as a bitset, so
    neighbourhood unions, differences and intersections are single integer
    operations whatever the vertex count.

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import io
import logging
import math
import random
from fractions import Fraction
from itertools import combinations

import networkx as nx

from .configuration import get_limit
from .exceptions import (
    CapExceededError, raise_user_error, register_error_messages
)

__all__ = [
    'Graph', 'VertexSet', 'IntervalRep', 'closed_neighborhood',
    'neighborhood_symmetric_difference', 'find_twins', 'is_bipartite',
    'is_c4_free', 'girth', 'is_chordal_bipartite', 'random_graph',
    'random_bipartite_graph', 'random_interval_graph', 'interval_graph',
    'unit_disk_graph', 'path_intersection_graph', 'iter_bits',
    'parse_edge_list', 'format_edge_list', 'read_edge_list',
    'write_edge_list', 'read_text',
]

logger = logging.getLogger(__name__)

register_error_messages({
    'vertex_out_of_range':
        'Vertex %s is out of range for a graph on %s vertices.',
    'self_loop': 'Self-loop on vertex %s is not allowed.',
    'negative_order': 'A graph needs a nonnegative vertex count, got %s.',
    'same_vertex': 'Expected two distinct vertices, got %s twice.',
    'bad_probability': 'Edge probability must lie in [0, 1], got %s.',
    'bad_order': 'Expected at least one vertex, got %s.',
    'bad_coordinate_range':
        'Coordinate range must be a nonnegative integer, got %s.',
    'size_cap': 'Graph on %s vertices exceeds the limit of %s for %s.',
    'malformed_edge_list': 'Edge list line %s: %s',
    'malformed_interval': 'Interval of vertex %s has begin %s after end %s.',
    'interval_count':
        'Interval representation needs one interval per vertex (%s != %s).',
    'not_a_tree': 'Host graph of the paths is not a tree.',
    'not_a_tree_path': 'Vertex sequence %s is not a path of the host tree.',
    'unit_disk_centres': 'Unit disk centres must be pairs of numbers.',
    'file_unreadable': 'Cannot read %s: %s',
})


def iter_bits(mask):
    "Yield the positions of the set bits of ``mask`` in ascending order"
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask):
    return bin(mask).count('1')


class VertexSet(object):
    """
    Sorted, duplicate-free set of vertex ids of a graph on
    ``universe_size`` vertices.
    """
    __slots__ = ('members', 'universe_size', '_mask')

    def __init__(self, members, universe_size):
        members = tuple(sorted(set(members)))
        for v in members:
            if not 0 <= v < universe_size:
                raise_user_error('vertex_out_of_range', (v, universe_size))
        self.members = members
        self.universe_size = universe_size
        self._mask = None

    @classmethod
    def from_mask(cls, mask, universe_size):
        return cls(iter_bits(mask), universe_size)

    @property
    def mask(self):
        if self._mask is None:
            mask = 0
            for v in self.members:
                mask |= 1 << v
            self._mask = mask
        return self._mask

    def union(self, other):
        return VertexSet.from_mask(
            self.mask | _as_mask(other), self.universe_size)

    def difference(self, other):
        return VertexSet.from_mask(
            self.mask & ~_as_mask(other), self.universe_size)

    def issubset(self, other):
        return self.mask & ~_as_mask(other) == 0

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, v):
        return v in self.members

    def __eq__(self, other):
        if isinstance(other, VertexSet):
            return (self.members, self.universe_size) == \
                (other.members, other.universe_size)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.members, self.universe_size))

    def __repr__(self):
        return 'VertexSet(%s)' % (
            '{' + ', '.join(str(v) for v in self.members) + '}')

    def __str__(self):
        return ','.join(str(v) for v in self.members)


def _as_mask(vertices):
    if isinstance(vertices, VertexSet):
        return vertices.mask
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph(object):
    """
    Immutable simple undirected graph on vertices ``0 .. n-1``.

    :param n: vertex count
    :param edges: iterable of ``(u, v)`` pairs; duplicates are merged
    """
    __slots__ = ('n', '_adj')

    def __init__(self, n, edges=()):
        if n < 0:
            raise_user_error('negative_order', (n,))
        adj = [0] * n
        for u, v in edges:
            for w in (u, v):
                if not 0 <= w < n:
                    raise_user_error('vertex_out_of_range', (w, n))
            if u == v:
                raise_user_error('self_loop', (u,))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks):
        "Build from open-neighbourhood bitsets (must already be symmetric)"
        graph = cls.__new__(cls)
        graph.n = len(masks)
        graph._adj = tuple(masks)
        return graph

    @classmethod
    def from_networkx(cls, nx_graph):
        """
        Convert a networkx graph; nodes are relabelled in sorted order.

        :returns: the converted :class:`Graph`
        """
        nodes = sorted(nx_graph.nodes())
        index = dict((node, i) for i, node in enumerate(nodes))
        return cls(len(nodes), (
            (index[u], index[v]) for u, v in nx_graph.edges() if u != v
        ))

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def _check(self, v):
        if not 0 <= v < self.n:
            raise_user_error('vertex_out_of_range', (v, self.n))

    def neighbor_mask(self, v):
        self._check(v)
        return self._adj[v]

    def closed_mask(self, v):
        self._check(v)
        return self._adj[v] | (1 << v)

    def closed_masks(self):
        "Closed-neighbourhood bitsets of all vertices, by vertex id"
        return [mask | (1 << v) for v, mask in enumerate(self._adj)]

    def neighbors(self, v):
        return VertexSet.from_mask(self.neighbor_mask(v), self.n)

    def degree(self, v):
        return _popcount(self.neighbor_mask(v))

    def has_edge(self, u, v):
        self._check(u)
        self._check(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self):
        "Edges as ``(u, v)`` with ``u < v``, in lexicographic order"
        for u, mask in enumerate(self._adj):
            for v in iter_bits(mask >> (u + 1)):
                yield u, u + 1 + v

    @property
    def m(self):
        return sum(_popcount(mask) for mask in self._adj) // 2

    @property
    def vertices(self):
        return VertexSet(range(self.n), self.n)

    def induced_subgraph(self, vertices):
        """
        Induced subgraph on ``vertices``, relabelled in ascending order.

        :returns: ``(subgraph, original_ids)`` where ``original_ids[i]`` is
            the id in this graph of vertex ``i`` of the subgraph
        """
        original = sorted(set(vertices))
        for v in original:
            self._check(v)
        index = dict((v, i) for i, v in enumerate(original))
        edges = [
            (index[u], index[w])
            for u in original
            for w in iter_bits(self._adj[u])
            if w in index and u < w
        ]
        return Graph(len(original), edges), tuple(original)

    def complement(self):
        full = (1 << self.n) - 1
        return Graph.from_masks([
            full & ~mask & ~(1 << v) for v, mask in enumerate(self._adj)
        ])

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self.n == other.n and self._adj == other._adj
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return 'Graph(n=%d, m=%d)' % (self.n, self.m)


class IntervalRep(object):
    """
    Closed interval per vertex with rational endpoints.

    ``begin_rank`` and ``end_rank`` are filled in by
    :func:`identcode.interval_approx.canonicalize`; they are ``None`` on a
    representation that has not been canonicalized yet.
    """
    __slots__ = ('begins', 'ends', 'begin_rank', 'end_rank')

    def __init__(self, intervals, begin_rank=None, end_rank=None):
        begins, ends = [], []
        for v, (begin, end) in enumerate(intervals):
            begin, end = Fraction(begin), Fraction(end)
            if begin > end:
                raise_user_error('malformed_interval', (v, begin, end))
            begins.append(begin)
            ends.append(end)
        self.begins = tuple(begins)
        self.ends = tuple(ends)
        self.begin_rank = tuple(begin_rank) if begin_rank else None
        self.end_rank = tuple(end_rank) if end_rank else None

    @property
    def n(self):
        return len(self.begins)

    @property
    def is_canonical(self):
        return self.begin_rank is not None

    def interval(self, v):
        return self.begins[v], self.ends[v]

    def intervals(self):
        return list(zip(self.begins, self.ends))

    def intersect(self, u, v):
        "Closed-interval intersection test on coordinates"
        return self.begins[u] <= self.ends[v] and \
            self.begins[v] <= self.ends[u]

    def __eq__(self, other):
        if isinstance(other, IntervalRep):
            return (self.begins, self.ends, self.begin_rank,
                    self.end_rank) == (other.begins, other.ends,
                                       other.begin_rank, other.end_rank)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.begins, self.ends))

    def __repr__(self):
        return 'IntervalRep(%s)' % ', '.join(
            '[%s, %s]' % (b, e) for b, e in self.intervals())


def closed_neighborhood(g, v):
    """
    N[v], the neighbours of ``v`` together with ``v``.
    """
    return VertexSet.from_mask(g.closed_mask(v), g.n)


def neighborhood_symmetric_difference(g, j, k):
    """
    N[j] symmetric-difference N[k], the vertices that separate ``j`` from
    ``k``.
    """
    if j == k:
        raise_user_error('same_vertex', (j,))
    return VertexSet.from_mask(g.closed_mask(j) ^ g.closed_mask(k), g.n)


def find_twins(g):
    """
    All pairs ``(u, v)``, ``u < v``, with N[u] = N[v], in lexicographic
    order.
    """
    classes = {}
    for v, mask in enumerate(g.closed_masks()):
        classes.setdefault(mask, []).append(v)
    twins = []
    for members in classes.values():
        twins.extend(combinations(members, 2))
    return sorted(twins)


def is_bipartite(g):
    """
    Two-colouring through :func:`networkx.bipartite.color`, normalised so
    that the lowest vertex of every component lies on the first side.

    :returns: ``(A, B)`` as :class:`VertexSet` or ``None`` when ``g`` has an
        odd cycle
    """
    nx_graph = g.to_networkx()
    try:
        colour = nx.bipartite.color(nx_graph)
    except nx.NetworkXError:
        return None
    side = [None] * g.n
    for component in nx.connected_components(nx_graph):
        flip = colour[min(component)]
        for v in component:
            side[v] = colour[v] ^ flip
    first = [v for v in range(g.n) if side[v] == 0]
    second = [v for v in range(g.n) if side[v] == 1]
    return VertexSet(first, g.n), VertexSet(second, g.n)


def is_c4_free(g):
    """
    Check that no two distinct vertices have two common neighbours, which is
    exactly the absence of a (not necessarily induced) 4-cycle.

    :returns: ``(True, None)`` or ``(False, (u, v, (x, y)))`` where
        ``u-x-v-y-u`` is the lexicographically first 4-cycle found
    """
    adj = [g.neighbor_mask(v) for v in range(g.n)]
    for u, v in combinations(range(g.n), 2):
        common = adj[u] & adj[v]
        if common & (common - 1):
            bits = iter_bits(common)
            x = next(bits)
            y = next(bits)
            return False, (u, v, (x, y))
    return True, None


def girth(g):
    """
    Length of a shortest cycle, ``math.inf`` for forests.

    Breadth-first search from every vertex; a non-tree edge ``uw`` seen from
    root ``r`` closes a closed walk of length ``d(u) + d(w) + 1`` that
    contains a cycle no longer than it, and the minimum over all roots is
    attained on a shortest cycle.
    """
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: None}
        frontier = [root]
        while frontier:
            if 2 * dist[frontier[0]] + 1 >= best:
                break
            nxt = []
            for u in frontier:
                for w in iter_bits(g.neighbor_mask(u)):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
            frontier = nxt
    return best


def is_chordal_bipartite(g, cap=None):
    """
    True iff ``g`` is bipartite and has no induced cycle of length six or
    more.

    Induced cycles are enumerated as chordless paths grown from their lowest
    vertex, so the check is exponential; instances above the
    ``chordal_bipartite_cap`` limit are refused.
    """
    cap = get_limit('chordal_bipartite_cap', cap)
    if g.n > cap:
        raise_user_error(
            'size_cap', (g.n, cap, 'chordal bipartite recognition'),
            exception=CapExceededError)
    if is_bipartite(g) is None:
        return False
    adj = [g.neighbor_mask(v) for v in range(g.n)]

    def grow(start, path, path_mask, inner_mask):
        # inner_mask: path vertices other than the start and the last one
        last = path[-1]
        for w in iter_bits(adj[last]):
            if w <= start or path_mask >> w & 1:
                continue
            if adj[w] & inner_mask:
                continue
            if len(path) >= 2 and adj[w] >> start & 1:
                if len(path) + 1 >= 6:
                    return True
                continue
            new_inner = inner_mask | (1 << last) if len(path) > 1 else 0
            if grow(start, path + [w], path_mask | (1 << w), new_inner):
                return True
        return False

    for start in range(g.n):
        if grow(start, [start], 1 << start, 0):
            return False
    return True


def random_graph(n, edge_probability, seed=None):
    """
    Seeded Erdos-Renyi G(n, p) graph (networkx generator).
    """
    if n < 1:
        raise_user_error('bad_order', (n,))
    if not 0 <= edge_probability <= 1:
        raise_user_error('bad_probability', (edge_probability,))
    return Graph.from_networkx(
        nx.gnp_random_graph(n, edge_probability, seed=seed))


def random_bipartite_graph(left, right, edge_probability, seed=None):
    """
    Seeded random bipartite graph; the first ``left`` ids form one side.
    """
    if not 0 <= edge_probability <= 1:
        raise_user_error('bad_probability', (edge_probability,))
    return Graph.from_networkx(nx.bipartite.random_graph(
        left, right, edge_probability, seed=seed))


def interval_graph(rep):
    """
    Closed-interval intersection graph of ``rep``.
    """
    order = sorted(range(rep.n), key=lambda v: (rep.begins[v], v))
    edges = []
    for position, u in enumerate(order):
        for v in order[position + 1:]:
            if rep.begins[v] > rep.ends[u]:
                break
            edges.append((u, v))
    return Graph(rep.n, edges)


def random_interval_graph(n, coordinate_range, seed=None):
    """
    Seeded random interval graph with integer endpoints in
    ``[0, coordinate_range]``.

    :returns: ``(graph, rep)`` with edge iff closed intervals intersect
    """
    if n < 1:
        raise_user_error('bad_order', (n,))
    if coordinate_range < 0:
        raise_user_error('bad_coordinate_range', (coordinate_range,))
    rng = random.Random(seed)
    intervals = []
    for _ in range(n):
        a = rng.randint(0, coordinate_range)
        b = rng.randint(0, coordinate_range)
        intervals.append((min(a, b), max(a, b)))
    rep = IntervalRep(intervals)
    return interval_graph(rep), rep


def unit_disk_graph(centers):
    """
    Intersection graph of radius-1 disks: centres at distance at most 2 are
    adjacent. Coordinates are compared exactly.
    """
    points = []
    for center in centers:
        try:
            x, y = center
        except (TypeError, ValueError):
            raise_user_error('unit_disk_centres')
        points.append((Fraction(x), Fraction(y)))
    edges = [
        (u, v) for u, v in combinations(range(len(points)), 2)
        if (points[u][0] - points[v][0]) ** 2 +
        (points[u][1] - points[v][1]) ** 2 <= 4
    ]
    return Graph(len(points), edges)


def path_intersection_graph(tree_edges, paths, tree_size=None):
    """
    Undirected path graph: one vertex per path of the host tree, adjacent
    when the two paths share a tree vertex.

    :param tree_edges: edges of the host tree on ids ``0 .. t-1``
    :param paths: vertex sequences, each a path of the tree
    :param tree_size: ``t``; defaults to one more than the largest id used
        by an edge
    """
    tree_edges = list(tree_edges)
    if tree_size is None:
        tree_size = 1 + max([max(edge) for edge in tree_edges] or [0])
    tree = nx.Graph()
    tree.add_nodes_from(range(tree_size))
    tree.add_edges_from(tree_edges)
    if tree.number_of_nodes() != tree_size or not nx.is_tree(tree):
        raise_user_error('not_a_tree')
    vertex_sets = []
    for path in paths:
        path = list(path)
        valid = bool(path) and all(v in tree for v in path) and \
            len(set(path)) == len(path) and \
            all(tree.has_edge(a, b) for a, b in zip(path, path[1:]))
        if not valid:
            raise_user_error('not_a_tree_path', (path,))
        vertex_sets.append(frozenset(path))
    edges = [
        (u, v) for u, v in combinations(range(len(vertex_sets)), 2)
        if vertex_sets[u] & vertex_sets[v]
    ]
    return Graph(len(vertex_sets), edges)


def parse_edge_list(text):
    """
    Parse the edge-list format: ``n m`` then ``m`` lines ``u v``; lines
    starting with ``#`` are comments.
    """
    header = None
    edges = []
    for number, line in enumerate(io.StringIO(text), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise_user_error(
                'malformed_edge_list', (number, 'expected two integers'))
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise_user_error(
                'malformed_edge_list', (number, 'expected two integers'))
        if header is None:
            if a < 0 or b < 0:
                raise_user_error(
                    'malformed_edge_list', (number, 'negative header'))
            header = (a, b)
            continue
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise_user_error(
                'malformed_edge_list', (number, 'vertex id out of range'))
        if a == b:
            raise_user_error('malformed_edge_list', (number, 'self-loop'))
        edges.append((min(a, b), max(a, b)))
    if header is None:
        raise_user_error('malformed_edge_list', (0, 'missing header'))
    if len(edges) != header[1]:
        raise_user_error('malformed_edge_list', (
            0, 'header announces %d edges, found %d' % (header[1],
                                                        len(edges))))
    if len(set(edges)) != len(edges):
        raise_user_error('malformed_edge_list', (0, 'duplicate edge'))
    return Graph(header[0], edges)


def format_edge_list(g):
    lines = ['%d %d' % (g.n, g.m)]
    lines.extend('%d %d' % edge for edge in g.edges())
    return '\n'.join(lines) + '\n'


def read_text(path):
    """
    Return the UTF-8 text of the file at ``path``.

    Missing, unreadable or undecodable files raise :class:`InputError`.
    """
    try:
        with io.open(path, encoding='utf-8') as handle:
            return handle.read()
    except UnicodeDecodeError as exc:
        raise_user_error(
            'file_unreadable', (path, 'not valid UTF-8 (%s)' % exc.reason))
    except (IOError, OSError) as exc:
        raise_user_error('file_unreadable', (path, exc.strerror or exc))


def read_edge_list(path):
    return parse_edge_list(read_text(path))


def write_edge_list(g, path):
    with io.open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(format_edge_list(g))
