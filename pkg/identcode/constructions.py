# -*- coding: utf-8 -*-
"""
    constructions

    Explicit graph families: the C4-free bipartite graphs and the VC-d
    bipartite graphs with small identifying codes, the path, and graphs of
    the undirected path and unit disk classes shattering three vertices.

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import logging
from collections import namedtuple
from fractions import Fraction
from itertools import combinations

from .code_core import Code, IDENTIFYING
from .exceptions import raise_user_error, register_error_messages
from .graph_core import (
    Graph, IntervalRep, VertexSet, path_intersection_graph, unit_disk_graph
)

__all__ = [
    'ShatteringFamily', 'c4_free_bipartite_family', 'vc_d_bipartite_family',
    'path_graph', 'three_path_shattering_family',
    'unit_disk_shattering_family', 'FAMILIES',
]

logger = logging.getLogger(__name__)

register_error_messages({
    'family_parameter': 'Family "%s" needs a parameter in %s, got %s.',
})

ShatteringFamily = namedtuple(
    'ShatteringFamily', 'graph shattered_set representation')


def c4_free_bipartite_family(n):
    """
    Bipartite graph with ``Y = {0 .. n-1}`` and one X vertex per pair of Y,
    adjacent to exactly that pair. X vertices follow Y, in lexicographic
    order of their pairs.

    Y is an identifying code of size ``n`` on ``n + n(n-1)/2`` vertices.

    :returns: ``(graph, code)``
    """
    if n < 3:
        raise_user_error('family_parameter', ('c4free', 'n >= 3', n))
    edges = []
    for index, (a, b) in enumerate(combinations(range(n), 2)):
        x = n + index
        edges.append((a, x))
        edges.append((b, x))
    g = Graph(n + n * (n - 1) // 2, edges)
    code = Code(VertexSet(range(n), g.n), IDENTIFYING, {
        'family': 'c4free',
        'y_side': tuple(range(n)),
        'x_side': tuple(range(n, g.n)),
    })
    return g, code


def vc_d_bipartite_family(d):
    """
    Stable set ``A = {0 .. d-1}`` and one B vertex per subset of A with at
    least two members, adjacent to exactly that subset. B vertices follow A
    in ascending order of the subset bitmask, so ``n = 2^d - 1``.

    :returns: ``(graph, code)`` with code A
    """
    if not 2 <= d <= 10:
        raise_user_error('family_parameter', ('vcd', '2 <= d <= 10', d))
    edges = []
    b = d
    for subset in range(1, 1 << d):
        if subset & (subset - 1) == 0:
            continue
        for a in range(d):
            if subset >> a & 1:
                edges.append((a, b))
        b += 1
    g = Graph(b, edges)
    code = Code(VertexSet(range(d), g.n), IDENTIFYING, {
        'family': 'vcd',
        'a_side': tuple(range(d)),
        'b_side': tuple(range(d, g.n)),
    })
    return g, code


def path_graph(n):
    """
    Path ``0 - 1 - ... - n-1`` with interval ``[i, i+1]`` for vertex ``i``.
    """
    if n < 1:
        raise_user_error('family_parameter', ('path', 'n >= 1', n))
    rep = IntervalRep([(i, i + 1) for i in range(n)])
    return Graph(n, [(i, i + 1) for i in range(n - 1)]), rep


#: spider with three legs of length two around centre 0 and a spare leaf 7
SPIDER_EDGES = ((0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7))


def three_path_shattering_family():
    """
    Undirected path graph in which three paths are shattered.

    The host tree is a spider with legs ``0-1-2``, ``0-3-4``, ``0-5-6`` and a
    spare leaf ``7``. The three long paths each run along one leg and step
    into the next, so two of them always share the centre and one leg
    vertex. Every tree vertex also carries a one-vertex path: the centre
    meets all three long paths, a first leg vertex exactly two, a leg end
    one and the spare leaf none.

    :returns: :class:`ShatteringFamily`; the representation is
        ``(tree_edges, paths)`` and vertices ``0, 1, 2`` are the long paths
    """
    long_paths = [[2, 1, 0, 3], [4, 3, 0, 5], [6, 5, 0, 1]]
    paths = long_paths + [[v] for v in range(8)]
    g = path_intersection_graph(SPIDER_EDGES, paths, 8)
    return ShatteringFamily(
        g, VertexSet((0, 1, 2), g.n), (SPIDER_EDGES, paths))


#: three disk centres roughly 5/2 apart; the apex is rational
DISK_TRIANGLE = (
    (Fraction(0), Fraction(0)),
    (Fraction(5, 2), Fraction(0)),
    (Fraction(5, 4), Fraction(13, 6)),
)


def _region(point, centres):
    "Bitmask of the centres within distance 2 of ``point``"
    mask = 0
    for i, (cx, cy) in enumerate(centres):
        if (point[0] - cx) ** 2 + (point[1] - cy) ** 2 <= 4:
            mask |= 1 << i
    return mask


def unit_disk_shattering_family(step=Fraction(1, 4)):
    """
    Unit disk graph in which three disks are shattered.

    Apart from the three disks of :data:`DISK_TRIANGLE`, one disk is placed
    in every region of the radius-2 balls around them that the three disks
    do not realize themselves; the centres are the first points of a
    rational grid (row by row) falling in each region.

    :returns: :class:`ShatteringFamily`; the representation is the list of
        centres and vertices ``0, 1, 2`` are the shattered disks
    """
    centres = list(DISK_TRIANGLE)
    wanted = set(range(8)) - set(
        _region(c, DISK_TRIANGLE) for c in DISK_TRIANGLE)
    low, high = Fraction(-3), Fraction(6)
    steps = int((high - low) / step)
    found = {}
    for row in range(steps + 1):
        y = low + row * step
        for column in range(steps + 1):
            point = (low + column * step, y)
            region = _region(point, DISK_TRIANGLE)
            if region in wanted and region not in found:
                found[region] = point
        if len(found) == len(wanted):
            break
    for region in sorted(found):
        centres.append(found[region])
    logger.debug('Unit disk family uses %d disks', len(centres))
    g = unit_disk_graph(centres)
    return ShatteringFamily(g, VertexSet((0, 1, 2), g.n), centres)


#: families offered by the command line, keyed by name
FAMILIES = {
    'c4free': c4_free_bipartite_family,
    'vcd': vc_d_bipartite_family,
    'path': path_graph,
}
