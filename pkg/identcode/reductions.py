# -*- coding: utf-8 -*-
"""
    reductions

    Set cover with pairwise intersections of at most one element, turned
    into C4-free bipartite instances of the discriminating code and the
    identifying code problems, with the solution maps in both directions.

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import io
import logging
from collections import namedtuple
from itertools import combinations

from .code_core import (
    Code, IDENTIFYING, verify_discriminating_code, verify_identifying_code
)
from .exceptions import (
    DegenerateInstanceError, SolverError, raise_user_error,
    register_error_messages
)
from .graph_core import Graph, VertexSet, read_text

__all__ = [
    'SetCover1Instance', 'ReducedInstance', 'IcRepair', 'one_factorization',
    'validate_for_reduction', 'build_dc_instance', 'build_ic_instance',
    'setcover_to_dc_solution', 'dc_solution_to_setcover',
    'setcover_to_ic_solution', 'ic_solution_to_setcover', 'ic_repair',
    'parse_setcover', 'format_setcover', 'read_setcover', 'write_setcover',
    'is_cover',
]

logger = logging.getLogger(__name__)

register_error_messages({
    'setcover_element': 'Set %s contains element %s outside 1 .. %s.',
    'setcover_empty_set': 'Set %s is empty.',
    'setcover_intersection': 'Sets %s and %s share more than one element.',
    'setcover_too_many':
        'At most %s sets fit a ground set of %s elements, got %s.',
    'reduction_small': 'Reductions need at least two elements, got %s.',
    'reduction_universal':
        'Set %s covers every element; solve the instance directly.',
    'reduction_uncovered': 'Element %s lies in no set.',
    'not_a_cover': 'Sets %s do not cover element %s.',
    'bad_set_index': 'Set index %s is outside 0 .. %s.',
    'invalid_code': 'Code is not valid on the reduced graph: %s.',
    'wrong_target': 'Expected a %s instance, got %s.',
    'repair_stuck':
        'Neither copy of element %s in block %s lies in the code.',
    'repair_invalid': 'Repaired code is not identifying: %s.',
    'malformed_setcover': 'Set cover line %s: %s',
    'bad_factorization_order': 'Need m >= 1, got %s.',
})


class SetCover1Instance(object):
    """
    Ground set ``{1 .. ground_size}`` and a family of subsets, any two of
    which share at most one element.

    :param ground_size: ``n``
    :param sets: iterable of element collections (1-based)
    """
    __slots__ = ('ground_size', 'sets')

    def __init__(self, ground_size, sets):
        family = []
        for index, members in enumerate(sets):
            members = frozenset(members)
            if not members:
                raise_user_error('setcover_empty_set', (index,))
            for element in members:
                if not 1 <= element <= ground_size:
                    raise_user_error('setcover_element',
                                     (index, element, ground_size))
            family.append(members)
        for a, b in combinations(range(len(family)), 2):
            if len(family[a] & family[b]) > 1:
                raise_user_error('setcover_intersection', (a, b))
        limit = ground_size * (ground_size + 1) // 2
        if len(family) > limit:
            raise_user_error('setcover_too_many',
                             (limit, ground_size, len(family)))
        self.ground_size = ground_size
        self.sets = tuple(family)

    @property
    def elements(self):
        return range(1, self.ground_size + 1)

    def sets_containing(self, element):
        return [
            t for t, members in enumerate(self.sets) if element in members
        ]

    def __eq__(self, other):
        if isinstance(other, SetCover1Instance):
            return (self.ground_size, self.sets) == \
                (other.ground_size, other.sets)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.ground_size, self.sets))

    def __repr__(self):
        return 'SetCover1Instance(%d, %r)' % (
            self.ground_size, [sorted(s) for s in self.sets])


def is_cover(sc, indices):
    "First element missed by the sets ``indices``, or ``None``"
    covered = set()
    for t in indices:
        covered |= sc.sets[t]
    for element in sc.elements:
        if element not in covered:
            return element
    return None


def _check_indices(sc, indices):
    indices = sorted(set(indices))
    for t in indices:
        if not 0 <= t < len(sc.sets):
            raise_user_error('bad_set_index', (t, len(sc.sets) - 1))
    missing = is_cover(sc, indices)
    if missing is not None:
        raise_user_error('not_a_cover', (indices, missing))
    return indices


def one_factorization(m):
    """
    Split the edges of the complete graph on ``0 .. 2m-1`` into ``2m-1``
    perfect matchings (circle method: ``2m-1`` stays fixed, the others
    rotate).

    :returns: list of matchings, each a lexicographically sorted list of
        pairs ``(a, b)`` with ``a < b``
    """
    if m < 1:
        raise_user_error('bad_factorization_order', (m,))
    size = 2 * m - 1
    rounds = []
    for r in range(size):
        pairs = [(r, size)]
        for k in range(1, m):
            a, b = (r + k) % size, (r - k) % size
            pairs.append((min(a, b), max(a, b)))
        rounds.append(sorted(pairs))
    return rounds


def validate_for_reduction(sc):
    """
    Refuse instances the reductions do not handle: fewer than two elements,
    an element in no set, or a set covering everything.
    """
    if sc.ground_size < 2:
        raise_user_error('reduction_small', (sc.ground_size,),
                         exception=DegenerateInstanceError)
    for element in sc.elements:
        if not sc.sets_containing(element):
            raise_user_error('reduction_uncovered', (element,),
                             exception=DegenerateInstanceError)
    for t, members in enumerate(sc.sets):
        if len(members) == sc.ground_size:
            raise_user_error('reduction_universal', (t,),
                             exception=DegenerateInstanceError)


class ReducedInstance(object):
    """
    Graph built from a Set-Cover1 instance.

    Vertices are numbered block by block: for ``i = 1 .. ell`` the element
    copies ``X_i`` (elements ``1 .. n``) then the set copies ``S_i`` (sets
    ``0 .. k-1``); then ``X'1``, ``X'2`` and, for the identifying code
    flavour, ``Z`` (``2n^2`` vertices indexed from 1).

    ``roles[v]`` is one of ``('X', i, e)``, ``('S', i, t)``, ``('X1', e)``,
    ``('X2', e)`` or ``('Z', k)``; ``numbering[v]`` is the pair of Z indices
    attached to set copy ``v``.
    """

    def __init__(self, sc, target, graph, numbering):
        self.sc = sc
        self.target = target
        self.graph = graph
        self.numbering = numbering
        self.n = sc.ground_size
        self.set_count = len(sc.sets)
        self.ell = 2 * self.n ** 2 - 1
        self.z_count = 2 * self.n ** 2 if target == 'ic' else 0
        self.block = self.n + self.set_count
        self.roles = tuple(self._role(v) for v in range(graph.n))

    def x_copy(self, i, e):
        return (i - 1) * self.block + (e - 1)

    def s_copy(self, i, t):
        return (i - 1) * self.block + self.n + t

    def x1(self, e):
        return self.ell * self.block + (e - 1)

    def x2(self, e):
        return self.ell * self.block + self.n + (e - 1)

    def z(self, k):
        return self.ell * self.block + 2 * self.n + (k - 1)

    def _role(self, v):
        tail = self.ell * self.block
        if v < tail:
            i, offset = divmod(v, self.block)
            if offset < self.n:
                return ('X', i + 1, offset + 1)
            return ('S', i + 1, offset - self.n)
        v -= tail
        if v < self.n:
            return ('X1', v + 1)
        if v < 2 * self.n:
            return ('X2', v - self.n + 1)
        return ('Z', v - 2 * self.n + 1)

    def label(self, v):
        role = self.roles[v]
        if role[0] == 'X':
            return 'x[%d,%d]' % role[1:]
        if role[0] == 'S':
            return 's[%d,%d]' % role[1:]
        if role[0] == 'X1':
            return "x'[%d]" % role[1]
        if role[0] == 'X2':
            return "x''[%d]" % role[1]
        return 'z[%d]' % role[1]

    def _members(self, kinds):
        return VertexSet(
            [v for v, role in enumerate(self.roles) if role[0] in kinds],
            self.graph.n)

    @property
    def x_side(self):
        "Element copies, X'1 and Z"
        return self._members(('X', 'X1', 'Z'))

    @property
    def y_side(self):
        "Set copies and X'2"
        return self._members(('S', 'X2'))

    def set_copies(self, i):
        return [self.s_copy(i, t) for t in range(self.set_count)]

    def __repr__(self):
        return 'ReducedInstance(%s, n=%d, ell=%d, vertices=%d)' % (
            self.target, self.n, self.ell, self.graph.n)


def _build(sc, target):
    validate_for_reduction(sc)
    n = sc.ground_size
    k = len(sc.sets)
    ell = 2 * n ** 2 - 1
    block = n + k
    tail = ell * block
    size = tail + 2 * n + (2 * n ** 2 if target == 'ic' else 0)
    edges = []
    for i in range(ell):
        for t, members in enumerate(sc.sets):
            for e in members:
                edges.append((i * block + e - 1, i * block + n + t))
    for e in range(1, n + 1):
        x1, x2 = tail + e - 1, tail + n + e - 1
        edges.append((x1, x2))
        for i in range(ell):
            edges.append((i * block + e - 1, x2))
    numbering = {}
    if target == 'ic':
        classes = one_factorization(n ** 2)
        z_base = tail + 2 * n
        for i, matching in enumerate(classes):
            for t in range(k):
                a, b = matching[t]
                s = i * block + n + t
                numbering[s] = (a + 1, b + 1)
                edges.append((s, z_base + a))
                edges.append((s, z_base + b))
    reduced = ReducedInstance(sc, target, Graph(size, edges), numbering)
    logger.debug('Built %r', reduced)
    return reduced


def build_dc_instance(sc):
    """
    Discriminating code instance: ``ell = 2n^2 - 1`` copies of the
    membership graph, plus ``X'2`` matched to ``X'1`` and joined to every
    copy of its element.
    """
    return _build(sc, 'dc')


def build_ic_instance(sc):
    """
    Identifying code instance: the discriminating code graph plus ``Z``.
    Set copies of block ``i`` take the first pairs of colour class ``i`` of
    a one-factorization of the complete graph on ``Z``, and each is joined
    to the two Z vertices of its pair.
    """
    return _build(sc, 'ic')


def _reduced(sc, target, reduced):
    if reduced is None:
        return _build(sc, target)
    if reduced.target != target:
        raise_user_error('wrong_target', (target, reduced.target))
    return reduced


def setcover_to_dc_solution(sc, cover, reduced=None):
    """
    Copies of the cover in every block plus ``X'2``; a discriminating code
    of size ``n + ell * |cover|``.
    """
    reduced = _reduced(sc, 'dc', reduced)
    indices = _check_indices(sc, cover)
    vertices = [reduced.x2(e) for e in sc.elements]
    for i in range(1, reduced.ell + 1):
        vertices.extend(reduced.s_copy(i, t) for t in indices)
    return VertexSet(vertices, reduced.graph.n)


def _block_covers(sc, reduced, code):
    members = set(code)
    return [
        [t for t in range(reduced.set_count)
         if reduced.s_copy(i, t) in members]
        for i in range(1, reduced.ell + 1)
    ]


def _smallest_cover(sc, blocks):
    best = None
    for i, indices in enumerate(blocks, 1):
        missing = is_cover(sc, indices)
        if missing is not None:
            raise_user_error('not_a_cover', (indices, missing),
                             exception=SolverError)
        if best is None or len(indices) < len(best):
            best = indices
    return tuple(best)


def dc_solution_to_setcover(sc, code, reduced=None):
    """
    The smallest of the covers read off the blocks of a discriminating
    code; at most ``(|code| - n) / ell`` sets.
    """
    reduced = _reduced(sc, 'dc', reduced)
    verdict = verify_discriminating_code(
        reduced.graph, (reduced.x_side, reduced.y_side), code)
    if not verdict.valid:
        raise_user_error('invalid_code', (str(verdict),))
    return _smallest_cover(sc, _block_covers(sc, reduced, code))


def setcover_to_ic_solution(sc, cover, reduced=None):
    """
    Copies of the cover in every block plus ``X_1``, ``X'2`` and ``Z``; an
    identifying code of size ``ell * |cover| + 2n + 2n^2``.
    """
    reduced = _reduced(sc, 'ic', reduced)
    indices = _check_indices(sc, cover)
    vertices = []
    for e in sc.elements:
        vertices.append(reduced.x_copy(1, e))
        vertices.append(reduced.x2(e))
    vertices.extend(reduced.z(k) for k in range(1, reduced.z_count + 1))
    for i in range(1, reduced.ell + 1):
        vertices.extend(reduced.s_copy(i, t) for t in indices)
    return Code(VertexSet(vertices, reduced.graph.n), IDENTIFYING, {
        'cover': tuple(indices),
    })


IcRepair = namedtuple('IcRepair', 'code cover steps')
IcRepair.__doc__ = """
Outcome of :func:`ic_repair`: the repaired identifying code, the cover it
yields and the swaps made, each ``(i, element, case, added, removed)``.
"""


def ic_repair(sc, code, reduced=None):
    """
    Turn an identifying code into one whose every block holds a set cover.

    Blocks are visited in order. When a copy ``x_i`` of an element is not
    covered by the block's set copies, the code must contain ``x_i`` (case 1)
    or the element's ``X'1`` copy (case 2, used only when case 1 does not
    apply); that vertex is swapped for the lowest set copy containing the
    element. ``Z``, ``X_1`` and ``X'2`` are added at the end.
    """
    reduced = _reduced(sc, 'ic', reduced)
    g = reduced.graph
    verdict = verify_identifying_code(g, code)
    if not verdict.valid:
        raise_user_error('invalid_code', (str(verdict),))
    current = set(code)
    steps = []
    for i in range(1, reduced.ell + 1):
        for e in sc.elements:
            holders = sc.sets_containing(e)
            if any(reduced.s_copy(i, t) in current for t in holders):
                continue
            x_i, x_prime = reduced.x_copy(i, e), reduced.x1(e)
            if x_i in current:
                case, removed = 1, x_i
            elif x_prime in current:
                case, removed = 2, x_prime
            else:
                raise_user_error('repair_stuck', (e, i),
                                 exception=SolverError)
            added = reduced.s_copy(i, holders[0])
            current.discard(removed)
            current.add(added)
            steps.append((i, e, case, added, removed))
            logger.debug('Block %d element %d: case %d, %s -> %s', i, e,
                         case, reduced.label(removed), reduced.label(added))
    for e in sc.elements:
        current.add(reduced.x_copy(1, e))
        current.add(reduced.x2(e))
    current.update(reduced.z(k) for k in range(1, reduced.z_count + 1))
    repaired = VertexSet(current, g.n)
    verdict = verify_identifying_code(g, repaired)
    if not verdict.valid:
        raise_user_error('repair_invalid', (str(verdict),),
                         exception=SolverError)
    cover = _smallest_cover(sc, _block_covers(sc, reduced, repaired))
    return IcRepair(
        Code(repaired, IDENTIFYING, {'repair_steps': len(steps)}),
        cover, tuple(steps))


def ic_solution_to_setcover(sc, code, reduced=None):
    """
    Set cover of at most ``|code| / ell`` sets recovered from an identifying
    code of the reduced graph.
    """
    return ic_repair(sc, code, reduced).cover


def parse_setcover(text):
    """
    Parse ``n k`` then ``k`` lines ``c e1 .. ec``; elements are 1-based.
    """
    header = None
    sets = []
    for number, line in enumerate(io.StringIO(text), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        try:
            fields = [int(field) for field in line.split()]
        except ValueError:
            raise_user_error('malformed_setcover',
                             (number, 'expected integers'))
        if header is None:
            if len(fields) != 2 or min(fields) < 0:
                raise_user_error('malformed_setcover',
                                 (number, 'expected "n k"'))
            header = fields
            continue
        if not fields or fields[0] != len(fields) - 1:
            raise_user_error('malformed_setcover',
                             (number, 'set size does not match'))
        sets.append(fields[1:])
    if header is None:
        raise_user_error('malformed_setcover', (0, 'missing header'))
    if len(sets) != header[1]:
        raise_user_error('malformed_setcover', (
            0, 'header announces %d sets, found %d' % (header[1], len(sets))))
    return SetCover1Instance(header[0], sets)


def format_setcover(sc):
    lines = ['%d %d' % (sc.ground_size, len(sc.sets))]
    for members in sc.sets:
        lines.append(' '.join(map(str, [len(members)] + sorted(members))))
    return '\n'.join(lines) + '\n'


def read_setcover(path):
    return parse_setcover(read_text(path))


def write_setcover(sc, path):
    with io.open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(format_setcover(sc))
