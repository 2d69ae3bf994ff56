# -*- coding: utf-8 -*-
"""
    test_graph_core

    Graphs, neighbourhoods, class checkers, generators and the edge list
    format.

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import math
import os
import shutil
import tempfile
import unittest
from fractions import Fraction
from itertools import permutations

import networkx as nx

from identcode.exceptions import CapExceededError, InputError
from identcode.graph_core import (
    Graph, IntervalRep, VertexSet, closed_neighborhood, find_twins, girth,
    interval_graph, is_bipartite, is_c4_free, is_chordal_bipartite,
    neighborhood_symmetric_difference, parse_edge_list,
    path_intersection_graph, random_bipartite_graph, random_graph,
    random_interval_graph, read_edge_list, unit_disk_graph, write_edge_list
)


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def naive_girth(g):
    "Shortest cycle through each edge: remove it and measure the detour"
    best = math.inf
    nx_graph = g.to_networkx()
    for u, v in g.edges():
        nx_graph.remove_edge(u, v)
        try:
            best = min(best, nx.shortest_path_length(nx_graph, u, v) + 1)
        except nx.NetworkXNoPath:
            pass
        nx_graph.add_edge(u, v)
    return best


def naive_has_c4(g):
    for a, b, c, d in permutations(range(g.n), 4):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d) \
                and g.has_edge(d, a):
            return True
    return False


class TestGraphCore(unittest.TestCase):
    """
    Test the graph substrate.
    """

    def test_0010_closed_neighborhood(self):
        """
        N[v] contains v and its neighbours.
        """
        self.assertEqual(
            closed_neighborhood(path(3), 1), VertexSet({0, 1, 2}, 3))
        self.assertEqual(
            closed_neighborhood(Graph(3), 2), VertexSet({2}, 3))
        self.assertEqual(
            closed_neighborhood(complete(3), 0), VertexSet({0, 1, 2}, 3))
        self.assertRaises(InputError, closed_neighborhood, path(3), 3)

    def test_0020_symmetric_difference(self):
        """
        Symmetric difference of closed neighbourhoods.
        """
        self.assertEqual(
            list(neighborhood_symmetric_difference(path(4), 0, 1)), [2])
        self.assertEqual(
            list(neighborhood_symmetric_difference(cycle(4), 0, 2)), [0, 2])
        self.assertEqual(
            len(neighborhood_symmetric_difference(complete(2), 0, 1)), 0)
        self.assertRaises(
            InputError, neighborhood_symmetric_difference, path(4), 1, 1)

    def test_0030_find_twins(self):
        """
        Twins are pairs with equal closed neighbourhoods.
        """
        self.assertEqual(find_twins(complete(2)), [(0, 1)])
        self.assertEqual(find_twins(path(4)), [])
        self.assertEqual(find_twins(complete(3)), [(0, 1), (0, 2), (1, 2)])

    def test_0040_is_bipartite(self):
        """
        Two-colouring agrees with networkx on random graphs.
        """
        a, b = is_bipartite(path(4))
        self.assertEqual((list(a), list(b)), ([0, 2], [1, 3]))
        self.assertIsNone(is_bipartite(complete(3)))
        a, b = is_bipartite(Graph(3))
        self.assertEqual(len(a) + len(b), 3)
        a, b = is_bipartite(Graph(6, [(1, 2), (3, 4), (4, 5)]))
        self.assertEqual((list(a), list(b)), ([0, 1, 3, 5], [2, 4]))
        for seed in range(40):
            g = random_graph(9, 0.25, seed=seed)
            sides = is_bipartite(g)
            self.assertEqual(
                sides is not None, nx.is_bipartite(g.to_networkx()))
            if sides is not None:
                for u, v in g.edges():
                    self.assertNotEqual(u in sides[0], v in sides[0])

    def test_0050_is_c4_free(self):
        """
        C4 detection agrees with a 4-tuple enumeration.
        """
        free, witness = is_c4_free(cycle(4))
        self.assertFalse(free)
        self.assertEqual(witness, (0, 2, (1, 3)))
        self.assertEqual(is_c4_free(path(6)), (True, None))
        for seed in range(40):
            g = random_graph(8, 0.3, seed=seed)
            self.assertEqual(is_c4_free(g)[0], not naive_has_c4(g))

    def test_0060_girth(self):
        """
        Girth agrees with the per-edge shortest detour.
        """
        self.assertEqual(girth(cycle(5)), 5)
        self.assertEqual(girth(cycle(4)), 4)
        self.assertEqual(girth(path(6)), math.inf)
        for seed in range(40):
            g = random_graph(10, 0.25, seed=seed)
            self.assertEqual(girth(g), naive_girth(g))

    def test_0070_is_chordal_bipartite(self):
        """
        Induced cycles of length six or more are detected.
        """
        self.assertFalse(is_chordal_bipartite(cycle(6)))
        self.assertTrue(is_chordal_bipartite(cycle(4)))
        self.assertTrue(is_chordal_bipartite(path(6)))
        self.assertFalse(is_chordal_bipartite(cycle(8)))
        self.assertFalse(is_chordal_bipartite(complete(3)))
        # C6 with a chord is two C4s sharing an edge
        self.assertTrue(
            is_chordal_bipartite(Graph(6, list(cycle(6).edges()) + [(0, 3)])))
        self.assertRaises(
            CapExceededError, is_chordal_bipartite, path(20), 16)

    def test_0080_random_generators(self):
        """
        Seeded generators are reproducible and honour the extremes.
        """
        self.assertEqual(random_graph(1, 0.5, seed=1).m, 0)
        self.assertEqual(random_graph(4, 1, seed=1), complete(4))
        self.assertEqual(random_graph(5, 0, seed=1).m, 0)
        self.assertEqual(
            random_graph(9, 0.4, seed=3), random_graph(9, 0.4, seed=3))
        self.assertRaises(InputError, random_graph, 0, 0.5)
        self.assertRaises(InputError, random_graph, 3, 1.5)
        g = random_bipartite_graph(3, 4, 0.5, seed=2)
        self.assertEqual(g.n, 7)
        self.assertIsNotNone(is_bipartite(g))

    def test_0090_random_interval_graph(self):
        """
        Generated interval graphs match their representation.
        """
        for seed in range(30):
            g, rep = random_interval_graph(10, 15, seed=seed)
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    self.assertEqual(g.has_edge(u, v), rep.intersect(u, v))
        g, rep = random_interval_graph(6, 8, seed=5)
        self.assertEqual((g, rep), random_interval_graph(6, 8, seed=5))

    def test_0100_interval_graph(self):
        """
        Touching closed intervals intersect.
        """
        g = interval_graph(IntervalRep([(1, 2), (2, 3), (4, 5)]))
        self.assertEqual(list(g.edges()), [(0, 1)])
        self.assertRaises(InputError, IntervalRep, [(3, 1)])
        rep = IntervalRep([('1/2', '3/2')])
        self.assertEqual(rep.interval(0), (Fraction(1, 2), Fraction(3, 2)))

    def test_0110_unit_disk_graph(self):
        """
        Disks at centre distance two touch; beyond they do not.
        """
        g = unit_disk_graph([(0, 0), (2, 0), (Fraction(41, 10), 0)])
        self.assertEqual(list(g.edges()), [(0, 1)])
        self.assertRaises(InputError, unit_disk_graph, [(1, 2, 3)])

    def test_0120_path_intersection_graph(self):
        """
        Paths of a tree are adjacent when they share a tree vertex.
        """
        tree = [(0, 1), (1, 2), (1, 3)]
        g = path_intersection_graph(tree, [[0, 1], [2], [3, 1, 2], [3]])
        self.assertEqual(
            list(g.edges()), [(0, 2), (1, 2), (2, 3)])
        self.assertRaises(
            InputError, path_intersection_graph, tree, [[0, 2]])
        self.assertRaises(
            InputError, path_intersection_graph,
            [(0, 1), (1, 2), (2, 0)], [[0]])

    def test_0130_graph_helpers(self):
        """
        Induced subgraphs, complement and networkx conversion.
        """
        g = cycle(5)
        sub, original = g.induced_subgraph([4, 0, 1])
        self.assertEqual(original, (0, 1, 4))
        self.assertEqual(list(sub.edges()), [(0, 1), (0, 2)])
        self.assertEqual(g.complement().m, 5)
        self.assertEqual(Graph.from_networkx(g.to_networkx()), g)
        self.assertEqual(g.degree(0), 2)
        self.assertEqual(list(g.neighbors(0)), [1, 4])
        self.assertRaises(InputError, Graph, 2, [(0, 0)])
        self.assertRaises(InputError, Graph, 2, [(0, 2)])

    def test_0140_vertex_set(self):
        """
        Vertex sets are sorted, duplicate free and range checked.
        """
        s = VertexSet([3, 1, 3], 5)
        self.assertEqual(list(s), [1, 3])
        self.assertEqual(s.mask, 0b1010)
        self.assertEqual(str(s), '1,3')
        self.assertEqual(VertexSet.from_mask(0b1010, 5), s)
        self.assertEqual(list(s.union([0])), [0, 1, 3])
        self.assertEqual(list(s.difference([1])), [3])
        self.assertTrue(s.issubset([1, 2, 3]))
        self.assertRaises(InputError, VertexSet, [5], 5)


class TestEdgeListFormat(unittest.TestCase):
    """
    Test reading and writing edge lists.
    """

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_0010_parse(self):
        """
        Header, comments and edges are read.
        """
        g = parse_edge_list('# a path\n4 3\n0 1\n1 2\n\n3 2\n')
        self.assertEqual(g, path(4))

    def test_0020_malformed(self):
        """
        Every malformed input names its problem.
        """
        for text in ('', '3 1\n0 3\n', '3 1\n1 1\n', '3 2\n0 1\n',
                     '3 2\n0 1\n1 0\n', '3 1\n0 x\n', '3 1\n0 1 2\n'):
            self.assertRaises(InputError, parse_edge_list, text)

    def test_0030_write_and_read(self):
        """
        A written edge list reads back as the same graph.
        """
        filename = os.path.join(self.directory, 'c5.graph')
        write_edge_list(cycle(5), filename)
        self.assertEqual(read_edge_list(filename), cycle(5))
        with open(filename) as handle:
            self.assertEqual(handle.readline(), '5 5\n')


def suite():
    "Graph core test suite"
    test_suite = unittest.TestSuite()
    test_suite.addTests([
        unittest.TestLoader().loadTestsFromTestCase(TestGraphCore),
        unittest.TestLoader().loadTestsFromTestCase(TestEdgeListFormat),
    ])
    return test_suite


if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite())
