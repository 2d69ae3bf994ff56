# -*- coding: utf-8 -*-
"""
    test_acceptance

    Seeded property pools over the whole package: exact optima against
    subset enumeration, the interval approximation guarantees, trace
    counting bounds, the extremal families and the reductions.

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import math
import random
import unittest
from fractions import Fraction
from itertools import chain, combinations

from identcode.code_core import (
    exact_min_discriminating_code, exact_min_id_code, exact_min_set_cover,
    greedy_id_code, verify_discriminating_code, verify_identifying_code
)
from identcode.constructions import (
    c4_free_bipartite_family, path_graph, vc_d_bipartite_family
)
from identcode.graph_core import (
    find_twins, girth, is_bipartite, is_c4_free,
    neighborhood_symmetric_difference, random_graph, random_interval_graph
)
from identcode.interval_approx import (
    approx_id_code_interval, canonicalize, inter_rounding, solve_disj,
    windows
)
from identcode.lp_solver import solve_lp
from identcode.reductions import (
    SetCover1Instance, build_dc_instance, build_ic_instance,
    dc_solution_to_setcover, ic_solution_to_setcover, is_cover,
    one_factorization, setcover_to_dc_solution, setcover_to_ic_solution
)
from identcode.vc_dim import (
    code_from_shattered, find_shattered_set, is_shattered, sauer_lower_bound,
    vc_dimension, witness_search
)


def brute_force_gamma(g):
    "Smallest identifying code size by subset enumeration"
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            if verify_identifying_code(g, subset).valid:
                return size
    return None


def brute_force_dimension(g):
    "Largest shattered set by subset enumeration"
    best = 0
    for size in range(1, g.n + 1):
        if not any(is_shattered(g, subset)
                   for subset in combinations(range(g.n), size)):
            break
        best = size
    return best


def twin_free_pool(count, low, high, seed):
    "Seeded twin-free random graphs of order ``low .. high``"
    rng = random.Random(seed)
    pool = []
    while len(pool) < count:
        n = rng.randint(low, high)
        g = random_graph(n, rng.uniform(0.2, 0.6), seed=rng.randrange(10 ** 9))
        if not find_twins(g):
            pool.append(g)
    return pool


def interval_pool(count, low, high, seed):
    "Seeded twin-free random interval graphs of order ``low .. high``"
    rng = random.Random(seed)
    pool = []
    while len(pool) < count:
        n = rng.randint(low, high)
        g, rep = random_interval_graph(
            n, 2 * n, seed=rng.randrange(10 ** 9))
        if not find_twins(g):
            pool.append((g, rep))
    return pool


class TestExactAndGreedy(unittest.TestCase):
    """
    Exact optimum and greedy bound on 200 random twin-free graphs.
    """

    @classmethod
    def setUpClass(cls):
        cls.pool = twin_free_pool(200, 3, 12, seed=2026)
        cls.gamma = [len(exact_min_id_code(g)) for g in cls.pool]

    def test_0010_oracle_equivalence(self):
        """
        The branch and bound optimum equals subset enumeration.
        """
        for g, gamma in zip(self.pool, self.gamma):
            self.assertEqual(gamma, brute_force_gamma(g))

    def test_0020_greedy_bound(self):
        """
        Greedy stays within ln(n + n(n-1)/2) + 1 of the optimum.
        """
        for g, gamma in zip(self.pool, self.gamma):
            code = greedy_id_code(g)
            self.assertTrue(verify_identifying_code(g, code).valid)
            factor = math.log(g.n + g.n * (g.n - 1) // 2) + 1
            self.assertLessEqual(len(code), factor * gamma)


class TestIntervalApproximation(unittest.TestCase):
    """
    Factor-6 guarantee, window partition and stabbing on 200 random
    interval graphs.
    """

    @classmethod
    def setUpClass(cls):
        cls.pool = interval_pool(200, 2, 14, seed=6)

    def test_0010_factor_six(self):
        """
        Valid code within 6 OPT(P*) and 6 gamma, component bounds included.
        """
        for g, rep in self.pool:
            code = approx_id_code_interval(g, rep)
            ledger = code.metadata['ledger']
            self.assertTrue(verify_identifying_code(g, code).valid)
            self.assertLessEqual(len(code), 6 * ledger.opt_p)
            self.assertLessEqual(len(code), 6 * len(exact_min_id_code(g)))
            self.assertLessEqual(ledger.inter_size, 4 * ledger.opt_inter)
            self.assertLessEqual(ledger.disj_size, 2 * ledger.opt_disj)
            self.assertEqual(
                len(solve_disj(g, rep)), ledger.disj_size)

    def test_0020_window_partition(self):
        """
        Left and right windows split every neighbourhood difference.
        """
        for g, rep in self.pool:
            canonical = canonicalize(rep)
            for j, k in g.edges():
                pair = windows(canonical, j, k)
                left = set(pair.left_members(canonical))
                right = set(pair.right_members(canonical))
                self.assertFalse(left & right)
                self.assertEqual(
                    left | right,
                    set(neighborhood_symmetric_difference(g, j, k)))

    def test_0030_stabbing_is_optimal(self):
        """
        The stab count equals the integral optimum of each window program.
        """
        for g, rep in self.pool:
            rounding = inter_rounding(g, rep)
            for program, stabs in (
                    (rounding.left_program, rounding.left_stabs),
                    (rounding.right_program, rounding.right_stabs)):
                value = solve_lp(program).value
                self.assertEqual(Fraction(value).denominator, 1)
                self.assertEqual(value, len(stabs))


class TestTraceBounds(unittest.TestCase):
    """
    VC-dimension bounds and the shattered-set construction.
    """

    def test_0010_sauer(self):
        """
        gamma is at least the smallest c with c^d >= n - 1.
        """
        for g in twin_free_pool(60, 2, 14, seed=11):
            d = vc_dimension(g).dimension
            if not 1 <= d <= 3:
                continue
            self.assertGreaterEqual(
                len(exact_min_id_code(g)), sauer_lower_bound(g.n, d))

    def test_0020_small_classes(self):
        """
        Interval graphs and graphs of girth at least five never shatter
        three vertices; P6 has dimension two; no C4-free bipartite witness
        of three exists.
        """
        rng = random.Random(4)
        for _ in range(100):
            n = rng.randint(3, 10)
            g, _ = random_interval_graph(n, 3 * n, seed=rng.randrange(10 ** 9))
            self.assertLessEqual(brute_force_dimension(g), 2)
        found = 0
        while found < 100:
            g = random_graph(rng.randint(3, 10), 0.3,
                             seed=rng.randrange(10 ** 9))
            if girth(g) < 5:
                continue
            found += 1
            self.assertLessEqual(brute_force_dimension(g), 2)
        self.assertEqual(vc_dimension(path_graph(6)[0]).dimension, 2)
        self.assertIsNone(witness_search('c4_free_bipartite', 3))

    def test_0030_code_from_shattered(self):
        """
        A shattered set of size k gives at least 2^k - 1 vertices and a
        code of at most 2k.
        """
        rng = random.Random(8)
        checked = set()
        for _ in range(120):
            g = random_graph(rng.randint(8, 14), rng.uniform(0.3, 0.5),
                             seed=rng.randrange(10 ** 9))
            for k in (2, 3):
                certificate = find_shattered_set(g, k)
                if certificate is None:
                    continue
                subgraph, code = code_from_shattered(
                    g, certificate.shattered_set)
                self.assertGreaterEqual(subgraph.n, 2 ** k - 1)
                self.assertLessEqual(len(code), 2 * k)
                self.assertTrue(
                    verify_identifying_code(subgraph, code).valid)
                checked.add(k)
        self.assertEqual(checked, set([2, 3]))


class TestFamilies(unittest.TestCase):
    """
    The extremal families.
    """

    def test_0010_families(self):
        """
        Sizes, structure and the codes they come with.
        """
        for n in (3, 4, 5):
            g, code = c4_free_bipartite_family(n)
            self.assertEqual(g.n, n + n * (n - 1) // 2)
            self.assertIsNotNone(is_bipartite(g))
            self.assertTrue(is_c4_free(g)[0])
            self.assertEqual(find_twins(g), [])
            self.assertEqual(len(code), n)
            self.assertTrue(verify_identifying_code(g, code).valid)
        for d in (2, 3):
            g, code = vc_d_bipartite_family(d)
            self.assertEqual(g.n, 2 ** d - 1)
            self.assertEqual(len(code), d)
            self.assertTrue(verify_identifying_code(g, code).valid)
            self.assertLessEqual(vc_dimension(g).dimension, d)


class TestReductionIntegrity(unittest.TestCase):
    """
    Both reductions on small Set-Cover1 instances.
    """

    instances = [
        SetCover1Instance(2, [[1], [2]]),
        SetCover1Instance(3, [[1, 2], [3]]),
        SetCover1Instance(3, [[1, 2], [2, 3], [1, 3]]),
        SetCover1Instance(3, [[1], [2, 3], [2]]),
    ]

    def test_0010_structure(self):
        """
        Bipartite, C4-free, exact vertex counts and a one-factorization of
        the complete graph on the Z vertices.
        """
        for sc in self.instances:
            n, k = sc.ground_size, len(sc.sets)
            ell = 2 * n ** 2 - 1
            dc = build_dc_instance(sc)
            ic = build_ic_instance(sc)
            self.assertEqual(dc.graph.n, ell * (n + k) + 2 * n)
            self.assertEqual(ic.graph.n, ell * (n + k) + 2 * n + 2 * n ** 2)
            for reduced in (dc, ic):
                self.assertIsNotNone(is_bipartite(reduced.graph))
                self.assertTrue(is_c4_free(reduced.graph)[0])
            rounds = one_factorization(n ** 2)
            edges = list(chain.from_iterable(rounds))
            self.assertEqual(len(edges), len(set(edges)))
            self.assertEqual(len(edges), n ** 2 * (2 * n ** 2 - 1))

    def test_0020_forward_and_backward(self):
        """
        Forward codes have the exact sizes; backward covers respect the
        size bounds.
        """
        for sc in self.instances:
            n = sc.ground_size
            ell = 2 * n ** 2 - 1
            cover = exact_min_set_cover(sc)
            dc = build_dc_instance(sc)
            sides = (dc.x_side, dc.y_side)
            code = setcover_to_dc_solution(sc, cover, dc)
            self.assertEqual(len(code), n + ell * len(cover))
            self.assertTrue(
                verify_discriminating_code(dc.graph, sides, code).valid)
            back = dc_solution_to_setcover(sc, code, dc)
            self.assertIsNone(is_cover(sc, back))
            self.assertLessEqual(len(back), (len(code) - n) / float(ell))

            ic = build_ic_instance(sc)
            code = setcover_to_ic_solution(sc, cover, ic)
            self.assertEqual(
                len(code), ell * len(cover) + 2 * n + 2 * n ** 2)
            self.assertTrue(verify_identifying_code(ic.graph, code).valid)
            back = ic_solution_to_setcover(sc, code, ic)
            self.assertIsNone(is_cover(sc, back))
            self.assertLessEqual(len(back), len(code) / float(ell))

    def test_0030_round_trip(self):
        """
        On the two-element instance the exact discriminating and exact
        identifying codes both map back to the optimum cover.
        """
        sc = self.instances[0]
        optimum = exact_min_set_cover(sc)
        dc = build_dc_instance(sc)
        code = exact_min_discriminating_code(dc.graph, (dc.x_side, dc.y_side))
        self.assertEqual(
            len(dc_solution_to_setcover(sc, code, dc)), len(optimum))
        ic = build_ic_instance(sc)
        code = exact_min_id_code(ic.graph, cap=ic.graph.n)
        self.assertTrue(verify_identifying_code(ic.graph, code).valid)
        back = ic_solution_to_setcover(sc, code, ic)
        self.assertIsNone(is_cover(sc, back))
        self.assertEqual(sorted(back), sorted(optimum))
        self.assertLessEqual(len(back), len(code) / float(ic.ell))
        code = greedy_id_code(ic.graph)
        self.assertEqual(
            len(ic_solution_to_setcover(sc, code, ic)), len(optimum))


def suite():
    "Acceptance test suite"
    test_suite = unittest.TestSuite()
    test_suite.addTests([
        unittest.TestLoader().loadTestsFromTestCase(TestExactAndGreedy),
        unittest.TestLoader().loadTestsFromTestCase(
            TestIntervalApproximation),
        unittest.TestLoader().loadTestsFromTestCase(TestTraceBounds),
        unittest.TestLoader().loadTestsFromTestCase(TestFamilies),
        unittest.TestLoader().loadTestsFromTestCase(
            TestReductionIntegrity),
    ])
    return test_suite


if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite())
