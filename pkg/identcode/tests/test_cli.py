# -*- coding: utf-8 -*-
"""
    test_cli

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import io
import os
import shutil
import tempfile
import unittest

from identcode.cli import Report, main, parse_code
from identcode.constructions import path_graph
from identcode.exceptions import InputError, TwinsError
from identcode.graph_core import Graph, write_edge_list
from identcode.interval_approx import write_intervals
from identcode.reductions import (
    SetCover1Instance, build_dc_instance, setcover_to_dc_solution,
    write_setcover
)


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


class TestCli(unittest.TestCase):
    """
    Run the command line against temporary files.
    """

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def graph_file(self, name, g):
        filename = os.path.join(self.directory, name)
        write_edge_list(g, filename)
        return filename

    def setcover_file(self, name, sc):
        filename = os.path.join(self.directory, name)
        write_setcover(sc, filename)
        return filename

    def run_cli(self, *argv):
        out = io.StringIO()
        code = main(list(argv), stdout=out)
        return code, out.getvalue().splitlines()

    def test_0010_lowerbound(self):
        """
        The human output is the bare bound.
        """
        self.assertEqual(
            self.run_cli('lowerbound', '--n', '10', '--d', '2'), (0, ['3']))
        code, lines = self.run_cli(
            '--format', 'kv', 'lowerbound', '--n', '10', '--d', '2')
        self.assertEqual(
            lines, ['sauer_lower_bound=3', 'sauer_sum_lower_bound=4'])
        code, lines = self.run_cli('lowerbound', '--n', '1', '--d', '2')
        self.assertEqual(code, 2)
        self.assertTrue(lines[0].startswith('error: '))

    def test_0020_verify(self):
        """
        Valid codes exit 0, invalid ones 1 with the failing vertices.
        """
        p4 = self.graph_file('p4.graph', path(4))
        self.assertEqual(
            self.run_cli('verify', '--graph', p4, '--code', '0,1,2'),
            (0, ['valid']))
        self.assertEqual(
            self.run_cli('verify', '--graph', p4, '--code', '1,2'),
            (1, ['not_separating(1,2)']))
        code, lines = self.run_cli(
            '--format', 'kv', 'verify', '--graph', p4, '--code', '0')
        self.assertEqual(lines, ['verdict=not_dominating(2)', 'code_size=1'])
        code, lines = self.run_cli(
            'verify', '--graph', p4, '--code', '0,x')
        self.assertEqual(code, 2)

    def test_0030_verify_discriminating(self):
        """
        --x-side switches to discriminating codes.
        """
        k2 = self.graph_file('k2.graph', Graph(2, [(0, 1)]))
        self.assertEqual(
            self.run_cli('verify', '--graph', k2, '--code', '1',
                         '--x-side', '0'),
            (0, ['valid']))

    def test_0040_solve_exact(self):
        """
        Optimum, twins and the vertex cap.
        """
        p6 = self.graph_file('p6.graph', path(6))
        code, lines = self.run_cli('solve-exact', '--graph', p6)
        self.assertEqual(code, 0)
        self.assertEqual(lines[0], 'gamma_id: 4')
        k2 = self.graph_file('k2.graph', Graph(2, [(0, 1)]))
        self.assertEqual(
            self.run_cli('solve-exact', '--graph', k2), (1, ['twins: 0,1']))
        code, lines = self.run_cli(
            '--format', 'kv', 'solve-exact', '--graph', k2)
        self.assertEqual(lines, ['file=%s' % k2, 'status=twins', 'twins=0,1'])
        code, lines = self.run_cli('solve-exact', '--graph', p6, '--cap', '5')
        self.assertEqual(code, 3)
        self.assertTrue(lines[0].startswith('error: '))

    def test_0050_batch(self):
        """
        Several files print a header each and exit with the worst code.
        """
        p6 = self.graph_file('p6.graph', path(6))
        k2 = self.graph_file('k2.graph', Graph(2, [(0, 1)]))
        broken = os.path.join(self.directory, 'broken.graph')
        with io.open(broken, 'w', encoding='utf-8') as handle:
            handle.write(u'2 1\n0 0\n')
        code, lines = self.run_cli('solve-exact', '--graph', p6, k2)
        self.assertEqual(code, 1)
        self.assertEqual(lines[0], '%s:' % p6)
        self.assertIn('%s:' % k2, lines)
        self.assertEqual(lines[-1], 'twins: 0,1')
        parallel = self.run_cli(
            '--jobs', '2', 'solve-exact', '--graph', p6, k2, broken)
        self.assertEqual(parallel[0], 2)
        self.assertEqual(parallel[1][:len(lines)], lines)

    def test_0060_approximations(self):
        """
        Greedy and interval approximations.
        """
        p4 = self.graph_file('p4.graph', path(4))
        code, lines = self.run_cli(
            '--format', 'kv', 'approx-greedy', '--graph', p4)
        self.assertEqual(code, 0)
        self.assertIn('requirements=10', lines)
        self.assertIn('log_lower_bound=3', lines)
        g, rep = path_graph(6)
        intervals = os.path.join(self.directory, 'p6.intervals')
        write_intervals(rep, intervals)
        code, lines = self.run_cli(
            '--format', 'kv', 'approx-interval', '--intervals', intervals)
        self.assertEqual(code, 0)
        self.assertEqual(lines[-1], 'chain=ok')
        links = [line for line in lines if line.startswith('link')]
        self.assertEqual(len(links), 4)

    def test_0070_vcdim(self):
        """
        Dimension and the trace witnesses.
        """
        p6 = self.graph_file('p6.graph', path(6))
        code, lines = self.run_cli('vcdim', '--graph', p6)
        self.assertEqual(lines[0], 'dimension: 2')
        self.assertEqual(len([line for line in lines if '<-' in line]), 4)
        code, lines = self.run_cli(
            '--format', 'kv', 'vcdim', '--graph', p6, '--max-d', '1')
        self.assertIn('lower_bound=1', lines)

    def test_0080_gen(self):
        """
        Family instances on stdout or written to files.
        """
        code, lines = self.run_cli('gen', '--family', 'c4free', '--param', '3')
        self.assertEqual((code, lines[0]), (0, '6 6'))
        prefix = os.path.join(self.directory, 'c4')
        self.run_cli('gen', '--family', 'c4free', '--param', '3',
                     '--output', prefix)
        with io.open(prefix + '.code', encoding='utf-8') as handle:
            self.assertEqual(handle.read(), '0,1,2\n')
        self.assertTrue(os.path.exists(prefix + '.graph'))
        prefix = os.path.join(self.directory, 'p5')
        self.run_cli('gen', '--family', 'path', '--param', '5',
                     '--output', prefix)
        self.assertTrue(os.path.exists(prefix + '.intervals'))
        self.assertFalse(os.path.exists(prefix + '.code'))
        code, lines = self.run_cli('gen', '--family', 'vcd', '--param', '1')
        self.assertEqual(code, 2)

    def test_0090_reduce(self):
        """
        Reduced graph followed by the vertex labels.
        """
        sc = SetCover1Instance(3, [[1, 2], [3]])
        filename = self.setcover_file('small.setcover', sc)
        code, lines = self.run_cli(
            'reduce', '--setcover', filename, '--target', 'dc')
        self.assertEqual(code, 0)
        self.assertEqual(lines[0], '91 105')
        self.assertEqual(lines[-1], "# 90 x''[3]")
        code, lines = self.run_cli(
            '--format', 'kv', 'reduce', '--setcover', filename,
            '--target', 'ic')
        self.assertIn('vertices=109', lines)
        self.assertIn('ell=17', lines)
        degenerate = self.setcover_file(
            'tiny.setcover', SetCover1Instance(1, [[1]]))
        code, lines = self.run_cli(
            'reduce', '--setcover', degenerate, '--target', 'dc')
        self.assertEqual(code, 2)
        self.assertEqual(
            lines[-1], 'hint: run solve-setcover on this instance instead')

    def test_0100_map_back_and_solve(self):
        """
        A forward code maps back to its cover; the exact cover agrees.
        """
        sc = SetCover1Instance(3, [[1, 2], [3]])
        filename = self.setcover_file('small.setcover', sc)
        reduced = build_dc_instance(sc)
        forward = setcover_to_dc_solution(sc, [0, 1], reduced)
        text = ','.join(map(str, forward))
        self.assertEqual(
            self.run_cli('map-back', '--setcover', filename,
                         '--target', 'dc', '--code', text),
            (0, ['cover: 0,1']))
        self.assertEqual(
            self.run_cli('solve-setcover', '--setcover', filename),
            (0, ['cover: 0,1']))
        code, lines = self.run_cli(
            'map-back', '--setcover', filename, '--code', '0')
        self.assertEqual(code, 2)

    def test_0110_helpers(self):
        """
        Code parsing and report rendering.
        """
        self.assertEqual(list(parse_code(' 2,0 ', 3)), [0, 2])
        self.assertEqual(len(parse_code('', 3)), 0)
        self.assertRaises(InputError, parse_code, '1;2', 3)
        report = Report.from_error(
            TwinsError('twins', 'Vertices 3 and 5 are twins.', (3, 5)))
        self.assertEqual(report.render('human'), ['twins: 3,5'])
        self.assertEqual(report.exit_code, 1)
        self.assertRaises(SystemExit, main, [], io.StringIO())

    def test_0120_unreadable_files(self):
        """
        Missing files and invalid UTF-8 are input errors with exit 2.
        """
        missing = os.path.join(self.directory, 'missing.graph')
        code, lines = self.run_cli(
            'verify', '--graph', missing, '--code', '0')
        self.assertEqual(code, 2)
        self.assertTrue(lines[0].startswith('error: Cannot read %s' % missing))
        code, lines = self.run_cli(
            '--format', 'kv', 'solve-exact', '--graph', missing)
        self.assertEqual(code, 2)
        self.assertIn('error=file_unreadable', lines)

        binary = os.path.join(self.directory, 'binary.txt')
        with io.open(binary, 'wb') as handle:
            handle.write(b'2 1\n0 \xff\n')
        for argv in [
            ('verify', '--graph', binary, '--code', '0'),
            ('approx-greedy', '--graph', binary),
            ('approx-interval', '--intervals', binary),
            ('reduce', '--setcover', binary, '--target', 'dc'),
            ('solve-setcover', '--setcover', binary),
        ]:
            code, lines = self.run_cli('--format', 'kv', *argv)
            self.assertEqual(code, 2)
            self.assertIn('error=file_unreadable', lines)


def suite():
    "Command line test suite"
    test_suite = unittest.TestSuite()
    test_suite.addTests([
        unittest.TestLoader().loadTestsFromTestCase(TestCli),
    ])
    return test_suite


if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite())
