# -*- coding: utf-8 -*-
"""
    __init__

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import unittest

from . import (
    test_acceptance, test_cli, test_code_core, test_configuration,
    test_constructions, test_graph_core, test_interval_approx,
    test_lp_solver, test_reductions, test_vc_dim
)


def suite():
    """
    Define suite
    """
    test_suite = unittest.TestSuite()
    test_suite.addTests([
        test_configuration.suite(),
        test_graph_core.suite(),
        test_code_core.suite(),
        test_lp_solver.suite(),
        test_vc_dim.suite(),
        test_constructions.suite(),
        test_interval_approx.suite(),
        test_reductions.suite(),
        test_cli.suite(),
        test_acceptance.suite(),
    ])
    return test_suite


if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite())
