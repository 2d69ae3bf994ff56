#!/usr/bin/env python
# -*- coding: utf-8 -*-
# This file is part of identcode.  It is distributed under the terms of
# the GNU General Public License version 3.

from setuptools import setup, Command
import os
import configparser
import unittest
import sys


class RunTests(Command):
    """
    Run the test suite
    """
    description = "Run the identcode test suite"

    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        from identcode.tests import suite
        test_result = unittest.TextTestRunner(verbosity=3).run(suite())

        if test_result.wasSuccessful():
            sys.exit(0)
        sys.exit(-1)


class XMLTests(Command):
    """Runs the tests and save the result to an XML file

    Running this requires unittest-xml-reporting which can
    be installed using::

    pip install unittest-xml-reporting

    """
    description = "Run tests with coverage and produce jUnit style report"

    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        import coverage
        import xmlrunner
        cov = coverage.Coverage(source=["identcode"])
        cov.start()
        from identcode.tests import suite
        xmlrunner.XMLTestRunner(output="xml-test-results").run(suite())
        cov.stop()
        cov.save()
        cov.xml_report(outfile="coverage.xml")


class RunAudit(Command):
    """Audits source code using PyFlakes for following issues:
        - Names which are used but not defined or used before they are defined.
        - Names which are redefined without having been used.
    """
    description = "Audit source code with PyFlakes"
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        try:
            from pyflakes.api import checkPath
        except ImportError:
            print("Audit requires PyFlakes installed in your system.")
            sys.exit(-1)

        warns = 0
        for root, _, files in os.walk('identcode'):
            for file in files:
                if file != '__init__.py' and file.endswith('.py'):
                    warns += checkPath(os.path.join(root, file))
        if warns > 0:
            print("Audit finished with total %d warnings." % warns)
        else:
            print("No problems found in sourcecode.")


def read(fname):
    with open(os.path.join(os.path.dirname(__file__), fname)) as handle:
        return handle.read()


config = configparser.ConfigParser()
with open(os.path.join('identcode', 'identcode.cfg')) as handle:
    config.read_file(handle)
info = dict(config.items('identcode'))
requires = info.get('depends', '').strip().splitlines()

setup(
    name='identcode',
    version=info.get('version', '0.0.1'),
    description='Identifying codes in graphs: exact and approximate '
                'solvers, VC-dimension bounds and set cover reductions',
    long_description=read('README.md'),
    long_description_content_type='text/markdown',
    author='The identcode authors',
    packages=[
        'identcode',
        'identcode.tests',
    ],
    package_data={
        'identcode': ['identcode.cfg'],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    license='GPL-3',
    python_requires='>=3.6',
    install_requires=requires,
    zip_safe=False,
    entry_points="""
    [console_scripts]
    identcode = identcode.cli:main
    """,
    test_suite='identcode.tests.suite',
    cmdclass={
        'xmltests': XMLTests,
        'audit': RunAudit,
        'test': RunTests,
    },
)
