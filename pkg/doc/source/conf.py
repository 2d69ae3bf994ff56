# -*- coding: utf-8 -*-
#
# identcode documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

import sys
import os

sys.path.extend([
    os.path.abspath('../../'),
    os.path.abspath('../')
])

# -- General configuration ----------------------------------------------------

extensions = [
    'sphinx.ext.autodoc', 'sphinx.ext.doctest', 'sphinx.ext.intersphinx',
    'sphinx.ext.ifconfig',
]

templates_path = ['ytemplates']

source_suffix = '.rst'

master_doc = 'index'

project = u'identcode'
copyright = u'2026, the identcode authors'

version = '1.0'
release = '1.0.0'

exclude_patterns = []

pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

html_theme = 'nature'

html_static_path = []

htmlhelp_basename = 'identcodedoc'

# -- Options for LaTeX output -------------------------------------------------

latex_documents = [
    ('index', 'identcode.tex', u'identcode Documentation',
     u'The identcode authors', 'manual'),
]

# -- Options for manual page output -------------------------------------------

man_pages = [
    ('index', 'identcode', u'identcode Documentation',
     [u'The identcode authors'], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
