# -*- coding: utf-8 -*-
#
# genuspoly documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

sys.path.insert(0, os.path.abspath('../..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
]

templates_path = ['ntemplates']
source_suffix = '.rst'
master_doc = 'index'

project = 'genuspoly'
copyright = '2026 the genuspoly authors'
author = 'the genuspoly authors'

exec(open(os.path.join('..', '..', 'genuspoly', 'version.py')).read())
# The short X.Y version.
version = '.'.join(__version__.split('.')[:2])
# The full version, including alpha/beta/rc tags.
release = __version__

language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['nstatic']
htmlhelp_basename = 'genuspolydoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
    (master_doc, 'genuspoly.tex', 'genuspoly Documentation',
     author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'genuspoly', 'genuspoly Documentation',
     [author], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (master_doc, 'genuspoly', 'genuspoly Documentation',
     author, 'genuspoly', 'Genus distributions and genus polynomials of small graphs.',
     'Miscellaneous'),
]
