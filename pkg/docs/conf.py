# -*- coding: utf-8 -*-
#
# Sphinx build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
import os
import sys

import sphinx_rtd_theme

# The modules are flat in the repo root.
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
    'sphinx_rtd_theme',
]

# Show both class-level docstring and __init__ docstring in class
# documentation.
autoclass_content = 'class'

autodoc_member_order = 'bysource'

autodoc_default_options = {
    'show-inheritance': True,
    'members': True,
    'special-members': True,
}

# Google style docstrings, eg Args:, Returns:, Raises:, Attributes:
napoleon_google_docstring = True
napoleon_numpy_docstring = False

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'pindy'
copyright = '2026, the pindy authors'
author = 'the pindy authors'

version = '1.0'
release = '1.0'

language = 'en'

exclude_patterns = [
    '_build',
    '**/tests',
    '**/test_*.py',
]

pygments_style = 'sphinx'
todo_include_todos = False
autosummary_generate = True

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': False,
}

htmlhelp_basename = 'pindy-doc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
  (master_doc, 'pindy.tex', 'pindy Documentation', author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'pindy', 'pindy Documentation', [author], 1)
]

# Example configuration for intersphinx: refer to the Python standard library.
intersphinx_mapping = {
  'attrs': ('https://www.attrs.org/en/stable', None),
  'click': ('https://click.palletsprojects.com/en/8.1.x', None),
  'jsonschema': ('https://python-jsonschema.readthedocs.io/en/stable', None),
  'networkx': ('https://networkx.org/documentation/stable', None),
  'python': ('https://docs.python.org/3/', None),
  'sympy': ('https://docs.sympy.org/latest', None),
}
