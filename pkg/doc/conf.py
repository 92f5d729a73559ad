#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# leodyn documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx_gallery.gen_gallery',
    'numpydoc']

source_suffix = '.rst'

master_doc = 'index'

project = 'leodyn'
copyright = 'leodyn developers'
author = 'leodyn developers'

# The short X.Y version and the full release are read from leodyn/version.py
currentdir = os.path.abspath(os.path.dirname(__file__))
ver_file = os.path.join(currentdir, '..', project, 'version.py')
with open(ver_file) as f:
    exec(f.read())
source_version = __version__
version = source_version
release = source_version

sphinx_gallery_conf = {
    # path to the tutorial scripts
    'examples_dirs': ['../tutorials'],
    # path where to save the generated gallery
    'gallery_dirs': ['tutorials'],
    'doc_module': ('leodyn',),
    'backreferences_dir': 'gen_api'
}

autodoc_default_options = {'members': True}
numpydoc_show_class_members = False

sys.path.insert(0, os.path.abspath('../'))

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"

html_sidebars = {
    '**': [
        'relations.html',
        'searchbox.html',
    ]
}

htmlhelp_basename = 'leodyndoc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (master_doc, 'leodyn.tex', 'leodyn Documentation',
     'leodyn developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'leodyn', 'leodyn Documentation',
     [author], 1)
]
