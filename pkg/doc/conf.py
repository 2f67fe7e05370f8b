# -*- coding: utf-8 -*-
#
# FuzzNormTools documentation build configuration file.
# Only the html builder is configured.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'numpydoc']

# config numpydoc to not use autosummary
numpydoc_show_class_members = False

source_suffix = '.rst'
master_doc = 'index'

project = u'FuzzNormTools'
copyright = u'2026, FuzzNorm developers'
author = u'FuzzNorm developers'

# keep in sync with FuzzNormTools.__version__
version = u'1.0'
release = u'1.0.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'


# -- Options for HTML output ----------------------------------------------

html_theme = 'classic'
htmlhelp_basename = 'FuzzNormToolsdoc'
