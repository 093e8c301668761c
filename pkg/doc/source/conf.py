# -*- coding: utf-8 -*-
#
# Sphinx configuration for the Mirabolic Orbit Toolkit documentation.

import os
import sys
sys.path.insert(0, os.path.abspath('../../mirtoolkit'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
]

source_suffix = '.rst'
master_doc = 'index'

project = u'Mirabolic Orbit Toolkit'
copyright = u'2026, MIRtoolkit developers'
author = u'MIRtoolkit developers'
version = u'0.1'
release = u'0.1'

exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'bizstyle'
htmlhelp_basename = 'MIRtoolkitdoc'
