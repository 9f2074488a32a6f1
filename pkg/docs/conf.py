# -*- coding: utf-8 -*-
#
# seplas documentation build configuration file.

import sys, os

# autodoc imports the package from the repository root
sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.autodoc']

source_suffix = '.rst'
master_doc = 'index'

project = u'seplas'
copyright = u'2018, Joseph Wegner'
version = 'v0.1.0'
release = 'v0.1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
htmlhelp_basename = 'seplasdoc'

man_pages = [
    ('index', 'seplas', u'seplas Documentation',
     [u'Joseph Wegner'], 1)
]
