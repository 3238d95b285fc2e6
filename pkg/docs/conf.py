# -*- coding: utf-8 -*-
#
# qsufficiency documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import qsufficiency

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
    "sphinx.ext.mathjax",
    "numpydoc",
    "sphinx.ext.autosummary",
]
numpydoc_show_class_members = False

templates_path = ["_templates"]
source_suffix = [".rst"]
pygments_style = "sphinx"
master_doc = "index"

project = u"qsufficiency"
copyright = u"2020, the qsufficiency authors"
version = qsufficiency.__version__
release = qsufficiency.__version__

exclude_patterns = ["_build"]
html_theme = "press"
html_static_path = ["_static"]
htmlhelp_basename = "qsufficiencydoc"

latex_documents = [
    ("index", "qsufficiency.tex", u"qsufficiency Documentation", u"", "manual")
]
man_pages = [("index", "qsufficiency", u"qsufficiency Documentation", [], 1)]
