# -*- coding: utf-8 -*-
#
# DistanceCritical documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath(".."))


# -- Project information -----------------------------------------------------

project = u"DistanceCritical"
copyright = u"2024, Hadrien Vroylandt"

# The short X.Y version.
exec(open("../DistanceCritical/_version.py").read())
#
version = __version__
release = __version__

# -- General configuration ------------------------------------------------

extensions = ["sphinx.ext.autodoc", "sphinx.ext.autosummary", "sphinx.ext.doctest", "sphinx.ext.intersphinx", "sphinx.ext.viewcode", "sphinx.ext.mathjax", "numpydoc"]
# see https://github.com/numpy/numpydoc/issues/69
numpydoc_show_class_members = False

autoclass_content = "both"
autodoc_default_flags = ["members", "inherited-members"]
autosummary_generate = True

templates_path = ["_templates"]

source_suffix = ".rst"

master_doc = "index"

exclude_patterns = ["_build", "_templates"]

pygments_style = "sphinx"

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

htmlhelp_basename = "DistanceCriticaldoc"

latex_documents = [("index", "DistanceCritical.tex", u"DistanceCritical Documentation", u"Hadrien Vroylandt", "manual")]

man_pages = [("index", "distcrit", u"DistanceCritical Documentation", [u"Hadrien Vroylandt"], 1)]

intersphinx_mapping = {
    "python": ("https://docs.python.org/{.major}".format(sys.version_info), None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "xarray": ("https://docs.xarray.dev/en/stable/", None),
}
