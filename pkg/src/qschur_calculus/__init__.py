"""
qschur-calculus - exact verification tools for q-Schur algebras.

This package models the q-Schur algebra S_q(n,d) on tensor space, the diagrammatic
2-category S(n,d) with its bimodule 2-representation, supersymmetric polynomials and
the diagrammatic Soergel categories, and checks every defining relation exactly at
small (n,d).
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("qschur-calculus")
except PackageNotFoundError:
    # Package is not installed
    __version__ = "0.0.0.dev0+unknown"

__author__ = "Lucas Hutch"

from . import bimrep, diagrams, qschur, soergel, utils

__all__ = ["bimrep", "diagrams", "qschur", "soergel", "utils"]
