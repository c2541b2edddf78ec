"""Exact g-polynomials of matroids.

Polynomials are lists of Python ints in ascending degree; matroids are given
by their size ``n`` and a list of bases over ``1..n``.
"""

from ._gpoly import (
    GpolyError,
    beta,
    catalog_bases,
    catalog_names,
    cyclic_flats,
    decompose,
    delannoy_paths,
    g_from_json,
    g_named,
    g_polynomial,
    g_schubert,
    g_uniform,
    tutte,
)
from ._gpoly import shifted as _shifted

__all__ = [
    "GpolyError",
    "beta",
    "catalog_bases",
    "catalog_names",
    "cyclic_flats",
    "decompose",
    "delannoy_paths",
    "g_from_json",
    "g_named",
    "g_polynomial",
    "g_schubert",
    "g_uniform",
    "shifted",
    "tutte",
]

__version__ = "0.1.0"


def shifted(g):
    """g~(t-1) where g = t * g~."""
    return _shifted([str(c) for c in g])
