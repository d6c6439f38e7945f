"""Rota-Baxter operators on the dual quaternions.

Scalars may be given as int, Fraction or "p/q" strings; scalars in results
come back as Fraction. Matrices are row-major 4x4, column j holding R(e_j).
"""

import json
from fractions import Fraction

from . import _rbdq
from ._rbdq import LimitExceeded

__all__ = [
    "LimitExceeded",
    "apply",
    "audit",
    "build_family",
    "classify",
    "defect_witness",
    "generate_system",
    "is_rota_baxter",
    "multiply",
    "reduce",
    "selftest",
]


def _s(value):
    return value if isinstance(value, str) else str(Fraction(value))


def _coords(values):
    return [_s(v) for v in values]


def _rows(matrix):
    return [_coords(row) for row in matrix]


def _fractions(values):
    return [Fraction(v) for v in values]


def multiply(x, y):
    """Product of two elements given by their 4 coordinates."""
    return _fractions(_rbdq.multiply(_coords(x), _coords(y)))


def apply(matrix, x):
    """R(x) for a 4x4 operator matrix."""
    return _fractions(_rbdq.apply(_rows(matrix), _coords(x)))


def is_rota_baxter(matrix, weight=0):
    return _rbdq.is_rota_baxter(_rows(matrix), _s(weight))


def defect_witness(matrix, weight=0):
    """First basis pair (i, j) with a nonzero defect and the defect, or None."""
    found = _rbdq.defect_witness(_rows(matrix), _s(weight))
    if found is None:
        return None
    i, j, defect = found
    return i, j, _fractions(defect)


def generate_system(weight="sym", format="text"):
    """The 64 defect polynomials; weight is 0, "sym" or a rational."""
    out = _rbdq.generate_system(_s(weight), format)
    return json.loads(out) if format == "json" else out


def reduce(system, order="grevlex", saturate=False, max_pairs=100000, max_degree=12, check=None):
    """Reduced Groebner basis of a system given as text or JSON; returns a dict."""
    if isinstance(system, dict):
        system = json.dumps(system)
    if isinstance(check, dict):
        check = json.dumps(check)
    return json.loads(_rbdq.reduce(system, order, saturate, max_pairs, max_degree, check))


def classify(matrix, weight=0):
    return json.loads(_rbdq.classify(_rows(matrix), _s(weight)))


def build_family(family, params=()):
    """Matrix of a named family member, e.g. build_family("W0_BlockFamily", [1, 2, 4])."""
    return [_fractions(row) for row in _rbdq.build_family(family, _coords(params))]


def audit(weight=0, grid=(-1, 0, 1), max_examples=25):
    return json.loads(_rbdq.audit(_s(weight), _coords(grid), max_examples))


def selftest():
    """List of (name, mandatory, passed, detail) tuples."""
    return _rbdq.selftest()
