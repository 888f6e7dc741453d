"""Exact Fubini polynomials, Stirling, Bernoulli and Apostol-Bernoulli values.

Integers come back as ``int`` and rationals as ``fractions.Fraction``.
Polynomials are coefficient lists, lowest power first.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DomainError, UsageError

__all__ = [
    "DomainError",
    "UsageError",
    "stirling1",
    "stirling2",
    "fubini_number",
    "fubini_poly",
    "fubini_two_var",
    "bernoulli",
    "p_bernoulli",
    "apostol",
    "apostol_pretty",
    "list_identities",
    "verify",
    "verify_all",
]


def _text(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def stirling1(n, k):
    """Unsigned first-kind Stirling number."""
    return int(_core.stirling1(n, k))


def stirling2(n, k):
    return int(_core.stirling2(n, k))


def fubini_number(n):
    return int(_core.fubini_number(n))


def fubini_poly(n, at=None):
    """Coefficients of F_n(y), or its value at a rational point."""
    if at is not None:
        return Fraction(_core.fubini_poly_at(n, _text(at)))
    return [int(c) for c in _core.fubini_poly(n)]


def fubini_two_var(n):
    """Grid c[i][j] of the x^i y^j coefficients of F_n(x;y)."""
    return [[int(c) for c in row] for row in _core.fubini_two_var(n)]


def bernoulli(n):
    return Fraction(_core.bernoulli(n))


def p_bernoulli(n, p):
    return Fraction(_core.p_bernoulli(n, p))


def apostol(n, at=None):
    """(numerator, denominator) coefficient lists of the index-n function, or its value at a point."""
    if at is not None:
        return Fraction(_core.apostol_at(n, _text(at)))
    num, den = _core.apostol(n)
    return [Fraction(c) for c in num], [Fraction(c) for c in den]


def apostol_pretty(n):
    return _core.apostol_pretty(n)


def list_identities():
    return json.loads(_core.list_identities())


def verify(identity, **bounds):
    """Reports for one identity; bounds are n_max, m_max, k_max, p_max, samples."""
    return json.loads(_core.verify(identity, **bounds))


def verify_all(profile="quick"):
    return json.loads(_core.verify_all(profile))
