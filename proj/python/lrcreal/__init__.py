"""Exact real arithmetic on [0,1] with lazy L/R/C digit streams."""

from fractions import Fraction

from ._lrcreal import (
    DomainError,
    ExactReal,
    ParseError,
    average,
    compare,
    eval,
    fib,
    from_digits,
    parse_expr,
    selftest,
)
from . import _lrcreal

__all__ = [
    "DomainError",
    "ExactReal",
    "ParseError",
    "affine",
    "average",
    "compare",
    "eval",
    "fib",
    "from_digits",
    "from_rational",
    "interval",
    "parse_expr",
    "prefix_interval",
    "selftest",
]


def _text(r):
    return str(Fraction(r)) if not isinstance(r, str) else r


def from_rational(r):
    """Binary L/R expansion of a rational in [0, 1]."""
    return _lrcreal.from_rational(_text(r))


def affine(ca, cb, cc, x, y, checked=True):
    """ca*x + cb*y + cc for nonnegative rational coefficients."""
    return _lrcreal.affine(_text(ca), _text(cb), _text(cc), x, y, checked)


def interval(x, n):
    """Depth-n interval of x as a pair of Fractions."""
    lo, hi = x.interval(n)
    return Fraction(lo), Fraction(hi)


def prefix_interval(digits):
    lo, hi = _lrcreal.prefix_interval(digits)
    return Fraction(lo), Fraction(hi)
