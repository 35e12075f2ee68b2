"""Exact scalar helpers shared by every other module.

All scalars are :class:`fractions.Fraction`, which already keeps the
denominator positive and the pair reduced after every operation.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb

Rational = Fraction

__all__ = [
    "Rational",
    "binomial",
    "falling_factorial",
    "rational_pow",
    "parse_rational",
    "format_rational",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


@lru_cache(maxsize=None)
def _binomial_int(n: int, k: int) -> int:
    return comb(n, k)


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) as an exact value; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(_binomial_int(n, k))


def falling_factorial(x, n: int) -> Fraction:
    """x (x-1) ... (x-n+1), with the empty product 1 for n = 0."""
    if n < 0:
        raise ValueError(f"falling_factorial needs n >= 0, got {n}")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x - i
    return out


def rational_pow(x, n: int) -> Fraction:
    x = Fraction(x)
    if x == 0 and n < 0:
        raise ZeroDivisionError("zero raised to a negative power")
    return x**n


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimal and float spellings are refused."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    m = _RATIONAL_RE.match(str(text))
    if m is None:
        raise ValueError(f"not an exact rational: {text!r} (expected p or p/q)")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x) -> str:
    """Canonical ``"p/q"`` (sign on p) or ``"p"`` for integers."""
    return str(Fraction(x))
