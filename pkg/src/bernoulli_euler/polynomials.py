"""Dense polynomials over the rationals and the Appell families built on them.

``unified_poly(p, n)`` is V_n(x; lambda; mu) = sum_k C(n,k) V_k x^{n-k}.
The classical Bernoulli and Euler oracles are computed from their own
recurrences and never touch series division, so they can cross-check it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from .numeric import binomial, format_rational, parse_rational
from .series import Params, unified_numbers

__all__ = [
    "Poly",
    "X",
    "evaluate",
    "derivative",
    "antiderivative",
    "shift",
    "affine_sub",
    "unified_poly",
    "apostol_bernoulli_poly",
    "apostol_euler_poly",
    "classical_bernoulli_oracle",
    "classical_euler_oracle",
    "classical_bernoulli_numbers",
]


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [Fraction(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Polynomial with ``coeffs[i]`` multiplying x^i. Zero is ``()``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return Poly(out)
        k = Fraction(other)
        return Poly([k * c for c in self.coeffs])

    __rmul__ = __mul__

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls([parse_rational(s) for s in data])

    def to_text(self, var: str = "x") -> str:
        return _render(self, var, latex=False)

    def to_latex(self, var: str = "x") -> str:
        return _render(self, var, latex=True)

    def __str__(self) -> str:
        return self.to_text()


X = Poly([0, 1])


def _render(q: Poly, var: str, latex: bool) -> str:
    if q.is_zero():
        return "0"
    parts: list[tuple[str, str]] = []
    for i in range(q.degree, -1, -1):
        c = q.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = f"{var}^{{{i}}}" if latex else f"{var}^{i}"
        if a == 1 and mono:
            body = mono
        else:
            if latex and a.denominator != 1:
                num = rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
            else:
                num = str(a)
            if not mono:
                body = num
            elif latex:
                body = f"{num} {mono}"
            else:
                body = f"{num}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def evaluate(q: Poly, x) -> Fraction:
    """Horner evaluation at a rational point."""
    x = Fraction(x)
    if not q.coeffs:
        return Fraction(0)
    # integer Horner on sum C_i a^i b^(d-i), with x = a/b and c_i = C_i/scale
    a, b = x.numerator, x.denominator
    scale = lcm(*(c.denominator for c in q.coeffs))
    acc, pw = 0, 1
    for c in reversed(q.coeffs):
        acc = acc * a + c.numerator * (scale // c.denominator) * pw
        pw *= b
    return Fraction(acc, scale * (pw // b))


def derivative(q: Poly, l: int = 1) -> Poly:
    if l < 0:
        raise ValueError("derivative order must be >= 0")
    c = list(q.coeffs)
    for _ in range(l):
        c = [i * c[i] for i in range(1, len(c))]
    return Poly(c)


def antiderivative(q: Poly) -> Poly:
    """Antiderivative vanishing at 0."""
    return Poly([0] + [c / (i + 1) for i, c in enumerate(q.coeffs)])


def affine_sub(q: Poly, a, s) -> Poly:
    """q(a + s x), by binomial expansion of each power."""
    a, s = Fraction(a), Fraction(s)
    out = [Fraction(0)] * max(len(q.coeffs), 1)
    for i, c in enumerate(q.coeffs):
        if not c:
            continue
        # (a + s x)^i = sum_j C(i,j) a^{i-j} s^j x^j
        for j in range(i + 1):
            out[j] += c * binomial(i, j) * a ** (i - j) * s**j
    return Poly(out)


def shift(q: Poly, y) -> Poly:
    """q(x + y)."""
    return affine_sub(q, y, 1)


def _appell_from_numbers(numbers: Sequence[Fraction], n: int) -> Poly:
    # coefficient of x^{n-k} is C(n,k) * numbers[k]
    return Poly([binomial(n, n - j) * numbers[n - j] for j in range(n + 1)])


@lru_cache(maxsize=8192)
def _unified_poly(p: Params, n: int) -> Poly:
    return _appell_from_numbers(unified_numbers(p, n), n)


def unified_poly(p: Params, n: int) -> Poly:
    """V_n(x; lambda; mu); the zero polynomial for negative n."""
    p.require_defined()
    if n < 0:
        return Poly()
    return _unified_poly(p, n)


def apostol_bernoulli_poly(lam, n: int) -> Poly:
    return unified_poly(Params(lam, 2), n)


def apostol_euler_poly(lam, n: int) -> Poly:
    return unified_poly(Params(lam, 0), n)


@lru_cache(maxsize=None)
def _bernoulli_numbers(n_max: int) -> tuple[Fraction, ...]:
    # sum_{k=0}^{n} C(n+1,k) B_k = [n = 0]
    b: list[Fraction] = []
    for n in range(n_max + 1):
        s = Fraction(1 if n == 0 else 0)
        for k in range(n):
            s -= binomial(n + 1, k) * b[k]
        b.append(s / (n + 1))
    return tuple(b)


def classical_bernoulli_numbers(n_max: int) -> list[Fraction]:
    """B_0..B_{n_max} with B_1 = -1/2."""
    return list(_bernoulli_numbers(n_max))


def classical_bernoulli_oracle(n: int) -> Poly:
    """B_n(x) = sum_k C(n,k) B_k x^{n-k} from the binomial recurrence."""
    if n < 0:
        return Poly()
    return _appell_from_numbers(_bernoulli_numbers(n), n)


@lru_cache(maxsize=None)
def _euler_poly(n: int) -> Poly:
    # Solve E_n(x+1) + E_n(x) = 2 x^n for the coefficient vector e.
    # The coefficient of x^j on the left is 2 e_j + sum_{i>j} C(i,j) e_i,
    # which is triangular: e_n = 1, then downwards.
    e = [Fraction(0)] * (n + 1)
    for j in range(n, -1, -1):
        target = Fraction(2 if j == n else 0)
        s = sum((binomial(i, j) * e[i] for i in range(j + 1, n + 1)), Fraction(0))
        e[j] = (target - s) / 2
    return Poly(e)


def classical_euler_oracle(n: int) -> Poly:
    """E_n(x) from E_n(x+1) + E_n(x) = 2 x^n."""
    if n < 0:
        return Poly()
    return _euler_poly(n)
