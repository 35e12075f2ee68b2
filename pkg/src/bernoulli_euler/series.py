"""Truncated exponential generating functions.

An :class:`EgfSeries` of order N stores a_0..a_N for the formal series
sum a_n t^n / n!, so products are binomial convolutions.  The unified
numbers come from dividing

    (2 - mu + (mu/2) t) / (lambda e^t + 1 - mu)

coefficientwise.  Convergence radii play no role here: everything is a
formal power series over the rationals.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from typing import Sequence

from .numeric import falling_factorial

__all__ = [
    "EgfSeries",
    "Kind",
    "Params",
    "ParameterError",
    "IllDefinedError",
    "egf_mul",
    "egf_div",
    "exp_affine",
    "numerator_series",
    "denominator_series",
    "unified_numbers",
    "apostol_bernoulli_numbers",
    "apostol_euler_numbers",
]


class ParameterError(ValueError):
    """A parameter violates a hard constraint (lambda = 0, mu = 1, ...)."""


class IllDefinedError(ParameterError):
    """The generating function has a pole at t = 0."""


@dataclass(frozen=True)
class EgfSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence):
        if len(coeffs) == 0:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "EgfSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} series to {order}")
        return EgfSeries(self.coeffs[: order + 1])

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    @classmethod
    def zeros(cls, order: int) -> "EgfSeries":
        return cls([0] * (order + 1))

    @classmethod
    def monomial(cls, k: int, order: int, coeff=1) -> "EgfSeries":
        """The series coeff * t^k, stored in EGF normalisation (a_k = coeff * k!)."""
        c = [Fraction(0)] * (order + 1)
        if k <= order:
            c[k] = Fraction(coeff) * falling_factorial(k, k)
        return cls(c)


class Kind(enum.Enum):
    REGULAR = "Regular"
    BERNOULLI_SINGULAR = "BernoulliSingular"
    ILL_DEFINED = "IllDefined"


@dataclass(frozen=True)
class Params:
    """Parameters (lambda, mu) of the unified family."""

    lam: Fraction
    mu: Fraction

    def __init__(self, lam, mu):
        lam, mu = Fraction(lam), Fraction(mu)
        if lam == 0:
            raise ParameterError("lambda must be nonzero")
        if mu == 1:
            raise ParameterError("mu must differ from 1")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def kind(self) -> Kind:
        if self.lam + 1 - self.mu != 0:
            return Kind.REGULAR
        if self.mu == 2:
            return Kind.BERNOULLI_SINGULAR
        return Kind.ILL_DEFINED

    def require_defined(self) -> "Params":
        if self.kind is Kind.ILL_DEFINED:
            raise IllDefinedError(
                "lambda = mu - 1: generating function has a pole at t=0"
            )
        return self

    def __repr__(self) -> str:
        return f"Params(lam={self.lam}, mu={self.mu})"


def _check_orders(a: EgfSeries, b: EgfSeries) -> int:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    return a.order


def _integer_scaled(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Integers c and scale s with values[i] == c[i] / s."""
    scale = lcm(*(v.denominator for v in values)) if values else 1
    return [v.numerator * (scale // v.denominator) for v in values], scale


def egf_mul(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    """Product of two EGFs: c_n = sum_k C(n,k) a_k b_{n-k}."""
    order = _check_orders(a, b)
    ai, sa = _integer_scaled(a.coeffs)
    bi, sb = _integer_scaled(b.coeffs)
    out = []
    for n in range(order + 1):
        s = 0
        for k in range(n + 1):
            if ai[k] and bi[n - k]:
                s += comb(n, k) * ai[k] * bi[n - k]
        out.append(Fraction(s, sa * sb))
    return EgfSeries(out)


def _shift_down(s: EgfSeries, v: int) -> list[Fraction]:
    # Divide the ordinary series by t^v and re-express in EGF form:
    # new a_n = a_{n+v} * n! / (n+v)!, the common v! factor being dropped
    # since it cancels between numerator and denominator.
    return [s[n + v] / falling_factorial(n + v, v) for n in range(s.order - v + 1)]


def egf_div(num: EgfSeries, den: EgfSeries) -> EgfSeries:
    """Quotient num / den as a formal power series.

    If den starts at t^v, num must vanish below t^v; both are divided by
    t^v first, so the result has order N - v.
    """
    order = _check_orders(num, den)
    v = den.valuation()
    if v is None:
        raise ZeroDivisionError("denominator series is identically zero")
    for j in range(v):
        if num[j] != 0:
            raise IllDefinedError(
                f"numerator coefficient {j} is nonzero below the denominator "
                f"valuation {v}: pole at t=0"
            )
    # Scale both to integer sequences N, D (same factor, so N/D is unchanged)
    # and track a_n = q_n * D_0^{n+1}, which is an integer:
    #   a_n = D_0^n N_n - sum_{k<n} C(n,k) a_k D_{n-k} D_0^{n-k-1}
    nums, s_n = _integer_scaled(_shift_down(num, v))
    dens, s_d = _integer_scaled(_shift_down(den, v))
    nums = [c * s_d for c in nums]
    dens = [c * s_n for c in dens]
    d0 = dens[0]
    pow_d0 = [1]
    for _ in range(order - v + 1):
        pow_d0.append(pow_d0[-1] * d0)
    a: list[int] = []
    q: list[Fraction] = []
    for n in range(order - v + 1):
        acc = pow_d0[n] * nums[n]
        for k in range(n):
            if a[k] and dens[n - k]:
                acc -= comb(n, k) * a[k] * dens[n - k] * pow_d0[n - k - 1]
        a.append(acc)
        q.append(Fraction(acc, pow_d0[n + 1]))
    return EgfSeries(q)


def exp_affine(c, order: int) -> EgfSeries:
    """e^{ct}: coefficients c^n."""
    c = Fraction(c)
    out = [Fraction(1)]
    for _ in range(order):
        out.append(out[-1] * c)
    return EgfSeries(out)


def numerator_series(p: Params, order: int) -> EgfSeries:
    """2 - mu + (mu/2) t."""
    c = [Fraction(0)] * (order + 1)
    c[0] = 2 - p.mu
    if order >= 1:
        c[1] = p.mu / 2
    return EgfSeries(c)


def denominator_series(p: Params, order: int) -> EgfSeries:
    """lambda e^t + 1 - mu."""
    return EgfSeries([p.lam + 1 - p.mu] + [p.lam] * order)


@lru_cache(maxsize=4096)
def _numbers(p: Params, order: int) -> tuple[Fraction, ...]:
    v = 1 if p.kind is Kind.BERNOULLI_SINGULAR else 0
    q = egf_div(numerator_series(p, order + v), denominator_series(p, order + v))
    return q.coeffs


def unified_numbers(p: Params, n_max: int) -> list[Fraction]:
    """[V_0(lambda;mu), ..., V_{n_max}(lambda;mu)]."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    p.require_defined()
    # Round the working order up so nearby requests share one cached run.
    order = -(-(n_max + 1) // 16) * 16
    return list(_numbers(p, order)[: n_max + 1])


def apostol_bernoulli_numbers(lam, n_max: int) -> list[Fraction]:
    """Coefficients of t / (lambda e^t - 1)."""
    return unified_numbers(Params(lam, 2), n_max)


def apostol_euler_numbers(lam, n_max: int) -> list[Fraction]:
    """Coefficients of 2 / (lambda e^t + 1); lambda = -1 is a pole."""
    return unified_numbers(Params(lam, 0), n_max)
