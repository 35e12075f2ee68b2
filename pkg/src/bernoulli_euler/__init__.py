"""Exact unified Apostol-type Bernoulli-Euler polynomials and identity checks."""
from .numeric import Rational, binomial, falling_factorial, format_rational, parse_rational, rational_pow
from .series import (
    EgfSeries,
    IllDefinedError,
    Kind,
    ParameterError,
    Params,
    apostol_bernoulli_numbers,
    apostol_euler_numbers,
    egf_div,
    egf_mul,
    exp_affine,
    unified_numbers,
)
from .polynomials import (
    Poly,
    affine_sub,
    antiderivative,
    apostol_bernoulli_poly,
    apostol_euler_poly,
    classical_bernoulli_oracle,
    classical_euler_oracle,
    derivative,
    evaluate,
    shift,
    unified_poly,
)
from .identities import CheckReport

__all__ = [
    "Rational",
    "binomial",
    "falling_factorial",
    "format_rational",
    "parse_rational",
    "rational_pow",
    "EgfSeries",
    "IllDefinedError",
    "Kind",
    "ParameterError",
    "Params",
    "apostol_bernoulli_numbers",
    "apostol_euler_numbers",
    "egf_div",
    "egf_mul",
    "exp_affine",
    "unified_numbers",
    "Poly",
    "affine_sub",
    "antiderivative",
    "apostol_bernoulli_poly",
    "apostol_euler_poly",
    "classical_bernoulli_oracle",
    "classical_euler_oracle",
    "derivative",
    "evaluate",
    "shift",
    "unified_poly",
    "CheckReport",
    "clear_caches",
]

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop memoised number sequences and polynomials (for cold timings)."""
    from . import numeric, polynomials, series

    series._numbers.cache_clear()
    polynomials._unified_poly.cache_clear()
    polynomials._bernoulli_numbers.cache_clear()
    polynomials._euler_poly.cache_clear()
    numeric._binomial_int.cache_clear()
