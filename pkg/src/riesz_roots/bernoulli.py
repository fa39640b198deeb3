"""Bernoulli numbers, generalized Bernoulli polynomials, sinc-power and zeta values."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .algebra import PiValue, PowerSeries, as_rational, series_int_pow, series_mul, series_reciprocal
from .errors import DomainError, OddArgument


def _exm1_over_t(order: int) -> PowerSeries:
    """Series of ``(e^t - 1)/t``."""
    return PowerSeries([Fraction(1, math.factorial(i + 1)) for i in range(order + 1)], order)


@lru_cache(maxsize=None)
def _bernoulli_table(order: int) -> tuple[Fraction, ...]:
    inv = series_reciprocal(_exm1_over_t(order))
    return tuple(c * math.factorial(i) for i, c in enumerate(inv.coefficients))


def bernoulli_number(n: int) -> Fraction:
    """B_n from ``t/(e^t - 1)``, so B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= 3 and n % 2:
        return Fraction(0)
    # round the table size up so repeated calls share one expansion
    order = max(16, 1 << (n.bit_length()))
    return _bernoulli_table(order)[n]


@lru_cache(maxsize=None)
def _bernoulli_power(sigma: int, order: int) -> PowerSeries:
    return series_int_pow(series_reciprocal(_exm1_over_t(order)), sigma)


def gen_bernoulli_poly(k: int, sigma: int, x) -> Fraction:
    """B_k^(sigma)(x): k! times the t^k coefficient of (t/(e^t-1))^sigma e^(xt)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if sigma < 1:
        raise ValueError("sigma must be a positive integer")
    x = as_rational(x)
    series = series_mul(_bernoulli_power(sigma, k), PowerSeries.exp(k, x))
    return series[k] * math.factorial(k)


def alpha_coeff(n: int, s: int) -> PiValue:
    """Coefficient of z^(2n) in (sin(pi z)/(pi z))^(-s) for s = 2m."""
    if s <= 0 or s % 2:
        raise DomainError("alpha_coeff needs a positive even s")
    if n < 0:
        raise ValueError("n must be >= 0")
    c = (-1) ** n * gen_bernoulli_poly(2 * n, s, Fraction(s, 2)) / math.factorial(2 * n) * 4**n
    return PiValue.monomial(c, 2 * n)


def zeta_even(k: int) -> PiValue:
    """zeta(k) for even k >= 0 as an exact multiple of pi^k."""
    if k % 2:
        raise OddArgument(f"zeta_even needs an even argument, got {k}")
    if k < 0:
        raise DomainError("zeta_even needs k >= 0")
    m = k // 2
    c = Fraction(2) ** (2 * m - 1) * (-1) ** ((m - 1) % 2) * bernoulli_number(2 * m) / math.factorial(2 * m)
    return PiValue.monomial(c, 2 * m)
