"""Auxiliary coefficient families used by the closed forms.

Shifted Stirling numbers s(n, l; y), the Eulerian-binomial sums b(n, l),
closed forms of Li_{-n}, the two-sided Pochhammer series, derivatives of
h(r) = (1 - r^N)/(1 - r) and f_q = h^(-q) at r = 1, and the H and G
coefficient tables that expand those derivatives in powers of N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import as_rational, polynomial_mul
from .combinatorics import (
    bell_partial,
    binomial,
    eulerian,
    multinomial,
    pochhammer,
    stirling1_signed,
    stirling1_unsigned,
)
from .errors import IndexOutOfRange, PoleAtOne


def shifted_stirling(n: int, l: int, y) -> Fraction:
    """s(n, l; y) = sum_{k=l}^n C(k, l) s(n, k) (y + n - 1)^(k - l).

    These are the coefficients of x^l in (x + y)_n.
    """
    if l < 0 or l > n:
        return Fraction(0)
    shift = as_rational(y) + n - 1
    return sum(
        (binomial(k, l) * stirling1_signed(n, k) * shift ** (k - l) for k in range(l, n + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def b_coeff(n: int, l: int) -> int:
    """b(n, l) = sum_{j=0}^{n-l} <n, j> C(n - j, l)."""
    if l < 0 or l > n:
        return 0
    return sum(eulerian(n, j) * math.comb(n - j, l) for j in range(n - l + 1))


def b_coeff_short(p: int, q: int) -> int:
    """b(p+q, p) written with the summation limit q, as it appears in the M closed form."""
    return sum(eulerian(p + q, j) * binomial(p + q - j, p) for j in range(q + 1))


def polylog_neg(n: int, z) -> Fraction:
    """Li_{-n}(z) = (n! + sum_l (-1)^l b(n,l) (1-z)^l) / (1-z)^(n+1)."""
    z = as_rational(z)
    if z == 1:
        raise PoleAtOne("Li_{-n} has a pole at z = 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    w = 1 - z
    num = Fraction(math.factorial(n))
    for l in range(1, n + 1):
        num += (-1) ** l * b_coeff(n, l) * w**l
    return num / w ** (n + 1)


def polylog_neg_eulerian(n: int, z) -> Fraction:
    """Li_{-n}(z) = sum_{j<n} <n, j> z^(n-j) / (1-z)^(n+1)."""
    z = as_rational(z)
    if z == 1:
        raise PoleAtOne("Li_{-n} has a pole at z = 1")
    num = sum((eulerian(n, j) * z ** (n - j) for j in range(n)), Fraction(0))
    return num / (1 - z) ** (n + 1)


def g_coeff(k: int, q: int, a, b) -> Fraction:
    """g(k, q; a, b) = sum_{p=0}^{k-q} (-1)^p s(k, p+q; b) b(p+q, p) a^(p+q)."""
    if q < 0 or q > k:
        raise IndexOutOfRange(f"g_coeff needs 0 <= q <= k, got k={k}, q={q}")
    a = as_rational(a)
    return sum(
        ((-1) ** p * shifted_stirling(k, p + q, b) * b_coeff(p + q, p) * a ** (p + q) for p in range(k - q + 1)),
        Fraction(0),
    )


@dataclass(frozen=True)
class GSeriesClosedForm:
    """``constant + sum_q pole_coefficients[q] * (1 - z)^(-q-1)``."""

    constant: Fraction
    pole_coefficients: tuple[Fraction, ...]

    def evaluate(self, z) -> Fraction:
        z = as_rational(z)
        if z == 1:
            raise PoleAtOne("closed form has a pole at z = 1")
        w = 1 / (1 - z)
        acc, power = self.constant, w
        for c in self.pole_coefficients:
            acc += c * power
            power *= w
        return acc


def poch_series_closed(k: int, a, b) -> GSeriesClosedForm:
    """Rational form of sum_{nu in Z} (|nu| a + b)_k z^|nu|."""
    b = as_rational(b)
    return GSeriesClosedForm(
        constant=-Fraction(pochhammer(b, k)),
        pole_coefficients=tuple(2 * g_coeff(k, q, a, b) for q in range(k + 1)),
    )


def h_deriv_at_1(n: int, N: int) -> int:
    """n-th derivative of 1 + r + ... + r^(N-1) at r = 1."""
    return math.factorial(n) * math.comb(N, n + 1)


def _h_derivs(n: int, N: int) -> list[int]:
    return [h_deriv_at_1(j, N) for j in range(1, n + 1)]


def f_deriv_at_1(n: int, q: int, N: int) -> Fraction:
    """n-th derivative of h(r)^(-q) at r = 1, by Faa di Bruno."""
    if n == 0:
        return Fraction(1, N**q)
    xs = _h_derivs(n, N)
    return sum(
        ((-1) ** k * pochhammer(q, k) * Fraction(1, N ** (q + k)) * bell_partial(n, k, xs) for k in range(1, n + 1)),
        Fraction(0),
    )


def f_remainder_bound(m: int, q: int, N: int, r) -> Fraction:
    """Upper bound on |f_q(r) - Taylor_m(r)| for 0 < r < 1."""
    r = as_rational(r)
    xs = _h_derivs(m + 1, N)
    h = sum((r**j for j in range(N)), Fraction(0))
    total = sum(
        (pochhammer(q, k) * h ** -(q + k) * bell_partial(m + 1, k, xs) for k in range(1, m + 2)),
        Fraction(0),
    )
    return (1 - r) ** (m + 1) / math.factorial(m + 1) * total


def f_taylor(m: int, q: int, N: int, r) -> Fraction:
    r = as_rational(r)
    return sum((f_deriv_at_1(n, q, N) / math.factorial(n) * (r - 1) ** n for n in range(m + 1)), Fraction(0))


# H_l(n, k): sum over compositions n_1 + ... + n_k = n (n_i >= 1) of
# multinomial(n+k; n_i+1) * [x^l] prod_i (x)_{n_i+1}.  The recursion below
# walks the compositions part by part; n_i <= n - (k - 1) prunes dead branches.


@lru_cache(maxsize=None)
def _rising_poly(m: int) -> tuple[int, ...]:
    """Coefficients of (x)_m = x (x+1) ... (x+m-1), i.e. unsigned Stirling numbers."""
    return tuple(stirling1_unsigned(m, j) for j in range(m + 1))


@lru_cache(maxsize=None)
def _composition_poly(n: int, k: int) -> tuple[Fraction, ...]:
    """sum over compositions of prod_i (x)_{n_i+1}/(n_i+1)!, as coefficients in x."""
    if k == 0:
        return (Fraction(1),) if n == 0 else ()
    out: list = []
    for first in range(1, n - (k - 1) + 1):
        rest = _composition_poly(n - first, k - 1)
        if not rest:
            continue
        head = [Fraction(c, math.factorial(first + 1)) for c in _rising_poly(first + 1)]
        term = polynomial_mul(head, rest)
        if len(term) > len(out):
            out += [Fraction(0)] * (len(term) - len(out))
        for i, c in enumerate(term):
            out[i] += c
    return tuple(out)


@lru_cache(maxsize=None)
def _H_row(n: int, k: int) -> tuple[int, ...]:
    poly = _composition_poly(n, k)
    scale = math.factorial(n + k)
    row = [c * scale for c in poly]
    assert all(c.denominator == 1 for c in row)
    return tuple(int(c) for c in row)


def H_coeff(l: int, n: int, k: int) -> int:
    """H_l(n, k); zero unless k <= l <= n + k."""
    if n < 1 or k < 1 or l < 0:
        return 0
    row = _H_row(n, k)
    return row[l] if l < len(row) else 0


def H_coeff_enumerated(l: int, n: int, k: int) -> int:
    """H_l(n, k) by brute enumeration of both nested compositions (small n only)."""
    total = 0
    for parts in _compositions(n, k, 1, n):
        mult = multinomial([p + 1 for p in parts])
        inner = 0
        for ls in _compositions(l, k, 1, None, caps=[p + 1 for p in parts]):
            prod = 1
            for p, li in zip(parts, ls):
                prod *= stirling1_unsigned(p + 1, li)
            inner += prod
        total += mult * inner
    return total


def _compositions(total: int, parts: int, lo: int, hi: int | None, caps=None):
    """Yield tuples of ``parts`` integers in [lo, hi or caps[i]] summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    idx = 0 if caps is None else len(caps) - parts
    top = caps[idx] if caps is not None else hi
    top = min(top, total - lo * (parts - 1))
    for first in range(lo, top + 1):
        for rest in _compositions(total - first, parts - 1, lo, hi, caps):
            yield (first,) + rest


def bell_binomial(n: int, k: int, N: int) -> Fraction:
    """B_{n,k}(1! C(N,2), 2! C(N,3), ...)."""
    return bell_partial(n, k, _h_derivs(n, N))


def bell_binomial_compositions(n: int, k: int, N: int) -> Fraction:
    """n!/k! times the sum of prod C(N, n_i + 1) over compositions with 1 <= n_i <= N-1."""
    total = 0
    for parts in _compositions(n, k, 1, N - 1):
        prod = 1
        for p in parts:
            prod *= math.comb(N, p + 1)
        total += prod
    return Fraction(math.factorial(n) * total, math.factorial(k))


def bell_binomial_H(n: int, k: int, N: int) -> Fraction:
    """The same Bell value as a polynomial in N with H coefficients."""
    acc = sum(((-1) ** (n - l + k) * H_coeff(l, n, k) * N**l for l in range(k, n + k + 1)), 0)
    return Fraction(math.factorial(n) * acc, math.factorial(k) * math.factorial(n + k))


@lru_cache(maxsize=None)
def G_coeff(n: int, l: int, q: int) -> Fraction:
    """G(n, l, q) = sum_k (-1)^(n-k) (q)_k / (k! (n+k)!) H_{l+k}(n, k); 0 off range."""
    if l < 0 or l > n:
        return Fraction(0)
    return sum(
        (
            Fraction((-1) ** (n - k) * pochhammer(q, k) * H_coeff(l + k, n, k), math.factorial(k) * math.factorial(n + k))
            for k in range(1, n + 1)
        ),
        Fraction(0),
    )


def f_deriv_via_G(n: int, q: int, N: int) -> Fraction:
    """f_q^(n)(1)/n! rebuilt as sum_l (-1)^l G(n, l, q) N^(l-q)."""
    if n == 0:
        return Fraction(1, N**q)
    return sum(((-1) ** l * G_coeff(n, l, q) * Fraction(N) ** (l - q) for l in range(n + 1)), Fraction(0))
