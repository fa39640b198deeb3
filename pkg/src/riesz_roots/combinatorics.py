"""Binomials, Pochhammer symbols, Stirling and Eulerian numbers, Bell polynomials."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Sequence

from .algebra import PowerSeries, as_rational, series_int_pow
from .errors import InsufficientVariables


class CombCache:
    """Memo tables for Stirling, Eulerian and binomial values.

    Entries are inserted only after they are fully computed, under a lock,
    so concurrent readers never see partial rows.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._stirling_rows: list[tuple[int, ...]] = [(1,)]
        self._eulerian: dict[tuple[int, int], int] = {}
        self._binomial: dict[tuple[int, int], int] = {}

    def stirling_row(self, n: int) -> tuple[int, ...]:
        rows = self._stirling_rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(rows) <= n:
                prev = rows[-1]
                j = len(rows) - 1
                # s(j+1, k) = s(j, k-1) - j*s(j, k)
                row = [0] * (j + 2)
                for k in range(j + 2):
                    left = prev[k - 1] if k >= 1 else 0
                    right = prev[k] if k <= j else 0
                    row[k] = left - j * right
                rows.append(tuple(row))
        return rows[n]

    def eulerian(self, n: int, k: int) -> int:
        key = (n, k)
        hit = self._eulerian.get(key)
        if hit is not None:
            return hit
        value = _eulerian_sum(n, k)
        with self._lock:
            self._eulerian[key] = value
        return value

    def binomial(self, n: int, k: int) -> int:
        key = (n, k)
        hit = self._binomial.get(key)
        if hit is not None:
            return hit
        value = math.comb(n, k)
        with self._lock:
            self._binomial[key] = value
        return value


_CACHE = CombCache()


def binomial(n, k: int):
    """Binomial coefficient; ``n`` may be any rational, ``k`` an integer.

    Zero for ``k < 0`` and, for integer ``n >= 0``, for ``k > n``.
    """
    k = int(k)
    if k < 0:
        return 0
    if isinstance(n, int) or (isinstance(n, Fraction) and n.denominator == 1):
        n = int(n)
        if n >= 0:
            return 0 if k > n else _CACHE.binomial(n, k)
    return falling_factorial(n, k) / math.factorial(k)


def pochhammer(x, n: int):
    """Rising factorial ``x (x+1) ... (x+n-1)``."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    if isinstance(x, int):
        out = 1
    else:
        x = as_rational(x)
        out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def falling_factorial(x, n: int):
    """``x (x-1) ... (x-n+1)``."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    if isinstance(x, int):
        out = 1
    else:
        x = as_rational(x)
        out = Fraction(1)
    for i in range(n):
        out *= x - i
    return out


def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling number of the first kind: ``[x^k] x(x-1)...(x-n+1)``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _CACHE.stirling_row(n)[k]


def stirling1_unsigned(n: int, k: int) -> int:
    return abs(stirling1_signed(n, k))


def _eulerian_sum(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k >= n:
        return 0
    return sum((-1) ** j * math.comb(n + 1, j) * (k + 1 - j) ** n for j in range(k + 1))


def eulerian(n: int, k: int) -> int:
    """Eulerian number <n, k> by the explicit alternating sum.

    <0, 0> = 1 and <n, k> = 0 for k < 0 or k >= n >= 1.
    """
    if n < 0:
        raise ValueError("eulerian needs n >= 0")
    return _CACHE.eulerian(n, k)


def multinomial(parts: Sequence[int]) -> int:
    out, total = 1, 0
    for p in parts:
        if p < 0:
            raise ValueError("multinomial parts must be >= 0")
        total += p
        out *= math.comb(total, p)
    return out


def bell_partial(n: int, k: int, xs: Sequence) -> Fraction:
    """Partial Bell polynomial ``B_{n,k}(x_1, x_2, ...)``.

    Uses the generating relation: ``n!/k!`` times the ``t^n`` coefficient of
    ``(sum_m x_m t^m / m!)^k``.
    """
    if n < 0 or k < 0:
        raise ValueError("bell_partial needs n, k >= 0")
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    if k > n:
        return Fraction(0)
    need = n - k + 1
    if len(xs) < need:
        raise InsufficientVariables(f"B_{{{n},{k}}} needs {need} variables, got {len(xs)}")
    coeffs = [Fraction(0)] * (n + 1)
    fact = 1
    for m in range(1, need + 1):
        fact *= m
        coeffs[m] = as_rational(xs[m - 1]) / fact
    return power_coefficient(coeffs, k, n) * math.factorial(n) / math.factorial(k)


def power_coefficient(coeffs: Sequence[Fraction], k: int, n: int) -> Fraction:
    """``[t^n] (sum_{m>=1} coeffs[m] t^m)^k`` for a series with zero constant term."""
    # factor t out: (t * u(t))^k = t^k u(t)^k with u_j = coeffs[j+1]
    order = n - k
    u = PowerSeries([coeffs[j + 1] if j + 1 < len(coeffs) else 0 for j in range(order + 1)], order)
    return series_int_pow(u, k)[order]
