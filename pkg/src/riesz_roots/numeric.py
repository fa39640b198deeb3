"""Certified fixed-point numerics used as an independent oracle.

``HighPrecisionReal`` is a decimal fixed-point number ``mantissa * 10**exp``
with an error bound in units of the last place. Every operation returns a
bound that dominates the true error of the result, so an exact value can be
checked by interval containment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import as_rational
from .combinatorics import pochhammer
from .errors import DomainError, NoConvergenceCertificate

GUARD_DIGITS = 10


def _round_div(a: int, b: int) -> int:
    """Nearest integer to a/b (b > 0)."""
    q, rem = divmod(2 * a + b, 2 * b)
    return q


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class HighPrecisionReal:
    mantissa: int
    decimal_exponent: int
    error_bound: int = 0

    def __post_init__(self):
        if self.error_bound < 0:
            raise ValueError("error bound must be >= 0")

    # construction / conversion

    @classmethod
    def from_rational(cls, q, digits: int) -> HighPrecisionReal:
        q = as_rational(q)
        scaled = q * 10**digits
        m = _round_div(scaled.numerator, scaled.denominator)
        return cls(m, -digits, 0 if scaled == m else 1)

    @property
    def digits(self) -> int:
        return -self.decimal_exponent

    @property
    def ulp(self) -> Fraction:
        return Fraction(10) ** self.decimal_exponent

    @property
    def value(self) -> Fraction:
        return self.mantissa * self.ulp

    @property
    def radius(self) -> Fraction:
        return self.error_bound * self.ulp

    def interval(self) -> tuple[Fraction, Fraction]:
        return self.value - self.radius, self.value + self.radius

    def contains(self, q) -> bool:
        return abs(as_rational(q) - self.value) <= self.radius

    def __float__(self):
        return float(self.value)

    def to_decimal_string(self, places: int | None = None) -> str:
        places = self.digits if places is None else places
        x = self.rescale(places) if places < self.digits else self
        sign = "-" if x.mantissa < 0 else ""
        digits = str(abs(x.mantissa)).rjust(x.digits + 1, "0")
        if x.digits == 0:
            return sign + digits
        return f"{sign}{digits[:-x.digits]}.{digits[-x.digits:]}"

    def rescale(self, digits: int) -> HighPrecisionReal:
        """Change the number of fractional digits, rounding when coarsening."""
        k = self.digits - digits
        if k == 0:
            return self
        if k < 0:
            return HighPrecisionReal(self.mantissa * 10**-k, -digits, self.error_bound * 10**-k)
        scale = 10**k
        m = _round_div(self.mantissa, scale)
        exact = m * scale == self.mantissa
        err = _ceil(Fraction(2 * self.error_bound + (0 if exact else scale), 2 * scale))
        return HighPrecisionReal(m, -digits, err)

    # arithmetic

    def _coerce(self, other) -> HighPrecisionReal:
        if isinstance(other, HighPrecisionReal):
            return other
        return HighPrecisionReal.from_rational(as_rational(other), self.digits)

    def _align(self, other):
        other = self._coerce(other)
        d = min(self.digits, other.digits)
        return self.rescale(d), other.rescale(d)

    def __add__(self, other):
        a, b = self._align(other)
        return HighPrecisionReal(a.mantissa + b.mantissa, a.decimal_exponent, a.error_bound + b.error_bound)

    __radd__ = __add__

    def __neg__(self):
        return HighPrecisionReal(-self.mantissa, self.decimal_exponent, self.error_bound)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, q) -> HighPrecisionReal:
        """Multiply by an exact rational."""
        q = as_rational(q)
        exact = self.mantissa * q
        m = _round_div(exact.numerator, exact.denominator)
        err = _ceil(self.error_bound * abs(q) + (0 if exact == m else Fraction(1, 2)))
        return HighPrecisionReal(m, self.decimal_exponent, err)

    def __mul__(self, other):
        if not isinstance(other, HighPrecisionReal):
            return self.scale(other)
        a, b = self._align(other)
        d = a.digits
        prod = a.mantissa * b.mantissa
        prop = abs(a.mantissa) * b.error_bound + abs(b.mantissa) * a.error_bound + a.error_bound * b.error_bound
        scale = 10**d
        m = _round_div(prod, scale)
        exact = m * scale == prod and prop == 0
        err = _ceil(Fraction(2 * prop + (0 if exact else scale), 2 * scale))
        return HighPrecisionReal(m, -d, err)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if not isinstance(other, HighPrecisionReal):
            return self.scale(1 / as_rational(other))
        a, b = self._align(other)
        if abs(b.mantissa) <= b.error_bound:
            raise ZeroDivisionError("divisor interval contains zero")
        x, ex = abs(a.mantissa), a.error_bound
        y, ey = abs(b.mantissa), b.error_bound
        # |X/Y - x/y| <= (ex*y + x*ey) / (y*(y - ey)); the quotient carries 10^d ulps per unit
        prop = Fraction((ex * y + x * ey) * 10**a.digits, y * (y - ey))
        q = Fraction(a.mantissa * 10**a.digits, b.mantissa)
        m = _round_div(q.numerator, q.denominator)
        err = _ceil(prop + (0 if q == m else Fraction(1, 2)))
        return HighPrecisionReal(m, a.decimal_exponent, err)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        e = int(e)
        if e < 0:
            return 1 / (self ** (-e))
        result = HighPrecisionReal(10**self.digits, self.decimal_exponent, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def sqrt(self) -> HighPrecisionReal:
        if self.mantissa - self.error_bound <= 0:
            raise DomainError("sqrt of an interval that reaches zero")
        d = self.digits
        root = math.isqrt(self.mantissa * 10**d)
        # |sqrt(X) - sqrt(x)| <= ex / sqrt(x); floor of isqrt adds < 1 ulp
        err = _ceil(Fraction(self.error_bound * 10**d, root)) + 1
        return HighPrecisionReal(root, -d, err)


# ------------------------------------------------------------------ pi, sin, cos


def _arctan_inv(x: int, scale: int) -> tuple[int, int]:
    """scale * arctan(1/x) by the Gregory series; returns (value, error bound)."""
    x2 = x * x
    power = scale // x
    total, k, terms = 0, 0, 0
    while power:
        term = power // (2 * k + 1)
        total += term if k % 2 == 0 else -term
        power //= x2
        k += 1
        terms += 1
    return total, 3 * terms + 3


@lru_cache(maxsize=64)
def hp_pi(d: int) -> HighPrecisionReal:
    """pi to d fractional digits (Machin's formula)."""
    if d < 1:
        raise ValueError("need at least one digit")
    p = d + GUARD_DIGITS
    scale = 10**p
    a5, e5 = _arctan_inv(5, scale)
    a239, e239 = _arctan_inv(239, scale)
    raw = HighPrecisionReal(16 * a5 - 4 * a239, -p, 16 * e5 + 4 * e239)
    return raw.rescale(d)


def _taylor_sin_cos(r: HighPrecisionReal, want_sin: bool) -> HighPrecisionReal:
    """sin or cos of a reduced argument |r| < 1 at r's precision."""
    d = r.digits
    scale = 10**d
    R = r.mantissa
    r2 = _round_div(R * R, scale)
    if want_sin:
        term, i = R, 1
    else:
        term, i = scale, 0
    total, steps = term, 0
    while term:
        # next term: -term * r^2 / ((i+1)(i+2))
        term = -_round_div(term * r2, scale * (i + 1) * (i + 2))
        total += term
        i += 2
        steps += 1
    # each step rounds twice and inherits a shrinking fraction of earlier error;
    # the omitted tail is below one ulp
    err = r.error_bound + 2 * steps * (steps + 1) + 4
    return HighPrecisionReal(total, -d, err)


def _sin_quadrant(x: HighPrecisionReal, shift: int, d: int) -> HighPrecisionReal:
    p = d + GUARD_DIGITS + max(0, len(str(abs(x.mantissa))) - x.digits)
    x = x.rescale(p)
    half_pi = hp_pi(p + 5).scale(Fraction(1, 2)).rescale(p + 5)
    j = round(x.value / half_pi.value)
    r = (x.rescale(p + 5) - half_pi.scale(j)).rescale(p)
    quadrant = (j + shift) % 4
    val = _taylor_sin_cos(r, want_sin=quadrant % 2 == 0)
    if quadrant >= 2:
        val = -val
    return val.rescale(d)


def hp_sin(x, d: int) -> HighPrecisionReal:
    """sin(x) to d fractional digits, with the input error propagated."""
    if not isinstance(x, HighPrecisionReal):
        x = HighPrecisionReal.from_rational(x, d + GUARD_DIGITS)
    return _sin_quadrant(x, 0, d)


def hp_cos(x, d: int) -> HighPrecisionReal:
    if not isinstance(x, HighPrecisionReal):
        x = HighPrecisionReal.from_rational(x, d + GUARD_DIGITS)
    return _sin_quadrant(x, 1, d)


def hp_sin_pi(t, d: int) -> HighPrecisionReal:
    """sin(pi * t) for rational t."""
    t = as_rational(t)
    return hp_sin(hp_pi(d + 2 * GUARD_DIGITS).scale(t), d)


def hp_cos_pi(t, d: int) -> HighPrecisionReal:
    t = as_rational(t)
    return hp_cos(hp_pi(d + 2 * GUARD_DIGITS).scale(t), d)


# ------------------------------------------------------------------ direct sums


def _real_power(x: HighPrecisionReal, e: Fraction) -> HighPrecisionReal:
    """x**e for integer or half-integer e."""
    if e.denominator == 1:
        return x ** int(e)
    if e.denominator == 2:
        return x.sqrt() ** e.numerator
    raise DomainError("only integer and half-integer exponents are supported")


def _certified(compute, d: int) -> HighPrecisionReal:
    """Run compute(p) at increasing working precision until the bound meets 10^-(d-10)."""
    tol = Fraction(1, 10 ** (d - GUARD_DIGITS))
    extra = 0
    for _ in range(8):
        val = compute(d + GUARD_DIGITS + extra)
        if val.radius <= tol / 2:
            return val.rescale(d)
        extra += 20
    raise NoConvergenceCertificate("could not certify the requested precision")


def L_direct(s, N: int, d: int) -> HighPrecisionReal:
    """2^(-s) N sum_{k=1}^{N-1} sin(pi k / N)^(-s)."""
    s = as_rational(s)
    if s == 0:
        raise DomainError("s must be nonzero")
    if N < 2:
        raise DomainError("N must be >= 2")

    def compute(p):
        total = HighPrecisionReal(0, -p, 0)
        # sin(pi k/N) = sin(pi (N-k)/N): pair the terms
        for k in range(1, N // 2 + 1):
            term = _real_power(hp_sin_pi(Fraction(k, N), p), -s)
            total = total + (term if 2 * k == N else term.scale(2))
        return total.scale(N) * _real_power(HighPrecisionReal.from_rational(2, p), -s)

    return _certified(compute, d)


def M_direct(s, N: int, r, d: int) -> HighPrecisionReal:
    """N sum_{k=1}^{N-1} (1 - 2 r cos(2 pi k/N) + r^2)^(-s/2)."""
    s = as_rational(s)
    r = as_rational(r)
    if not 0 <= r < 1:
        raise DomainError("r must lie in [0, 1)")
    if N < 2:
        raise DomainError("N must be >= 2")

    def compute(p):
        total = HighPrecisionReal(0, -p, 0)
        for k in range(1, N):
            c = hp_cos_pi(Fraction(2 * k, N), p)
            base = c.scale(-2 * r) + (1 + r * r)
            total = total + _real_power(base, -s / 2)
        return total.scale(N)

    return _certified(compute, d)


# ------------------------------------------------------------------ hypergeometric


def _nonpositive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def hyp2f1_trunc(a, b, c, z, d: int, max_terms: int = 20000) -> HighPrecisionReal:
    """2F1(a, b; c; z) for rational arguments, |z| < 1, with a certified tail bound."""
    a, b, c, z = (as_rational(v) for v in (a, b, c, z))
    if abs(z) >= 1:
        raise DomainError("need |z| < 1")
    stops = [int(-v) for v in (a, b) if _nonpositive_int(v)]
    terminates = min(stops) if stops else None
    if _nonpositive_int(c) and (terminates is None or terminates >= int(-c) + 1):
        raise DomainError("c is a non-positive integer reached before the series terminates")
    target = Fraction(1, 10 ** (d + 2))
    A, B, C = abs(a), abs(b), abs(c)
    total, term = Fraction(0), Fraction(1)
    n = 0
    while True:
        if terminates is not None and n > terminates:
            return HighPrecisionReal.from_rational(total, d)
        if terminates is None and n > C:
            # |t_{j+1}/t_j| <= (j+A)(j+B)/(j(j-C)) |z| for j >= n, and this bound decreases in j
            rho = (n + A) * (n + B) / (n * (n - C)) * abs(z)
            if rho < 1:
                tail = abs(term) / (1 - rho)
                if tail <= target:
                    x = HighPrecisionReal.from_rational(total, d)
                    return HighPrecisionReal(x.mantissa, x.decimal_exponent, x.error_bound + _ceil(tail * 10**d) + 1)
        if n >= max_terms:
            raise NoConvergenceCertificate(f"tail bound not reached after {max_terms} terms")
        total += term
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        n += 1


def hyp2f1_poly(a, b, c, z) -> Fraction:
    """Exact value of a terminating 2F1 (a or b a non-positive integer)."""
    a, b, c, z = (as_rational(v) for v in (a, b, c, z))
    stops = [int(-v) for v in (a, b) if _nonpositive_int(v)]
    if not stops:
        raise DomainError("series does not terminate")
    total, term = Fraction(0), Fraction(1)
    for n in range(min(stops) + 1):
        total += term
        if n < min(stops):
            if c + n == 0:
                raise DomainError("c hits zero before the series terminates")
            term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * z
    return total


def G_n_eval(s: int, n: int, r) -> Fraction:
    """G_n(2m; r) via the degree m-1 polynomial in 1 - r^2."""
    if s <= 0 or s % 2:
        raise DomainError("s must be a positive even integer")
    r = as_rational(r)
    if not 0 < r < 1:
        raise DomainError("r must lie in (0, 1)")
    m = s // 2
    pref = G_prefactor(m)
    return (1 - r * r) ** (1 - 2 * m) * pref * r**n * hyp2f1_poly(1 - m, n + 1 - m, 2 - 2 * m, 1 - r * r)


def G_prefactor(m: int) -> Fraction:
    """2^(2m-2) Gamma(m-1/2) / (sqrt(pi) Gamma(m)) = (2m-2)! / ((m-1)!)^2."""
    return Fraction(math.factorial(2 * m - 2), math.factorial(m - 1) ** 2)


def G_n_euler(s: int, n: int, r) -> Fraction:
    """G_n(2m; r) = (1-r^2)^(1-s) (s/2)_n/n! r^n 2F1(1-s/2, n+1-s/2; n+1; r^2), exact."""
    r = as_rational(r)
    m = s // 2
    return (1 - r * r) ** (1 - s) * Fraction(pochhammer(m, n), math.factorial(n)) * r**n * hyp2f1_poly(
        1 - m, n + 1 - m, n + 1, r * r
    )


def G_n_numeric(s, n: int, r, d: int) -> HighPrecisionReal:
    """G_n(s; r) = (s/2)_n/n! r^n 2F1(s/2, n+s/2; n+1; r^2) by truncated series."""
    s, r = as_rational(s), as_rational(r)
    lead = pochhammer(s / 2, n) / math.factorial(n) * r**n
    return hyp2f1_trunc(s / 2, n + s / 2, n + 1, r * r, d).scale(lead)


def prop1_partial_sum(s: int, N: int, r, V: int) -> Fraction:
    """N^2 G_0 - N (1-r)^(-s) + 2 N^2 sum_{nu=1}^V G_{nu N}, exact."""
    r = as_rational(r)
    acc = sum((G_n_eval(s, nu * N, r) for nu in range(1, V + 1)), Fraction(0))
    return N * N * G_n_eval(s, 0, r) - N * (1 - r) ** (-s) + 2 * N * N * acc


def prop1_tail_majorant(s: int, N: int, r, V: int) -> Fraction:
    """Upper bound for 2 N^2 sum_{nu > V} G_{nu N}(s; r).

    Uses G_n <= c_s(r) Gamma(n+s/2)/Gamma(n+1-s/2) r^n with the crude but rigorous
    c_s(r) <= 1 / (Gamma(s/2)^2 (1 - r^2)^s), then a geometric bound on the tail.
    """
    r = as_rational(r)
    m = s // 2
    n0 = (V + 1) * N
    if n0 <= m:
        raise DomainError("tail bound needs (V+1) N > s/2")
    c_bound = Fraction(1, math.factorial(m - 1) ** 2) / (1 - r * r) ** s

    def ratio_poly(n):  # Gamma(n+m)/Gamma(n+1-m)
        return pochhammer(n + 1 - m, 2 * m - 1)

    first = ratio_poly(n0) * r**n0
    rho = Fraction(ratio_poly(n0 + N), ratio_poly(n0)) * r**N
    if rho >= 1:
        raise NoConvergenceCertificate("geometric tail ratio not below 1")
    return 2 * N * N * c_bound * first / (1 - rho)


# ------------------------------------------------------------------ Gegenbauer


def gegenbauer_coefficients(n: int, lam) -> list[Fraction]:
    lam = as_rational(lam)
    return [
        pochhammer(lam, l) * pochhammer(lam, n - l) / (math.factorial(l) * math.factorial(n - l)) for l in range(n + 1)
    ]


def gegenbauer_at_one(n: int, lam) -> Fraction:
    """C_n^(lam)(1) = (2 lam)_n / n!."""
    return pochhammer(2 * as_rational(lam), n) / math.factorial(n)


def gegenbauer_C(n: int, lam, phi, d: int) -> HighPrecisionReal:
    """C_n^(lam)(cos phi) from the cosine-sum representation."""
    lam = as_rational(lam)
    if lam == 0:
        raise DomainError("lambda must be nonzero")
    if not isinstance(phi, HighPrecisionReal):
        phi = HighPrecisionReal.from_rational(phi, d + GUARD_DIGITS)
    p = d + GUARD_DIGITS
    total = HighPrecisionReal(0, -p, 0)
    for l, coef in enumerate(gegenbauer_coefficients(n, lam)):
        j = n - 2 * l
        cos_j = HighPrecisionReal(10**p, -p, 0) if j == 0 else hp_cos(phi.scale(j), p)
        total = total + cos_j.scale(coef)
    return total.rescale(d)


def gegenbauer_C_pi(n: int, lam, t, d: int) -> HighPrecisionReal:
    """C_n^(lam)(cos(pi t)) for rational t; the angle is exact so only cosines are rounded."""
    lam, t = as_rational(lam), as_rational(t)
    p = d + GUARD_DIGITS
    total = HighPrecisionReal(0, -p, 0)
    for l, coef in enumerate(gegenbauer_coefficients(n, lam)):
        total = total + hp_cos_pi((n - 2 * l) * t, p).scale(coef)
    return total.rescale(d)


def A_n_exact(n: int, s, N: int) -> Fraction:
    """N^2 sum_{l: N | n-2l} (lam)_l (lam)_{n-l}/(l!(n-l)!) - N C_n(1), lam = s/2."""
    lam = as_rational(s) / 2
    coeffs = gegenbauer_coefficients(n, lam)
    acc = sum((c for l, c in enumerate(coeffs) if (n - 2 * l) % N == 0), Fraction(0))
    return N * N * acc - N * gegenbauer_at_one(n, lam)


def A_n_parity_form(n: int, s, N: int) -> Fraction:
    """The same quantity from the separate even-n and odd-n formulas."""
    lam = as_rational(s) / 2

    def w(i, j):
        return pochhammer(lam, i) * pochhammer(lam, j) / (math.factorial(i) * math.factorial(j))

    at_one = gegenbauer_at_one(n, lam)
    if n % 2 == 0:
        nu = n // 2
        acc = sum((w(nu - l, nu + l) for l in range(1, nu + 1) if (2 * l) % N == 0), Fraction(0))
        return w(nu, nu) * N * N - at_one * N + 2 * N * N * acc
    nu = (n - 1) // 2
    acc = sum((w(nu - l, nu + 1 + l) for l in range(nu + 1) if (2 * l + 1) % N == 0), Fraction(0))
    return 2 * N * N * acc - at_one * N


def A_n_check(n: int, s, N: int, d: int) -> tuple[HighPrecisionReal, HighPrecisionReal, bool]:
    """Numeric N sum_k C_n^(s/2)(cos 2 pi k/N) against the exact divisibility form."""
    lam = as_rational(s) / 2
    p = d + GUARD_DIGITS
    total = HighPrecisionReal(0, -p, 0)
    for k in range(1, N):
        total = total + gegenbauer_C_pi(n, lam, Fraction(2 * k, N), p)
    lhs = total.scale(N).rescale(d)
    exact = A_n_exact(n, s, N)
    rhs = HighPrecisionReal.from_rational(exact, d)
    agree = lhs.contains(exact) and lhs.radius <= Fraction(1, 10 ** (d - GUARD_DIGITS))
    return lhs, rhs, agree
