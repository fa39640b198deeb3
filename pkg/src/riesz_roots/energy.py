"""Exact Riesz s-energy of the N-th roots of unity for even integer s.

For s = -2m the energy is a binomial sum with a divisibility correction.
For s = 2m it is a polynomial in N,

    L_{2m}(N) = sum_{nu=0}^{2m} beta_nu(m) N^(1+nu),

and the coefficients are produced three independent ways: the X-coefficient
ledger obtained from the r -> 1 limit of the modified energy M_{2m}(N; r),
products of Bernoulli numbers with generalized Bernoulli values, and the
alpha * zeta expansion carried out in exact pi-power arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import PiValue, as_rational
from .bernoulli import alpha_coeff, bernoulli_number, gen_bernoulli_poly, zeta_even
from .combinatorics import binomial, pochhammer
from .errors import DomainError, IndexOutOfRange, PiResidue
from .lemmas import G_coeff, b_coeff, g_coeff, shifted_stirling


def _gamma(n: int) -> int:
    """Gamma at a positive integer."""
    if n < 1:
        raise ValueError(f"gamma argument must be a positive integer, got {n}")
    return math.factorial(n - 1)


@dataclass(frozen=True)
class EnergyPolynomial:
    """beta[nu] is the coefficient of N^(1+nu) in L_{2m}(N)."""

    m: int
    beta: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.beta) != 2 * self.m + 1:
            raise ValueError("beta must have 2m+1 entries")

    def evaluate(self, N) -> Fraction:
        N = as_rational(N)
        return sum((b * N ** (1 + nu) for nu, b in enumerate(self.beta)), Fraction(0))

    def as_strings(self) -> list[str]:
        return [str(b) for b in self.beta]


# ---------------------------------------------------------------- s = -2m


def L_exact_negative(m: int, N: int) -> Fraction:
    """L_{-2m}(N) = C(2m,m) N^2 + 2 N^2 sum_{k<=m, N|k} (-1)^k C(2m, m-k)."""
    if m < 1 or N < 2:
        raise DomainError("need m >= 1 and N >= 2")
    corr = sum((-1) ** k * math.comb(2 * m, m - k) for k in range(N, m + 1, N))
    return Fraction(math.comb(2 * m, m) * N * N + 2 * N * N * corr)


def V_negative(m: int) -> int:
    """Leading constant V_{-2m} = C(2m, m)."""
    return math.comb(2 * m, m)


# ---------------------------------------------------------------- coefficient ledger


def _check_primary(k, q, p, m):
    if m < 1 or not (0 <= k <= m - 1 and 0 <= q <= k and 0 <= p <= k - q):
        raise IndexOutOfRange(f"X({k},{q},{p};{m}) outside 0<=k<m, 0<=q<=k, 0<=p<=k-q")


@lru_cache(maxsize=None)
def X_primary(k: int, q: int, p: int, m: int) -> Fraction:
    _check_primary(k, q, p, m)
    e = 2 * (2 * m - 1 - k)
    num = 2 * _gamma(e + q + 1) * (-1) ** p * shifted_stirling(k, p + q, 1 - m) * b_coeff(p + q, p)
    den = _gamma(m) * _gamma(m - k) * math.factorial(k) * math.factorial(2 * m + q - k) * 2 ** (q + 1 + e)
    return num / den


@lru_cache(maxsize=None)
def X_secondary(k: int, q: int, p: int, n: int, l: int, m: int) -> Fraction:
    _check_primary(k, q, p, m)
    if not 0 <= n <= 2 * m + q - k:
        raise IndexOutOfRange(f"n={n} outside 0..{2 * m + q - k}")
    G = G_coeff(n, l, q + 1)
    if not G:
        return Fraction(0)
    e = 2 * (2 * m - 1 - k)
    num = 2 * _gamma(e + q - n + 1) * (-1) ** (p + n + l) * shifted_stirling(k, p + q, 1 - m) * b_coeff(p + q, p)
    den = _gamma(m) * _gamma(m - k) * math.factorial(k) * math.factorial(2 * m + q - k - n)
    return num * G * Fraction(2) ** (n - q - 1 - e) / den


def constant_N2_term(m: int) -> Fraction:
    """Coefficient c with -c N^2 being the standalone N^2 term of M_{2m}(N)."""
    return sum(
        (
            Fraction(
                _gamma(2 * (m + k)) * pochhammer(1 - m, m - 1 - k),
                _gamma(m) * _gamma(m - k) * math.factorial(k) * math.factorial(m + k) * 4 ** (m + k),
            )
            for k in range(m)
        ),
        Fraction(0),
    )


def _Xs(k, q, p, n, l, m):
    return X_secondary(k, k - q, p, n, l, m)


def _beta_low(nu: int, m: int) -> Fraction:
    acc = sum((X_primary(k, q, nu, m) for k in range(nu, m) for q in range(k - nu + 1)), Fraction(0))
    for p in range(nu + 1):
        for q in range(p, m):
            for k in range(q, m):
                for n in range(nu - p, 2 * m - q + 1):
                    acc += _Xs(k, q, p, n, nu - p, m)
    return acc


def _beta_mid(m: int) -> Fraction:
    acc = Fraction(0)
    for p in range(m):
        for q in range(p, m):
            for k in range(q, m):
                for n in range(m - p, 2 * m - q + 1):
                    acc += _Xs(k, q, p, n, m - p, m)
    return acc


def _secondary_block(nu: int, m: int) -> Fraction:
    """nu in [m, 2m-1]: p runs from nu-m."""
    acc = Fraction(0)
    for p in range(max(nu - m, 0), m):
        for q in range(p, m):
            for k in range(q, m):
                for n in range(nu - p, 2 * m - q + 1):
                    acc += _Xs(k, q, p, n, nu - p, m)
    return acc


def _upper_block(nu: int, m: int) -> Fraction:
    """nu in [m+1, 2m]: p below nu-m, with q capped at 2m-nu+p."""
    acc = Fraction(0)
    for p in range(nu - m):
        for q in range(p, 2 * m - nu + p + 1):
            for k in range(q, m):
                for n in range(nu - p, 2 * m - q + 1):
                    acc += _Xs(k, q, p, n, nu - p, m)
    return acc


def _beta_high(nu: int, m: int) -> Fraction:
    return _secondary_block(nu, m) + _upper_block(nu, m)


def _beta_top(m: int) -> Fraction:
    return sum((_Xs(k, p, p, 2 * m - p, 2 * m - p, m) for p in range(m) for k in range(p, m)), Fraction(0))


def _beta_one(m: int) -> Fraction:
    acc = -constant_N2_term(m)
    acc += sum((X_primary(k, q, 1, m) for k in range(1, m) for q in range(k)), Fraction(0))
    for p in range(2):
        for q in range(p, m):
            for k in range(q, m):
                for n in range(1 - p, 2 * m - q + 1):
                    acc += _Xs(k, q, p, n, 1 - p, m)
    return acc


M2_BETA = (Fraction(-1, 12), Fraction(0), Fraction(1, 12))


def ledger_parts(m: int) -> dict[str, tuple[Fraction, ...]]:
    """The reordered ledger split into its five groups, each as coefficients of N^(1+nu).

    Keys: "standalone" (the -c N^2 term), "primary", "low" (secondary, nu < m),
    "middle" (secondary, m <= nu < 2m) and "upper" (secondary, m < nu <= 2m).
    """
    if m < 2:
        raise DomainError("the grouped ledger needs m >= 2")
    size = 2 * m + 1
    parts = {key: [Fraction(0)] * size for key in ("standalone", "primary", "low", "middle", "upper")}
    parts["standalone"][1] = -constant_N2_term(m)
    for nu in range(m):
        parts["primary"][nu] = sum(
            (X_primary(k, q, nu, m) for k in range(nu, m) for q in range(k - nu + 1)), Fraction(0)
        )
        parts["low"][nu] = sum(
            (
                _Xs(k, q, p, n, nu - p, m)
                for p in range(nu + 1)
                for q in range(p, m)
                for k in range(q, m)
                for n in range(nu - p, 2 * m - q + 1)
            ),
            Fraction(0),
        )
    for nu in range(m, 2 * m):
        parts["middle"][nu] = _secondary_block(nu, m)
    for nu in range(m + 1, 2 * m + 1):
        parts["upper"][nu] = _upper_block(nu, m)
    return {key: tuple(v) for key, v in parts.items()}


@lru_cache(maxsize=None)
def beta_coeffs(m: int) -> EnergyPolynomial:
    """beta_nu(m) assembled branch by branch from the X ledger.

    m = 1 is the separately stated (N^3 - N)/12.
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    if m == 1:
        return EnergyPolynomial(1, M2_BETA)
    beta = []
    for nu in range(2 * m + 1):
        if nu == 1:
            beta.append(_beta_one(m))
        elif nu < m:
            beta.append(_beta_low(nu, m))
        elif nu == m:
            beta.append(_beta_mid(m))
        elif nu < 2 * m:
            beta.append(_beta_high(nu, m))
        else:
            beta.append(_beta_top(m))
    return EnergyPolynomial(m, tuple(beta))


def beta_unordered(m: int) -> EnergyPolynomial:
    """The same ledger summed in its original (k, q, n, p, l) order and binned by power of N."""
    if m < 1:
        raise DomainError("m must be >= 1")
    beta = [Fraction(0)] * (2 * m + 1)
    beta[1] -= constant_N2_term(m)
    for k in range(m):
        for q in range(k + 1):
            for p in range(k - q + 1):
                beta[p] += X_primary(k, q, p, m)
                for n in range(1, 2 * m + q - k + 1):
                    for l in range(n + 1):
                        beta[l + p] += X_secondary(k, q, p, n, l, m)
    return EnergyPolynomial(m, tuple(beta))


def beta_via_bernoulli(m: int) -> EnergyPolynomial:
    """beta_{2m-2n} = (-1)^(m-n-1) B_{2m-2n}/(2m-2n)! * (-1)^n B_{2n}^(2m)(m)/(2n)!."""
    if m < 1:
        raise DomainError("m must be >= 1")
    beta = [Fraction(0)] * (2 * m + 1)
    for n in range(m + 1):
        j = 2 * m - 2 * n
        left = (-1) ** ((m - n - 1) % 2) * bernoulli_number(j) / math.factorial(j)
        right = (-1) ** n * gen_bernoulli_poly(2 * n, 2 * m, m) / math.factorial(2 * n)
        beta[j] = left * right
    return EnergyPolynomial(m, tuple(beta))


def expansion_terms(m: int) -> list[PiValue]:
    """Terms 2 alpha_n(2m) zeta(2m-2n) / (2 pi)^(2m) for n = 0..m, still as PiValues."""
    s = 2 * m
    out = []
    for n in range(m + 1):
        prod = alpha_coeff(n, s) * zeta_even(s - 2 * n) * Fraction(2, 4**m)
        out.append(prod.divide_by_pi_power(s))
    return out


def beta_via_expansion(m: int) -> EnergyPolynomial:
    """Coefficients read off the alpha-zeta expansion; every pi power must cancel."""
    beta = [Fraction(0)] * (2 * m + 1)
    for n, term in enumerate(expansion_terms(m)):
        if not term.is_rational():
            raise PiResidue(f"pi survives in the N^{1 + 2 * m - 2 * n} term: {term}")
        beta[2 * m - 2 * n] = term.to_rational()
    return EnergyPolynomial(m, tuple(beta))


def L_via_expansion(m: int, N: int) -> Fraction:
    total = PiValue()
    for n, term in enumerate(expansion_terms(m)):
        total = total + term * Fraction(N) ** (1 + 2 * m - 2 * n)
    return total.to_rational()


def L_exact_positive(m: int, N: int) -> Fraction:
    if m < 1 or N < 2:
        raise DomainError("need m >= 1 and N >= 2")
    return beta_coeffs(m).evaluate(N)


def L_exact(s: int, N: int) -> Fraction:
    """Exact L_s(N) for a nonzero even integer s."""
    if s == 0 or s % 2:
        raise DomainError("s must be a nonzero even integer")
    return L_exact_positive(s // 2, N) if s > 0 else L_exact_negative(-s // 2, N)


# ---------------------------------------------------------------- modified energy


@dataclass(frozen=True)
class ModifiedTerm:
    k: int
    prefactor: Fraction  # N^2 Gamma(2m-k-1) / (Gamma(m) Gamma(m-k) k!)
    bracket_constant: Fraction  # -(1-m)_k
    pole_coefficients: tuple[Fraction, ...]  # 2 g(k, q; N, 1-m) on (1 - r^N)^(-q-1)
    power: int  # exponent of (1 - r^2)


@dataclass(frozen=True)
class ModifiedEnergyClosedForm:
    m: int
    N: int
    terms: tuple[ModifiedTerm, ...]

    def evaluate(self, r) -> Fraction:
        r = as_rational(r)
        if not 0 < r < 1:
            raise DomainError("r must lie in (0, 1)")
        w = 1 / (1 - r**self.N)
        total = Fraction(0)
        for t in self.terms:
            bracket = t.bracket_constant
            power = w
            for c in t.pole_coefficients:
                bracket += c * power
                power *= w
            total += t.prefactor * bracket * (1 - r * r) ** t.power
        return total - self.N * (1 - r) ** (-2 * self.m)


@lru_cache(maxsize=None)
def modified_closed_form(m: int, N: int) -> ModifiedEnergyClosedForm:
    if m < 1 or N < 1:
        raise DomainError("need m, N >= 1")
    terms = []
    for k in range(m):
        pre = Fraction(N * N * _gamma(2 * m - k - 1), _gamma(m) * _gamma(m - k) * math.factorial(k))
        terms.append(
            ModifiedTerm(
                k=k,
                prefactor=pre,
                bracket_constant=-Fraction(pochhammer(1 - m, k)),
                pole_coefficients=tuple(2 * g_coeff(k, q, N, 1 - m) for q in range(k + 1)),
                power=k + 1 - 2 * m,
            )
        )
    return ModifiedEnergyClosedForm(m, N, tuple(terms))


def M_closed(m: int, N: int, r) -> Fraction:
    """Exact M_{2m}(N; r) at rational r in (0, 1)."""
    r = as_rational(r)
    if not 0 < r < 1:
        raise DomainError("r must lie in (0, 1)")
    return modified_closed_form(m, N).evaluate(r)


def M2_closed(N: int, r) -> Fraction:
    """The s = 2 form (1 + r^N) N^2 / ((1 - r^2)(1 - r^N)) - N/(1 - r)^2."""
    r = as_rational(r)
    if not 0 < r < 1:
        raise DomainError("r must lie in (0, 1)")
    return (1 + r**N) * N * N / ((1 - r * r) * (1 - r**N)) - N / (1 - r) ** 2


# ---------------------------------------------------------------- identities


def collapse_coefficient(m: int, N: int) -> Fraction:
    """Coefficient of (1-r)^(-2m) produced by the ledger; equals N."""
    acc = Fraction(0)
    for k in range(m):
        acc += (
            Fraction(_gamma(2 * m - k - 1), _gamma(m - k) * math.factorial(k))
            * g_coeff(k, k, N, 1 - m)
            * Fraction(N) ** (-1 - k)
            * Fraction(2) ** (k + 1 - 2 * m)
        )
    return 2 * Fraction(N * N, _gamma(m)) * acc


def collapse_binomial_sum(m: int) -> int:
    """sum_{k<m} C(2m-2-k, m-1) 2^k, which equals 2^(2m-2)."""
    return sum(binomial(2 * m - 2 - k, m - 1) * 2**k for k in range(m))


def prop4_check(m: int) -> tuple[Fraction, Fraction, bool]:
    """Both sides of the Bernoulli identity for the leading coefficient beta_{2m}(m)."""
    if m < 1:
        raise DomainError("m must be >= 1")
    lhs = (-1) ** ((m - 1) % 2) * bernoulli_number(2 * m) / math.factorial(2 * m)
    rhs = Fraction(0)
    for nu in range(m):
        for p in range(nu + 1):
            rhs += (
                (-1) ** p
                * Fraction(2) ** (2 + nu - 2 * m)
                * Fraction(_gamma(2 * m - 1 - nu), _gamma(m) * math.factorial(nu) * _gamma(m - nu))
                * b_coeff(nu, p)
                * G_coeff(2 * m - p, 2 * m - p, nu - p + 1)
            )
    return lhs, rhs, lhs == rhs
