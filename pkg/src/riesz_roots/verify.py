"""Named verification suites behind ``riesz-roots verify``.

Each suite yields ``Check`` records. Fixed-value checks are deterministic;
the seed only drives randomized sampling in the appendix and oracle suites.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import energy, lemmas, numeric
from .algebra import PowerSeries, polynomial_mul, series_int_pow
from .combinatorics import bell_partial, binomial, pochhammer

log = logging.getLogger(__name__)

SUITES = ("prop1", "prop2", "prop3", "prop4", "appendix", "oracle")


@dataclass
class Check:
    suite: str
    id: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"suite": self.suite, "id": self.id, "passed": self.passed}
        if not self.passed:
            out["witness"] = {k: str(v) for k, v in self.witness.items()}
        return out


@dataclass
class Options:
    max_m: int = 6
    digits: int = 50
    seed: int = 0


def _tol(d: int) -> Fraction:
    return Fraction(1, 10 ** (d - numeric.GUARD_DIGITS))


def _numeric_match(exact: Fraction, approx: numeric.HighPrecisionReal, d: int) -> bool:
    return approx.contains(exact) and abs(approx.value - exact) <= _tol(d)


# ---------------------------------------------------------------- prop1


def suite_prop1(opt: Options) -> Iterator[Check]:
    for m in range(1, max(opt.max_m, 1) + 1):
        bad = []
        for N in range(2, 21):
            exact = energy.L_exact_negative(m, N)
            approx = numeric.L_direct(-2 * m, N, opt.digits)
            if not _numeric_match(exact, approx, opt.digits):
                bad.append((N, exact, approx.to_decimal_string()))
        yield Check("prop1", f"negative_s_grid/m={m}", not bad, {"failures": bad} if bad else {})
    for N in range(2, 9):
        for l in range(0, 17):
            total = sum(
                (numeric.hp_cos_pi(Fraction(2 * k * l, N), 30) for k in range(N)),
                numeric.HighPrecisionReal(0, -30, 0),
            )
            expected = N if l % N == 0 else 0
            if not total.contains(expected):
                yield Check("prop1", f"cos_orthogonality/N={N}/l={l}", False, {"value": total.to_decimal_string()})
    yield Check("prop1", "cos_orthogonality", True)


# ---------------------------------------------------------------- prop2


def suite_prop2(opt: Options) -> Iterator[Check]:
    rs = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
    for m in range(1, min(opt.max_m, 4) + 1):
        bad = []
        for N in range(2, 7):
            for r in rs:
                exact = energy.M_closed(m, N, r)
                approx = numeric.M_direct(2 * m, N, r, opt.digits)
                if not _numeric_match(exact, approx, opt.digits):
                    bad.append((N, r, exact, approx.to_decimal_string()))
                if m == 1 and exact != energy.M2_closed(N, r):
                    bad.append((N, r, "s=2 closed form", exact))
        yield Check("prop2", f"modified_energy_grid/m={m}", not bad, {"failures": bad} if bad else {})
    for m in range(1, 5):
        for n in range(0, 7):
            for r in rs:
                a = numeric.G_n_eval(2 * m, n, r)
                b = numeric.G_n_euler(2 * m, n, r)
                if a != b:
                    yield Check("prop2", f"G_n_forms/m={m}/n={n}/r={r}", False, {"poly": a, "euler": b})
    yield Check("prop2", "G_n_terminating_forms_agree", True)
    g = numeric.G_n_numeric(4, 0, Fraction(1, 2), 30)
    yield Check("prop2", "G_0_hypergeometric_vs_polynomial", g.contains(numeric.G_n_eval(4, 0, Fraction(1, 2))))
    yield from _prop1_series_check()
    yield from _gegenbauer_checks()


def _prop1_series_check(s=4, N=3, r=Fraction(1, 2), V=200, d=30) -> Iterator[Check]:
    partial = numeric.prop1_partial_sum(s, N, r, V)
    tail = numeric.prop1_tail_majorant(s, N, r, V)
    exact = energy.M_closed(s // 2, N, r)
    direct = numeric.M_direct(s, N, r, d)
    lo, hi = direct.interval()
    ok_exact = partial <= exact <= partial + tail
    ok_direct = lo <= partial + tail and partial <= hi
    yield Check(
        "prop2",
        f"G_series_partial_sum/s={s}/N={N}/V={V}",
        ok_exact and ok_direct,
        {"partial": float(partial), "tail": float(tail), "direct": direct.to_decimal_string()},
    )


def _gegenbauer_checks(d=30) -> Iterator[Check]:
    bad = []
    for n in range(0, 9):
        for s in (2, 4):
            for N in (2, 3, 4, 5):
                lhs, rhs, agree = numeric.A_n_check(n, s, N, d)
                if not agree or numeric.A_n_parity_form(n, s, N) != numeric.A_n_exact(n, s, N):
                    bad.append((n, s, N, lhs.to_decimal_string(), rhs.to_decimal_string()))
    yield Check("prop2", "gegenbauer_A_n", not bad, {"failures": bad} if bad else {})


# ---------------------------------------------------------------- prop3


def suite_prop3(opt: Options) -> Iterator[Check]:
    for m in range(1, opt.max_m + 1):
        a = energy.beta_coeffs(m)
        b = energy.beta_via_bernoulli(m)
        c = energy.beta_via_expansion(m)
        u = energy.beta_unordered(m)
        same = a.beta == b.beta == c.beta == u.beta
        yield Check("prop3", f"beta_triple_agreement/m={m}", same, {"ledger": a.as_strings(), "bernoulli": b.as_strings()})
        odd_zero = all(a.beta[nu] == 0 for nu in range(1, 2 * m + 1, 2))
        yield Check("prop3", f"beta_odd_vanish/m={m}", odd_zero, {"beta": a.as_strings()})
        collapse = all(energy.collapse_coefficient(m, N) == N for N in range(2, 11))
        yield Check("prop3", f"collapse_coefficient/m={m}", collapse)
        at_one = a.evaluate(1)
        if at_one != 0:
            log.warning("sum rule at N=1 gives %s for m=%d", at_one, m)
    for m in range(1, 11):
        yield Check("prop3", f"collapse_binomial/m={m}", energy.collapse_binomial_sum(m) == 2 ** (2 * m - 2))
    yield Check("prop3", "m1_closed_form", all(energy.L_exact_positive(1, N) == Fraction(N**3 - N, 12) for N in range(2, 51)))


# ---------------------------------------------------------------- prop4


def suite_prop4(opt: Options) -> Iterator[Check]:
    for m in range(1, opt.max_m + 1):
        lhs, rhs, ok = energy.prop4_check(m)
        yield Check("prop4", f"bernoulli_identity/m={m}", ok, {"lhs": lhs, "rhs": rhs})


# ---------------------------------------------------------------- appendix


def _rand_q(rng: random.Random, lo=-5, hi=5, den=7) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


def check_shifted_stirling(rng) -> Check:
    bad = []
    for n in range(0, 9):
        for _ in range(3):
            x, y = _rand_q(rng), _rand_q(rng)
            lhs = sum((lemmas.shifted_stirling(n, l, y) * x**l for l in range(n + 1)), Fraction(0))
            if lhs != pochhammer(x + y, n):
                bad.append((n, x, y))
    return Check("appendix", "shifted_stirling", not bad, {"failures": bad})


def polylog_series_with_tail(n: int, z: Fraction, tol=Fraction(1, 10**30)) -> tuple[Fraction, Fraction]:
    """Partial sum of sum k^n z^k and a rigorous bound on what was left out."""
    total, K = Fraction(0), 0
    az = abs(z)
    while True:
        K += 1
        total += Fraction(K) ** n * z**K
        rho = Fraction(K + 2, K + 1) ** n * az
        if rho < 1:
            tail = Fraction(K + 1) ** n * az ** (K + 1) / (1 - rho)
            if tail < tol:
                return total, tail


def check_polylog_forms() -> Check:
    bad = []
    for n in range(1, 7):
        for z in (Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), Fraction(9, 10)):
            a = lemmas.polylog_neg(n, z)
            b = lemmas.polylog_neg_eulerian(n, z)
            partial, tail = polylog_series_with_tail(n, z)
            if a != b or abs(a - partial) > tail:
                bad.append((n, z))
    for p in range(0, 8):
        for q in range(0, 8):
            if lemmas.b_coeff_short(p, q) != lemmas.b_coeff(p + q, p):
                bad.append(("b_short", p, q))
    return Check("appendix", "polylog_forms", not bad, {"failures": bad})


def check_pochhammer_series(rng, V=300) -> Check:
    bad = []
    for k in range(0, 6):
        for _ in range(2):
            a, b = _rand_q(rng, -3, 3, 5), _rand_q(rng, -3, 3, 5)
            z = Fraction(rng.choice((-1, 1)) * rng.randint(1, 10), 20)
            closed = lemmas.poch_series_closed(k, a, b)
            series = pochhammer(b, k) + 2 * sum(
                (pochhammer(nu * a + b, k) * z**nu for nu in range(1, V + 1)), Fraction(0)
            )
            c = abs(b) + k
            rho = Fraction(V + 2, V + 1) ** k * abs(z)
            tail = 2 * ((V + 1) * abs(a) + c) ** k * abs(z) ** (V + 1) / (1 - rho)
            if abs(closed.evaluate(z) - series) > tail or closed.evaluate(0) != pochhammer(b, k):
                bad.append((k, a, b, z))
    return Check("appendix", "pochhammer_series", not bad, {"failures": bad})


def _poly_derivative_at_1(coeffs: list[int], n: int) -> int:
    return sum(c * math.perm(j, n) for j, c in enumerate(coeffs) if j >= n)


def check_h_derivatives() -> Check:
    bad = [
        (n, N)
        for n in range(0, 9)
        for N in range(1, 13)
        if lemmas.h_deriv_at_1(n, N) != _poly_derivative_at_1([1] * N, n)
    ]
    return Check("appendix", "h_derivatives", not bad, {"failures": bad})


def h_shifted_series(N: int, order: int) -> PowerSeries:
    """h(1 + u) = sum_{l<N} (1+u)^l expanded in u by direct binomial expansion."""
    coeffs = [0] * (order + 1)
    for l in range(N):
        row = [1]
        for _ in range(l):
            row = polynomial_mul(row, [1, 1])
        for j, c in enumerate(row[: order + 1]):
            coeffs[j] += c
    return PowerSeries(coeffs, order)


def check_f_taylor() -> Check:
    bad = []
    for N in range(1, 11):
        for q in range(1, 6):
            series = series_int_pow(h_shifted_series(N, 8), -q)
            for n in range(0, 9):
                if lemmas.f_deriv_at_1(n, q, N) != series[n] * math.factorial(n):
                    bad.append(("deriv", n, q, N))
    for r in (Fraction(9, 10), Fraction(99, 100)):
        for m in range(1, 6):
            for q in (1, 2, 3):
                for N in (2, 3, 5):
                    f = sum((r**j for j in range(N)), Fraction(0)) ** -q
                    rem = f - lemmas.f_taylor(m, q, N, r)
                    if abs(rem) > lemmas.f_remainder_bound(m, q, N, r):
                        bad.append(("remainder", r, m, q, N))
    return Check("appendix", "f_taylor", not bad, {"failures": bad})


def check_bell_binomial() -> Check:
    bad = []
    for n in range(1, 9):
        for k in range(1, n + 1):
            for l in range(0, k):
                if lemmas.H_coeff(l, n, k) != 0:
                    bad.append(("H_low", l, n, k))
            for N in range(1, 11):
                a = lemmas.bell_binomial(n, k, N)
                b = lemmas.bell_binomial_compositions(n, k, N)
                c = lemmas.bell_binomial_H(n, k, N)
                if not a == b == c:
                    bad.append((n, k, N, a, b, c))
    for n in range(1, 6):
        for k in range(1, n + 1):
            for l in range(k, n + k + 1):
                if lemmas.H_coeff(l, n, k) != lemmas.H_coeff_enumerated(l, n, k):
                    bad.append(("H_enum", l, n, k))
    return Check("appendix", "bell_binomial", not bad, {"failures": bad})


def check_H_special_values() -> Check:
    bad = []
    halves = [Fraction(1, j + 1) for j in range(1, 10)]
    for n in range(1, 9):
        for k in range(1, 9):
            if lemmas.H_coeff(n + k, n, n) != Fraction(math.factorial(2 * n), 2**n) * binomial(n, k):
                bad.append(("nn", n, k))
            if k <= n:
                rhs = Fraction(math.factorial(k) * math.factorial(n + k), math.factorial(n)) * bell_partial(n, k, halves)
                if lemmas.H_coeff(n + k, n, k) != rhs:
                    bad.append(("nk", n, k))
    return Check("appendix", "H_special_values", not bad, {"failures": bad})


def check_G_reconstruction() -> Check:
    bad = [
        (n, q, N)
        for n in range(1, 8)
        for q in range(1, 5)
        for N in range(1, 7)
        if lemmas.f_deriv_via_G(n, q, N) != lemmas.f_deriv_at_1(n, q, N) / math.factorial(n)
    ]
    return Check("appendix", "G_reconstruction", not bad, {"failures": bad})


def check_G_generating_function(order=12) -> Check:
    bad = []
    base = PowerSeries([Fraction(1, math.factorial(i + 1)) for i in range(order + 1)], order)
    for q in range(1, 6):
        gen = series_int_pow(base, -q) - 1
        for n in range(1, order + 1):
            if (-1) ** n * lemmas.G_coeff(n, n, q) != gen[n]:
                bad.append((n, q))
    return Check("appendix", "G_generating_function", not bad, {"failures": bad})


def suite_appendix(opt: Options) -> Iterator[Check]:
    rng = random.Random(opt.seed)
    yield check_shifted_stirling(rng)
    yield check_polylog_forms()
    yield check_pochhammer_series(rng)
    yield check_h_derivatives()
    yield check_f_taylor()
    yield check_bell_binomial()
    yield check_H_special_values()
    yield check_G_reconstruction()
    yield check_G_generating_function()


# ---------------------------------------------------------------- oracle


def suite_oracle(opt: Options) -> Iterator[Check]:
    d = opt.digits
    for m in range(1, min(opt.max_m, 5) + 1):
        bad = []
        for N in range(2, 31):
            exact = energy.L_exact_positive(m, N)
            approx = numeric.L_direct(2 * m, N, d)
            if not _numeric_match(exact, approx, d):
                bad.append((N, exact, approx.to_decimal_string()))
        yield Check("oracle", f"positive_s_grid/m={m}", not bad, {"failures": bad})
    yield hp_self_check(random.Random(opt.seed), cases=100)


def hp_self_check(rng: random.Random, cases: int = 100, d: int = 30) -> Check:
    """Recompute random expressions at twice the digits; the claimed bound must cover the gap."""
    bad = []
    for i in range(cases):
        x = Fraction(rng.randint(-4000, 4000), rng.randint(1, 997))
        y = Fraction(rng.randint(1, 4000), rng.randint(1, 997))
        e = rng.randint(-4, 4)

        def expr(p):
            hx = numeric.HighPrecisionReal.from_rational(x, p)
            hy = numeric.HighPrecisionReal.from_rational(y, p)
            return ((numeric.hp_sin(hx, p) * hy + numeric.hp_cos(hy, p)) / hy) ** e + hy.sqrt()

        lo, hi = expr(d), expr(2 * d)
        if abs(lo.value - hi.value) > lo.radius + hi.radius:
            bad.append((i, x, y, e))
    return Check("oracle", "hp_error_bounds", not bad, {"failures": bad})


SUITE_FUNCS: dict[str, Callable[[Options], Iterator[Check]]] = {
    "prop1": suite_prop1,
    "prop2": suite_prop2,
    "prop3": suite_prop3,
    "prop4": suite_prop4,
    "appendix": suite_appendix,
    "oracle": suite_oracle,
}


def run_suites(names, opt: Options) -> list[Check]:
    checks: list[Check] = []
    for name in names:
        log.info("running suite %s", name)
        checks.extend(SUITE_FUNCS[name](opt))
    return sorted(checks, key=lambda c: (c.suite, c.id))
