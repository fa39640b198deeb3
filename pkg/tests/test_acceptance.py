"""Acceptance criteria 1-9, each with its time limit.

Run directly (``python tests/test_acceptance.py``) for the PASS/FAIL table, or
through pytest, where each criterion prints the same line.
"""

import functools
import time
from fractions import Fraction as F

import pytest

from riesz_roots import algebra, bernoulli, combinatorics, energy, lemmas, numeric, verify


def _clear_caches():
    """Start every criterion cold so the timings are honest."""
    for mod in (algebra, bernoulli, combinatorics, energy, lemmas, numeric):
        for obj in vars(mod).values():
            if isinstance(obj, functools._lru_cache_wrapper):
                obj.cache_clear()
    combinatorics._CACHE.__init__()


def c1():
    return all(energy.L_exact_positive(1, N) == F(N**3 - N, 12) for N in range(2, 51))


def c2():
    return energy.beta_coeffs(2).beta == (F(-11, 720), 0, F(1, 72), 0, F(1, 720))


def c3():
    for m in range(1, 7):
        ledger = energy.beta_coeffs(m)
        if ledger != energy.beta_via_bernoulli(m) or ledger != energy.beta_via_expansion(m):
            return False
        # both sides have degree 2m+1 and vanish at 0, so 2m+2 points pin every coefficient
        for N in range(2, 2 * m + 4):
            if energy.L_via_expansion(m, N) != ledger.evaluate(N):
                return False
        if any(ledger.beta[nu] for nu in range(1, 2 * m + 1, 2)):
            return False
    return True


def c4():
    tol = F(1, 10**40)
    if energy.L_exact_negative(2, 2) != 32:
        return False
    for m in range(1, 9):
        for N in range(2, 21):
            exact = energy.L_exact_negative(m, N)
            approx = numeric.L_direct(-2 * m, N, 50)
            if not approx.contains(exact) or abs(approx.value - exact) > tol:
                return False
    return True


def c5():
    tol = F(1, 10**40)
    for m in range(1, 5):
        for N in range(2, 7):
            for r in (F(1, 4), F(1, 2), F(3, 4)):
                exact = energy.M_closed(m, N, r)
                approx = numeric.M_direct(2 * m, N, r, 50)
                if not approx.contains(exact) or abs(approx.value - exact) > tol:
                    return False
                if m == 1 and exact != energy.M2_closed(N, r):
                    return False
    return True


def c6():
    return all(energy.prop4_check(m)[2] for m in range(1, 9))


def c7():
    checks = list(verify.suite_appendix(verify.Options(seed=0)))
    return len(checks) == 9 and all(c.passed for c in checks)


def c8():
    for n in range(9):
        for s in (2, 4):
            for N in (2, 3, 4, 5):
                if not numeric.A_n_check(n, s, N, 30)[2]:
                    return False
    s, N, r, V = 4, 3, F(1, 2), 200
    partial = numeric.prop1_partial_sum(s, N, r, V)
    tail = numeric.prop1_tail_majorant(s, N, r, V)
    direct = numeric.M_direct(s, N, r, 30)
    lo, hi = direct.interval()
    return partial - tail <= hi and lo <= partial + tail and partial <= energy.M_closed(2, N, r) <= partial + tail


def c9():
    return all(energy.collapse_binomial_sum(m) == 2 ** (2 * m - 2) for m in range(1, 11))


CRITERIA = [
    (1, "m=1 closed form, N=2..50", c1, 1),
    (2, "m=2 beta coefficients", c2, 1),
    (3, "triple agreement m=1..6, odd beta zero", c3, 30),
    (4, "negative-s grid m=1..8, N=2..20 at 1e-40", c4, 30),
    (5, "modified energy grid m=1..4 at 1e-40", c5, 60),
    (6, "leading-coefficient identity m=1..8", c6, 10),
    (7, "appendix suite", c7, 60),
    (8, "Gegenbauer A_n grid and G-series tail", c8, 60),
    (9, "collapse identity m=1..10", c9, 1),
]


def evaluate(criterion):
    num, label, fn, limit = criterion
    _clear_caches()
    t0 = time.perf_counter()
    ok = bool(fn())
    elapsed = time.perf_counter() - t0
    passed = ok and elapsed < limit
    line = f"criterion {num}: {'PASS' if passed else 'FAIL'}  {label}  ({elapsed:.2f}s, limit {limit}s)"
    return passed, ok, elapsed, line


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(criterion, capsys):
    passed, ok, elapsed, line = evaluate(criterion)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert elapsed < criterion[3], line


def main():
    results = [evaluate(c) for c in CRITERIA]
    for _, _, _, line in results:
        print(line)
    return 0 if all(r[0] for r in results) else 1


if __name__ == "__main__":
    raise SystemExit(main())
