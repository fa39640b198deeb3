import math
import random
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riesz_roots import energy, numeric, verify
from riesz_roots.errors import DomainError
from riesz_roots.numeric import HighPrecisionReal as HP

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=97)


def _mp(q):
    return mpmath.mpf(q.numerator) / q.denominator


def _mp_contains(x: HP, ref) -> bool:
    return abs(_mp(x.value) - ref) <= _mp(x.radius) + mpmath.mpf(10) ** -(x.digits + 15)


# HighPrecisionReal


def test_from_rational_and_string():
    x = HP.from_rational(F(1, 3), 5)
    assert x.to_decimal_string() == "0.33333"
    assert x.contains(F(1, 3))
    assert HP.from_rational(F(-1, 8), 3).to_decimal_string() == "-0.125"
    assert HP.from_rational(7, 2).error_bound == 0


def test_negative_error_rejected():
    with pytest.raises(ValueError):
        HP(1, -3, -1)


@settings(max_examples=60, deadline=None)
@given(rationals, rationals, st.integers(5, 40))
def test_arithmetic_encloses_exact_result(a, b, d):
    x, y = HP.from_rational(a, d), HP.from_rational(b, d)
    assert (x + y).contains(a + b)
    assert (x - y).contains(a - b)
    assert (x * y).contains(a * b)
    if abs(b) > F(1, 10):
        assert (x / y).contains(a / b)
    assert x.scale(F(3, 7)).contains(a * F(3, 7))
    for e in (-3, 2, 5):
        if a and (e > 0 or abs(a) > F(1, 10)):
            assert (x**e).contains(a**e)


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=F(1, 97), max_value=1000, max_denominator=97), st.integers(5, 40))
def test_sqrt_encloses(a, d):
    mpmath.mp.dps = d + 20
    assert _mp_contains(HP.from_rational(a, d).sqrt(), mpmath.sqrt(_mp(a)))


def test_rescale_keeps_enclosure():
    x = HP.from_rational(F(22, 7), 40)
    for d in (35, 20, 3, 0):
        assert x.rescale(d).contains(F(22, 7))


def test_self_consistency_at_double_precision():
    c = verify.hp_self_check(random.Random(5), cases=100)
    assert c.passed, c.witness


# pi, sin, cos


def test_pi_digits():
    p20 = numeric.hp_pi(20)
    assert p20.to_decimal_string() == "3.14159265358979323846"
    assert p20.error_bound <= 1
    p10 = numeric.hp_pi(10)
    assert p10.to_decimal_string() == "3.1415926536"
    assert p10.rescale(9).to_decimal_string() == "3.141592654"
    assert numeric.hp_pi(30).rescale(20).mantissa == p20.mantissa


def test_pi_against_mpmath():
    mpmath.mp.dps = 220
    assert _mp_contains(numeric.hp_pi(200), mpmath.pi)


def test_sin_exact_points():
    d = 30
    assert numeric.hp_sin_pi(F(1, 2), d).contains(1)
    assert numeric.hp_sin_pi(F(1, 6), d).contains(F(1, 2))
    assert (numeric.hp_sin_pi(F(1, 3), d) ** 4).contains(F(9, 16))
    assert numeric.hp_cos_pi(F(2, 3), d).contains(F(-1, 2))
    assert numeric.hp_sin_pi(1, d).contains(0)


@settings(max_examples=50, deadline=None)
@given(rationals, st.integers(10, 60))
def test_sin_cos_against_mpmath(x, d):
    mpmath.mp.dps = d + 20
    assert _mp_contains(numeric.hp_sin(x, d), mpmath.sin(_mp(x)))
    assert _mp_contains(numeric.hp_cos(x, d), mpmath.cos(_mp(x)))


# direct energy sums


def test_L_direct_examples():
    assert numeric.L_direct(2, 2, 30).contains(F(1, 2))
    assert numeric.L_direct(4, 3, 30).contains(F(2, 3))
    assert numeric.L_direct(-2, 3, 30).contains(18)


def test_L_direct_half_integer_s_against_mpmath():
    mpmath.mp.dps = 50
    s = F(3, 2)
    ref = mpmath.mpf(2) ** -1.5 * 5 * mpmath.fsum(mpmath.sin(mpmath.pi * k / 5) ** -1.5 for k in range(1, 5))
    assert _mp_contains(numeric.L_direct(s, 5, 30), ref)


def test_L_direct_domain():
    with pytest.raises(DomainError):
        numeric.L_direct(0, 3, 30)
    with pytest.raises(DomainError):
        numeric.L_direct(F(1, 3), 3, 30)


def test_M_direct_examples():
    assert numeric.M_direct(2, 2, F(1, 2), 30).contains(F(8, 9))
    for N in range(2, 6):
        assert numeric.M_direct(4, N, 0, 30).contains(N * (N - 1))
    assert numeric.M_direct(4, 3, F(1, 4), 30).contains(energy.M_closed(2, 3, F(1, 4)))


def test_L_direct_meets_tolerance():
    x = numeric.L_direct(6, 7, 50)
    assert x.radius <= F(1, 10**40)
    assert abs(x.value - energy.L_exact_positive(3, 7)) <= F(1, 10**40)


# hypergeometric


def test_hyp2f1_examples():
    assert numeric.hyp2f1_trunc(0, 3, 2, F(1, 2), 30).contains(1)
    assert numeric.hyp2f1_trunc(1, 1, 1, F(1, 3), 30).contains(F(3, 2))
    m, n, r = 2, 3, F(1, 2)
    exact = numeric.hyp2f1_poly(1 - m, n + 1 - m, 2 - 2 * m, 1 - r * r)
    assert exact == 1 + F((1 - m) * (n + 1 - m), 2 - 2 * m) * (1 - r * r)
    assert numeric.hyp2f1_trunc(1 - m, n + 1 - m, 2 - 2 * m, 1 - r * r, 30).contains(exact)


@pytest.mark.parametrize("a,b,c,z", [(F(1, 2), F(3, 2), 2, F(1, 4)), (2, F(5, 2), 4, F(-1, 2)), (F(3, 4), 1, F(7, 3), F(9, 10))])
def test_hyp2f1_against_mpmath(a, b, c, z):
    mpmath.mp.dps = 50
    assert _mp_contains(numeric.hyp2f1_trunc(a, b, c, z, 30), mpmath.hyp2f1(_mp(a), _mp(b), _mp(c), _mp(z)))


def test_G_n_examples():
    assert numeric.G_n_eval(2, 3, F(1, 2)) == F(1, 6)
    for n in range(6):
        assert numeric.G_n_eval(2, n, F(1, 3)) == F(1, 3) ** n / (1 - F(1, 9))
    assert numeric.G_n_numeric(4, 0, F(1, 2), 30).contains(numeric.G_n_eval(4, 0, F(1, 2)))
    assert numeric.G_prefactor(2) == 2


@pytest.mark.parametrize("s", [2, 4, 6, 8])
def test_G_n_paths_agree(s):
    for n in range(8):
        for r in (F(1, 4), F(1, 2), F(3, 4)):
            exact = numeric.G_n_eval(s, n, r)
            assert exact == numeric.G_n_euler(s, n, r)
            assert numeric.G_n_numeric(s, n, r, 30).contains(exact)


def test_series_partial_sum_within_majorant():
    s, N, r, V = 4, 3, F(1, 2), 200
    partial = numeric.prop1_partial_sum(s, N, r, V)
    tail = numeric.prop1_tail_majorant(s, N, r, V)
    exact = energy.M_closed(2, N, r)
    assert partial <= exact <= partial + tail
    direct = numeric.M_direct(s, N, r, 30)
    assert abs(direct.value - partial) <= tail + direct.radius


def test_series_partial_sums_converge():
    s, N, r = 6, 4, F(3, 5)
    exact = energy.M_closed(3, N, r)
    gaps = [exact - numeric.prop1_partial_sum(s, N, r, V) for V in (2, 5, 10, 20)]
    for V, gap in zip((2, 5, 10, 20), gaps):
        assert 0 <= gap <= numeric.prop1_tail_majorant(s, N, r, V)
    assert all(b < a for a, b in zip(gaps, gaps[1:]))


# Gegenbauer


def test_gegenbauer_examples():
    assert numeric.gegenbauer_C(0, F(3, 2), F(1, 3), 30).contains(1)
    phi = numeric.hp_pi(50).scale(F(1, 3))
    assert numeric.gegenbauer_C(1, 1, phi, 30).contains(1)
    assert numeric.gegenbauer_at_one(3, 1) == 4
    assert numeric.gegenbauer_C(3, 1, 0, 30).contains(4)


@pytest.mark.parametrize("n,lam", [(2, F(1, 2)), (4, 2), (5, F(3, 2)), (7, 1)])
def test_gegenbauer_against_mpmath(n, lam):
    mpmath.mp.dps = 50
    phi = F(7, 10)
    ref = mpmath.gegenbauer(n, _mp(lam), mpmath.cos(_mp(phi)))
    assert _mp_contains(numeric.gegenbauer_C(n, lam, phi, 30), ref)


def test_A_n_examples():
    for N in range(2, 6):
        lhs, rhs, ok = numeric.A_n_check(0, 4, N, 30)
        assert ok and rhs.value == N * (N - 1) == N * N - N
    # odd n with even N: no divisor term survives
    assert numeric.A_n_exact(3, 2, 4) == -4 * numeric.gegenbauer_at_one(3, 1)
    assert numeric.A_n_check(3, 2, 4, 30)[2]
    assert numeric.A_n_check(4, 4, 2, 30)[2]


def test_A_n_grid():
    for n in range(9):
        for s in (2, 4):
            for N in (2, 3, 4, 5):
                assert numeric.A_n_check(n, s, N, 30)[2]
                assert numeric.A_n_parity_form(n, s, N) == numeric.A_n_exact(n, s, N)
