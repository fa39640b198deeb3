import math
from fractions import Fraction as F

import mpmath
import pytest

from riesz_roots import energy
from riesz_roots.bernoulli import zeta_even
from riesz_roots.errors import DomainError, IndexOutOfRange

M2_DISPLAY = (F(-11, 720), F(0), F(10, 720), F(0), F(1, 720))


def _mp_energy(s, N, dps=40):
    """Independent oracle: the defining sine sum in mpmath."""
    mpmath.mp.dps = dps
    return mpmath.mpf(2) ** -s * N * mpmath.fsum(mpmath.sin(mpmath.pi * k / N) ** -s for k in range(1, N))


def _to_mp(q):
    return mpmath.mpf(q.numerator) / q.denominator


# s = -2m


@pytest.mark.parametrize("m,N,expected", [(1, 2, 8), (2, 2, 32), (1, 3, 18), (3, 2, 128)])
def test_negative_examples(m, N, expected):
    assert energy.L_exact_negative(m, N) == expected


def test_negative_against_mpmath():
    for m in range(1, 9):
        for N in range(2, 21):
            exact = energy.L_exact_negative(m, N)
            assert abs(_to_mp(exact) - _mp_energy(-2 * m, N)) < mpmath.mpf(10) ** -25 * max(1, exact)


def test_negative_leading_constant():
    assert energy.V_negative(3) == 20


def test_negative_domain():
    with pytest.raises(DomainError):
        energy.L_exact_negative(0, 3)
    with pytest.raises(DomainError):
        energy.L_exact_negative(2, 1)


# ledger


def test_X_primary_range():
    with pytest.raises(IndexOutOfRange):
        energy.X_primary(1, 1, 1, 3)
    with pytest.raises(IndexOutOfRange):
        energy.X_primary(3, 0, 0, 3)


def test_X_secondary_vanishes_above_diagonal():
    assert energy.X_secondary(1, 0, 0, 2, 3, 2) == 0
    with pytest.raises(IndexOutOfRange):
        energy.X_secondary(1, 0, 0, 9, 0, 2)


def test_m2_ledger_parts():
    parts = energy.ledger_parts(2)
    assert parts["standalone"] == (0, F(-1, 8), 0, 0, 0)
    assert parts["primary"] == (F(3, 8), F(-1, 4), 0, 0, 0)
    assert parts["low"] == (F(-281, 720), F(3, 8), 0, 0, 0)
    assert parts["middle"] == (0, 0, F(1, 72), F(-1, 16), 0)
    assert parts["upper"] == (0, 0, 0, F(1, 16), F(1, 720))


@pytest.mark.parametrize("m", range(2, 7))
def test_ledger_parts_sum_to_beta(m):
    parts = energy.ledger_parts(m)
    total = tuple(sum(v[i] for v in parts.values()) for i in range(2 * m + 1))
    assert total == energy.beta_coeffs(m).beta


def test_beta_m1():
    assert energy.beta_coeffs(1).beta == (F(-1, 12), 0, F(1, 12))
    assert energy.beta_unordered(1).beta == (F(-1, 12), 0, F(1, 12))


def test_beta_m2():
    assert energy.beta_coeffs(2).beta == M2_DISPLAY


def test_beta_m3_top_is_zeta():
    beta = energy.beta_coeffs(3).beta
    assert beta[6] == 2 * zeta_even(6).coefficient(6) / 2**6 == F(1, 30240)
    assert all(beta[nu] == 0 for nu in (1, 3, 5))


@pytest.mark.parametrize("m", range(1, 7))
def test_triple_agreement(m):
    ledger = energy.beta_coeffs(m)
    assert ledger == energy.beta_via_bernoulli(m)
    assert ledger == energy.beta_via_expansion(m)
    assert ledger == energy.beta_unordered(m)
    assert all(ledger.beta[nu] == 0 for nu in range(1, 2 * m + 1, 2))


@pytest.mark.parametrize("m", range(1, 7))
def test_sum_rule_at_one(m):
    # a single point has no pairs; not a stated result, so this documents the observed behavior
    assert energy.beta_coeffs(m).evaluate(1) == 0


def test_bernoulli_route_examples():
    assert energy.beta_via_bernoulli(2).beta[2] == F(1, 72)
    assert energy.beta_via_bernoulli(1).beta[2] == F(1, 12)


# L_{2m}


@pytest.mark.parametrize("m,N,expected", [(1, 2, F(1, 2)), (2, 3, F(2, 3)), (1, 3, 2)])
def test_positive_examples(m, N, expected):
    assert energy.L_exact_positive(m, N) == expected
    assert energy.L_exact(2 * m, N) == expected


def test_m1_closed_form():
    for N in range(2, 51):
        assert energy.L_exact_positive(1, N) == F(N**3 - N, 12)


def test_via_expansion():
    assert energy.L_via_expansion(1, 2) == F(1, 2)
    for N in range(2, 11):
        assert energy.L_via_expansion(2, N) == F(N**5 + 10 * N**3 - 11 * N, 720)


def test_positive_against_mpmath():
    for m in range(1, 6):
        for N in range(2, 16):
            exact = energy.L_exact_positive(m, N)
            assert abs(_to_mp(exact) - _mp_energy(2 * m, N)) < mpmath.mpf(10) ** -25 * max(1, exact)


def test_L_exact_rejects_odd():
    with pytest.raises(DomainError):
        energy.L_exact(3, 5)
    with pytest.raises(DomainError):
        energy.L_exact(0, 5)


# modified energy


def test_M_closed_examples():
    assert energy.M_closed(1, 2, F(1, 2)) == F(8, 9)
    assert energy.M_closed(1, 3, F(1, 2)) == F(24, 7)


@pytest.mark.parametrize("m", range(1, 5))
def test_M_closed_against_mpmath(m):
    mpmath.mp.dps = 40
    for N in range(2, 7):
        for r in (F(1, 4), F(1, 2), F(3, 4)):
            rr = _to_mp(r)
            ref = N * mpmath.fsum(
                (1 - 2 * rr * mpmath.cos(2 * mpmath.pi * k / N) + rr**2) ** -m for k in range(1, N)
            )
            assert abs(_to_mp(energy.M_closed(m, N, r)) - ref) < mpmath.mpf(10) ** -30 * ref
            if m == 1:
                assert energy.M_closed(1, N, r) == energy.M2_closed(N, r)


def test_M_closed_tends_to_energy():
    # the gap to L_{2m}(N) shrinks as r -> 1
    for m in (1, 2, 3):
        L = energy.L_exact_positive(m, 4)
        gaps = [abs(energy.M_closed(m, 4, 1 - F(1, 10**j)) - L) for j in range(2, 6)]
        assert all(b < a for a, b in zip(gaps, gaps[1:]))
        assert gaps[-1] < F(1, 1000)


def test_M_closed_domain():
    with pytest.raises(DomainError):
        energy.M_closed(1, 2, F(5, 4))
    with pytest.raises(DomainError):
        energy.M_closed(1, 2, 0)


# identities


def test_collapse_coefficient():
    for m in range(1, 7):
        for N in range(2, 11):
            assert energy.collapse_coefficient(m, N) == N


def test_collapse_binomial_sum():
    for m in range(1, 11):
        assert energy.collapse_binomial_sum(m) == 2 ** (2 * m - 2)


@pytest.mark.parametrize("m", range(1, 9))
def test_prop4(m):
    lhs, rhs, ok = energy.prop4_check(m)
    assert ok and lhs == rhs
    assert lhs == energy.beta_coeffs(m).beta[2 * m]


def test_prop4_examples():
    assert energy.prop4_check(1)[:2] == (F(1, 12), F(1, 12))
    assert energy.prop4_check(2)[0] == F(1, 720)


def test_energy_polynomial_shape():
    with pytest.raises(ValueError):
        energy.EnergyPolynomial(2, (F(1),))
    assert energy.beta_coeffs(2).as_strings() == ["-11/720", "0", "1/72", "0", "1/720"]
