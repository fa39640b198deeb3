"""Exact Riesz s-energy of the N-th roots of unity for even integer s."""

from .algebra import (
    PiValue,
    PowerSeries,
    Rational,
    as_rational,
    series_compose,
    series_int_pow,
    series_mul,
    series_reciprocal,
)
from .bernoulli import alpha_coeff, bernoulli_number, gen_bernoulli_poly, zeta_even
from .combinatorics import bell_partial, binomial, eulerian, pochhammer, stirling1_signed, stirling1_unsigned
from .energy import (
    EnergyPolynomial,
    L_exact,
    L_exact_negative,
    L_exact_positive,
    L_via_expansion,
    M2_closed,
    M_closed,
    X_primary,
    X_secondary,
    beta_coeffs,
    beta_via_bernoulli,
    beta_via_expansion,
    prop4_check,
)
from .errors import *  # noqa: F401,F403
from .lemmas import (
    G_coeff,
    H_coeff,
    b_coeff,
    f_deriv_at_1,
    f_remainder_bound,
    g_coeff,
    h_deriv_at_1,
    poch_series_closed,
    polylog_neg,
    shifted_stirling,
)
from .numeric import (
    HighPrecisionReal,
    A_n_check,
    G_n_eval,
    L_direct,
    M_direct,
    gegenbauer_C,
    hp_cos,
    hp_pi,
    hp_sin,
    hyp2f1_trunc,
)

__version__ = "0.1.0"
