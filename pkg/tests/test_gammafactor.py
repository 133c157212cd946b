import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higherdet import gammafactor as gf
from higherdet import hurwitz as hz
from higherdet import multigamma as mg
from higherdet import numkernel as nk
from higherdet.errors import DomainError, PoleError
from higherdet.gammafactor import PhiForm
from higherdet.verify import J_bridge_points, J_derivative_points, cross_form_grid, fe_grid


def _mp_J(m, w, t):
    f = lambda x: (x * x + t * t) ** (-w) * x ** m * mpmath.tanh(mpmath.pi * x)
    with mpmath.workdps(25):
        return complex(mpmath.quad(f, [0, 1, 4, 16, mpmath.inf]))


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("s", cross_form_grid()[::3])
def test_cross_form_agreement(r, s):
    vals = [gf.log_phi(r, s, f) for f in PhiForm]
    assert max(abs(a - b) for a in vals for b in vals) < 1e-8


def test_form_accepts_strings():
    assert gf.log_phi(2, 1.3, "milnor") == gf.log_phi(2, 1.3, PhiForm.MILNOR)
    with pytest.raises(ValueError):
        gf.log_phi(1, 1.0, "nope")


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("s", fe_grid()[::2])
def test_functional_equation(r, s):
    assert abs(gf.phi_fe_residual(r, s)) < 1e-7


def test_phi_domain():
    with pytest.raises(DomainError):
        gf.log_phi(1, -0.5)
    with pytest.raises(DomainError):
        gf.phi_fe_residual(1, 1.5)
    with pytest.raises(ValueError):
        gf.log_phi(0, 1.0)


@given(st.floats(0.3, 3.0), st.floats(-2.0, 2.0))
@settings(max_examples=25, deadline=None)
def test_phi_1_is_the_classical_factor(x, y):
    s = complex(x, y)
    t = s - 0.5
    classic = (-2 * t * t - 4 * t * hz.zeta_prime_neg(0) + 4 * hz.zeta_prime_neg(1)
               - 2 * complex(mpmath.loggamma(s)) - 4 * complex(mpmath.log(mpmath.barnesg(s))))
    assert abs(cmath.exp(gf.log_phi(1, s) - classic) - 1) < 1e-8


def test_phi_is_real_on_the_real_axis():
    for r in (1, 2, 3):
        for s in (0.4, 1.0, 2.7):
            assert abs(gf.log_phi(r, s).imag) < 1e-12


@pytest.mark.parametrize("r", [1, 2, 3])
def test_phi_from_moment_derivatives(r):
    for s in (0.4, 1.3 + 0.6j, 2.7 - 1j):
        assert abs(gf.log_phi_from_moments(r, s) - gf.log_phi(r, s, PhiForm.MILNOR)) < 1e-8


# ---------------------------------------------------------------------------
# moment functions

@pytest.mark.parametrize("m,w,t", [(1, 1.7, 0.3), (3, 3.3 + 0.5j, 0.2), (5, 4.5, 0.45)])
def test_J_direct_against_independent_quadrature(m, w, t):
    ref = _mp_J(m, w, t)
    assert abs(gf.J_direct(m, w, t) - ref) < 1e-9 * max(1, abs(ref))


@pytest.mark.parametrize("m,w,t", J_bridge_points())
def test_J_bridge(m, w, t):
    assert abs(gf.J_direct(m, w, t) - gf.J_decomposed(m, w, t)) < 1e-7


def test_J_decomposed_against_mpmath_at_larger_w():
    for m, w, t in ((1, 2.3, 0.4), (3, 4.2 - 0.3j, 0.1)):
        ref = _mp_J(m, w, t)
        assert abs(gf.J_decomposed(m, w, t) - ref) < 1e-9 * max(1, abs(ref))


@pytest.mark.parametrize("m,t", J_derivative_points())
def test_J_derivative_at_zero(m, t):
    fd = nk.numeric_dw(lambda w: gf.J_decomposed(m, w, t), 0.0)
    assert abs(fd - gf.J_dw0_closed(m, t)) < 1e-6


def test_J_dw0_small_t_limit():
    # the limit t -> 0 of the m = 1 closed form is -2 zeta'(-1, 1/2), not 0
    limit = -2 * hz.hurwitz_zeta_dw(-1, 0.5)
    assert abs(limit - (-2 * complex(mpmath.zeta(-1, 0.5, 1)))) < 1e-14
    assert limit.real == pytest.approx(-0.10766, abs=1e-5)
    assert abs(gf.J_dw0_closed(1, 1e-3) - limit) < 1e-5
    assert abs(gf.J_dw0_closed(1, 1e-6) - limit) < 1e-10


def test_J_m1_series_against_quadrature():
    for m, w, t in ((1, 0.3, 0.25), (3, -0.7 + 0.4j, 0.4), (5, 0.5, 0.1)):
        assert abs(gf.J_m1(m, w, t) - gf.J_m1_quadrature(m, w, t)) < 1e-10


def test_J_m1_vanishes_at_nonpositive_integers():
    for w in (0, -1, -3):
        assert gf.J_m1(3, w, 0.2) == 0


def test_J_m2_terms_and_convergence():
    terms = gf.J_m2_terms(1, 2.0, 0.3, 5)
    assert len(terms) == 5
    value, bound = gf.J_m2(1, 2.0, 0.3, full_output=True)
    assert abs(value - sum(gf.J_m2_terms(1, 2.0, 0.3, 400))) < 1e-12
    assert bound <= 1e-17 * abs(value)


def test_J_poles_and_domains():
    with pytest.raises(PoleError):
        gf.J_decomposed(1, 0.5, 0.2)
    with pytest.raises(DomainError):
        gf.J_direct(3, 1.5, 0.2)
    with pytest.raises(DomainError):
        gf.J_m1_quadrature(1, 1.5, 0.2)
    with pytest.raises(DomainError):
        gf.J_direct(1, 2.0, 0.5)
    with pytest.raises(ValueError):
        gf.J_direct(2, 3.0, 0.2)


# ---------------------------------------------------------------------------
# R_m and Phi_m

def _mp_R(m, t):
    with mpmath.workdps(25):
        return float(mpmath.nsum(lambda j: mpmath.zeta(2 * j + 1, 0.5) * t ** (2 * j + m + 1) / (2 * j + m + 1),
                                 [1, mpmath.inf]))


@pytest.mark.parametrize("m", [1, 3, 5])
@pytest.mark.parametrize("t", [0.1, 0.25, 0.4])
def test_R_series_closed_and_oracle(m, t):
    series = gf.R_series(m, t)
    assert abs(series - _mp_R(m, t)) < 1e-12
    assert abs(series - gf.R_closed(m, t)) < 1e-9


def test_R_series_bound_certifies_truncation():
    for terms in (3, 6, 10):
        v, bound = gf.R_series(1, 0.4, terms, full_output=True)
        assert abs(gf.R_series(1, 0.4) - v) <= bound


@pytest.mark.parametrize("m", [1, 3])
@pytest.mark.parametrize("t", [0.1, 0.25, 0.4])
def test_R_through_Phi_and_basic_cosine(m, t):
    chain = (-gf.Phi_integral(m, t, 0.5) - 0.5 * mg.log_basic_cosine(m + 1, t)
             + nk.digamma(0.5) * t ** (m + 1) / (m + 1))
    assert abs(gf.R_series(m, t) - chain) < 1e-8


@pytest.mark.parametrize("m", range(4))
@pytest.mark.parametrize("t", [0.2, 0.4, 1.3])
@pytest.mark.parametrize("z", [0.5, 1.0, 1.5, 2 + 1j])
def test_Phi_integral_vs_closed(m, t, z):
    assert abs(gf.Phi_integral(m, t, z) - gf.Phi_closed(m, t, z)) < 1e-8


def test_Phi_integral_against_mpmath():
    ref = complex(mpmath.quad(lambda x: x ** 2 * mpmath.digamma(x + 0.7), [0, 0.9]))
    assert abs(gf.Phi_integral(2, 0.9, 0.7) - ref) < 1e-12


def test_P_poly_at_zero_length():
    # Phi(0) = 0, so the polynomial part cancels the Milnor-gamma sum at t = 0
    for m in range(4):
        assert abs(gf.Phi_closed(m, 0.0, 1.3)) < 1e-12
