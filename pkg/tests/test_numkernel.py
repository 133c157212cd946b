import cmath
import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higherdet import numkernel as nk
from higherdet.errors import AccuracyError, BranchCutError, DomainError, PoleError

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def test_bernoulli_numbers_known_values():
    assert nk.bernoulli_numbers(12) == (
        1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42), 0,
        Fraction(-1, 30), 0, Fraction(5, 66), 0, Fraction(-691, 2730))


def test_bernoulli_numbers_against_mpmath():
    for n in range(2, 31):
        assert nk.bernoulli_number(n) == Fraction(str(mpmath.bernfrac(n)[0])) / mpmath.bernfrac(n)[1]


def test_bernoulli_poly_values():
    assert nk.bernoulli_poly(2, Fraction(1, 2)) == Fraction(-1, 12)
    assert nk.bernoulli_poly(1, Fraction(1, 3)) == Fraction(-1, 6)
    assert nk.bernoulli_poly(0, 7) == 1
    assert nk.bernoulli_poly_coeffs(3) == (0, Fraction(1, 2), Fraction(-3, 2), 1)
    assert nk.bernoulli_poly(4, 0.5 + 0.5j) == pytest.approx(complex(mpmath.bernpoly(4, 0.5 + 0.5j)), abs=1e-14)


def test_bernoulli_poly_is_exact_for_rationals():
    assert isinstance(nk.bernoulli_poly(6, Fraction(2, 7)), Fraction)
    assert isinstance(nk.bernoulli_poly(6, 0.3), complex)


@given(rationals, st.integers(1, 12))
def test_bernoulli_difference_equation(z, m):
    assert nk.bernoulli_poly(m, z + 1) - nk.bernoulli_poly(m, z) == m * z ** (m - 1)


@given(rationals, st.integers(0, 10))
def test_bernoulli_reflection(z, m):
    assert nk.bernoulli_poly(m, 1 - z) == (-1) ** m * nk.bernoulli_poly(m, z)


def test_stirling_first_signed_table():
    assert [nk.stirling_first_signed(4, m) for m in range(5)] == [0, -6, 11, -6, 1]
    assert nk.stirling_first_signed(0, 0) == 1
    assert nk.stirling_first_signed(5, 7) == 0
    for n in range(1, 10):
        for m in range(n + 1):
            assert nk.stirling_first_signed(n, m) == int(mpmath.stirling1(n, m))


@given(st.integers(0, 12), rationals)
def test_stirling_expands_rising_factorial(n, z):
    rising = Fraction(1)
    for i in range(n):
        rising *= z + i
    assert rising == sum((-1) ** (n + m) * nk.stirling_first_signed(n, m) * z ** m for m in range(n + 1))


def test_harmonic_numbers():
    assert nk.harmonic(0) == 0
    assert nk.harmonic(-3) == 0
    assert nk.harmonic(4) == Fraction(25, 12)
    assert nk.harmonic_range(3, 4) == Fraction(7, 12)
    with pytest.raises(ValueError):
        nk.harmonic_range(4, 3)


@pytest.mark.parametrize("z", [0.3, 1.0, 2.5, -2.5, 0.5 + 3j, -4.2 - 1.1j, 20 + 0.1j])
def test_digamma_against_mpmath(z):
    assert abs(nk.digamma(z) - complex(mpmath.digamma(z))) < 1e-13 * max(1, abs(nk.digamma(z)))


def test_digamma_special_values():
    assert nk.digamma(1) == pytest.approx(-nk.EULER_GAMMA, abs=1e-15)
    assert nk.digamma(0.5) == pytest.approx(-nk.EULER_GAMMA - 2 * math.log(2), abs=1e-15)
    with pytest.raises(PoleError):
        nk.digamma(-3)


@given(st.floats(-6, 6), st.floats(-3, 3))
def test_digamma_recurrence(x, y):
    z = complex(x, y)
    if abs(z) < 1e-3 or abs(z + 1) < 1e-3 or (abs(y) < 1e-3 and x < 0 and abs(x - round(x)) < 1e-3):
        return
    assert abs(nk.digamma(z + 1) - nk.digamma(z) - 1 / z) < 1e-11 * max(1, abs(1 / z))


@pytest.mark.parametrize("z", [0.1, 1, 3.7, 0.5 + 2j, 12 - 5j])
def test_loggamma_against_mpmath(z):
    assert abs(nk.loggamma(z) - complex(mpmath.loggamma(z))) < 1e-13 * max(1, abs(nk.loggamma(z)))


def test_loggamma_domain_and_rgamma_zeros():
    with pytest.raises(DomainError):
        nk.loggamma(-0.5)
    assert nk.rgamma(0) == 0
    assert nk.rgamma(-4) == 0
    assert abs(nk.rgamma(-2.5) - 1 / math.gamma(-2.5)) < 1e-14
    assert abs(nk.rgamma(1 + 1j) - complex(mpmath.rgamma(1 + 1j))) < 1e-14


def test_tolerance_config_validation():
    cfg = nk.ToleranceConfig(abs_tol=1e-6, rel_tol=1e-8)
    assert cfg.accepts(5e-7)
    assert not cfg.accepts(2e-6)
    assert cfg.accepts(2e-6, scale=1e3)
    for bad in (0, -1, math.inf, math.nan):
        with pytest.raises(ValueError):
            nk.ToleranceConfig(fd_step=bad)


def _random_points(n, seed):
    rng = random.Random(seed)
    return [complex(rng.uniform(-3, 4), rng.uniform(-3, 3)) for _ in range(n)]


@pytest.mark.parametrize("lam", [0.0, 0.05, 0.2, 0.25, 0.7, 4.0])
def test_branch_log_exponentiates_and_is_symmetric(lam):
    for s in _random_points(100, int(lam * 100)):
        v = nk.branch_log_j(lam, s)
        assert abs(cmath.exp(v) - (lam - s * (1 - s))) < 1e-12 * max(1, abs(v), abs(cmath.exp(v)))
        assert abs(nk.branch_log_j(lam, 1 - s) - v) < 1e-12


def test_branch_points_and_cuts():
    ap, am = nk.branch_points(0.09)
    assert ap == pytest.approx(0.1) and am == pytest.approx(0.9)
    ap, am = nk.branch_points(1.25)
    assert ap == pytest.approx(0.5 + 1j) and am == pytest.approx(0.5 - 1j)
    assert nk.on_branch_cut(1.25, 0.5 + 2j)
    assert not nk.on_branch_cut(1.25, 0.5 + 0.5j)
    with pytest.raises(BranchCutError):
        nk.branch_log_j(1.25, 0.5 - 3j)
    with pytest.raises(DomainError):
        nk.branch_points(-1)


def test_branch_log_is_principal_on_the_real_axis_right_of_the_cuts():
    for lam in (0.0, 0.1, 2.0):
        for s in (1.5, 3.0, 7.25):
            assert abs(nk.branch_log_j(lam, s) - cmath.log(lam - s * (1 - s))) < 1e-14


def test_eval_point_tags():
    p = nk.EvalPoint(2 + 1j, threshold=1.0)
    assert p.t == 1.5 + 1j
    assert p.in_omega is None
    assert nk.EvalPoint(0.5 + 3j, eigenvalues=(1.25,)).in_omega is False
    assert nk.EvalPoint(2.0, eigenvalues=(1.25,)).in_omega is True
    assert nk.EvalPoint(0.5, threshold=0.0).in_u is False
    assert nk.EvalPoint(2.0, threshold=0.0).in_u is True


def test_quadrature_smooth_and_complex():
    assert nk.quadrature(math.sin, 0, math.pi) == pytest.approx(2, abs=1e-13)
    v = nk.quadrature(lambda x: cmath.exp(1j * x), 0, 1)
    assert abs(v - (cmath.exp(1j) - 1) / 1j) < 1e-13
    value, err = nk.quadrature(math.exp, 0, 1, full_output=True)
    assert abs(value - (math.e - 1)) < 1e-13 and err < 1e-12
    assert nk.quadrature(math.exp, 1, 1) == 0


def test_quadrature_endpoint_singularity():
    assert nk.quadrature(lambda x: 1 / math.sqrt(x), 0, 1) == pytest.approx(2, abs=1e-10)
    assert nk.quadrature(lambda x: math.log(x), 0, 1) == pytest.approx(-1, abs=1e-10)


def test_quadrature_reports_failure_with_estimate():
    with pytest.raises(AccuracyError) as info:
        nk.quadrature(lambda x: math.sin(1 / x) / x, 1e-9, 1, limit=20)
    assert info.value.estimate is not None


@given(st.integers(0, 8), st.floats(0.1, 3.0))
@settings(max_examples=30)
def test_quadrature_polynomials(k, b):
    assert nk.quadrature(lambda x: x ** k, 0, b) == pytest.approx(b ** (k + 1) / (k + 1), rel=1e-12)


def test_numeric_dw_matches_analytic_derivative():
    info = nk.numeric_dw(math.exp, 0.3, full_output=True)
    assert abs(info.value - math.exp(0.3)) < 1e-10
    assert info.steps == (1e-4, 5e-5, 2.5e-5)
    assert abs(nk.numeric_dw(cmath.sin, 1 + 1j) - cmath.cos(1 + 1j)) < 1e-10
    fine = nk.ToleranceConfig(fd_step=1e-3)
    assert abs(nk.numeric_dw(lambda x: x ** 5, 2.0, fine) - 80) < 1e-8


def test_numeric_dw_flags_inconsistent_tables():
    with pytest.raises(AccuracyError):
        nk.numeric_dw(lambda x: max(x, 0.0) ** 1.5 * 1e6, 0.0)
