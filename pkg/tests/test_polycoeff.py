import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from higherdet import numkernel as nk
from higherdet import polycoeff as pc
from higherdet.polycoeff import RPoly, X
from higherdet.verify import printed_examples

F = Fraction
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_polys = st.lists(rationals, max_size=6).map(RPoly)


# ---------------------------------------------------------------------------
# RPoly arithmetic

def test_rpoly_basics():
    p = RPoly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert RPoly().degree == -math.inf
    assert RPoly().is_zero()
    assert (X ** 2 - 1)(3) == 8
    assert (X ** 2 - 1) == (X - 1) * (X + 1)
    assert RPoly.monomial(3, F(1, 2)).coefficient(3) == F(1, 2)
    assert RPoly.constant(5) == 5 * RPoly([1])
    assert (X + 1).compose(X ** 2) == X ** 2 + 1
    assert (X ** 2).shift(1) == X ** 2 + 2 * X + 1
    assert (X ** 2 + X).scale(2) == 4 * X ** 2 + 2 * X
    assert (X ** 2 + 3).is_even() and X.is_odd() and not (X + 1).is_even()
    assert (3 - X) == RPoly([3, -1])


def test_rpoly_to_str():
    assert (2 * X ** 2 - F(1, 2)).to_str("t") == "2*t^2 - 1/2"
    assert RPoly().to_str() == "0"


def test_rpoly_evaluation_types():
    p = X ** 3 - F(1, 3) * X
    assert p(F(1, 2)) == F(1, 8) - F(1, 6)
    assert isinstance(p(2), Fraction)
    assert p(0.5 + 1j) == pytest.approx(complex((0.5 + 1j) ** 3 - (0.5 + 1j) / 3), abs=1e-14)


@given(small_polys, small_polys, small_polys)
@settings(max_examples=60)
def test_rpoly_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == RPoly()
    assert a + b == b + a


@given(small_polys, rationals, rationals)
@settings(max_examples=60)
def test_rpoly_shift_and_compose_agree_with_evaluation(p, a, x):
    assert p.shift(a)(x) == p(x + a)
    assert p.compose(X * 2 - 1)(x) == p(2 * x - 1)


# ---------------------------------------------------------------------------
# c_{r,j}, b_{n,k}

def test_c_poly_small_cases():
    assert pc.c_poly(1, 1) == RPoly([1])
    assert pc.c_poly(2, 1) == X - 1
    assert pc.c_poly(2, 2) == RPoly([1])
    assert pc.c_poly(3, 2) == 2 * X - 3


@pytest.mark.parametrize("r", range(1, 9))
def test_generating_identity(r):
    T = X
    for z in (F(0), F(1, 3), F(-5, 2), F(7), F(-2, 9)):
        lhs = (T + z) ** (r - 1)
        rhs = sum((pc.c_poly(r, j)(z) * pc.rising_binomial(j) for j in range(1, r + 1)), RPoly())
        assert lhs == rhs


@pytest.mark.parametrize("r", range(1, 11))
def test_c_recursion_equals_direct_sum(r):
    for j in range(1, 11):
        assert pc.c_poly(r, j) == pc.c_poly_recursive(r, j)


def test_rising_binomial():
    for j in range(1, 6):
        for T in range(0, 6):
            assert pc.rising_binomial(j)(T) == math.comb(T + j - 1, j - 1)


def _sym(p, var):
    return sum((sympy.Rational(c.numerator, c.denominator) * var ** i for i, c in enumerate(p.coeffs)),
               sympy.Integer(0))


@pytest.mark.parametrize("n", range(1, 9))
def test_b_poly_generating_identity(n):
    z = sympy.Symbol("z")
    for j in range(0, 6):
        total = sum(_sym(pc.b_poly(n, k), z) * (j + z) ** k for k in range(n))
        assert sympy.expand(total) == math.comb(j + n - 1, n - 1)


def test_b_poly_out_of_range_is_zero():
    assert pc.b_poly(3, 5).is_zero()
    assert pc.b_poly(3, -1).is_zero()
    assert pc.b_poly(2, 1) == RPoly([1])
    assert pc.b_poly(2, 0) == 1 - X


# ---------------------------------------------------------------------------
# C_r, D_r(k), alpha, beta

def test_C_const_values():
    assert pc.C_const(1) == -2
    assert pc.C_const(2) == F(-2, 3)
    assert pc.C_const(3) == F(-16, 45)


@pytest.mark.parametrize("r", range(1, 11))
def test_C_const_closed_form(r):
    assert pc.C_const(r) == pc.C_const_closed(r)
    # C_r r^2 (2r-1)!!/(2r)!! = -1
    assert pc.C_const(r) * r * r * pc._double_factorial(2 * r - 1) / pc._double_factorial(2 * r) == -1


@pytest.mark.parametrize("r", range(1, 9))
def test_D_coefficients_closed_forms(r):
    for k in range(1, 2 * r + 1):
        assert pc.D_coeff(r, k) == pc.D_coeff_closed(r, k)
        assert pc.D_tilde(r, k) == pc.D_tilde_closed(r, k)
    assert all(pc.D_coeff(r, k) == 0 for k in range(1, r))


@pytest.mark.parametrize("r", range(1, 6))
def test_alpha_inversion_and_two_paths(r):
    for k in range(1, 2 * r + 1):
        inv = sum((math.comb(j - 1, k - 1) * pc.alpha_poly(r, j) for j in range(k, 2 * r + 1)), RPoly())
        assert pc.alpha_poly(r, k) == (-1) ** k * inv
        assert pc.alpha_poly(r, k) == pc.alpha_poly_via_D(r, k)
        assert pc.alpha_poly(r, k).is_even()


@pytest.mark.parametrize("r", range(1, 6))
def test_alpha_hat_binomial_sums(r):
    for m in range(1, 2 * r + 1):
        lhs = sum((math.comb(l, 2 * r - m) * pc.alpha_hat_poly(r, l) for l in range(2 * r - m, 2 * r)), RPoly())
        assert lhs == (-1) ** m * pc.alpha_poly(r, m)


@pytest.mark.parametrize("r", range(1, 5))
def test_alpha_hat_is_palindromic(r):
    for l in range(2 * r):
        assert pc.alpha_hat_poly(r, l) == pc.alpha_hat_poly(r, 2 * r - 1 - l)


def test_beta_and_exponent_tables():
    assert pc.beta_poly(2, 7).is_zero()
    assert set(pc.milnor_exponents(2)) == {2, 3, 4}
    assert pc.milnor_exponents(1)[2] == RPoly([pc.D_coeff(1, 2)])
    assert set(pc.vigneras_exponents(3)) == set(range(1, 7))
    assert pc.sine_exponents(2)[3] == -pc.alpha_poly(2, 3)
    ex = pc.milnor_selberg_exponents(3)
    assert ex[3] == 8 * X ** 2 and ex[4] == 24 * X and ex[5] == RPoly([24])


@pytest.mark.parametrize("label", sorted(printed_examples()))
def test_printed_examples(label):
    got, want = printed_examples()[label]
    assert got == want


# ---------------------------------------------------------------------------
# Bernoulli families

@pytest.mark.parametrize("m", range(0, 9))
def test_barnes_bernoulli_order_one_is_bernoulli(m):
    assert pc.barnes_bernoulli(1, m) == pc.bernoulli_rpoly(m)


@pytest.mark.parametrize("n", range(1, 5))
def test_barnes_bernoulli_against_series_oracle(n):
    t, z = sympy.symbols("t z")
    gen = t ** n * sympy.exp((n - z) * t) / (sympy.exp(t) - 1) ** n
    ser = sympy.series(gen, t, 0, n + 5).removeO()
    for m in range(0, 5):
        coeff = sympy.expand(ser.coeff(t, m + n - 1) * (-1) ** m * sympy.factorial(m))
        ours = _sym(pc.barnes_bernoulli(n, m), z)
        assert sympy.expand(coeff - ours) == 0


@given(st.integers(1, 4), st.integers(0, 5), rationals)
@settings(max_examples=40)
def test_barnes_bernoulli_degree_and_value(n, m, z):
    p = pc.barnes_bernoulli(n, m)
    assert p.degree == m + n - 1
    assert isinstance(p(z), Fraction)


def test_bernoulli_rpoly_matches_numkernel():
    for m in range(8):
        for z in (F(1, 3), F(-2), F(5, 7)):
            assert pc.bernoulli_rpoly(m)(z) == nk.bernoulli_poly(m, z)


# ---------------------------------------------------------------------------
# multiplicity polynomial

def test_multiplicity_oracle_shape():
    for r in range(1, 5):
        for k in range(1, 7):
            p = pc.multiplicity_poly_oracle(r, k, 2)
            assert p.is_even() and p.degree == 2 * r - 2
            assert pc.multiplicity_poly_oracle(r, k, 5) == 4 * p


def test_multiplicity_report_records_which_form_matches():
    rows = pc.multiplicity_report(4, 6, 2)
    assert len(rows) == 24
    # the report is produced from the defining sum; this records what it found
    matches_a = {row["r"] for row in rows if row["matches"]["printed_A"]}
    matches_b = {row["r"] for row in rows if row["matches"]["printed_B"]}
    derived = all(row["matches"]["derived"] for row in rows)
    assert matches_a == {1}
    assert matches_b == set()
    assert derived
    lines = pc.summarize_multiplicity(rows)
    assert "printed_B: never matches" in lines
    assert "derived: matches for r in [1, 2, 3, 4]" in lines


def test_dump_family():
    text = pc.dump_family("alpha", 2)
    lines = text.strip().splitlines()
    assert lines[0].startswith("# alpha")
    assert len(lines) == 1 + 2 + 4
    assert "(1, 1)\t[-2]\t-2" in lines
    assert pc.dump_family("c", 3, var="x").count("\n") == 1 + 6
    with pytest.raises(KeyError):
        pc.dump_family("nope", 2)
