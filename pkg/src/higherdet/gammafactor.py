"""The gamma factor phi_r(s) and the moment-function machinery behind it.

log phi_r(s) is available in three equivalent forms (Milnor, Barnes and
Vigneras gamma functions). The moment functions J_m(w, t), the series
R_m(t) and the integral Phi_m(t, z) are provided as independent routes to
the same quantities.
"""

import cmath
import enum
import math
from fractions import Fraction

from .errors import AccuracyError, DomainError, PoleError
from .hurwitz import hurwitz_zeta, odd_zeta_half, zeta_prime_neg
from .multigamma import log_barnes_gamma, log_basic_cosine, log_milnor_gamma, log_mult_sine, log_vigneras_G
from .numkernel import DEFAULT_TOL, bernoulli_poly, digamma, harmonic, quadrature, rgamma
from .polycoeff import C_const, alpha_poly, beta_poly, milnor_exponents, vigneras_exponents


class PhiForm(enum.Enum):
    MILNOR = "milnor"
    BARNES = "barnes"
    VIGNERAS = "vigneras"


def _as_form(form):
    return form if isinstance(form, PhiForm) else PhiForm(str(form).lower())


def log_phi(r, s, form=PhiForm.BARNES):
    """log phi_r(s) = C_r t^(2r) + sum of exponent(t) * log(gamma-type function).

    MILNOR:   sum_{k=r}^{2r} D_r(k) t^(2r-k) log MilnorGamma_k(s)
    BARNES:   sum_{j=1}^{2r} alpha_{r,j}(t) log Gamma_j(s)
    VIGNERAS: sum_l beta_{r,l}(t) zeta'(-l) + sum_j (-1)^(j-1) alpha_{r,j}(t) log G_j(s)

    Requires Re(s) > 0, where every constituent is single valued.
    """
    if r < 1:
        raise ValueError("r must be positive")
    s = complex(s)
    if s.real <= 0:
        raise DomainError(f"log_phi needs Re(s) > 0 (cut along the negative axis), got s={s}")
    form = _as_form(form)
    t = s - 0.5
    value = float(C_const(r)) * t ** (2 * r)
    if form is PhiForm.MILNOR:
        for k, e in milnor_exponents(r).items():
            value += e(t) * log_milnor_gamma(k, s)
    elif form is PhiForm.BARNES:
        for j in range(1, 2 * r + 1):
            value += alpha_poly(r, j)(t) * log_barnes_gamma(j, s)
    else:
        for l in range(2 * r):
            value += beta_poly(r, l)(t) * zeta_prime_neg(l)
        for j, e in vigneras_exponents(r).items():
            value += e(t) * log_vigneras_G(j, s)
    return value


def phi_fe_residual(r, s, form=PhiForm.BARNES):
    """log phi_r(1-s) - sum_k alpha_{r,k}(t) log S_k(s) - log phi_r(s).

    Needs 0 < Re(s) < 1 so that both phi values and every sine are defined.
    """
    s = complex(s)
    if not 0 < s.real < 1:
        raise DomainError(f"phi_fe_residual needs 0 < Re(s) < 1, got s={s}")
    t = s - 0.5
    sines = sum(alpha_poly(r, k)(t) * log_mult_sine(k, s) for k in range(1, 2 * r + 1))
    return log_phi(r, 1 - s, form) - sines - log_phi(r, s, form)


# ---------------------------------------------------------------------------
# moment functions

def _check_m_t(m, t):
    if m < 1 or m % 2 == 0:
        raise ValueError("m must be an odd positive integer")
    t = float(t)
    if not 0 < t < 0.5:
        raise DomainError("t must lie in (0, 1/2)")
    return t


def _sign_i(m):
    """i^(m+1) for odd m, as an exact sign."""
    return -1 if ((m + 1) // 2) % 2 else 1


def J_direct(m, w, t, cfg=None, cutoff=12.0):
    """J_m(w, t) = integral_0^inf (x^2+t^2)^(-w) x^m tanh(pi x) dx.

    Quadrature on [0, cutoff] plus the tail beyond the cutoff, expanded in
    powers of t^2/x^2 with tanh replaced by 1 (relative error ~e^(-2 pi X)).
    """
    t = _check_m_t(m, t)
    w = complex(w)
    if w.real <= (m + 1) / 2:
        raise DomainError("the defining integral needs Re(w) > (m+1)/2")
    cfg = cfg or DEFAULT_TOL

    def f(x):
        return cmath.exp(-w * math.log(x * x + t * t)) * x ** m * math.tanh(math.pi * x)

    head = quadrature(f, 0.0, 1.0, cfg) + quadrature(f, 1.0, cutoff, cfg)
    tail = 0j
    coef = 1 + 0j  # binom(-w, j)
    for j in range(200):
        p = m + 1 - 2 * w - 2 * j
        term = coef * t ** (2 * j) * cmath.exp(p * math.log(cutoff)) / (-p)
        tail += term
        if abs(term) < 1e-18 * max(abs(tail), 1e-300):
            break
        coef *= (-w - j) / (j + 1)
    return head + tail


def _scaled_zeta_half(p):
    """2^(-p) zeta(p, 1/2) = sum_n (2n+1)^(-p), stable for large Re(p)."""
    p = complex(p)
    if p.real > 40:
        total, n = 1 + 0j, 1
        while True:
            term = cmath.exp(-p * math.log(2 * n + 1))
            total += term
            if abs(term) < 1e-18:
                return total
            n += 1
    return hurwitz_zeta(p, 0.5) * cmath.exp(-p * math.log(2))


def _J_m2_iter(m, w, t):
    """Yield binom(w+j-1, j) t^(2j) zeta(2w+2j-m, 1/2) for j = 0, 1, 2, ..."""
    binom = 1 + 0j
    zeroed = False  # binom picked up an exact zero factor
    scale = cmath.exp((2 * w - m) * math.log(2))
    j = 0
    while True:
        p = 2 * w + 2 * j - m
        if zeroed and p.real > 1:
            return  # w is a non-positive integer and the series has ended
        if p == 1:
            if not zeroed:
                raise PoleError(f"J_m2 has a pole at w={w}")
            # simple zero of binom against the simple pole of zeta(., 1/2)
            others = 1 + 0j
            for i in range(1, j + 1):
                if w + i - 1 != 0:
                    others *= w + i - 1
            yield others / math.factorial(j) * 0.5 * t ** (2 * j)
        else:
            yield binom * (2 * t) ** (2 * j) * scale * _scaled_zeta_half(p)
        if w + j == 0:
            zeroed = True
            binom = 0j
        else:
            binom = binom * (w + j) / (j + 1)
        j += 1


def J_m2_terms(m, w, t, count):
    """The first ``count`` terms of the series for the second piece of J_m."""
    t = _check_m_t(m, t)
    it = _J_m2_iter(m, complex(w), t)
    return [next(it) for _ in range(count)]


def J_m2(m, w, t, *, full_output=False, max_terms=4000):
    """Binomial-Hurwitz series for the second piece of J_m.

    The terms decay like (2t)^(2j) j^(Re w - 1). Summation stops once the
    geometric bound on the remainder is below 1e-17 of the partial sum.
    """
    t = _check_m_t(m, t)
    w = complex(w)
    q = (2 * t) ** 2
    total = 0j
    prev = None
    for j, term in enumerate(_J_m2_iter(m, w, t)):
        total += term
        if j > (m + 1) // 2 + 2 and prev:
            ratio = abs(term) / abs(prev)
            if ratio < 1:
                rho = max(ratio, q)
                bound = abs(term) * rho / (1 - rho)
                if bound <= 1e-17 * max(abs(total), 1e-300):
                    return (total, bound) if full_output else total
        if j >= max_terms:
            raise AccuracyError("J_m2 series did not converge", estimate=total)
        prev = term
    return (total, 0.0) if full_output else total


def J_m1(m, w, t, *, full_output=False, max_terms=4000):
    """First piece of J_m, as an entire function of w.

    Expanding tan(pi xi) = (2/pi) sum_k zeta(2k, 1/2) xi^(2k-1) and
    integrating against (1 - xi^2/t^2)^(-w) with the Beta integral gives
    -1/Gamma(w) t^(m-2w) sum_k zeta(2k, 1/2) t^(2k) Gamma(k+m/2)/Gamma(k+m/2+1-w).
    """
    t = _check_m_t(m, t)
    w = complex(w)
    rg = rgamma(w)
    if rg == 0:
        return (0j, 0.0) if full_output else 0j
    h = m / 2
    q = (2 * t) ** 2
    total = 0j
    rho = None
    prev = None
    for k in range(1, max_terms):
        denom_arg = k + h + 1 - w
        if rho is None or denom_arg.real < 1:
            # direct evaluation while the recurrence could divide by zero
            rho = math.gamma(k + h) * rgamma(denom_arg) if k < 150 else None
            if rho is None:
                raise AccuracyError("J_m1 ratio recurrence could not start", estimate=total)
        term = _scaled_zeta_half(2 * k) * (2 * t) ** (2 * k) * rho
        total += term
        rho = rho * (k + h) / denom_arg
        if k > 2 and prev:
            ratio = abs(term) / abs(prev)
            if ratio < 1:
                r_ = max(ratio, q)
                bound = abs(term) * r_ / (1 - r_)
                if bound <= 1e-17 * max(abs(total), 1e-300):
                    factor = -rg * cmath.exp((m - 2 * w) * math.log(t))
                    value = factor * total
                    return (value, abs(factor) * bound) if full_output else value
        prev = term
    raise AccuracyError("J_m1 series did not converge", estimate=total)


def J_m1_quadrature(m, w, t, cfg=None):
    """First piece of J_m by direct quadrature over (0, t); needs Re(w) < 1."""
    t = _check_m_t(m, t)
    w = complex(w)
    if w.real >= 1:
        raise DomainError("the integral over (0, t) diverges for Re(w) >= 1")

    # xi = t (1 - v^2) moves the endpoint singularity at xi = t to a milder v^(1-2w)
    def f(v):
        if v == 0:
            return 0j
        xi = t * (1 - v * v)
        weight = cmath.exp(-w * (2 * math.log(v) + math.log(2 - v * v)))
        return weight * xi ** m * math.tan(math.pi * xi) * 2 * t * v

    integral = quadrature(f, 0.0, 1.0, cfg)
    return -cmath.exp(-2 * w * math.log(t)) * cmath.sin(math.pi * w) * integral


def J_decomposed(m, w, t):
    """J_m(w, t) = i^(m+1)/cos(pi w) (J_m1 + J_m2), valid for all w off the poles."""
    t = _check_m_t(m, t)
    w = complex(w)
    c = cmath.cos(math.pi * w)
    if abs(c) < 1e-12:
        raise PoleError(f"cos(pi w) vanishes at w={w}")
    return _sign_i(m) / c * (J_m1(m, w, t) + J_m2(m, w, t))


def J_dw0_closed(m, t):
    """Closed form of d/dw J_m(w, t) at w = 0 in terms of Milnor gammas at t + 1/2."""
    if m < 1 or m % 2 == 0:
        raise ValueError("m must be an odd positive integer")
    t = complex(t) if isinstance(t, complex) else float(t)
    if (t + 0.5).real <= 0:
        raise DomainError("need Re(t + 1/2) > 0")
    sign = _sign_i(m)
    lead = sign * float(harmonic((m - 1) // 2) - 2 * harmonic(m)) / (m + 1) * t ** (m + 1)
    acc = 0j
    for k in range(1, m + 2):
        acc += (-1) ** k * math.comb(m, k - 1) * t ** (m + 1 - k) * log_milnor_gamma(k, t + 0.5)
    return lead + 2 * sign * acc


def log_phi_from_moments(r, s):
    """log phi_r(s) = -sum_l 2 binom(r-1, l) t^(2(r-1-l)) d/dw J_{2l+1}(0, t)."""
    s = complex(s)
    if s.real <= 0:
        raise DomainError("need Re(s) > 0")
    t = s - 0.5
    return -sum(2 * math.comb(r - 1, l) * t ** (2 * (r - 1 - l)) * J_dw0_closed(2 * l + 1, t)
                for l in range(r))


# ---------------------------------------------------------------------------
# the series R_m and the integral Phi_m

def R_series(m, t, terms=None, *, full_output=False):
    """R_m(t) = sum_{j>=1} zeta(2j+1, 1/2) t^(2j+m+1)/(2j+m+1), |t| < 1/2.

    With ``terms`` fixed, exactly that many terms are summed; otherwise the
    sum runs until the remainder bound is below 1e-17 of the value. The
    remainder after term J is at most term_{J+1}/(1 - 4t^2).
    """
    t = float(t)
    if not abs(t) < 0.5:
        raise DomainError("R_series needs |t| < 1/2")
    q = 4 * t * t
    total = 0.0
    j = 0
    while True:
        j += 1
        term = odd_zeta_half(j) * t ** (2 * j + m + 1) / (2 * j + m + 1)
        total += term
        nxt = odd_zeta_half(j + 1) * abs(t) ** (2 * j + m + 3) / (2 * j + m + 3)
        bound = nxt / (1 - q)
        if terms is not None:
            if j >= terms:
                break
        elif bound <= 1e-17 * max(abs(total), 1e-300) or t == 0:
            break
        if j > 5000:
            raise AccuracyError("R_series did not converge", estimate=total)
    return (total, bound) if full_output else total


def R_closed(m, t, cfg=None):
    """Closed form of R_m(t) through Milnor gammas at t + 1/2 and the basic cosine."""
    if m < 1 or m % 2 == 0:
        raise ValueError("m must be an odd positive integer")
    t = float(t)
    if not 0 <= t < 0.5:
        raise DomainError("R_closed needs 0 <= t < 1/2")
    acc = 0j
    for k in range(1, m + 2):
        acc += (-1) ** k * math.comb(m, k - 1) * t ** (m + 1 - k) * log_milnor_gamma(k, t + 0.5)
    acc -= 0.5 * log_basic_cosine(m + 1, t, cfg)
    acc -= (float(harmonic(m)) - digamma(0.5).real) * t ** (m + 1) / (m + 1)
    for j in range(1, (m - 1) // 2 + 1):
        b = float(bernoulli_poly(m + 1 - 2 * j, Fraction(1, 2)))
        acc += 0.5 * b * t ** (2 * j) / (j * (m + 1 - 2 * j))
    acc -= log_milnor_gamma(m + 1, 0.5)
    return acc


def Phi_integral(m, t, z, cfg=None):
    """Phi_m(t, z) = integral_0^t xi^m psi(xi + z) dxi by quadrature."""
    z = complex(z)
    if z.real <= 0 or (z + t).real <= 0:
        raise DomainError("Phi_integral needs Re(z) > 0 along the path")
    return quadrature(lambda xi: xi ** m * digamma(xi + z), 0.0, float(t), cfg)


def Phi_closed(m, t, z):
    """Closed form: sum_k (-1)^(k+1) binom(m, k-1) t^(m+1-k) log MilnorGamma_k(t+z) + P_m(t, z)."""
    z = complex(z)
    t = float(t)
    acc = 0j
    for k in range(1, m + 2):
        acc += (-1) ** (k + 1) * math.comb(m, k - 1) * t ** (m + 1 - k) * log_milnor_gamma(k, t + z)
    return acc + P_poly(m, t, z)


def P_poly(m, t, z):
    """P_m(t, z) = H(m) t^(m+1)/(m+1) + sum_l (-1)^(l+m) B_{m+1-l}(z) t^l/(l(m+1-l))
    + (-1)^(m+1) log MilnorGamma_{m+1}(z)."""
    z = complex(z)
    value = float(harmonic(m)) * t ** (m + 1) / (m + 1)
    for l in range(1, m + 1):
        value += (-1) ** (l + m) * bernoulli_poly(m + 1 - l, z) * t ** l / (l * (m + 1 - l))
    return value + (-1) ** (m + 1) * log_milnor_gamma(m + 1, z)

