"""Selberg-type zeta functions built from a finite length spectrum.

log Z^{(m)}(s) is summed over the classes P^k of every primitive P:

    log Z^{(m)}(s) = -sum_P mult(P) (log N)^(1-m) sum_k k^(-m) N^(-ks)/(1 - N^(-k)),

which equals the double product -sum_P (log N)^(1-m) sum_n Li_m(N^(-s-n)).
Both routes are implemented with certified geometric remainder bounds.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import AccuracyError, DomainError
from .gammafactor import log_phi
from .multigamma import log_barnes_gamma, log_mult_sine
from .numkernel import DEFAULT_TOL, numeric_dw, quadrature
from .polycoeff import C_const, alpha_hat_poly, alpha_poly, milnor_selberg_exponents, sine_exponents
from .spectrum import TruncationPolicy

DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class SelbergValue:
    value: complex
    tail_bound: float
    terms: int


def polylog(m, z, *, full_output=False, tol=1e-17):
    """Li_m(z) = sum_{k>=1} z^k / k^m for |z| < 1.

    The remainder after K terms is at most |z|^(K+1)/((K+1)^m (1 - |z|)).
    """
    if m < 1:
        raise ValueError("m must be positive")
    z = complex(z)
    az = abs(z)
    if az >= 1:
        raise DomainError(f"polylog series needs |z| < 1, got |z|={az}")
    total = 0j
    zk = 1 + 0j
    k = 0
    while True:
        k += 1
        zk *= z
        total += zk / k ** m
        bound = az ** (k + 1) / ((k + 1) ** m * (1 - az))
        if bound <= tol * max(abs(total), 1e-300) or az == 0:
            return (total, bound) if full_output else total
        if k > 10 ** 7:
            raise AccuracyError("polylog series did not converge", estimate=total, error=bound)


def _check_s(s):
    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"the Euler product needs Re(s) > 1, got s={s}")
    return s


def _class_bound(lnN, sigma, m, K):
    """Bound on the classes P^k with k > K for one primitive of log-norm lnN."""
    N = math.exp(lnN)
    return lnN ** (1 - m) * math.exp(-(K + 1) * sigma * lnN) / (
        (K + 1) ** m * (1 - 1 / N) * (1 - N ** -sigma))


def _class_count(lnN, sigma, m, share, cap):
    """Smallest K with remainder bound <= share, for one primitive."""
    for K in range(1, cap + 1):
        bound = _class_bound(lnN, sigma, m, K)
        if bound <= share:
            return K, bound
    return None, bound


def log_poly_selberg(m, s, spec, pol=None, *, full_output=False, method="classes", fixed_terms=None):
    """log Z^{(m)}(s) for Re(s) > 1.

    method="classes" sums over the powers P^k; method="product" sums
    Li_m(N^(-s-n)) over n. Either way the returned tail bound certifies the
    truncation; an AccuracyError is raised when the caps in ``pol`` are too
    small for ``pol.tail_bound_target``. ``fixed_terms`` forces K powers per
    primitive (classes method only) and reports the bound for that K.
    """
    if m < 1:
        raise ValueError("m must be positive")
    s = _check_s(s)
    pol = pol or DEFAULT_POLICY
    if method == "product":
        return _log_poly_selberg_product(m, s, spec, pol, full_output)
    if method != "classes":
        raise ValueError(f"unknown method {method!r}")
    sigma = s.real
    prims = spec.primitives
    share = pol.tail_bound_target / max(1, sum(p.multiplicity for p in prims))
    total = 0j
    bound_total = 0.0
    terms = 0
    for p in prims:
        lnN = math.log(p.norm)
        if fixed_terms is not None:
            K, bound = fixed_terms, _class_bound(lnN, sigma, m, fixed_terms)
        else:
            K, bound = _class_count(lnN, sigma, m, share, pol.k_max)
        if K is None:
            raise AccuracyError(
                f"k_max={pol.k_max} cannot certify a tail below {pol.tail_bound_target:g} at s={s}",
                estimate=None, error=bound)
        acc = 0j
        for k in range(1, K + 1):
            acc += cmath.exp(-k * s * lnN) / (k ** m * (1 - p.norm ** -k))
        total -= p.multiplicity * lnN ** (1 - m) * acc
        bound_total += p.multiplicity * bound
        terms += K
    if full_output:
        return SelbergValue(total, bound_total, terms)
    return total


def _log_poly_selberg_product(m, s, spec, pol, full_output):
    sigma = s.real
    share = pol.tail_bound_target / max(1, 2 * sum(p.multiplicity for p in spec.primitives))
    total = 0j
    bound_total = 0.0
    terms = 0
    for p in spec.primitives:
        lnN = math.log(p.norm)
        N = p.norm
        weight = p.multiplicity * lnN ** (1 - m)
        # remainder over n > n0: sum |Li_m(N^(-s-n))| <= N^(-sigma-n0-1)/((1-N^-1)(1-N^-sigma))
        n0 = None
        for n in range(pol.n_max + 1):
            b = weight * N ** (-sigma - n - 1) / ((1 - 1 / N) * (1 - N ** -sigma))
            if b <= share:
                n0, tail_n = n, b
                break
        if n0 is None:
            raise AccuracyError(f"n_max={pol.n_max} cannot certify the product tail at s={s}")
        acc = 0j
        li_bound = 0.0
        for n in range(n0 + 1):
            v, b = polylog(m, cmath.exp(-(s + n) * lnN), full_output=True)
            acc += v
            li_bound += b
        total -= weight * acc
        bound_total += tail_n + weight * li_bound
        terms += n0 + 1
    if full_output:
        return SelbergValue(total, bound_total, terms)
    return total


def log_selberg(s, spec, pol=None, **kw):
    """log Z(s), the classical Selberg zeta (degree 1)."""
    return log_poly_selberg(1, s, spec, pol, **kw)


def log_milnor_selberg(r, s, spec, pol=None, *, full_output=False):
    """log Z_{G,r}(s) = sum_{m=0}^{r-1} e_m(t) log Z^{(r+m)}(s) with
    e_m(t) = (-1)^(r-1) (r-1)! (r-1+m)!/(m!(r-1-m)!) (2t)^(r-1-m)."""
    s = _check_s(s)
    t = s - 0.5
    value = 0j
    bound = 0.0
    for degree, e in milnor_selberg_exponents(r).items():
        part = log_poly_selberg(degree, s, spec, pol, full_output=True)
        c = e(t)
        value += c * part.value
        bound += abs(c) * part.tail_bound
    return SelbergValue(value, bound, 0) if full_output else value


def log_higher_det_geom(r, s, spec, pol=None, *, full_output=False):
    """(g - 1) log phi_r(s) + log Z_{G,r}(s)."""
    part = log_milnor_selberg(r, s, spec, pol, full_output=True)
    value = (spec.genus - 1) * log_phi(r, s) + part.value
    return SelbergValue(value, part.tail_bound, 0) if full_output else value


def gamma_shift_sum(r, s):
    """sum_{l=0}^{2r-1} alpha-hat_{r,l}(t) log Gamma_{2r}(s + l)."""
    s = complex(s)
    t = s - 0.5
    return sum(alpha_hat_poly(r, l)(t) * log_barnes_gamma(2 * r, s + l) for l in range(2 * r))


def gamma_shift_residual(r, s):
    """gamma_shift_sum(r, s) - sum_m alpha_{r,m}(t) log Gamma_m(s)."""
    s = complex(s)
    t = s - 0.5
    rhs = sum(alpha_poly(r, m)(t) * log_barnes_gamma(m, s) for m in range(1, 2 * r + 1))
    return gamma_shift_sum(r, s) - rhs


def log_complete_MS(r, s, spec, pol=None, *, full_output=False):
    """log Xi_{G,r}(s) = (g-1) sum_l alpha-hat_{r,l}(t) log Gamma_{2r}(s+l) + log Z_{G,r}(s)."""
    part = log_milnor_selberg(r, s, spec, pol, full_output=True)
    value = (spec.genus - 1) * gamma_shift_sum(r, s) + part.value
    return SelbergValue(value, part.tail_bound, 0) if full_output else value


def complete_zeta_residual(r, s, spec, pol=None):
    """log Xi - (-C_r)(g-1) t^(2r) - log D, which vanishes identically."""
    s = _check_s(s)
    t = s - 0.5
    lead = -float(C_const(r)) * (spec.genus - 1) * t ** (2 * r)
    return log_complete_MS(r, s, spec, pol) - lead - log_higher_det_geom(r, s, spec, pol)


def ladder_residual_poly(m, s, spec, pol=None, cfg=None):
    """d/ds log Z^{(m)}(s) + log Z^{(m-1)}(s), derivative by finite differences."""
    if m < 2:
        raise ValueError("the ladder needs m >= 2")
    s = _check_s(s)
    cfg = cfg or DEFAULT_TOL
    if s.real - 4 * cfg.fd_step <= 1:
        raise DomainError("s is too close to Re(s) = 1 for the difference stencil")
    d = numeric_dw(lambda x: log_poly_selberg(m, x, spec, pol), s, cfg)
    return d + log_poly_selberg(m - 1, s, spec, pol)


def ladder_residual_MS(r, s, spec, pol=None, cfg=None):
    """(2s-1)^(-1) d/ds log Z_{G,r}(s) - (r-1) log Z_{G,r-1}(s)."""
    if r < 2:
        raise ValueError("the ladder needs r >= 2")
    s = _check_s(s)
    cfg = cfg or DEFAULT_TOL
    if s.real - 4 * cfg.fd_step <= 1:
        raise DomainError("s is too close to Re(s) = 1 for the difference stencil")
    d = numeric_dw(lambda x: log_milnor_selberg(r, x, spec, pol), s, cfg)
    return d / (2 * s - 1) - (r - 1) * log_milnor_selberg(r - 1, s, spec, pol)


def iterated_integral_check(m, s, a, spec, pol=None, cfg=None):
    """Residual of the iterated-integral representation of log Z^{(m)}.

    log Z^{(m)}(s) = sum_{k=0}^{m-2} (-1)^k (s-a)^k/k! log Z^{(m-k)}(a)
                     + (-1)^(m-1) I(s),
    where the (m-1)-fold iterated integral of log Z from a to s is written
    as the single integral I(s) = integral_a^s (s-x)^(m-2)/(m-2)! log Z(x) dx
    along the straight segment.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    s, a = _check_s(s), _check_s(a)
    cfg = cfg or DEFAULT_TOL
    anchor = sum((-1) ** k * (s - a) ** k / math.factorial(k) * log_poly_selberg(m - k, a, spec, pol)
                 for k in range(m - 1))
    if s == a:
        integral = 0j
    else:
        d = s - a

        def f(u):
            return (1 - u) ** (m - 2) * log_poly_selberg(1, a + u * d, spec, pol)

        integral = d ** (m - 1) / math.factorial(m - 2) * quadrature(f, 0.0, 1.0, cfg)
    return anchor + (-1) ** (m - 1) * integral - log_poly_selberg(m, s, spec, pol)


@dataclass(frozen=True)
class DiagnosticResult:
    """Report-only residual; never used as a pass/fail criterion."""

    residual: complex
    right_side: complex
    note: str
    diagnostic: bool = True


def fe_sine_assembly(r, s):
    """sum_j (-alpha_{r,j}(t)) log S_j(s), the sine factor of the functional equation."""
    s = complex(s)
    t = s - 0.5
    return sum(e(t) * log_mult_sine(j, s) for j, e in sine_exponents(r).items())


def fe_diagnostic_MS(r, s, spec, left_value, pol=None, right_zeta_value=None):
    """Compare a caller-supplied continued value of log Z_{G,r}(1-s) with
    (g-1) * sine assembly + log Z_{G,r}(s).

    The Euler product cannot reach both s and 1-s, so the left side must
    come from elsewhere and ``right_zeta_value`` may replace the Euler
    product on the right.
    """
    s = complex(s)
    if right_zeta_value is None:
        right_zeta_value = log_milnor_selberg(r, s, spec, pol)
    rhs = (spec.genus - 1) * fe_sine_assembly(r, s) + right_zeta_value
    return DiagnosticResult(complex(left_value) - rhs, rhs,
                            "diagnostic only: the left side was supplied by the caller")
