"""Scalar kernels: exact combinatorics, gamma-family functions, the
branch-corrected logarithm, adaptive quadrature and numerical derivatives.
"""

import cmath
import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import AccuracyError, BranchCutError, DomainError, PoleError

# Values are plain Python complex numbers throughout the package.
CValue = complex


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical targets shared by the evaluation and verification code."""

    abs_tol: float = 1e-8
    rel_tol: float = 1e-10
    quadrature_target: float = 1e-12
    fd_step: float = 1e-4

    def __post_init__(self):
        for name in ("abs_tol", "rel_tol", "quadrature_target", "fd_step"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")

    def accepts(self, residual, scale=1.0):
        return abs(residual) <= self.abs_tol + self.rel_tol * abs(scale)


DEFAULT_TOL = ToleranceConfig()


# ---------------------------------------------------------------------------
# exact combinatorics

@lru_cache(maxsize=None)
def bernoulli_numbers(n):
    """Return (B_0, ..., B_n) as Fractions, with B_1 = -1/2.

    Obtained by inverting the exponential series (e^x - 1)/x term by term.
    """
    # x/(e^x - 1) = sum B_k x^k / k!; (e^x - 1)/x = sum x^k/(k+1)!
    denom = [Fraction(1, math.factorial(k + 1)) for k in range(n + 1)]
    inv = [Fraction(1)]
    for k in range(1, n + 1):
        inv.append(-sum(denom[i] * inv[k - i] for i in range(1, k + 1)))
    return tuple(c * math.factorial(k) for k, c in enumerate(inv))


def bernoulli_number(n):
    return bernoulli_numbers(n)[n]


@lru_cache(maxsize=None)
def bernoulli_poly_coeffs(m):
    """Ascending coefficients of B_m(z) as Fractions.

    The generating function x e^{zx}/(e^x - 1) is the product of the two
    series x/(e^x - 1) and e^{zx}; the coefficient of x^m z^k gives
    binom(m, k) B_{m-k}.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    b = bernoulli_numbers(m)
    return tuple(math.comb(m, k) * b[m - k] for k in range(m + 1))


def _horner(coeffs, z):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def bernoulli_poly(m, z):
    """B_m(z). Exact for int/Fraction arguments, complex otherwise."""
    coeffs = bernoulli_poly_coeffs(m)
    if isinstance(z, (int, Fraction)):
        return _horner(coeffs, Fraction(z))
    return complex(_horner([float(c) for c in coeffs], complex(z)))


@lru_cache(maxsize=None)
def _stirling_row(n):
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    k = n - 1
    # s(n, m) = s(n-1, m-1) - (n-1) s(n-1, m)
    row = []
    for m in range(n + 1):
        a = prev[m - 1] if m >= 1 else 0
        b = prev[m] if m <= k else 0
        row.append(a - k * b)
    return tuple(row)


def stirling_first_signed(n, m):
    """Signed Stirling number of the first kind s(n, m).

    With this sign convention the rising factorial expands as
    (z)_n = z(z+1)...(z+n-1) = sum_m (-1)^(n+m) s(n, m) z^m,
    so s(2, 1) = -1 and s(3, 1) = 2. Out-of-range m gives 0.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if m < 0 or m > n:
        return 0
    return _stirling_row(n)[m]


@lru_cache(maxsize=None)
def harmonic(m):
    """H(m) = 1 + 1/2 + ... + 1/m, with H(m) = 0 for m <= 0."""
    if m <= 0:
        return Fraction(0)
    return harmonic(m - 1) + Fraction(1, m)


def harmonic_range(m, n):
    """H(m, n) = 1/m + ... + 1/n."""
    if not (n >= m >= 1):
        raise ValueError("harmonic_range needs n >= m >= 1")
    return harmonic(n) - harmonic(m - 1)


# ---------------------------------------------------------------------------
# gamma family

EULER_GAMMA = 0.57721566490153286060651209008240243

_STIRLING_SHIFT = 12.0
_ASYMP_TERMS = 10
_B2K = [float(bernoulli_number(2 * k)) for k in range(_ASYMP_TERMS + 1)]


def _is_nonpositive_integer(z):
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def digamma(z):
    """psi(z) = Gamma'(z)/Gamma(z) for complex z off the poles."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"digamma has a pole at {z}")
    acc = 0j
    while z.real < _STIRLING_SHIFT:
        acc -= 1 / z
        z += 1
    inv2 = 1 / (z * z)
    series = 0j
    p = inv2
    for k in range(1, _ASYMP_TERMS + 1):
        series += _B2K[k] / (2 * k) * p
        p *= inv2
    return acc + cmath.log(z) - 0.5 / z - series


def loggamma(z):
    """log Gamma(z) for Re(z) > 0, continuous from the positive axis."""
    z = complex(z)
    if z.real <= 0:
        raise DomainError("loggamma is provided for Re(z) > 0 only")
    acc = 0j
    while z.real < _STIRLING_SHIFT:
        acc -= cmath.log(z)
        z += 1
    inv = 1 / z
    inv2 = inv * inv
    series = 0j
    p = inv
    for k in range(1, _ASYMP_TERMS + 1):
        series += _B2K[k] / (2 * k * (2 * k - 1)) * p
        p *= inv2
    return acc + (z - 0.5) * cmath.log(z) - z + 0.5 * math.log(2 * math.pi) + series


def rgamma(z):
    """1/Gamma(z), entire; exact zeros at the non-positive integers."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        return 0j
    prod = 1 + 0j
    while z.real < _STIRLING_SHIFT:
        prod *= z
        z += 1
    return prod * cmath.exp(-loggamma(z))


# ---------------------------------------------------------------------------
# branch-corrected logarithm

def _arg_plus(u):
    a = math.atan2(u.imag, u.real)
    return a + 2 * math.pi if a < -math.pi / 2 else a


def _arg_minus(u):
    a = math.atan2(u.imag, u.real)
    return a - 2 * math.pi if a >= math.pi / 2 else a


def branch_points(lam):
    """Return (alpha_plus, alpha_minus) with lam - s(1-s) = (s-a+)(s-a-)."""
    if lam < 0:
        raise DomainError("eigenvalue must be non-negative")
    if lam < 0.25:
        rho = math.sqrt(0.25 - lam)
        return complex(0.5 - rho), complex(0.5 + rho)
    r = math.sqrt(lam - 0.25)
    return complex(0.5, r), complex(0.5, -r)


def on_branch_cut(lam, s):
    """True if s lies on one of the two cuts attached to eigenvalue lam."""
    s = complex(s)
    ap, am = branch_points(lam)
    if lam < 0.25:
        return (s.real == ap.real and s.imag <= 0) or (s.real == am.real and s.imag >= 0)
    return s.real == 0.5 and abs(s.imag) >= ap.imag


def branch_log_j(lam, s):
    """Logarithm of lam - s(1-s) on the plane cut along the two rays
    attached to the roots of s^2 - s + lam.

    For lam >= 1/4 this is the principal logarithm. For 0 <= lam < 1/4 the
    imaginary part is arg+(s - a+) + arg-(s - a-) with arg+ in [-pi/2, 3pi/2)
    and arg- in [-3pi/2, pi/2), which makes the result symmetric under
    s -> 1 - s.
    """
    s = complex(s)
    if on_branch_cut(lam, s):
        raise BranchCutError(f"s={s} lies on a branch cut for lambda={lam}")
    value = lam - s * (1 - s)
    if lam >= 0.25:
        return cmath.log(value)
    ap, am = branch_points(lam)
    return complex(math.log(abs(value)), _arg_plus(s - ap) + _arg_minus(s - am))


@dataclass(frozen=True)
class EvalPoint:
    """A point s together with t = s - 1/2 and region tags.

    ``in_u`` is membership in {Re(-s(1-s)) > -T} for the stored threshold T.
    ``in_omega`` is None unless eigenvalues were supplied, in which case it
    reports whether s avoids every branch cut they generate.
    """

    s: complex
    t: complex = field(init=False)
    threshold: float = 0.0
    eigenvalues: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "t", self.s - 0.5)
        object.__setattr__(self, "eigenvalues", tuple(float(x) for x in self.eigenvalues))

    @property
    def in_u(self):
        return (-self.s * (1 - self.s)).real > -self.threshold

    @property
    def in_omega(self):
        if not self.eigenvalues:
            return None
        return not any(on_branch_cut(lam, self.s) for lam in self.eigenvalues)


# ---------------------------------------------------------------------------
# adaptive Gauss-Kronrod quadrature

_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KW = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GW = np.zeros(15)
_GW[[1, 3, 5, 13, 11, 9]] = np.concatenate([_WG[:3], _WG[:3]])
_GW[7] = _WG[3]


def _gk15(f, a, b, vectorized):
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    x = c + h * _NODES
    if vectorized:
        fx = np.asarray(f(x), dtype=complex)
    else:
        fx = np.array([f(float(xi)) for xi in x], dtype=complex)
    if not np.all(np.isfinite(fx)):
        raise DomainError(f"integrand not finite on [{a}, {b}]")
    k = h * np.dot(_KW, fx)
    g = h * np.dot(_GW, fx)
    return complex(k), abs(k - g), float(abs(h) * np.dot(_KW, np.abs(fx)))


def quadrature(f, a, b, cfg=None, *, full_output=False, limit=2000, vectorized=False):
    """Adaptive Gauss-Kronrod (7/15) integral of f over [a, b].

    f may be complex valued. Interior nodes never touch the endpoints, so
    integrable endpoint singularities are allowed. The estimate is accepted
    once the summed Kronrod-Gauss differences drop below
    ``cfg.quadrature_target`` (or below the rounding floor). Otherwise an
    AccuracyError is raised carrying the best estimate.
    """
    cfg = cfg or DEFAULT_TOL
    a = float(a)
    b = float(b)
    if a == b:
        return (0j, 0.0) if full_output else 0j
    value, err, absint = _gk15(f, a, b, vectorized)
    heap = [(-err, a, b, value, absint)]
    total, total_err, total_abs = value, err, absint
    eps = np.finfo(float).eps
    while True:
        floor = 50 * eps * total_abs
        if total_err <= max(cfg.quadrature_target, floor):
            break
        if len(heap) >= limit:
            raise AccuracyError(
                f"quadrature did not converge on [{a}, {b}] (error {total_err:.3g})",
                estimate=total, error=total_err)
        neg_err, lo, hi, val, ai = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            raise AccuracyError("quadrature interval underflow", estimate=total, error=total_err)
        v1, e1, a1 = _gk15(f, lo, mid, vectorized)
        v2, e2, a2 = _gk15(f, mid, hi, vectorized)
        total += v1 + v2 - val
        total_err += e1 + e2 + neg_err
        total_abs += a1 + a2 - ai
        heapq.heappush(heap, (-e1, lo, mid, v1, a1))
        heapq.heappush(heap, (-e2, mid, hi, v2, a2))
    # recompute the sum from the pieces to avoid drift from running updates
    total = complex(math.fsum(p[3].real for p in heap), math.fsum(p[3].imag for p in heap))
    total_err = math.fsum(-p[0] for p in heap)
    return (total, total_err) if full_output else total


# ---------------------------------------------------------------------------
# numerical differentiation

@dataclass(frozen=True)
class DerivativeInfo:
    value: complex
    error: float
    observed_order: float
    steps: tuple


def numeric_dw(f, w0, cfg=None, *, full_output=False):
    """Central-difference derivative of f at w0 with two Richardson levels.

    Uses steps h, h/2, h/4 with h = cfg.fd_step. The observed order of the
    raw differences is reported; if it is far from 2 while the differences
    are above the rounding floor, the table is inconsistent and an
    AccuracyError is raised.
    """
    cfg = cfg or DEFAULT_TOL
    w0 = w0 if isinstance(w0, complex) else float(w0)
    h = cfg.fd_step
    steps = (h, h / 2, h / 4)
    d = []
    scale = 0.0
    for hk in steps:
        fp, fm = complex(f(w0 + hk)), complex(f(w0 - hk))
        scale = max(scale, abs(fp), abs(fm))
        d.append((fp - fm) / (2 * hk))
    r1 = [(4 * d[1] - d[0]) / 3, (4 * d[2] - d[1]) / 3]
    value = (16 * r1[1] - r1[0]) / 15
    noise = 1e3 * np.finfo(float).eps * max(scale, 1.0) / steps[-1]
    diff_a, diff_b = abs(d[0] - d[1]), abs(d[1] - d[2])
    if diff_b > noise and diff_a > noise:
        order = math.log2(diff_a / diff_b)
        if not 1.0 < order < 3.0 and diff_b > 1e3 * noise:
            raise AccuracyError(
                f"inconsistent Richardson table (observed order {order:.2f})",
                estimate=value, error=abs(r1[1] - r1[0]))
    else:
        order = math.nan
    error = max(abs(r1[1] - r1[0]) / 15, noise)
    if full_output:
        return DerivativeInfo(value, error, order, steps)
    return value
