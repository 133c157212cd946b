"""Hurwitz zeta function and its derivative in w.

Euler-Maclaurin summation is the main route. For Re(w) < -4 without an
explicit plan, Hermite's integral is used instead because the
Euler-Maclaurin terms then cancel far beyond double precision.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, PoleError
from .numkernel import ToleranceConfig, bernoulli_number, quadrature

_MAX_ORDER = 24
# B_{2k}/(2k)! for k = 1..12
_BK_FACT = [float(bernoulli_number(2 * k) / math.factorial(2 * k)) for k in range(1, _MAX_ORDER // 2 + 1)]


@dataclass(frozen=True)
class EulerMaclaurinPlan:
    """N explicit terms, then Bernoulli corrections B_2 .. B_M at a = N + z."""

    N: int
    M: int = 12

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be at least 1")
        if self.M < 2 or self.M % 2 or self.M > _MAX_ORDER:
            raise ValueError("M must be even with 2 <= M <= 24")


def _truncation_estimate(w, a, M):
    """Size of the first omitted Bernoulli correction at a = N + z."""
    k = M // 2 + 1
    c = abs(float(bernoulli_number(2 * k) / math.factorial(2 * k)))
    p = 1.0
    for i in range(2 * k - 1):
        p *= max(abs(w + i), 1.0)  # also bounds the w-derivative near integers
    return c * p * abs(cmath.exp((-w - 2 * k + 1) * cmath.log(a)))


def auto_plan(w, z):
    """Smallest shift N whose truncation estimate is below the rounding level.

    A small N keeps the explicit sum short, which matters for Re(w) < 0
    where the terms grow and cancel.
    """
    w, z = complex(w), complex(z)
    M = _MAX_ORDER
    # |z^(-w)| tracks the size of the result when Re(w) > 1, where it can be tiny
    head = abs(cmath.exp(-w * cmath.log(z)))
    floor = 1.0 if w.real <= 1 else 0.0
    for N in range(1, 400):
        a = N + z
        level = 2e-17 * max(floor, head, abs(cmath.exp((1 - w) * cmath.log(a))))
        if abs(a) > 2 and _truncation_estimate(w, a, M) <= level:
            return EulerMaclaurinPlan(N=N, M=M)
    return EulerMaclaurinPlan(N=400, M=M)


def _check(w, z):
    if z.real <= 0:
        raise DomainError(f"Hurwitz zeta needs Re(z) > 0, got z={z}")
    if w == 1:
        raise PoleError("Hurwitz zeta has a pole at w = 1")


@lru_cache(maxsize=65536)
def _zeta_pair(w, z, N, M):
    """Return (zeta(w, z), d/dw zeta(w, z)) for one plan."""
    a = N + z
    la = cmath.log(a)
    if w.imag == 0 and z.imag == 0:
        # real powers are correctly rounded, exp(-w log n) is not; this
        # matters when Re(w) < 0 and the terms cancel
        n = np.arange(N, dtype=float) + z.real
        logn = np.log(n)
        powers = np.power(n, -w.real)
        s0 = complex(math.fsum(powers))
        d0 = complex(-math.fsum(logn * powers))
        a_w = complex(a.real ** -w.real)
    else:
        n = np.arange(N, dtype=float) + z
        logn = np.log(n)
        powers = np.exp(-w * logn)
        s0 = complex(np.sum(powers))
        d0 = complex(-np.sum(logn * powers))
        a_w = cmath.exp(-w * la)  # a^{-w}
    wm1 = w - 1
    # integral tail a^{1-w}/(w-1)
    tail = a * a_w / wm1
    dtail = -la * tail - a * a_w / (wm1 * wm1)
    half = 0.5 * a_w
    dhalf = -la * half

    corr = 0j
    dcorr = 0j
    p, dp = w, 1.0 + 0j  # rising factorial (w)_{2k-1} and its derivative
    apow = a_w / a       # a^{-w-2k+1} at k = 1
    inv_a2 = 1 / (a * a)
    for k in range(1, M // 2 + 1):
        c = _BK_FACT[k - 1]
        corr += c * p * apow
        dcorr += c * (dp - la * p) * apow
        q = (w + 2 * k - 1) * (w + 2 * k)
        dq = 2 * w + 4 * k - 1
        p, dp = p * q, dp * q + p * dq
        apow *= inv_a2
    return s0 + tail + half + corr, d0 + dtail + dhalf + dcorr


# below this Re(w) the Euler-Maclaurin sum cancels badly in double precision
HERMITE_BELOW = -4.0


def _hermite_integrand(w, z, t, deriv):
    """Integrand of the Hermite representation, written without cancellation.

    (z-it)^(-w) - (z+it)^(-w) = (z+it)^(-w) expm1(2iw arctan(t/z)) and the
    w-derivative of that difference is -log(z-it) * diff + 2i arctan(t/z) (z+it)^(-w).
    """
    pp = np.exp(-w * np.log(z + 1j * t))
    at = np.arctan(t / z)
    x = 2j * w * at
    # complex expm1 from the real one
    em1 = np.expm1(x.real) * np.cos(x.imag) - 2 * np.sin(x.imag / 2) ** 2 + 1j * np.exp(x.real) * np.sin(x.imag)
    diff = pp * em1
    if deriv:
        diff = -np.log(z - 1j * t) * diff + 2j * at * pp
    return diff / (1j * np.expm1(2 * np.pi * t))


@lru_cache(maxsize=4096)
def _hermite_pair(w, z):
    """(zeta, d/dw zeta) from Hermite's integral, for 0 < Re(z) <= 1.

    zeta(w, z) = z^(-w)/2 + z^(1-w)/(w-1)
                 + integral_0^inf ((z-it)^(-w) - (z+it)^(-w)) / (i (e^(2 pi t) - 1)) dt.
    The integrand peaks near t = |w|/(2 pi) with a size comparable to the
    result, so this stays accurate where Euler-Maclaurin cancels.
    """
    lz = cmath.log(z)
    zw = cmath.exp(-w * lz)
    base = 0.5 * zw + z * zw / (w - 1)
    dbase = -lz * base - z * zw / (w - 1) ** 2
    peak = max(abs(w), 1.0) / (2 * math.pi)
    grid = np.linspace(1e-3, peak + 10, 400)
    out = []
    for deriv, b in ((False, base), (True, dbase)):
        size = max(float(np.max(np.abs(_hermite_integrand(w, z, grid, deriv)))), abs(b), 1e-300)
        cfg = ToleranceConfig(quadrature_target=1e-16 * size)
        total = 0j
        a, width = 0.0, 1.0
        while True:
            piece = quadrature(lambda t: _hermite_integrand(w, z, t, deriv), a, a + width, cfg, vectorized=True)
            total += piece
            a += width
            if a > peak + 2 and abs(piece) <= 1e-18 * size:
                break
            width = min(1.5 * width, 8.0)
        out.append(b + total)
    return out[0], out[1]


def _negative_w_pair(w, z):
    """Shift z into 0 < Re(z) <= 1, evaluate there and remove the first k
    terms: zeta(w, z0 + k) = zeta(w, z0) - sum_{j<k} (z0 + j)^(-w)."""
    k = max(0, math.ceil(z.real) - 1)
    z0 = z - k
    v, d = _hermite_pair(w, z0)
    if k:
        n = z0 + np.arange(k)
        logn = np.log(n)
        powers = np.exp(-w * logn)
        v -= complex(np.sum(powers))
        d += complex(np.sum(logn * powers))
    return v, d


def _evaluate(w, z, plan):
    w, z = complex(w), complex(z)
    _check(w, z)
    if plan is None and w.real < HERMITE_BELOW:
        return _negative_w_pair(w, z)
    plan = plan or auto_plan(w, z)
    return _zeta_pair(w, z, plan.N, plan.M)


def hurwitz_zeta(w, z, plan=None):
    """zeta(w, z) = sum_{n>=0} (n+z)^{-w}, continued to all w != 1 (Re z > 0)."""
    return _evaluate(w, z, plan)[0]


def hurwitz_zeta_dw(w, z, plan=None):
    """Partial derivative of zeta(w, z) with respect to w.

    The Euler-Maclaurin representation is differentiated term by term, so
    no finite differences are involved.
    """
    return _evaluate(w, z, plan)[1]


@lru_cache(maxsize=None)
def zeta_prime_neg(l):
    """zeta'(-l) for the Riemann zeta function, l >= 0."""
    if l < 0:
        raise ValueError("l must be non-negative")
    return hurwitz_zeta_dw(-l, 1).real


_HALF_TERMS = 20000


@lru_cache(maxsize=None)
def odd_zeta_half(j):
    """zeta(2j+1, 1/2) = sum_{n>=0} (n+1/2)^{-(2j+1)} by direct summation.

    The remainder after the explicit terms is replaced by the midpoint
    integral N^{-2j}/(2j), whose own error is below 1e-17 here.
    """
    if j < 1:
        raise ValueError("j must be positive")
    p = 2 * j + 1
    n = np.arange(_HALF_TERMS, dtype=float)[::-1] + 0.5
    head = float(np.sum(n ** (-p)))
    tail = _HALF_TERMS ** (1 - p) / (p - 1)
    return head + tail
