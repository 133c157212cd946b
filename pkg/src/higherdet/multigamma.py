"""Multiple gamma family in log space.

All functions return complex logarithms computed directly from zeta
derivatives or integrals, so products with non-integer exponents are
always exp(exponent * log) with the value returned here.
"""

import cmath
import math

from .errors import DomainError, PoleError
from .hurwitz import hurwitz_zeta, hurwitz_zeta_dw, zeta_prime_neg
from .numkernel import DEFAULT_TOL, quadrature
from .polycoeff import b_poly

# Log values are plain complex numbers.
LogValue = complex


def _require_right_half(z, what):
    z = complex(z)
    if z.real <= 0:
        raise DomainError(f"{what} needs Re(z) > 0, got z={z}")
    return z


def barnes_zeta(n, w, z):
    """Barnes multiple zeta zeta_n(w, z) = sum_m b_{n,m}(z) zeta(w - m, z)."""
    if n < 1:
        raise ValueError("n must be positive")
    z = _require_right_half(z, "barnes_zeta")
    w = complex(w)
    if w.imag == 0 and w.real in range(1, n + 1):
        raise PoleError(f"zeta_{n}(w, z) has a pole at w={w.real:g}")
    return sum(b_poly(n, m)(z) * hurwitz_zeta(w - m, z) for m in range(n))


def log_multigamma(n, r, z):
    """log Gamma_{n,r}(z) = sum_m b_{n,m}(z) d/dw zeta(1 - r - m, z)."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    z = _require_right_half(z, "log_multigamma")
    if n == 0:
        return -cmath.log(z)
    return sum(b_poly(n, m)(z) * hurwitz_zeta_dw(1 - r - m, z) for m in range(n))


def log_barnes_gamma(n, z):
    """log Gamma_n(z); Gamma_0(z) = 1/z."""
    return log_multigamma(n, 1, z)


def log_milnor_gamma(r, z):
    """Milnor gamma: d/dw zeta(w, z) at w = 1 - r."""
    if r < 1:
        raise ValueError("r must be positive")
    z = _require_right_half(z, "log_milnor_gamma")
    return hurwitz_zeta_dw(1 - r, z)


def log_vigneras_G(n, z):
    """log G_n(z) = (-1)^n sum_j b_{n,j}(z) zeta'(-j) + (-1)^(n-1) log Gamma_n(z).

    G_1 is Euler's gamma function and G_2 is the Barnes G-function.
    """
    if n < 1:
        raise ValueError("n must be positive")
    z = _require_right_half(z, "log_vigneras_G")
    const = sum(b_poly(n, j)(z) * zeta_prime_neg(j) for j in range(n))
    return (-1) ** n * const + (-1) ** (n - 1) * log_barnes_gamma(n, z)


def log_mult_sine(n, z):
    """log S_n(z) = -log Gamma_n(z) + (-1)^n log Gamma_n(n - z).

    Both arguments must have positive real part, so 0 < Re(z) < n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    z = complex(z)
    if not 0 < z.real < n:
        raise DomainError(f"log_mult_sine needs 0 < Re(z) < {n}, got z={z}")
    return -log_barnes_gamma(n, z) + (-1) ** n * log_barnes_gamma(n, n - z)


def log_basic_sine(n, x, cfg=None):
    """log of the basic multiple sine: integral_0^x pi xi^(n-1) cot(pi xi) dxi.

    For n = 1 the 1/xi singularity is split off, giving
    log(2 pi x) + integral_0^x (pi cot(pi xi) - 1/xi) dxi, which equals
    log(2 sin(pi x)).
    """
    if n < 1:
        raise ValueError("n must be positive")
    x = float(x)
    if not abs(x) < 1:
        raise DomainError("log_basic_sine needs |x| < 1")
    if x == 0:
        if n == 1:
            raise DomainError("the basic sine of order 1 vanishes at 0")
        return 0j

    def cot_part(xi):
        if xi == 0:
            return 0.0
        return math.pi / math.tan(math.pi * xi) - 1 / xi

    if n == 1:
        if x < 0:
            raise DomainError("order 1 needs 0 < x < 1")
        return complex(math.log(2 * math.pi * x)) + quadrature(cot_part, 0.0, x, cfg)

    def integrand(xi):
        if xi == 0:
            return 1.0 if n == 2 else 0.0
        return xi ** (n - 1) * math.pi / math.tan(math.pi * xi)

    return quadrature(integrand, 0.0, x, cfg)


def log_basic_cosine(n, x, cfg=None):
    """log of the basic multiple cosine: -integral_0^x pi xi^(n-1) tan(pi xi) dxi."""
    if n < 1:
        raise ValueError("n must be positive")
    x = float(x)
    if not abs(x) < 0.5:
        raise DomainError("log_basic_cosine needs |x| < 1/2")

    def integrand(xi):
        return -math.pi * xi ** (n - 1) * math.tan(math.pi * xi)

    return quadrature(integrand, 0.0, x, cfg or DEFAULT_TOL)
