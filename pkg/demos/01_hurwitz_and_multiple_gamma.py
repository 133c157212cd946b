"""Hurwitz zeta and the multiple gamma family, checked against classical values."""

import cmath
import math
from fractions import Fraction

import numpy as np

from higherdet import hurwitz as hz
from higherdet import multigamma as mg
from higherdet import numkernel as nk

# zeta(2, 1) is pi^2/6 and zeta(-1, 1/2) is 1/24
print("zeta(2, 1)     ", hz.hurwitz_zeta(2, 1).real, math.pi ** 2 / 6)
print("zeta(-1, 1/2)  ", hz.hurwitz_zeta(-1, 0.5).real, 1 / 24)

# Lerch: exp(zeta'(0, z)) = Gamma(z)/sqrt(2 pi)
for z in (0.5, 1.5, 4.0):
    lhs = cmath.exp(hz.hurwitz_zeta_dw(0, z)).real
    print(f"Lerch at z={z}: {lhs:.15f} vs {math.gamma(z) / math.sqrt(2 * math.pi):.15f}")

# large negative w goes through Hermite's integral; zeta(-30, z) = -B_31(z)/31
# exactly. B_31(1/2) = 0, so near there the error is absolute, about 1e-16
# of the ~1e8 size the function has nearby
for z in (Fraction(1, 2), Fraction(3, 2), Fraction(3)):
    exact = -nk.bernoulli_poly(31, z) / 31
    print(f"zeta(-30, {z}) = {hz.hurwitz_zeta(-30, float(z)).real:+.12e}  exact {float(exact):+.12e}")

# Barnes G at integers is a superfactorial: G(n+2) = prod_{k<=n} k!
for n in range(1, 6):
    G = cmath.exp(mg.log_vigneras_G(2, n + 2)).real
    sf = math.prod(math.factorial(k) for k in range(1, n + 1))
    print(f"G({n + 2}) = {G:.6f}  superfactorial {sf}")

# the ladder Gamma_n(z+1) = Gamma_n(z)/Gamma_{n-1}(z) along a line
zs = np.linspace(0.3, 3.0, 7) + 0.5j
res = [abs(mg.log_barnes_gamma(3, z + 1) - mg.log_barnes_gamma(3, z) + mg.log_barnes_gamma(2, z)) for z in zs]
print("Gamma_3 ladder max residual", max(res))

# multiple sine of order 1 is 2 sin(pi z)
x = np.linspace(0.1, 0.9, 5)
print("log S_1 vs log 2 sin:", np.max(np.abs([mg.log_mult_sine(1, t).real - math.log(2 * math.sin(math.pi * t)) for t in x])))
