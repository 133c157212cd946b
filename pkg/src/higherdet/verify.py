"""Verification suites: every identity the library relies on, evaluated at
fixed sample points and reported as residuals against tolerances.

Exact identities use tolerance 0 and report residual 0 (holds) or 1
(fails). Numerical identities report the absolute residual.
"""

import cmath
import json
import math
import random
import time
import traceback
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import gammafactor as gf
from . import hurwitz as hz
from . import multigamma as mg
from . import numkernel as nk
from . import polycoeff as pc
from . import selberg as sb
from .spectrum import bundled_names, bundled_spectrum

SUITES = ("combinatorics", "hurwitz", "multigamma", "gammafactor", "selberg")


@dataclass
class Case:
    identity: str
    point: str
    residual: float
    tolerance: float

    @property
    def passed(self):
        return bool(self.residual <= self.tolerance)

    def to_dict(self):
        return {"identity": self.identity, "point": self.point, "residual": self.residual,
                "tolerance": self.tolerance, "passed": self.passed}


@dataclass
class VerificationReport:
    suite: str
    cases: list = field(default_factory=list)
    error: str = None
    seconds: float = 0.0

    @property
    def passed(self):
        return self.error is None and all(c.passed for c in self.cases)

    @property
    def summary(self):
        n_pass = sum(c.passed for c in self.cases)
        worst = max((c.residual / c.tolerance if c.tolerance else c.residual for c in self.cases), default=0.0)
        return {
            "total": len(self.cases), "passed": n_pass, "failed": len(self.cases) - n_pass,
            "max_residual": max((c.residual for c in self.cases), default=0.0),
            "worst_ratio": worst, "crashed": self.error is not None,
        }

    def to_dict(self):
        return {"suite": self.suite, "passed": self.passed, "summary": self.summary,
                "seconds": round(self.seconds, 3), "error": self.error,
                "cases": [c.to_dict() for c in self.cases]}


class _Collector:
    def __init__(self, tol_override=None):
        self.cases = []
        self.tol_override = tol_override

    def exact(self, identity, point, holds):
        self.cases.append(Case(identity, str(point), 0.0 if holds else 1.0, 0.0))

    def close(self, identity, point, residual, tol):
        if self.tol_override is not None:
            tol = self.tol_override
        r = abs(residual)
        self.cases.append(Case(identity, _fmt(point), float(r) if math.isfinite(r) else math.inf, tol))


def _fmt(p):
    if isinstance(p, complex):
        return f"{p.real:.6g}{p.imag:+.6g}i"
    if isinstance(p, tuple):
        return "(" + ", ".join(_fmt(x) for x in p) + ")"
    return str(p)


# ---------------------------------------------------------------------------
# sample grids shared with the tests

def cross_form_grid():
    """25 points with Re(s) in (0.2, 3)."""
    return [complex(x, y) for x in (0.25, 0.8, 1.4, 2.1, 2.9) for y in (-1.5, -0.5, 0.0, 0.7, 1.6)]


def fe_grid():
    """20 points in the strip 0.1 < Re(s) < 0.9."""
    return [complex(x, y) for x in (0.15, 0.3, 0.5, 0.7, 0.85) for y in (-1.0, -0.3, 0.4, 1.2)]


def J_bridge_points():
    """Nine (m, w, t) with Re(w) > (m+1)/2."""
    pts = []
    for m in (1, 3, 5):
        h = (m + 1) / 2
        pts += [(m, h + 0.7, 0.3), (m, complex(h + 1.3, 0.8), 0.15), (m, h + 2.0, 0.42)]
    return pts


def J_derivative_points():
    return [(m, t) for m in (1, 3, 5) for t in (0.1, 0.3, 0.45)]


def _rationals(n, seed=7):
    rng = random.Random(seed)
    return [Fraction(rng.randint(-40, 40), rng.randint(1, 12)) for _ in range(n)]


def printed_examples():
    """The exponent polynomials printed for phi_1..3, Xi_1..3 and Z_{G,1..3}.

    Each entry maps a label to (computed list, expected list), both as RPoly.
    """
    P = pc.RPoly
    t2 = P.monomial(2)
    t4 = P.monomial(4)
    F = Fraction
    out = {}
    out["phi_1 alpha"] = ([pc.alpha_poly(1, j) for j in (1, 2)], [P([-2]), P([4])])
    out["phi_1 beta"] = ([pc.beta_poly(1, l) for l in (0, 1)], [P([0, -4]), P([4])])
    out["phi_1 C"] = ([P([pc.C_const(1)])], [P([-2])])
    out["phi_2 alpha"] = ([pc.alpha_poly(2, j) for j in range(1, 5)],
                          [-2 * t2 + F(1, 2), 4 * t2 - 13, P([36]), P([-24])])
    out["phi_2 beta"] = ([pc.beta_poly(2, l) for l in range(4)], [P(), -8 * t2, P([0, 12]), P([-4])])
    out["phi_2 C"] = ([P([pc.C_const(2)])], [P([F(-2, 3)])])
    out["phi_2 G exponents"] = ([pc.vigneras_exponents(2)[j] for j in range(1, 5)],
                                [-2 * t2 + F(1, 2), -4 * t2 + 13, P([36]), P([24])])
    out["phi_3 alpha"] = ([pc.alpha_poly(3, j) for j in range(1, 7)],
                          [-2 * t4 + t2 - F(1, 8), 4 * t4 - 26 * t2 + F(121, 4), 72 * t2 - 330,
                           -48 * t2 + 1020, P([-1200]), P([480])])
    out["phi_3 beta"] = ([pc.beta_poly(3, l) for l in range(6)],
                         [P(), P(), P.monomial(3, -16), 32 * t2, P([0, -20]), P([4])])
    out["phi_3 C"] = ([P([pc.C_const(3)])], [P([F(-16, 45)])])
    out["phi_3 G exponents"] = ([pc.vigneras_exponents(3)[j] for j in range(1, 7)],
                                [-2 * t4 + t2 - F(1, 8), -4 * t4 + 26 * t2 - F(121, 4), 72 * t2 - 330,
                                 48 * t2 - 1020, P([-1200]), P([-480])])
    out["phi_1 G exponents"] = ([pc.vigneras_exponents(1)[j] for j in (1, 2)], [P([-2]), P([-4])])
    out["Xi_1 alpha_hat"] = ([pc.alpha_hat_poly(1, l) for l in (0, 1)], [P([2]), P([2])])
    out["Xi_2 alpha_hat"] = ([pc.alpha_hat_poly(2, l) for l in range(4)],
                             [2 * t2 - F(1, 2), -2 * t2 - F(23, 2), -2 * t2 - F(23, 2), 2 * t2 - F(1, 2)])
    a = 2 * t4 - t2 + F(1, 8)
    b = -6 * t4 - 21 * t2 + F(237, 8)
    c = 4 * t4 + 22 * t2 + F(841, 4)
    out["Xi_3 alpha_hat"] = ([pc.alpha_hat_poly(3, l) for l in range(6)], [a, b, c, c, b, a])
    two_t = P([0, 2])
    ex = pc.milnor_selberg_exponents
    out["Z_1 expansion"] = ([ex(1)[1]], [P([1])])
    out["Z_2 expansion"] = ([ex(2)[2], ex(2)[3]], [-1 * two_t, P([-2])])
    out["Z_3 expansion"] = ([ex(3)[3], ex(3)[4], ex(3)[5]], [2 * two_t ** 2, 12 * two_t, P([24])])
    out["FE_1 sine exponents"] = ([pc.sine_exponents(1)[j] for j in (1, 2)], [P([2]), P([-4])])
    return out


# ---------------------------------------------------------------------------
# suites

def suite_combinatorics(c, cfg):
    # signed Stirling numbers reproduce the rising factorial
    for n in range(0, 13):
        rising = pc.RPoly([1])
        for i in range(n):
            rising = rising * pc.RPoly([i, 1])
        expand = pc.RPoly([(-1) ** (n + m) * nk.stirling_first_signed(n, m) for m in range(n + 1)])
        c.exact("stirling expands rising factorial", n, rising == expand)
    zs = _rationals(20)
    for m in range(0, 13):
        ok = all(nk.bernoulli_poly(m, z + 1) - nk.bernoulli_poly(m, z) == (m * z ** (m - 1) if m else 0)
                 for z in zs)
        c.exact("B_m(z+1) - B_m(z) = m z^(m-1)", m, ok)
    for r in range(1, 11):
        c.exact("C_r closed form", r, pc.C_const(r) == pc.C_const_closed(r))
        c.exact("C_r r^2 (2r-1)!!/(2r)!! = -1", r,
                pc.C_const(r) * r * r * pc._double_factorial(2 * r - 1) / pc._double_factorial(2 * r) == -1)
    for r in range(1, 9):
        c.exact("D_r(k) closed form", r, all(pc.D_coeff(r, k) == pc.D_coeff_closed(r, k)
                                             for k in range(1, 2 * r + 1)))
        c.exact("D_r(k) = 0 for k < r", r, all(pc.D_coeff(r, k) == 0 for k in range(1, r)))
        c.exact("tilde D closed form", r, all(pc.D_tilde(r, p) == pc.D_tilde_closed(r, p)
                                              for p in range(1, 2 * r + 1)))
    z_samples = _rationals(5, seed=11)
    for r in range(1, 9):
        ok = True
        for z in z_samples:
            lhs = pc.RPoly([z, 1]) ** (r - 1)
            rhs = pc.RPoly()
            for j in range(1, r + 1):
                rhs = rhs + pc.c_poly(r, j)(z) * pc.rising_binomial(j)
            ok &= lhs == rhs
        c.exact("generating identity for c_{r,j}", r, ok)
    for r in range(1, 11):
        ok = all(pc.c_poly(r, j) == pc.c_poly_recursive(r, j) for j in range(1, 11))
        c.exact("c_{r,j} recursion equals direct sum", r, ok)
        c.exact("c_{r,r} = (r-1)!", r, pc.c_poly(r, r) == pc.RPoly([math.factorial(r - 1)]))
        c.exact("c_{r,j} = 0 for j > r", r, all(pc.c_poly(r, j).is_zero() for j in range(r + 1, 12)))
    for n in range(1, 9):
        ok = True
        for j in range(0, 2 * n + 1):
            rhs = pc.RPoly()
            for k in range(n):
                rhs = rhs + pc.b_poly(n, k) * pc.RPoly([j, 1]) ** k
            ok &= rhs == pc.RPoly([math.comb(j + n - 1, n - 1)])
        c.exact("b_{n,k} generating identity", n, ok)
        c.exact("deg b_{n,k} = n-1-k", n, all(pc.b_poly(n, k).degree == n - 1 - k for k in range(n)))
    for r in range(1, 6):
        for k in range(1, 2 * r + 1):
            inv = sum((math.comb(j - 1, k - 1) * pc.alpha_poly(r, j) for j in range(k, 2 * r + 1)), pc.RPoly())
            c.exact("alpha inversion", (r, k), pc.alpha_poly(r, k) == (-1) ** k * inv)
        for m in range(1, 2 * r + 1):
            lhs = sum((math.comb(l, 2 * r - m) * pc.alpha_hat_poly(r, l) for l in range(2 * r - m, 2 * r)),
                      pc.RPoly())
            c.exact("alpha-hat binomial sum", (r, m), lhs == (-1) ** m * pc.alpha_poly(r, m))
        c.exact("alpha two construction paths", r,
                all(pc.alpha_poly(r, j) == pc.alpha_poly_via_D(r, j) for j in range(1, 2 * r + 1)))
        c.exact("alpha even in t", r, all(pc.alpha_poly(r, j).is_even() for j in range(1, 2 * r + 1)))
        c.exact("alpha_{r,2r-1} = (-1)^r (4r-2)(2r-1)!", r,
                pc.alpha_poly(r, 2 * r - 1) == pc.RPoly([(-1) ** r * (4 * r - 2) * math.factorial(2 * r - 1)]))
    for m in range(0, 9):
        c.exact("1B_m = B_m", m, pc.barnes_bernoulli(1, m) == pc.bernoulli_rpoly(m))
    for n in range(1, 5):
        c.exact("deg nB_m = m+n-1", n, all(pc.barnes_bernoulli(n, m).degree == m + n - 1 for m in range(0, 6)))
    for label, (got, want) in printed_examples().items():
        c.exact("printed example " + label, "exact", got == want)
    for r in range(1, 5):
        for k in range(1, 7):
            p = pc.multiplicity_poly_oracle(r, k, 2)
            c.exact("multiplicity polynomial even, degree 2r-2", (r, k), p.is_even() and p.degree == 2 * r - 2)
            c.exact("multiplicity polynomial linear in g-1", (r, k),
                    pc.multiplicity_poly_oracle(r, k, 3) == 2 * p)


def suite_hurwitz(c, cfg):
    small = hz.EulerMaclaurinPlan(10, 8)
    large = hz.EulerMaclaurinPlan(25, 12)
    for w in (-3, -1.5, -0.5 + 1j, 0.5, 2.5 - 1j, 4):
        for z in (0.5, 1.0, 2.5, 1 + 1j):
            a, b = hz.hurwitz_zeta(w, z, small), hz.hurwitz_zeta(w, z, large)
            c.close("plan independence of zeta", (complex(w), complex(z)), a - b, 1e-10)
            a, b = hz.hurwitz_zeta_dw(w, z, small), hz.hurwitz_zeta_dw(w, z, large)
            c.close("plan independence of d/dw zeta", (complex(w), complex(z)), a - b, 1e-10)
    for m in range(1, 9):
        for z in (0.5, 1, 1.5, 2 + 1j):
            c.close("zeta(1-m, z) + B_m(z)/m", (m, complex(z)),
                    hz.hurwitz_zeta(1 - m, z) + nk.bernoulli_poly(m, complex(z)) / m, 1e-9)
    for w in (2.5, 3, 4 + 2j):
        for z in (0.5, 2.0):
            n = np.arange(2000) + z
            partial = complex(np.sum(np.exp(-w * np.log(n))))
            a = 2000 + z
            tail = a ** (1 - w) / (w - 1)
            bound = abs(a ** (-w)) * (1 + abs(w) / abs(a))
            c.close("defining series agreement", (complex(w), complex(z)),
                    max(0.0, abs(hz.hurwitz_zeta(w, z) - partial - tail) - bound), 1e-12)
    for x in np.linspace(0.35, 4.9, 10):
        for y in (0.0, 0.8):
            z = complex(x, y)
            ref = nk.loggamma(z) - 0.5 * math.log(2 * math.pi)
            c.close("Lerch formula", z, cmath.exp(hz.hurwitz_zeta_dw(0, z) - ref) - 1, 1e-9)
    for l in (1, 2, 3):
        d = hz.hurwitz_zeta_dw(-l, 1, small) - hz.hurwitz_zeta_dw(-l, 1, large)
        c.close("zeta'(-l) under two plans", l, d, 1e-10)
    for j in range(1, 8):
        c.close("odd_zeta_half vs Hurwitz", j, hz.odd_zeta_half(j) - hz.hurwitz_zeta(2 * j + 1, 0.5), 1e-12 * 2 ** (2 * j + 1))
    rng = random.Random(3)
    for lam in (0.0, 0.1, 0.2, 0.25, 0.9, 3.0):
        worst_exp, worst_sym = 0.0, 0.0
        for _ in range(100):
            s = complex(rng.uniform(-3, 4), rng.uniform(-3, 3))
            if nk.on_branch_cut(lam, s) or nk.on_branch_cut(lam, 1 - s):
                continue
            v = nk.branch_log_j(lam, s)
            worst_exp = max(worst_exp, abs(cmath.exp(v) - (lam - s * (1 - s))) / max(1, abs(v)))
            worst_sym = max(worst_sym, abs(nk.branch_log_j(lam, 1 - s) - v))
        c.close("exp(l_j(s)) = lambda - s(1-s)", lam, worst_exp, 1e-12)
        c.close("l_j(1-s) = l_j(s)", lam, worst_sym, 1e-12)
    for x in np.linspace(-4.7, 6.3, 12):
        for y in (0.0, 1.3):
            z = complex(x, y)
            c.close("digamma recurrence", z, nk.digamma(z + 1) - nk.digamma(z) - 1 / z, 1e-11)


def _lattice_sum(n, w, z, cap=60):
    """Brute box sum over 0 <= m_i < cap plus a bound for the points outside the box."""
    grids = np.meshgrid(*([np.arange(cap)] * n), indexing="ij")
    k = sum(grids).ravel() + z
    box = complex(np.sum(np.exp(-w * np.log(k.astype(complex)))))
    # points outside the box have m_1+...+m_n >= cap
    kk = np.arange(cap, 200000, dtype=float)
    counts = np.array([math.comb(int(x) + n - 1, n - 1) for x in kk[:2000]], dtype=float)
    sigma = complex(w).real
    bound = float(np.sum(counts * (kk[:2000] + complex(z).real) ** -sigma))
    tail_start = kk[2000]
    bound += (tail_start + 1) ** (n - 1) * tail_start ** (1 - sigma) / (sigma - 1) * 2
    return box, bound


def suite_multigamma(c, cfg):
    grid = [0.4, 1.3, 2.2 + 0.7j, 3.5 - 1.1j]
    for r in range(1, 5):
        for z in grid:
            lhs = mg.log_milnor_gamma(r, z)
            rhs = sum(pc.c_poly(r, j)(complex(z)) * mg.log_barnes_gamma(j, z) for j in range(1, r + 1))
            c.close("Milnor gamma through Barnes gammas", (r, complex(z)), lhs - rhs, 1e-9)
    for n in range(1, 6):
        for z in grid:
            res = mg.log_barnes_gamma(n, z + 1) - mg.log_barnes_gamma(n, z) + mg.log_barnes_gamma(n - 1, z)
            c.close("Gamma_n ladder", (n, complex(z)), res, 1e-9)
    for n in range(2, 6):
        for z in (0.3, 0.45 + 0.2j, 0.7 - 0.4j):
            res = mg.log_mult_sine(n, z + 1) - mg.log_mult_sine(n, z) + mg.log_mult_sine(n - 1, z)
            c.close("S_n ladder", (n, complex(z)), res, 1e-9)
    for n in range(1, 5):
        for z in (0.15, 0.3, 0.7, 0.85, 0.4 + 0.3j):
            lhs = mg.log_barnes_gamma(n, 1 - z)
            rhs = sum((-1) ** j * math.comb(n - 1, j - 1) * (mg.log_mult_sine(j, z) + mg.log_barnes_gamma(j, z))
                      for j in range(1, n + 1))
            c.close("reflection of Gamma_n(1-z)", (n, complex(z)), lhs - rhs, 1e-8)
    for n in range(1, 4):
        w = n + 2.5
        box, bound = _lattice_sum(n, w, 1.0)
        c.close("Barnes zeta vs lattice sum", (n, w), max(0.0, abs(mg.barnes_zeta(n, w, 1.0) - box) - bound), 1e-12)
    for n in range(1, 5):
        for m in range(1, 5):
            for z in (0.5, 1, 2, 1 + 1j):
                res = mg.barnes_zeta(n, 1 - m, z) + pc.barnes_bernoulli(n, m)(complex(z)) / m
                c.close("zeta_n(1-m, z) = -nB_m(z)/m", (n, m, complex(z)), res, 1e-8)
    for z in (0.3, 1.7, 2.5 + 1j):
        c.close("G_1 = Gamma", complex(z), mg.log_vigneras_G(1, z) - nk.loggamma(z), 1e-10)
    c.close("G_2(1) = 1", 1, mg.log_vigneras_G(2, 1), 1e-10)
    for z in (0.4, 1.6 + 0.5j):
        res = mg.log_vigneras_G(2, z + 1) - mg.log_vigneras_G(2, z) - nk.loggamma(z)
        c.close("G_2(z+1) = Gamma(z) G_2(z)", complex(z), res, 1e-9)
    for x in np.linspace(0.05, 0.95, 7):
        c.close("S_1(x) = 2 sin(pi x)", x, mg.log_mult_sine(1, x) - math.log(2 * math.sin(math.pi * x)), 1e-9)
        c.close("basic sine of order 1", x, mg.log_basic_sine(1, x, cfg) - math.log(2 * math.sin(math.pi * x)), 1e-9)
    for n in range(2, 5):
        c.close("basic sine/cosine vanish at 0", n, abs(mg.log_basic_sine(n, 0)) + abs(mg.log_basic_cosine(n, 0)), 0)
        for x in (0.05, 0.12, 0.2, 0.235):
            res = mg.log_basic_cosine(n, x, cfg) - (2.0 ** (1 - n) * mg.log_basic_sine(n, 2 * x, cfg)
                                                    - mg.log_basic_sine(n, x, cfg))
            c.close("basic cosine from basic sines", (n, x), res, 1e-8)


def suite_gammafactor(c, cfg):
    for r in (1, 2, 3):
        for s in cross_form_grid():
            m_, b_, v_ = (gf.log_phi(r, s, f) for f in gf.PhiForm)
            c.close("phi Milnor vs Barnes form", (r, s), m_ - b_, 1e-8)
            c.close("phi Milnor vs Vigneras form", (r, s), m_ - v_, 1e-8)
            c.close("phi Barnes vs Vigneras form", (r, s), b_ - v_, 1e-8)
    for r in (1, 2, 3):
        for s in fe_grid():
            c.close("phi functional equation", (r, s), gf.phi_fe_residual(r, s), 1e-7)
    for s in (0.4, 1.3 + 0.6j, 2.7 - 1j):
        t = s - 0.5
        classic = (-2 * t * t - 4 * t * hz.zeta_prime_neg(0) + 4 * hz.zeta_prime_neg(1)
                   - 2 * mg.log_vigneras_G(1, s) - 4 * mg.log_vigneras_G(2, s))
        c.close("phi_1 classical form", complex(s), gf.log_phi(1, s) - classic, 1e-8)
        for r in (1, 2, 3):
            c.close("phi from moment derivatives", (r, complex(s)),
                    gf.log_phi_from_moments(r, s) - gf.log_phi(r, s, gf.PhiForm.MILNOR), 1e-8)
    for m, w, t in J_bridge_points():
        c.close("J direct vs decomposed", (m, complex(w), t), gf.J_direct(m, w, t, cfg) - gf.J_decomposed(m, w, t), 1e-7)
    for m, t in J_derivative_points():
        fd = nk.numeric_dw(lambda w: gf.J_decomposed(m, w, t), 0.0, cfg)
        c.close("dJ/dw at 0 closed form vs finite difference", (m, t), fd - gf.J_dw0_closed(m, t), 1e-6)
    for m in (1, 3):
        for t in (0.1, 0.25, 0.4):
            c.close("R series vs closed form", (m, t), gf.R_series(m, t) - gf.R_closed(m, t, cfg), 1e-9)
            chain = (-gf.Phi_integral(m, t, 0.5, cfg) - 0.5 * mg.log_basic_cosine(m + 1, t, cfg)
                     + nk.digamma(0.5) * t ** (m + 1) / (m + 1))
            c.close("R through Phi and basic cosine", (m, t), gf.R_series(m, t) - chain, 1e-8)
    for m in range(4):
        for t in (0.2, 0.4):
            for z in (0.5, 1.0, 1.5):
                c.close("Phi integral vs closed form", (m, t, z),
                        gf.Phi_integral(m, t, z, cfg) - gf.Phi_closed(m, t, z), 1e-8)


def suite_selberg(c, cfg, spectra=None):
    spectra = spectra or [bundled_spectrum(n) for n in bundled_names()]
    for spec in spectra:
        tag = spec.label.split(":")[0] + f"/{len(spec.primitives)}"
        for m in range(1, 6):
            for s in (2.0, 2.5 + 1j, 3.5 - 2j):
                a = sb.log_poly_selberg(m, s, spec)
                b = sb.log_poly_selberg(m, s, spec, method="product")
                c.close(f"[{tag}] Z^(m) classes vs product", (m, complex(s)), a - b, 1e-10)
        for m in (1, 3):
            for K in (2, 4, 8):
                v = sb.log_poly_selberg(m, 2.0, spec, fixed_terms=K, full_output=True)
                w = sb.log_poly_selberg(m, 2.0, spec, fixed_terms=K + 5)
                c.close(f"[{tag}] tail bound certifies truncation", (m, K),
                        max(0.0, abs(v.value - w) - v.tail_bound), 0.0)
        for m in (2, 3, 4):
            for s in (2.5, 2 + 0.5j):
                c.close(f"[{tag}] poly-Selberg ladder", (m, complex(s)),
                        sb.ladder_residual_poly(m, s, spec, cfg=cfg), 1e-6)
        for r, s in ((2, 3.0), (3, 2.2), (2, 2.4 + 0.7j)):
            c.close(f"[{tag}] Milnor-Selberg ladder", (r, complex(s)), sb.ladder_residual_MS(r, s, spec, cfg=cfg), 1e-6)
        c.close(f"[{tag}] iterated integral m=2", (3.0, 2.0), sb.iterated_integral_check(2, 3.0, 2.0, spec, cfg=cfg), 1e-6)
        c.close(f"[{tag}] iterated integral m=3", (2.5, 2.0), sb.iterated_integral_check(3, 2.5, 2.0, spec, cfg=cfg), 1e-5)
        c.close(f"[{tag}] iterated integral m=4", (2.6 + 0.4j, 2.0),
                sb.iterated_integral_check(4, 2.6 + 0.4j, 2.0, spec, cfg=cfg), 1e-5)
        for s in (2.0, 2.7 + 0.5j):
            t = s - 0.5
            z = {m: sb.log_poly_selberg(m, s, spec) for m in range(1, 6)}
            c.close(f"[{tag}] Z_(G,1) = Z", complex(s), sb.log_milnor_selberg(1, s, spec) - z[1], 1e-12)
            c.close(f"[{tag}] Z_(G,2) expansion", complex(s),
                    sb.log_milnor_selberg(2, s, spec) - (-2 * t * z[2] - 2 * z[3]), 1e-12)
            c.close(f"[{tag}] Z_(G,3) expansion", complex(s),
                    sb.log_milnor_selberg(3, s, spec) - (2 * (2 * t) ** 2 * z[3] + 12 * (2 * t) * z[4] + 24 * z[5]),
                    1e-12)
        for r in (1, 2, 3):
            s = 2.3 + 0.5j
            c.close(f"[{tag}] complete zeta identity", (r, s), sb.complete_zeta_residual(r, s, spec), 1e-8)
            gap = (sb.log_higher_det_geom(r, s, spec) - sb.log_milnor_selberg(r, s, spec)) / (spec.genus - 1)
            c.close(f"[{tag}] determinant linear in g-1", (r, s), gap - gf.log_phi(r, s), 1e-10)
        vals = [sb.log_poly_selberg(1, s, spec).real for s in (2.0, 4.0, 8.0)]
        c.exact(f"[{tag}] -log Z decreases towards 0", "s=2,4,8",
                all(-v > 0 for v in vals) and -vals[0] > -vals[1] > -vals[2])
        if spec.primitives and spec.epsilon > 1:
            for s in (2.0, 3.0):
                seq = [-sb.log_poly_selberg(m, s, spec).real for m in range(1, 6)]
                c.exact(f"[{tag}] -log Z^(m) positive and decreasing in m", s,
                        all(x > 0 for x in seq) and all(a > b for a, b in zip(seq, seq[1:])))
    for r in (1, 2, 3):
        for s in (1.5 + 0.3j, 3.0, 4.2 - 1j):
            c.close("gamma-shift identity", (r, complex(s)), sb.gamma_shift_residual(r, s), 1e-8)


_RUNNERS = {
    "combinatorics": suite_combinatorics,
    "hurwitz": suite_hurwitz,
    "multigamma": suite_multigamma,
    "gammafactor": suite_gammafactor,
    "selberg": suite_selberg,
}


def run_suite(name, tol=None, cfg=None, spectra=None):
    """Run one suite and return its report. Crashes are captured in ``error``."""
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from {SUITES}")
    cfg = cfg or nk.DEFAULT_TOL
    collector = _Collector(tol)
    start = time.perf_counter()
    error = None
    try:
        if name == "selberg":
            _RUNNERS[name](collector, cfg, spectra)
        else:
            _RUNNERS[name](collector, cfg)
    except Exception:  # report, don't propagate
        error = traceback.format_exc(limit=4)
    return VerificationReport(name, collector.cases, error, time.perf_counter() - start)


def run(selector="all", tol=None, cfg=None, spectra=None):
    names = SUITES if selector == "all" else (selector,)
    return [run_suite(n, tol, cfg, spectra) for n in names]


def reports_to_json(reports):
    return json.dumps({"passed": all(r.passed for r in reports),
                       "suites": [r.to_dict() for r in reports]}, indent=2, sort_keys=False)
