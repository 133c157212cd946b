"""Exact rational polynomials and the coefficient families built from them.

Every constant and exponent polynomial used by the gamma factors and the
zeta assemblies lives here: c_{r,j}, b_{n,k}, C_r, D_r(k), the tilde sums,
alpha, alpha-hat, beta, Barnes multiple Bernoulli polynomials and the
multiplicity polynomial.
"""

import math
from fractions import Fraction
from functools import lru_cache

from .numkernel import bernoulli_numbers, bernoulli_poly_coeffs, harmonic, stirling_first_signed


class RPoly:
    """Univariate polynomial with Fraction coefficients in ascending order.

    Trailing zeros are stripped, so equal polynomials compare equal and the
    zero polynomial has an empty coefficient tuple and degree -inf.
    """

    __slots__ = ("coeffs", "_float")

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self._float = None

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def is_even(self):
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self):
        return all(c == 0 for c in self.coeffs[0::2])

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, RPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return RPoly([self.coefficient(k) + other.coefficient(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return RPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RPoly([c * other for c in self.coeffs])
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return RPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result, base = RPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def compose(self, q):
        """Return p(q(x))."""
        q = self._lift(q)
        result = RPoly()
        for c in reversed(self.coeffs):
            result = result * q + c
        return result

    def shift(self, a):
        """Return p(x + a) for rational a."""
        return self.compose(RPoly([a, 1]))

    def scale(self, a):
        """Return p(a x)."""
        a = Fraction(a)
        return RPoly([c * a ** k for k, c in enumerate(self.coeffs)])

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        if self._float is None:
            self._float = tuple(float(c) for c in self.coeffs)
        acc = 0.0
        for c in reversed(self._float):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"RPoly({[str(c) for c in self.coeffs]})"

    def to_str(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __str__ = to_str


X = RPoly.x()


def rising_binomial(j):
    """binom(T + j - 1, j - 1) as a polynomial in T."""
    p = RPoly([1])
    for i in range(1, j):
        p = p * RPoly([Fraction(1), Fraction(1, i)])
    return p


def _double_factorial(n):
    return math.prod(range(n, 0, -2)) if n > 0 else 1


# ---------------------------------------------------------------------------
# c_{r,j}

@lru_cache(maxsize=None)
def c_poly(r, j):
    """c_{r,j}(z) = sum_{l=0}^{j-1} binom(j-1, l) (-1)^l (z - l - 1)^(r-1)."""
    if r < 1 or j < 1:
        raise ValueError("r and j must be positive")
    total = RPoly()
    for l in range(j):
        total = total + (-1) ** l * math.comb(j - 1, l) * RPoly([-l - 1, 1]) ** (r - 1)
    return total


@lru_cache(maxsize=None)
def c_poly_recursive(r, j):
    """c_{r,j} from c_{r,j}(z) = (z-1) c_{r-1,j}(z) + (j-1) c_{r-1,j-1}(z-1)."""
    if r < 1 or j < 1:
        raise ValueError("r and j must be positive")
    if r == 1:
        return RPoly([1]) if j == 1 else RPoly()
    head = RPoly([-1, 1]) * c_poly_recursive(r - 1, j)
    if j == 1:
        return head
    return head + (j - 1) * c_poly_recursive(r - 1, j - 1).shift(-1)


# ---------------------------------------------------------------------------
# b_{n,k}

@lru_cache(maxsize=None)
def b_poly(n, k):
    """b_{n,k}(z), defined by binom(j+n-1, n-1) = sum_k b_{n,k}(z) (j+z)^k.

    Built from the signed Stirling numbers:
    b_{n,k}(z) = (-1)^(n-1-k)/(n-1)! sum_{m=k}^{n-1} binom(m,k) s(n,m+1) z^(m-k).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0 or k > n - 1:
        return RPoly()
    coeffs = [Fraction(0)] * (n - k)
    for m in range(k, n):
        coeffs[m - k] += math.comb(m, k) * stirling_first_signed(n, m + 1)
    return RPoly(coeffs) * Fraction((-1) ** (n - 1 - k), math.factorial(n - 1))


# ---------------------------------------------------------------------------
# constants C_r, D_r(k), tilde D

@lru_cache(maxsize=None)
def C_const(r):
    """C_r = sum_l binom(r-1, l) (-1)^l/(l+1) (H(l) - 2 H(2l+1))."""
    if r < 1:
        raise ValueError("r must be positive")
    return sum((Fraction((-1) ** l * math.comb(r - 1, l), l + 1) * (harmonic(l) - 2 * harmonic(2 * l + 1))
                for l in range(r)), Fraction(0))


def C_const_closed(r):
    """-(2r)!!/(r^2 (2r-1)!!)."""
    return -Fraction(_double_factorial(2 * r), r * r * _double_factorial(2 * r - 1))


@lru_cache(maxsize=None)
def D_coeff(r, k):
    """D_r(k) = sum_{l=floor((k-1)/2)}^{r-1} 4 (-1)^(l+k) binom(r-1, l) binom(2l+1, k-1)."""
    if k < 1 or k > 2 * r:
        return Fraction(0)
    lo = (k - 1) // 2
    return Fraction(sum(4 * (-1) ** (l + k) * math.comb(r - 1, l) * math.comb(2 * l + 1, k - 1)
                        for l in range(lo, r)))


def D_coeff_closed(r, k):
    """binom(r, k-r) (2k/r) (-1)^(k+r-1) 2^(2r-k), zero below k = r."""
    if k < 1 or k > 2 * r or k < r:
        return Fraction(0)
    return Fraction(math.comb(r, k - r) * 2 * k * (-1) ** (k + r - 1) * 2 ** (2 * r - k), r)


@lru_cache(maxsize=None)
def D_tilde(r, p):
    """sum_{k=p}^{2r} binom(k-1, k-p) D_r(k)."""
    if p < 1 or p > 2 * r:
        return Fraction(0)
    return sum((math.comb(k - 1, k - p) * D_coeff(r, k) for k in range(p, 2 * r + 1)), Fraction(0))


def D_tilde_closed(r, p):
    """0 for odd p, 4 binom(r-1, p/2-1) (-1)^(p/2-1) for even p."""
    if p < 1 or p > 2 * r or p % 2:
        return Fraction(0)
    h = p // 2
    return Fraction(4 * math.comb(r - 1, h - 1) * (-1) ** (h - 1))


# ---------------------------------------------------------------------------
# alpha, alpha-hat, beta

_HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def alpha_poly(r, j):
    """alpha_{r,j}(t) = 4 sum_{l=ceil(j/2)}^{r} binom(r-1, l-1) (-1)^(l-1) c_{2l,j}(1/2) t^(2r-2l)."""
    if r < 1:
        raise ValueError("r must be positive")
    if j < 1 or j > 2 * r:
        return RPoly()
    coeffs = [Fraction(0)] * (2 * r + 1)
    for l in range((j + 1) // 2, r + 1):
        coeffs[2 * r - 2 * l] += 4 * (-1) ** (l - 1) * math.comb(r - 1, l - 1) * c_poly(2 * l, j)(_HALF)
    return RPoly(coeffs)


@lru_cache(maxsize=None)
def alpha_poly_via_D(r, j):
    """alpha_{r,j}(t) = sum_{k=j}^{2r} c_{k,j}(t + 1/2) D_r(k) t^(2r-k)."""
    if j < 1 or j > 2 * r:
        return RPoly()
    total = RPoly()
    for k in range(j, 2 * r + 1):
        d = D_coeff(r, k)
        if d:
            total = total + c_poly(k, j).shift(_HALF) * RPoly.monomial(2 * r - k, d)
    return total


@lru_cache(maxsize=None)
def alpha_hat_poly(r, l):
    """alpha-hat_{r,l}(t) = (-1)^l sum_{j=1}^{2r-l} binom(2r-j, l) alpha_{r,j}(t)."""
    if l < 0 or l > 2 * r - 1:
        return RPoly()
    total = RPoly()
    for j in range(1, 2 * r - l + 1):
        total = total + math.comb(2 * r - j, l) * alpha_poly(r, j)
    return (-1) ** l * total


@lru_cache(maxsize=None)
def beta_poly(r, l):
    """beta_{r,l}(t) = sum_{j=l+1}^{2r} b_{j,l}(t + 1/2) alpha_{r,j}(t)."""
    if l < 0 or l > 2 * r - 1:
        return RPoly()
    total = RPoly()
    for j in range(l + 1, 2 * r + 1):
        total = total + b_poly(j, l).shift(_HALF) * alpha_poly(r, j)
    return total


def milnor_exponents(r):
    """{k: D_r(k) t^(2r-k)} for the Milnor-gamma form of log phi_r."""
    return {k: RPoly.monomial(2 * r - k, D_coeff(r, k)) for k in range(r, 2 * r + 1)}


def vigneras_exponents(r):
    """{j: (-1)^(j-1) alpha_{r,j}(t)}, the exponents of G_j in log phi_r."""
    return {j: (-1) ** (j - 1) * alpha_poly(r, j) for j in range(1, 2 * r + 1)}


def sine_exponents(r):
    """{j: -alpha_{r,j}(t)}, exponents of S_j in the Milnor-Selberg functional equation."""
    return {j: -alpha_poly(r, j) for j in range(1, 2 * r + 1)}


@lru_cache(maxsize=None)
def milnor_selberg_exponents(r):
    """{r+m: e_m(t)} with log Z_{G,r} = sum_m e_m(t) log Z^{(r+m)}.

    e_m(t) = (-1)^(r-1) (r-1)! (r-1+m)!/(m! (r-1-m)!) (2t)^(r-1-m).
    """
    if r < 1:
        raise ValueError("r must be positive")
    out = {}
    for m in range(r):
        c = (-1) ** (r - 1) * math.factorial(r - 1) * math.factorial(r - 1 + m) // (
            math.factorial(m) * math.factorial(r - 1 - m))
        out[r + m] = RPoly.monomial(r - 1 - m, c * 2 ** (r - 1 - m))
    return out


# ---------------------------------------------------------------------------
# Bernoulli families

@lru_cache(maxsize=None)
def bernoulli_rpoly(m):
    return RPoly(bernoulli_poly_coeffs(m))


def _series_mul(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def barnes_bernoulli(n, m):
    """Barnes multiple Bernoulli polynomial nB_m(z).

    (-1)^m m! times the coefficient of t^(m+n-1) in e^{(n-z)t} (t/(e^t-1))^n,
    computed as a power series in t whose coefficients are polynomials in z.
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    order = m + n - 1
    b = bernoulli_numbers(order)
    td = [b[k] / math.factorial(k) for k in range(order + 1)]
    power = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(n):
        power = _series_mul(power, td, order)
    # e^{(n-z)t} = sum_k (n-z)^k t^k / k!
    nz = RPoly([n, -1])
    coeff = RPoly()
    for k in range(order + 1):
        coeff = coeff + (nz ** k) * (power[order - k] / math.factorial(k))
    return coeff * ((-1) ** m * math.factorial(m))


# ---------------------------------------------------------------------------
# multiplicity polynomial

@lru_cache(maxsize=None)
def multiplicity_poly_oracle(r, k, g):
    """(g-1) sum_{j=1}^{2r} binom(k+j-1, j-1) alpha_{r,j}(t), computed from the sum."""
    if r < 1 or k < 1 or g < 2:
        raise ValueError("need r >= 1, k >= 1, g >= 2")
    total = RPoly()
    for j in range(1, 2 * r + 1):
        total = total + math.comb(k + j - 1, j - 1) * alpha_poly(r, j)
    return (g - 1) * total


def multiplicity_candidates(r, k, g):
    """Candidate closed forms in t, keyed by a short label.

    printed_A: 2(g-1)(2k+1)(s-k)^(r-1)(s-k-1)^(r-1) with s = t + 1/2
    printed_B: 2(g-1)(2k-1)(t^2-(k+1/2)^2)^(r-1)
    derived:   2(g-1)(2k+1)(t^2-(k+1/2)^2)^(r-1)
    """
    s = RPoly([_HALF, 1])
    quad = RPoly([-(k + _HALF) ** 2, 0, 1])
    return {
        "printed_A": 2 * (g - 1) * (2 * k + 1) * (s - k) ** (r - 1) * (s - k - 1) ** (r - 1),
        "printed_B": 2 * (g - 1) * (2 * k - 1) * quad ** (r - 1),
        "derived": 2 * (g - 1) * (2 * k + 1) * quad ** (r - 1),
    }


def multiplicity_report(r_max=4, k_max=6, g=2):
    """Compare the defining sum with each candidate for r <= r_max, k <= k_max.

    Returns a list of dicts with the exact polynomial and, per candidate,
    whether it matches.
    """
    rows = []
    for r in range(1, r_max + 1):
        for k in range(1, k_max + 1):
            value = multiplicity_poly_oracle(r, k, g)
            cands = multiplicity_candidates(r, k, g)
            rows.append({
                "r": r, "k": k, "g": g, "poly": value,
                "matches": {name: value == p for name, p in cands.items()},
            })
    return rows


def summarize_multiplicity(rows):
    """One line per candidate naming the r values where it matched for all k."""
    lines = []
    names = list(rows[0]["matches"]) if rows else []
    rs = sorted({row["r"] for row in rows})
    for name in names:
        ok = [r for r in rs if all(row["matches"][name] for row in rows if row["r"] == r)]
        lines.append(f"{name}: matches for r in {ok}" if ok else f"{name}: never matches")
    return lines


# ---------------------------------------------------------------------------
# table dump

FAMILIES = {
    "c": c_poly,
    "b": b_poly,
    "alpha": alpha_poly,
    "alpha_hat": alpha_hat_poly,
    "beta": beta_poly,
    "barnes_bernoulli": barnes_bernoulli,
}


def _family_indices(family, n_max):
    if family == "c":
        return [(r, j) for r in range(1, n_max + 1) for j in range(1, r + 1)]
    if family == "b":
        return [(n, k) for n in range(1, n_max + 1) for k in range(n)]
    if family == "alpha":
        return [(r, j) for r in range(1, n_max + 1) for j in range(1, 2 * r + 1)]
    if family in ("alpha_hat", "beta"):
        return [(r, l) for r in range(1, n_max + 1) for l in range(2 * r)]
    if family == "barnes_bernoulli":
        return [(n, m) for n in range(1, n_max + 1) for m in range(n_max + 1)]
    raise KeyError(f"unknown family {family!r}")


def dump_family(family, n_max, var=None):
    """Plain-text table: one line per index tuple, then the exact coefficients."""
    func = FAMILIES[family]
    var = var or ("t" if family in ("alpha", "alpha_hat", "beta") else "z")
    lines = [f"# {family}: index, ascending coefficients, polynomial in {var}"]
    for idx in _family_indices(family, n_max):
        p = func(*idx)
        coeffs = " ".join(str(c) for c in p.coeffs) or "0"
        lines.append(f"{idx}\t[{coeffs}]\t{p.to_str(var)}")
    return "\n".join(lines) + "\n"
