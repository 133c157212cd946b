"""The gamma factor phi_r(s): exponent tables, three forms, functional equation."""

import numpy as np

from higherdet import gammafactor as gf
from higherdet import polycoeff as pc

# exponent polynomials in t = s - 1/2, exact rationals
for r in (1, 2, 3):
    print(f"r={r}  C_r = {pc.C_const(r)}")
    for j in range(1, 2 * r + 1):
        print(f"   alpha_{r},{j}(t) = {pc.alpha_poly(r, j).to_str('t')}")

# the Barnes, Milnor and Vigneras forms give the same log phi_r
s = 1.3 + 0.8j
for r in (1, 2, 3):
    vals = {f.value: gf.log_phi(r, s, f) for f in gf.PhiForm}
    spread = max(abs(a - b) for a in vals.values() for b in vals.values())
    print(f"log phi_{r}({s}) = {vals['barnes']:.12f}   spread across forms {spread:.1e}")

# functional-equation residual across the critical strip
grid = [complex(x, y) for x in np.linspace(0.15, 0.85, 4) for y in (-1.0, 0.5)]
for r in (1, 2, 3):
    print(f"r={r} FE residual max {max(abs(gf.phi_fe_residual(r, z)) for z in grid):.1e}")

# phi_r is real on the real axis
xs = np.linspace(0.5, 3.0, 6)
print("log phi_2 on the real axis:", np.round([gf.log_phi(2, x).real for x in xs], 6))

# the closed derivative of J_1 at w = 0 tends to -2 zeta'(-1, 1/2) as t -> 0
for t in (0.3, 0.1, 0.01, 1e-4):
    print(f"dJ_1/dw(0, t={t}) = {gf.J_dw0_closed(1, t).real:.10f}")
