"""Higher-depth determinants of the Laplacian on compact Riemann surfaces.

Exact coefficient polynomials, Hurwitz and Barnes zeta functions, the
multiple gamma family, the gamma factor phi_r and Selberg-type zeta
functions built from a finite length spectrum.
"""

from .errors import AccuracyError, BranchCutError, DomainError, HDetError, PoleError
from .numkernel import (
    DEFAULT_TOL,
    EvalPoint,
    ToleranceConfig,
    bernoulli_number,
    bernoulli_poly,
    branch_log_j,
    digamma,
    loggamma,
    numeric_dw,
    quadrature,
    stirling_first_signed,
)
from .hurwitz import EulerMaclaurinPlan, hurwitz_zeta, hurwitz_zeta_dw, zeta_prime_neg
from .polycoeff import (
    RPoly,
    C_const,
    D_coeff,
    alpha_hat_poly,
    alpha_poly,
    b_poly,
    barnes_bernoulli,
    beta_poly,
    c_poly,
    dump_family,
    multiplicity_report,
)
from .multigamma import (
    barnes_zeta,
    log_barnes_gamma,
    log_basic_cosine,
    log_basic_sine,
    log_milnor_gamma,
    log_mult_sine,
    log_multigamma,
    log_vigneras_G,
)
from .gammafactor import (
    PhiForm,
    J_decomposed,
    J_direct,
    J_dw0_closed,
    R_closed,
    R_series,
    log_phi,
    phi_fe_residual,
)
from .spectrum import LengthSpectrum, Primitive, SpectrumFormatError, TruncationPolicy, synthetic_spectrum
from .selberg import (
    SelbergValue,
    log_complete_MS,
    log_higher_det_geom,
    log_milnor_selberg,
    log_poly_selberg,
    log_selberg,
    polylog,
)

__version__ = "0.1.0"
