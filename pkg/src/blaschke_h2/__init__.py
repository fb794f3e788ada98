"""Best H2 rational approximation of finite Blaschke products, with certified lower bounds."""
from .errors import DomainError, GridCapError, NumericalError
from .rational import Polynomial, RationalFunction, reciprocal_polynomial, sharp, check
from .laurent import (
    LaurentSeries, BoundaryGrid, dft_coefficients, synthesize, project_plus, project_minus,
    l2_norm, brezis_winding, winding_rational,
)
from .blaschke import BlaschkeProduct, taylor_coeffs_series, taylor_coeffs_fft
from .bounds import (
    BoundParams, BoundReport, delay_bound, s_star, polylog, k_beta, beta_star, general_bound,
    optimize_alpha_beta, coeff_bound_blaschke, coeff_tail_bound, product_coeff_bound,
)
from .approx import (
    PoleConfig, SolverConfig, SolveResult, criterion, optimal_numerator, approximant_error_direct,
    solve_rab, solve_sweep,
)

__version__ = "0.1.0"
