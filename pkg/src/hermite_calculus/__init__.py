"""Umbral evaluation of Gaussian-type integrals through Hermite polynomials.

The package has four layers:

* :mod:`~hermite_calculus.special_functions` -- Gamma, erfc, K_nu, D_nu;
* :mod:`~hermite_calculus.hermite` and :mod:`~hermite_calculus.fractional` --
  two-variable Hermite polynomials of integer, fractional, negative and
  fourth order;
* :mod:`~hermite_calculus.integrals` -- closed forms and series for the
  integral families, checked against :mod:`~hermite_calculus.oracles`;
* :mod:`~hermite_calculus.verification` and :mod:`~hermite_calculus.cli` --
  the comparison grids and the command-line front end.
"""

from ._types import (
    BranchError,
    ConvergenceError,
    DivergenceError,
    DomainError,
    HermiteCalculusError,
    PoleError,
    SeriesResult,
)
from .fractional import hermite_frac_integral, hermite_frac_series, hermite_neg
from .hermite import (
    GH4Args,
    HermitePair,
    gen_even_closed,
    gen_even_sum,
    hermite2,
    hermite2_coefficients,
    hermite2_sequence,
    hermite4_two_arg,
    hermite_gh4,
    quartic_exp_derivative,
    quartic_exp_derivative_umbral,
    umbral_shift,
    umbral_shift_series,
)
from .integrals import (
    UmbralParams,
    integral_f_series,
    integral_gauss_quartic,
    integral_i_closed,
    integral_i_series,
    integral_j_perturbative,
    integral_j_series,
    integral_power,
    moment_g,
    pearcey,
    pearcey_recursive,
    r_polynomial,
)
from .quadrature import (
    QuadratureConfig,
    QuadratureResult,
    integrate_half_line,
    integrate_periodic,
    integrate_real_line,
)
from .special_functions import (
    SpecialFnAccuracy,
    bessel_k,
    erfc,
    gamma,
    log_gamma,
    parabolic_cylinder_d,
)

__version__ = "0.1.0"

from types import ModuleType as _ModuleType

__all__ = [n for n, v in list(globals().items()) if not n.startswith("_") and not isinstance(v, _ModuleType)]
