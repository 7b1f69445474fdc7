"""Hermite functions ``H_nu(x, -y)`` of non-integer and negative index.

Three routes are provided and cross-checked in the test suite:

* :func:`hermite_frac_integral` -- cosine-integral representation, any
  ``nu > -1``;
* :func:`hermite_frac_series` -- the descending power series in ``x``,
  asymptotic for ``x**2 >> y``, truncated at its smallest term;
* :func:`hermite_neg` -- parabolic cylinder representation, ``nu < 0``.
"""

from __future__ import annotations

import math

import numpy as np

from ._types import DomainError, SeriesResult
from .quadrature import QuadratureConfig, integrate_half_line
from .special_functions import parabolic_cylinder_d

__all__ = ["hermite_frac_integral", "hermite_frac_series", "hermite_neg"]

_EPS = 2.220446049250313e-16
_FRAC_CONFIG = QuadratureConfig(rel_tol=1e-12)


def hermite_frac_integral(nu, x, y, cfg=None):
    """``H_nu(x, -y)`` from its cosine-integral representation.

    ``y**(nu/2) exp(x^2/4y) / sqrt(pi) * int_0^inf exp(-t^2/4) t^nu cos(x t / (2 sqrt y) - pi nu / 2) dt``

    Accurate while ``x**2 / (4 y)`` is moderate; the integral itself is of
    order ``exp(-x^2/4y)`` and is obtained by cancellation.  For negative
    ``nu`` the endpoint singularity is removed by ``t = s^(1/(nu+1))``; the
    transformed integrand steepens as ``nu -> -1`` and beyond about
    ``nu = -0.995`` the refinement may run out of levels, where
    :func:`hermite_neg` is the route to use.

    Raises
    ------
    DomainError
        ``y <= 0``, or ``nu <= -1`` (use :func:`hermite_neg` there).
    """
    nu = float(nu)
    if not y > 0:
        raise DomainError("hermite_frac_integral needs y > 0")
    if not nu > -1:
        raise DomainError("hermite_frac_integral needs nu > -1; use hermite_neg")
    k = x / (2.0 * math.sqrt(y))
    phase = 0.5 * math.pi * nu

    if nu < 0:
        # t = s^p with p = 1/(nu+1) turns t^nu dt into p ds; without it the
        # endpoint tail below the quadrature window is of size t^(nu+1)
        p = 1.0 / (nu + 1.0)

        def integrand(s):
            # exp(-t^2/4) underflows long before t = 100; the clamp keeps cos finite
            t = np.minimum(s ** p, 100.0)
            return p * np.exp(-0.25 * t * t) * np.cos(k * t - phase)
    else:
        def integrand(t):
            return np.exp(-0.25 * t * t) * t ** nu * np.cos(k * t - phase)

    res = integrate_half_line(integrand, cfg or _FRAC_CONFIG)
    return y ** (0.5 * nu) * math.exp(k * k) / math.sqrt(math.pi) * res.value


def hermite_frac_series(nu, x, y, tol=1e-12, max_terms=500):
    """``Gamma(nu+1) sum_r x^(nu-2r) (-y)^r / (Gamma(nu+1-2r) r!)``.

    For non-negative integer ``nu`` the sum terminates and is exact.
    Otherwise it is summed up to and including its smallest term; the
    magnitude of the first omitted term (plus a rounding floor) is the
    error estimate and ``converged`` reports whether that estimate is
    within ``tol * |value|``.
    """
    nu = float(nu)
    if not x > 0:
        raise DomainError("hermite_frac_series needs x > 0")
    u = -y / (x * x)
    term = x ** nu
    terms = [term]
    total = term
    abs_total = abs(term)
    terminating = nu >= 0 and nu == math.floor(nu)
    omitted = 0.0
    r = 0
    while True:
        nxt = term * u * (nu - 2 * r) * (nu - 2 * r - 1) / (r + 1)
        r += 1
        if nxt == 0 and terminating:
            omitted = 0.0
            break
        if not terminating and (abs(nxt) >= abs(term) or abs(nxt) <= _EPS * 1e-2 * abs(total)):
            omitted = abs(nxt)
            break
        if len(terms) >= max_terms:
            omitted = abs(nxt)
            break
        term = nxt
        terms.append(term)
        total += term
        abs_total += abs(term)
    err = omitted + len(terms) * _EPS * abs_total
    return SeriesResult(
        value=total,
        terms_used=len(terms),
        last_term=abs(terms[-1]),
        converged=err <= tol * abs(total),
        error_estimate=err,
        terms=tuple(terms),
    )


def hermite_neg(nu, x, y):
    """``H_nu(x, -y) = (2y)^(nu/2) exp(x^2/8y) D_nu(x / sqrt(2y))`` for ``nu < 0``.

    The exponential prefactor cancels the ``exp(-z^2/4)`` inside ``D_nu``
    exactly, so the scaled parabolic cylinder function is used and no
    large factors are formed.
    """
    nu = float(nu)
    if not nu < 0:
        raise DomainError("hermite_neg needs nu < 0")
    if not y > 0:
        raise DomainError("hermite_neg needs y > 0")
    z = x / math.sqrt(2.0 * y)
    return (2.0 * y) ** (0.5 * nu) * parabolic_cylinder_d(nu, z, scaled=True)
