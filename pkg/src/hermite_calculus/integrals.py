"""Series and closed-form evaluators for Gaussian-type integrals.

Families handled here::

    I(alpha, beta, gamma) = int exp(-(alpha + beta) x^2 - gamma x) dx
    I(gamma, beta)        = int exp(-(gamma x^2 + beta x^4)) dx
    J(a, b, c)            = int exp(-(a x^4 + b x^2 + c x)) dx
    P(n, beta, gamma)     = int_0^inf exp(-(beta x^(2n) + gamma x^n)) dx
    Pearcey(x, y)         = int exp(-(t^4 + x t^2) + i y t) dt
    f(a, b, c)            = int exp(-a x^2 + sqrt(x^2 + b x + c)) dx

Each is obtained by treating a block of the exponent as a single symbol
whose powers are Hermite-type polynomials, integrating the remaining
Gaussian in closed form and expanding back.  Negative and fractional
powers of the symbol become :func:`~hermite_calculus.fractional.hermite_neg`.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from ._series import MAX_TERMS, accumulate, tail_estimate
from ._types import BranchError, DivergenceError, DomainError, SeriesResult
from .fractional import hermite_neg
from .hermite import gen_even_sum, hermite2_sequence
from .quadrature import integrate_periodic
from .special_functions import bessel_k, gamma as gamma_fn, log_gamma, parabolic_cylinder_d

__all__ = [
    "UmbralParams",
    "integral_i_closed",
    "integral_i_series",
    "integral_gauss_quartic",
    "moment_g",
    "integral_j_perturbative",
    "integral_j_series",
    "integral_power",
    "pearcey",
    "pearcey_recursive",
    "r_polynomial",
    "integral_f_series",
]

_EPS = 2.220446049250313e-16
_SQRT_PI = math.sqrt(math.pi)


class UmbralParams(NamedTuple):
    """Named parameter block of one integral family, e.g. ``("j", {"a": 1, ...})``."""

    family: str
    values: dict

    def validate(self):
        v = self.values
        if self.family == "i":
            if not v["alpha"] + v["beta"] > 0:
                raise DomainError("I needs alpha + beta > 0")
        elif self.family == "j":
            if not v["a"] > 0:
                raise DomainError("J needs a > 0")
        elif self.family == "pearcey":
            pass
        elif self.family == "f":
            _check_f(v["a"], v["b"], v["c"])
        elif self.family == "power":
            if not v["beta"] > 0 or int(v["n"]) != v["n"] or v["n"] < 1:
                raise DomainError("power integral needs beta > 0 and integer n >= 1")
        elif self.family == "gauss-quartic":
            if not v["beta"] > 0:
                raise DomainError("quartic Gaussian needs beta > 0")
        else:
            raise DomainError(f"unknown family {self.family!r}")
        return self


def integral_i_closed(alpha, beta, gamma):
    """``sqrt(pi / (alpha + beta)) exp(gamma^2 / (4 (alpha + beta)))``."""
    s = alpha + beta
    if not s > 0:
        raise DomainError("integral_i_closed needs alpha + beta > 0")
    return math.sqrt(math.pi / s) * math.exp(gamma * gamma / (4.0 * s))


def integral_i_series(alpha, beta, gamma, tol=1e-12, max_terms=5000):
    """``sqrt(pi/alpha) sum_r H_{2r}(gamma / (2 sqrt alpha), -beta / (4 alpha)) / r!``.

    The umbral value of ``I(alpha, beta, gamma)`` with the ``beta x^2`` part
    of the exponent carried by the Hermite symbol.  Converges for
    ``|beta / alpha| < 1``, geometrically with ratio ``|beta / alpha|``; the
    default term cap is therefore larger than elsewhere.
    """
    if not alpha > 0:
        raise DomainError("integral_i_series needs alpha > 0")
    if abs(beta / alpha) >= 1:
        raise DivergenceError("integral_i_series needs |beta / alpha| < 1")
    x = gamma / (2.0 * math.sqrt(alpha))
    y = -beta / (4.0 * alpha)
    res = gen_even_sum(1.0, (x, y), tol, max_terms)
    scale = math.sqrt(math.pi / alpha)
    return SeriesResult(
        value=scale * res.value,
        terms_used=res.terms_used,
        last_term=scale * res.last_term,
        converged=res.converged,
        error_estimate=scale * res.error_estimate,
        terms=tuple(scale * t for t in res.terms),
    )


def integral_gauss_quartic(gamma, beta, form="d"):
    """``int exp(-(gamma x^2 + beta x^4)) dx``.

    ``form="d"``: ``sqrt(pi) H_{-1/2}(gamma, -beta)`` through ``D_{-1/2}``.
    ``form="k"``: the modified Bessel form, valid for ``gamma > 0``::

        sqrt(gamma / (2 sqrt(2 beta))) (2 beta)^(-1/4) exp(w) K_{1/4}(w),  w = gamma^2 / (8 beta)
    """
    if not beta > 0:
        raise DomainError("integral_gauss_quartic needs beta > 0")
    if form == "d":
        return _SQRT_PI * hermite_neg(-0.5, gamma, beta)
    if form == "k":
        if not gamma > 0:
            raise DomainError("the K form needs gamma > 0")
        w = gamma * gamma / (8.0 * beta)
        return (math.sqrt(gamma / (2.0 * math.sqrt(2.0 * beta))) * (2.0 * beta) ** -0.25
                * bessel_k(0.25, w, scaled=True))
    raise ValueError("form must be 'd' or 'k'")


def moment_g(n, a):
    """``int_0^inf x^n exp(-a x^4) dx = a^(-(n+1)/4) Gamma((n+1)/4) / 4``."""
    if not a > 0:
        raise DomainError("moment_g needs a > 0")
    e = (n + 1) / 4.0
    if e > 40:
        return 0.25 * math.exp(log_gamma(e) - e * math.log(a))
    return 0.25 * a ** -e * gamma_fn(e)


def _hermite_over_factorial(n_max, x, y):
    # H_n(x, y) / n! from (n+1) q_{n+1} = x q_n + 2 y q_{n-1}; avoids n! overflow
    q = [1.0 + 0 * x, x + 0 * y]
    for n in range(1, n_max):
        q.append((x * q[n] + 2 * y * q[n - 1]) / (n + 1))
    return q[: n_max + 1]


def integral_j_perturbative(a, b, c, n_terms=40, tol=1e-12):
    """Term-by-term integration of ``exp(-(b x^2 + c x))`` against ``exp(-a x^4)``.

    ``sum_n (-1)^n / n! g_n(a) [H_n(c, -b) + H_n(-c, -b)]``, evaluated for
    ``n < n_terms`` without early stopping.  ``details`` carries the partial
    sums, the even-term magnitudes and whether those magnitudes grow.
    ``converged`` is true only when the last two nonzero terms are both below
    ``tol * |sum|`` and decreasing.
    """
    if not a > 0:
        raise DomainError("integral_j_perturbative needs a > 0")
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    q = _hermite_over_factorial(n_terms, c, -b)
    terms = []
    partial = []
    total = 0.0
    for n in range(n_terms):
        # H_n(-c, -b) = (-1)^n H_n(c, -b): odd orders cancel
        t = 2.0 * moment_g(n, a) * q[n] if n % 2 == 0 else 0.0
        terms.append(t)
        total += t
        partial.append(total)
    even = [abs(t) for t in terms[::2]]
    nonzero = [t for t in terms if t != 0]
    if len(nonzero) >= 2:
        tail = tail_estimate(nonzero[-1], nonzero[-2])
        small = abs(nonzero[-1]) < tol * abs(total) and abs(nonzero[-2]) < tol * abs(total)
        shrinking = abs(nonzero[-1]) < abs(nonzero[-2])
    else:
        tail = abs(total)
        small = shrinking = False
    err = tail + n_terms * _EPS * sum(abs(t) for t in terms)
    # index where the even-term magnitudes start growing without interruption to the end
    k = len(even) - 1
    growing_from = None
    if k >= 1 and even[k] > even[k - 1]:
        while k >= 1 and even[k] > even[k - 1]:
            k -= 1
        growing_from = 2 * k
    return SeriesResult(
        value=total,
        terms_used=n_terms,
        last_term=abs(terms[-1]) if terms[-1] != 0 else (even[-1] if even else 0.0),
        converged=bool(small and shrinking and err <= tol * abs(total)),
        error_estimate=err,
        terms=tuple(terms),
        details={"partial_sums": partial, "even_term_magnitudes": even,
                 "increasing_from": growing_from},
    )


def _d_series_terms(a, b, c2):
    # (1/s!) c2^s H_{-(s+1/2)}(b, -a), with c2 = (c/2)^2 (negative on the Pearcey slice)
    coeff = 1.0
    s = 0
    while True:
        yield coeff * hermite_neg(-(s + 0.5), b, a)
        s += 1
        coeff *= c2 / s


def _scaled(res, scale, details=None):
    return SeriesResult(
        value=scale * res.value,
        terms_used=res.terms_used,
        last_term=scale * res.last_term,
        converged=res.converged,
        error_estimate=scale * res.error_estimate,
        terms=tuple(scale * t for t in res.terms),
        details=details if details is not None else res.details,
    )


def integral_j_series(a, b, c, tol=1e-12, max_terms=MAX_TERMS):
    """``J(a, b, c) = sqrt(pi) sum_s (c/2)^(2s) / s! H_{-(s+1/2)}(b, -a)``.

    Convergent for every real ``b, c`` once ``a > 0``; summation stops after
    three consecutive terms below ``tol * |sum|``.
    """
    if not a > 0:
        raise DomainError("integral_j_series needs a > 0")
    if c == 0:
        first = hermite_neg(-0.5, b, a)
        err = _EPS * abs(first)
        return SeriesResult(value=_SQRT_PI * first, terms_used=1, last_term=_SQRT_PI * abs(first),
                            converged=True, error_estimate=_SQRT_PI * err, terms=(_SQRT_PI * first,))
    res = accumulate(_d_series_terms(a, b, 0.25 * c * c), tol, max_terms)
    return _scaled(res, _SQRT_PI)


def integral_power(n, beta, gamma):
    """``int_0^inf exp(-(beta x^(2n) + gamma x^n)) dx``.

    ``(1/n) Gamma(1/n) (2 beta)^(-1/(2n)) exp(gamma^2 / 8 beta) D_{-1/n}(gamma / sqrt(2 beta))``
    """
    if int(n) != n or n < 1:
        raise DomainError("integral_power needs an integer n >= 1")
    if not beta > 0:
        raise DomainError("integral_power needs beta > 0")
    n = int(n)
    z = gamma / math.sqrt(2.0 * beta)
    return (gamma_fn(1.0 / n) / n * (2.0 * beta) ** (-0.5 / n)
            * parabolic_cylinder_d(-1.0 / n, z, scaled=True))


def pearcey(x, y, tol=1e-12, max_terms=MAX_TERMS):
    """Pearcey integral ``int exp(-(t^4 + x t^2) + i y t) dt`` for real ``x, y``.

    This is ``J(1, x, -i y)``; with ``(c/2)^(2s) = (-1)^s (y/2)^(2s)`` the
    D-function series stays real.
    """
    if y == 0:
        return integral_j_series(1.0, x, 0.0, tol, max_terms)
    res = accumulate(_d_series_terms(1.0, x, -0.25 * y * y), tol, max_terms)
    return _scaled(res, _SQRT_PI)


def pearcey_recursive(x, y, n_terms=60, tol=1e-12):
    """Pearcey integral from the moment series ``2 sum_n (-1)^n g_2n(1) a_2n(x, y)``.

    ``a_0 = 1``, ``a_1 = y``, ``a_n = (y a_{n-1} + 2 x a_{n-2}) / n``.  The
    same sum written with complex two-variable Hermite polynomials,
    ``sum_n (-1)^n / n! g_n(1) [H_n(-iy, -x) + H_n(iy, -x)]``, is evaluated
    alongside and returned in ``details["hermite_form"]``.
    """
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    m = 2 * n_terms
    if m > 170:
        raise DomainError("n_terms above 85 overflows the factorials of the Hermite form")
    coef = [1.0, y]
    for k in range(2, m + 1):
        coef.append((y * coef[k - 1] + 2.0 * x * coef[k - 2]) / k)
    terms = [2.0 * (-1) ** n * moment_g(2 * n, 1.0) * coef[2 * n] for n in range(n_terms + 1)]
    total = sum(terms)

    hp = hermite2_sequence(m, (1j * y, -x))
    hm = hermite2_sequence(m, (-1j * y, -x))
    h_terms = [(-1) ** n / math.factorial(n) * moment_g(n, 1.0) * (hp[n] + hm[n]) for n in range(m + 1)]
    h_total = sum(h_terms)

    nonzero = [t for t in terms if t != 0]
    tail = tail_estimate(nonzero[-1], nonzero[-2]) if len(nonzero) >= 2 else abs(terms[-1])
    err = tail + len(terms) * _EPS * sum(abs(t) for t in terms)
    return SeriesResult(
        value=total,
        terms_used=len(terms),
        last_term=abs(terms[-1]),
        converged=err <= tol * abs(total),
        error_estimate=err,
        terms=tuple(terms),
        details={"hermite_form": h_total.real, "hermite_form_imag": h_total.imag,
                 "coefficients": coef},
    )


def _check_f(a, b, c, need_a=True):
    if not b * b - 4.0 * c < 0:
        raise DomainError("need b^2 - 4c < 0")
    if need_a and not a > 1:
        raise DomainError("need a > 1")


def _default_radius(c):
    # branch points of sqrt(x^2 + b x + c) sit at |x| = sqrt(c); keep the contour inside
    return min(1.0, 0.9 * math.sqrt(c))


def r_polynomial(m, b, c, quad_points=64, radius=None):
    """Taylor coefficient ``R_m(b, c)`` of ``exp(sqrt(x^2 + b x + c)) = sum R_m x^m / m!``.

    ``R_m = m! / (2 pi rho^m) int_0^{2pi} exp(-i m phi) exp(sqrt(q(rho e^{i phi}))) dphi``
    with the principal square root, by the trapezoid rule with doubling.
    ``rho`` defaults to 1 when the branch points lie outside the unit
    circle and to ``0.9 sqrt(c)`` otherwise, which keeps the periodic
    integrand analytic (and the trapezoid rule geometrically convergent).

    Raises
    ------
    DomainError
        ``b^2 - 4c >= 0`` or a bad ``quad_points``.
    BranchError
        The radicand crosses the negative real axis between adjacent nodes.
    """
    _check_f(None, b, c, need_a=False)
    if m < 0 or int(m) != m:
        raise DomainError("m must be a non-negative integer")
    if quad_points < 64 or quad_points & (quad_points - 1):
        raise DomainError("quad_points must be a power of two >= 64")
    rho = _default_radius(c) if radius is None else float(radius)
    m = int(m)

    def integrand(phi):
        w = rho * np.exp(1j * phi)
        return np.exp(-1j * m * phi) * np.exp(np.sqrt(w * w + b * w + c))

    res = integrate_periodic(integrand, n_points=quad_points, rel_tol=1e-11)

    n = res.n_points
    w = rho * np.exp(2j * math.pi * np.arange(n + 1) / n)
    q = w * w + b * w + c
    crossing = (q.real[:-1] < 0) & (q.real[1:] < 0) & (np.sign(q.imag[:-1]) != np.sign(q.imag[1:]))
    if crossing.any():
        raise BranchError("radicand crosses the negative real axis on the contour")

    scale = math.factorial(m) / (2.0 * math.pi * rho ** m)
    value = scale * res.value
    if abs(value.imag) > max(1e-10 * abs(value.real), 10.0 * scale * res.error):
        raise BranchError(f"imaginary residue {value.imag:.3e} too large for R_{m}")
    return value.real


def integral_f_series(a, b, c, n_terms=30, tol=1e-12):
    """``sqrt(pi/a) sum_{n < n_terms} (1/(4a))^n R_2n(b, c) / n!``.

    When ``exp(sqrt(x^2 + b x + c))`` has a finite Taylor radius the terms
    eventually grow factorially, so the sum is asymptotic; ``details``
    records the smallest term and the partial sum that stops there.
    """
    _check_f(a, b, c)
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    pref = math.sqrt(math.pi / a)
    terms = []
    coeff = pref
    for n in range(n_terms):
        terms.append(coeff * r_polynomial(2 * n, b, c))
        coeff /= 4.0 * a * (n + 1)
    partial = list(np.cumsum(terms))
    total = partial[-1]
    mags = [abs(t) for t in terms]
    nonzero = [t for t in terms if t != 0]
    tail = tail_estimate(nonzero[-1], nonzero[-2]) if len(nonzero) >= 2 else mags[-1]
    err = tail + n_terms * _EPS * sum(mags)
    # terms at rounding level of the running sum are structural zeros (R_4(0, c) = 0),
    # not the point where an asymptotic series turns
    noise = [64 * _EPS * sum(mags[:i]) for i in range(n_terms)]
    k = int(np.argmin([mg if mg > nz else math.inf for mg, nz in zip(mags, noise)]))
    return SeriesResult(
        value=float(total),
        terms_used=n_terms,
        last_term=mags[-1],
        converged=err <= tol * abs(total),
        error_estimate=float(err),
        terms=tuple(terms),
        details={"smallest_term_index": k, "smallest_term": mags[k],
                 "truncated_at_smallest": float(partial[k])},
    )
