"""Two-variable Hermite polynomials and the fourth-order extension.

``H_n(x, y) = n! sum_s x^(n-2s) y^s / ((n-2s)! s!)`` is the coefficient of
``t^n / n!`` in ``exp(x t + y t^2)``.  The fourth-order polynomial
``H_n^(4)(x1, x2, x3, x4)`` is the coefficient of ``t^n / n!`` in
``exp(x1 t + x2 t^2 + x3 t^3 + x4 t^4)``.

The umbral bookkeeping used by the integral evaluators reads
``h^n -> H_n(gamma, -beta)``, so a pair ``(gamma, -beta)`` is what gets
passed around as :class:`HermitePair`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import replace
from typing import NamedTuple

from ._series import MAX_TERMS, accumulate
from ._types import DivergenceError, DomainError, SeriesResult

__all__ = [
    "HermitePair",
    "GH4Args",
    "hermite2",
    "hermite2_sequence",
    "hermite2_coefficients",
    "hermite_gh4",
    "hermite4_two_arg",
    "gen_even_sum",
    "gen_even_closed",
    "umbral_shift",
    "umbral_shift_series",
    "quartic_exp_derivative",
    "quartic_exp_derivative_umbral",
]

DIRECT_SUM_MAX = 20
_EPS = 2.220446049250313e-16


class HermitePair(NamedTuple):
    """Arguments ``(x, y)`` of ``H_n(x, y)``; real or complex."""

    x: complex | float
    y: complex | float


class GH4Args(NamedTuple):
    x1: float
    x2: float
    x3: float
    x4: float


def _pair(p):
    x, y = p
    if not (cmath.isfinite(x) and cmath.isfinite(y)):
        raise DomainError("Hermite arguments must be finite")
    return x, y


def hermite2_coefficients(n):
    """Integer coefficients ``c_s`` with ``H_n(x, y) = sum_s c_s x^(n-2s) y^s``."""
    if n < 0:
        raise DomainError("negative Hermite index; use the fractional module")
    fn = math.factorial(n)
    return [fn // (math.factorial(n - 2 * s) * math.factorial(s)) for s in range(n // 2 + 1)]


def hermite2(n, p):
    """``H_n(x, y)`` for ``n >= 0``.

    Exact double sum up to ``n = 20``, three-term recurrence beyond.
    """
    if n < 0:
        raise DomainError("negative Hermite index; use the fractional module")
    x, y = _pair(p)
    if n <= DIRECT_SUM_MAX:
        return sum(c * x ** (n - 2 * s) * y ** s for s, c in enumerate(hermite2_coefficients(n)))
    return hermite2_sequence(n, (x, y))[-1]


def hermite2_sequence(n_max, p):
    """``[H_0, ..., H_n_max]`` via ``H_{k+1} = x H_k + 2 y k H_{k-1}``."""
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    x, y = _pair(p)
    seq = [1.0 + 0 * x * y, x + 0 * y]
    for k in range(1, n_max):
        seq.append(x * seq[k] + 2 * y * k * seq[k - 1])
    return seq[: n_max + 1]


def hermite_gh4(n, args):
    """Fourth-order Hermite polynomial by its multinomial sum.

    ``n! sum x1^r1 x2^r2 x3^r3 x4^r4 / (r1! r2! r3! r4!)`` over
    ``r1 + 2 r2 + 3 r3 + 4 r4 = n``.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    x1, x2, x3, x4 = args
    fn = math.factorial(n)
    fact = math.factorial
    total = 0.0
    for r4 in range(n // 4 + 1):
        m4 = n - 4 * r4
        for r3 in range(m4 // 3 + 1):
            m3 = m4 - 3 * r3
            for r2 in range(m3 // 2 + 1):
                r1 = m3 - 2 * r2
                coeff = fn // (fact(r1) * fact(r2) * fact(r3) * fact(r4))
                total += coeff * x1 ** r1 * x2 ** r2 * x3 ** r3 * x4 ** r4
    return total


def hermite4_two_arg(n, c, a):
    """``H_n^(4)(-c, -a) = (-1)^n n! sum_r c^(n-4r) (-a)^r / ((n-4r)! r!)``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    fn = math.factorial(n)
    total = 0.0
    for r in range(n // 4 + 1):
        coeff = fn // (math.factorial(n - 4 * r) * math.factorial(r))
        total += coeff * c ** (n - 4 * r) * (-a) ** r
    return -total if n % 2 else total


def gen_even_closed(t, p):
    """Closed form ``exp(x^2 t / (1 - 4 y t)) / sqrt(1 - 4 y t)``."""
    x, y = _pair(p)
    d = 1 - 4 * y * t
    if isinstance(d, complex) or isinstance(x, complex):
        return cmath.exp(x * x * t / d) / cmath.sqrt(d)
    return math.exp(x * x * t / d) / math.sqrt(d)


def _even_terms(t, x, y):
    # t^r H_{2r}(x, y) / r! = sign^r F_{2r}  with  F_n = H_n |t|^(n/2) / Gamma(n/2 + 1),
    # which stays of size |4 y t|^(n/2) and never overflows
    tau = math.sqrt(abs(t))
    sgn = 1.0 if t >= 0 else -1.0
    rho = 2.0 / math.sqrt(math.pi)  # Gamma(n/2 + 1) / Gamma(n/2 + 3/2) at n = 0
    f_prev, f = 1.0, x * tau * rho
    n = 1
    r = 0
    yield 1.0
    while True:
        for _ in range(2):
            rho = 2.0 / ((n + 1) * rho)
            f_prev, f = f, x * tau * rho * f + 4.0 * y * tau * tau * n / (n + 1) * f_prev
            n += 1
        r += 1
        # after two steps f_prev holds F_{2r}
        yield sgn ** r * f_prev


def _regular_tail(tail, rho):
    # strictly alternating or single-signed, shrinking at about the asymptotic ratio;
    # a much faster drop means a zero crossing of the oscillating factor is near
    if len(tail) < 3 or all(v == 0 for v in tail):
        return True
    mags = [abs(v) for v in tail]
    if any(not 0.8 * rho * a <= b < a for a, b in zip(mags, mags[1:])):
        return False
    signs = [v > 0 for v in tail]
    return all(a != b for a, b in zip(signs, signs[1:])) or len(set(signs)) == 1


def gen_even_sum(t, p, tol=1e-12, max_terms=MAX_TERMS):
    """Partial sums of ``sum_r t^r / r! H_{2r}(x, y)``.

    Raises
    ------
    DivergenceError
        When ``|4 y t| >= 1``, outside the disc where the sum converges.
    """
    x, y = _pair(p)
    if abs(4 * y * t) >= 1:
        raise DivergenceError("even-index generating sum needs |4 y t| < 1")
    res = accumulate(_even_terms(float(t), x, y), tol, max_terms)
    # |term_r| ~ |4 y t|^r times a slowly varying oscillating factor, so three small
    # terms can sit at a zero crossing; an irregular tail is bounded by the geometric
    # envelope of the second half of the trace instead of the last two terms alone
    n = res.terms_used
    err = res.error_estimate
    rho = abs(4 * y * t)
    if not _regular_tail(res.terms[-10:], rho):
        env = max(abs(res.terms[j]) * rho ** (n - 1 - j) for j in range(n // 2, n))
        err = max(err, env * rho / (1.0 - rho) + n * _EPS * sum(abs(v) for v in res.terms))
    # term r comes out of 2r recurrence steps, each adding a rounding error
    err += sum(2 * r * _EPS * abs(term) for r, term in enumerate(res.terms))
    return replace(res, error_estimate=err, converged=res.converged and err <= tol * abs(res.value))


def umbral_shift(l, p, t):
    """``sum_n t^n / n! H_{n+l}(x, y) = H_l(x + 2 y t, y) exp(x t + y t^2)``."""
    if l < 0:
        raise DomainError("l must be non-negative")
    x, y = _pair(p)
    e = x * t + y * t * t
    ex = cmath.exp(e) if isinstance(e, complex) else math.exp(e)
    return hermite2(l, (x + 2 * y * t, y)) * ex


def umbral_shift_series(l, p, t, n_terms=60):
    """Truncated left side of :func:`umbral_shift`, for cross-checking."""
    if l < 0:
        raise DomainError("l must be non-negative")
    x, y = _pair(p)
    seq = hermite2_sequence(l + n_terms, (x, y))
    terms = []
    c = 1.0
    for n in range(n_terms):
        terms.append(c * seq[n + l])
        c *= t / (n + 1)
    total = sum(terms)
    last = abs(terms[-1])
    return SeriesResult(value=total, terms_used=n_terms, last_term=last,
                        converged=last <= 1e-15 * max(abs(total), 1e-300),
                        error_estimate=last, terms=tuple(terms))


def quartic_exp_derivative(n, gamma, beta, x):
    """``d^n/dx^n exp(-(gamma x^2 + beta x^4))`` through the fourth-order polynomial."""
    args = GH4Args(-2 * gamma * x - 4 * beta * x ** 3, -gamma - 6 * beta * x * x, -4 * beta * x, -beta)
    return hermite_gh4(n, args) * math.exp(-(gamma * x * x + beta * x ** 4))


def quartic_exp_derivative_umbral(n, gamma, beta, x):
    # the same derivative expanded in H_{n-r}(gamma + 2 beta x^2, -beta)
    if n < 0:
        raise DomainError("n must be non-negative")
    shifted = hermite2_sequence(n, (gamma + 2 * beta * x * x, -beta))
    total = 0.0
    for r in range(n // 2 + 1):
        total += (-1) ** r * (2 * x) ** (n - 2 * r) / (math.factorial(n - 2 * r) * math.factorial(r)) * shifted[n - r]
    sign = -1.0 if n % 2 else 1.0
    return sign * math.factorial(n) * total * math.exp(-(gamma * x * x + beta * x ** 4))
