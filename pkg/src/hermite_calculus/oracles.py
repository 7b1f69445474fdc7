"""Direct quadrature of each integral family, used as ground truth.

Every function integrates the defining integrand itself with
:mod:`hermite_calculus.quadrature`; nothing here touches the Hermite
machinery or the parabolic cylinder functions.
"""

from __future__ import annotations

import math

import numpy as np

from .quadrature import QuadratureConfig, integrate_half_line, integrate_real_line

__all__ = [
    "integral_i_oracle",
    "gauss_quartic_oracle",
    "integral_j_oracle",
    "power_oracle",
    "pearcey_oracle",
    "integral_f_oracle",
    "taylor_exp_sqrt_quadratic",
]

ORACLE_CONFIG = QuadratureConfig(rel_tol=1e-12)


def integral_i_oracle(alpha, beta, gamma, cfg=None):
    s = alpha + beta
    return integrate_real_line(lambda x: np.exp(-x * (s * x + gamma)), cfg or ORACLE_CONFIG)


def gauss_quartic_oracle(gamma, beta, cfg=None):
    return integrate_real_line(lambda x: np.exp(-x * x * (gamma + beta * x * x)), cfg or ORACLE_CONFIG)


def integral_j_oracle(a, b, c, cfg=None):
    # written as x^2 (a x^2 + b) so the tails never form inf - inf
    return integrate_real_line(lambda x: np.exp(-x * x * (a * x * x + b) - c * x), cfg or ORACLE_CONFIG)


def power_oracle(n, beta, gamma, cfg=None):
    def f(x):
        xn = x ** n
        return np.exp(-xn * (beta * xn + gamma))

    return integrate_half_line(f, cfg or ORACLE_CONFIG)


def pearcey_oracle(x, y, cfg=None):
    return integrate_real_line(lambda t: np.exp(-t * t * (t * t + x)) * np.cos(y * t), cfg or ORACLE_CONFIG)


def integral_f_oracle(a, b, c, cfg=None):
    return integrate_real_line(lambda x: np.exp(-a * x * x + np.sqrt(x * x + b * x + c)), cfg or ORACLE_CONFIG)


def taylor_exp_sqrt_quadratic(order, b, c):
    """``[m! e_m for m <= order]`` where ``exp(sqrt(c + b x + x^2)) = sum e_m x^m``.

    Power-series composition: the square root by the Cauchy-product
    recursion, then the exponential by ``k e_k = sum_j j s_j e_(k-j)``.
    Independent of the contour integral used by the library.
    """
    if not c > 0:
        raise ValueError("series composition needs c > 0")
    q = [c, b, 1.0] + [0.0] * max(0, order - 2)
    s = [math.sqrt(c)]
    for k in range(1, order + 1):
        acc = q[k] - sum(s[j] * s[k - j] for j in range(1, k))
        s.append(acc / (2.0 * s[0]))
    e = [math.exp(s[0])]
    for k in range(1, order + 1):
        e.append(sum(j * s[j] * e[k - j] for j in range(1, k + 1)) / k)
    return [math.factorial(m) * e[m] for m in range(order + 1)]
