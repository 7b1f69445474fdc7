# Two-variable Hermite polynomials H_n(x, y): the coefficient of t^n/n! in exp(x t + y t^2).
import math

import numpy as np

from hermite_calculus import (
    gen_even_closed,
    gen_even_sum,
    hermite2,
    hermite2_coefficients,
    hermite2_sequence,
    hermite4_two_arg,
    hermite_gh4,
    quartic_exp_derivative,
    umbral_shift,
    umbral_shift_series,
)

# H_4(x, y) = x^4 + 12 x^2 y + 12 y^2
print("coefficients of H_4:", hermite2_coefficients(4))
print("H_4(1, 1) =", hermite2(4, (1, 1)))

# the same numbers from the three-term recurrence
print("H_0..H_6 at (2, 1):", hermite2_sequence(6, (2.0, 1.0)))

# y = 0 collapses to plain powers, negative y gives the classical-looking ones
xs = np.linspace(-2, 2, 5).tolist()
for y in (0.0, -0.5):
    print(f"H_3(x, {y}) on", xs, "->", [hermite2(3, (x, y)) for x in xs])

# summing even orders against t^r / r! gives a closed form while |4 y t| < 1
res = gen_even_sum(0.1, (1.0, -0.5))
print("even-order sum:", res.value, "closed:", gen_even_closed(0.1, (1.0, -0.5)),
      "terms:", res.terms_used, "estimate:", res.error_estimate)

# shifting the index by l multiplies by H_l at a shifted argument
lhs = umbral_shift_series(2, (2.0, -1.0), 0.1, n_terms=60).value
print("shift identity:", lhs, umbral_shift(2, (2.0, -1.0), 0.1))

# fourth order: exp(x1 t + x2 t^2 + x3 t^3 + x4 t^4)
print("H4_4(-1, 0, 0, -1) =", hermite_gh4(4, (-1, 0, 0, -1)), "=", hermite4_two_arg(4, 1, 1))

# derivatives of exp(-(g x^2 + b x^4)) are fourth-order Hermite polynomials times the exponential
g, b, x = 1.0, 0.5, 0.7
h = 1e-3
f = lambda s: math.exp(-(g * s * s + b * s ** 4))
fd = (f(x + h) - 2 * f(x) + f(x - h)) / h ** 2
print("second derivative:", quartic_exp_derivative(2, g, b, x), "finite difference:", fd)
