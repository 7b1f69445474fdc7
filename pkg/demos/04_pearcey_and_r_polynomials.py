# The Pearcey integral int exp(-(t^4 + x t^2) + i y t) dt, and the R polynomial expansion.
import math

import numpy as np

from hermite_calculus import integral_f_series, pearcey, pearcey_recursive, r_polynomial
from hermite_calculus.oracles import integral_f_oracle, pearcey_oracle, taylor_exp_sqrt_quadratic

# real slice: three series forms and the quadrature
print(f"{'x':>3} {'y':>3} {'D-series':>20} {'a_n recursion':>20} {'Hermite form':>20} {'oracle':>20}")
for x in (-3, 0, 3):
    for y in (0, 2, 4):
        r = pearcey_recursive(x, y, 60)
        print(f"{x:>3} {y:>3} {pearcey(x, y).value:20.15f} {r.value:20.15f} "
              f"{r.details['hermite_form']:20.15f} {pearcey_oracle(x, y).value:20.15f}")

# a small map of P(x, y), rows are y = 0..4
xs = np.arange(-3, 4)
ys = np.arange(0, 5)
grid = np.array([[pearcey(x, y).value for x in xs] for y in ys])
print(np.array2string(grid, precision=4, suppress_small=True))

# R_m are Taylor coefficients of exp(sqrt(x^2 + b x + c)), read off a circle inside the branch points
print("R_0..R_6 at (1, 1) contour:", [round(r_polynomial(m, 1, 1), 12) for m in range(7)])
print("R_0..R_6 at (1, 1) series :", [round(v, 12) for v in taylor_exp_sqrt_quadratic(6, 1, 1)])

# f(a,b,c) = int exp(-a x^2 + sqrt(x^2 + b x + c)) dx as sqrt(pi/a) sum R_2n / (n! (4a)^n)
# the Taylor radius is sqrt(c), so the terms turn around and grow
for a, b, c in ((2, 0, 1), (4, 1, 1)):
    res = integral_f_series(a, b, c, 30)
    o = integral_f_oracle(a, b, c).value
    print(f"f{(a, b, c)}: oracle {o:.12f}  best truncation {res.details['truncated_at_smallest']:.12f} "
          f"(n={res.details['smallest_term_index']})  30 terms {res.value:.3e}")
    print("   |terms|:", ["%.1e" % abs(t) for t in res.terms[:12]])
