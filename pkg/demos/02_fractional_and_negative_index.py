# Hermite functions of non-integer order, H_nu(x, -y), three ways.
import numpy as np

from hermite_calculus import hermite2, hermite_frac_integral, hermite_frac_series, hermite_neg

# at integer order the cosine integral gives back the polynomial
for n in range(5):
    print(n, hermite_frac_integral(n, 1.0, 1.0), hermite2(n, (1.0, -1.0)))

# for -1 < nu < 0 the cosine integral and the parabolic cylinder route meet
for nu in (-0.9, -0.5, -0.1):
    a = hermite_frac_integral(nu, 1.5, 0.8)
    b = hermite_neg(nu, 1.5, 0.8)
    print(f"nu={nu}: integral {a:.15f}  D-route {b:.15f}  diff {abs(a - b):.1e}")

# below -1 only the D route is available
print("H_{-2.5}(1, -0.5) =", hermite_neg(-2.5, 1.0, 0.5))

# the descending power series is asymptotic: fine for x^2 >> y, useless otherwise
good = hermite_frac_series(-0.5, 10.0, 0.1)
print("x >> y:", good.value, "reference", hermite_neg(-0.5, 10.0, 0.1),
      "estimate", good.error_estimate, "converged", good.converged)
bad = hermite_frac_series(0.5, 0.5, 2.0)
print("x ~ y :", bad.value, "reference", hermite_frac_integral(0.5, 0.5, 2.0),
      "estimate", bad.error_estimate, "converged", bad.converged)

# the terms shrink then grow; the sum stops at the smallest one
mags = np.abs(hermite_frac_series(-0.5, 4.0, 1.0, tol=1e-30).terms)
print("term magnitudes up to the turn:", ["%.1e" % m for m in mags])
