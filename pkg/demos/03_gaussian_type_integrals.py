# Gaussian-type integrals by umbral series, each checked against direct quadrature.
import math
import time

from hermite_calculus import (
    gamma,
    integral_gauss_quartic,
    integral_i_closed,
    integral_i_series,
    integral_j_perturbative,
    integral_j_series,
    integral_power,
)
from hermite_calculus.oracles import gauss_quartic_oracle, integral_j_oracle, power_oracle

# warm-up: int exp(-(alpha + beta) x^2 - gamma x) dx, with beta x^2 carried by the Hermite symbol
for beta in (0.0, 0.5, 0.9, 0.99):
    res = integral_i_series(1.0, beta, 1.0, tol=1e-12)
    print(f"beta={beta}: series {res.value:.15f} closed {integral_i_closed(1, beta, 1):.15f} terms {res.terms_used}")

# int exp(-(g x^2 + b x^4)) dx is sqrt(pi) H_{-1/2}(g, -b), also a K_{1/4} Bessel function
print("Gamma(1/4)/2 =", gamma(0.25) / 2, " from the D form:", integral_gauss_quartic(0, 1))
for g, b in ((1, 1), (2, 0.5)):
    print(g, b, integral_gauss_quartic(g, b), integral_gauss_quartic(g, b, "k"), gauss_quartic_oracle(g, b).value)

# int exp(-(a x^4 + b x^2 + c x)) dx: a convergent series of D functions
t0 = time.perf_counter()
res = integral_j_series(1.0, 1.0, 1.0, tol=1e-12)
print("J(1,1,1) series", res.value, "terms", res.terms_used, f"{1e3 * (time.perf_counter() - t0):.2f} ms")
t0 = time.perf_counter()
print("J(1,1,1) oracle", integral_j_oracle(1, 1, 1).value, f"{1e3 * (time.perf_counter() - t0):.2f} ms")

# expanding exp(-b x^2 - c x) and integrating against exp(-a x^4) term by term
pert = integral_j_perturbative(1.0, 1.0, 1.0, n_terms=40)
print("term-by-term partial sums:", [round(s, 10) for s in pert.details["partial_sums"][::6]])
print("even-term magnitudes:", ["%.1e" % m for m in pert.details["even_term_magnitudes"][::3]])
print("converged:", pert.converged)
# at (1,1,1) the terms keep shrinking and the partial sums settle on the quadrature value;
# push b negative and they grow instead
print("b = -6:", ["%.1e" % m for m in integral_j_perturbative(1.0, -6.0, 0.0, 30).details["even_term_magnitudes"]])

# half-line integrals of exp(-(beta x^(2n) + gamma x^n)) reduce to D_{-1/n}
for n in (1, 2, 3):
    print(n, integral_power(n, 1.0, 1.0), power_oracle(n, 1.0, 1.0).value)
print("n=1 erfc form:", math.sqrt(math.pi / 4) * math.e * math.erfc(1), integral_power(1, 1, 2))
