"""Compiled-in comparison grids and the report record they produce.

Each case pairs a library evaluation with an independent reference (a
closed form, a second algorithm or a quadrature oracle) and a tolerance.
Suites::

    core        special functions and integer-order Hermite identities
    fractional  fractional and negative index routes
    integrals   every integral family against its oracle

Running a suite yields one :class:`EvalReport` per case, in grid order.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from . import hermite as hc
from . import integrals as ig
from . import oracles
from ._types import HermiteCalculusError
from .fractional import hermite_frac_integral, hermite_frac_series, hermite_neg
from .quadrature import QuadratureConfig, integrate_half_line
from .special_functions import bessel_k, erfc, gamma, parabolic_cylinder_d

__all__ = ["EvalReport", "Case", "SUITES", "build_suite", "run_cases", "run_suite"]

REPORT_FIELDS = ("name", "params", "series_value", "oracle_value", "abs_err", "rel_err",
                 "terms_used", "converged", "wall_time_ns")


@dataclass(frozen=True)
class EvalReport:
    """One comparison: a library value against its reference."""

    name: str
    params: dict
    series_value: float | None
    oracle_value: float | None
    abs_err: float | None
    rel_err: float | None
    terms_used: int | None
    converged: bool
    wall_time_ns: int
    passed: bool = field(default=True, compare=False)

    @classmethod
    def build(cls, name, params, series, oracle, terms_used=None, converged=True,
              wall_time_ns=0, passed=True):
        series = _real(series)
        oracle = _real(oracle)
        if oracle is None or series is None:
            abs_err = rel_err = None
        else:
            abs_err = abs(series - oracle)
            rel_err = abs_err / max(abs(oracle), 1e-300)
        return cls(name, dict(params), series, oracle, abs_err, rel_err, terms_used,
                   bool(converged), int(wall_time_ns), bool(passed))

    def as_dict(self):
        return {k: getattr(self, k) for k in REPORT_FIELDS}


def _real(v):
    if v is None:
        return None
    if isinstance(v, complex):
        v = v.real
    return float(v)


class Outcome(NamedTuple):
    series: float | None
    oracle: float | None
    passed: bool
    terms_used: int | None = None
    converged: bool = True


@dataclass(frozen=True)
class Case:
    name: str
    params: dict
    run: Callable[[], Outcome]


def _close(series, oracle, tol, floor=0.0, **kw):
    # |series - oracle| <= tol * max(|oracle|, floor); floor covers references that vanish
    ok = abs(series - oracle) <= tol * max(abs(oracle), floor)
    return Outcome(series, oracle, bool(ok), **kw)


def _series_close(res, oracle, tol, need_converged=True):
    ok = abs(res.value - oracle) <= tol * abs(oracle) and (res.converged or not need_converged)
    return Outcome(res.value, oracle, bool(ok), res.terms_used, res.converged)


def _honest(res, oracle, tol):
    # within tol when converged; otherwise the reported estimate must cover the error
    err = abs(res.value - oracle)
    ok = err <= tol * abs(oracle) if res.converged else err <= max(res.error_estimate, tol * abs(oracle))
    return Outcome(res.value, oracle, bool(ok), res.terms_used, res.converged)


# -- core ------------------------------------------------------------------

def _core_cases():
    cases = []
    add = lambda name, params, fn: cases.append(Case(name, params, fn))

    for x in (0.1, 0.25, 0.5, 0.75, 0.9, 0.33, 0.61):
        add("gamma", {"x": x, "property": "reflection"},
            lambda x=x: _close(gamma(x) * gamma(1 - x) * math.sin(math.pi * x) / math.pi, 1.0, 1e-11))
    for x in (0.1, 0.5, 1.3, 2.5, 7.7, 12.0, 25.5, 50.0):
        add("gamma", {"x": x, "property": "recurrence"},
            lambda x=x: _close(gamma(x + 1), x * gamma(x), 1e-12))
    add("gamma", {"x": 5}, lambda: _close(gamma(5), 24.0, 1e-15))
    add("gamma", {"x": 0.5}, lambda: _close(gamma(0.5), math.sqrt(math.pi), 1e-15))

    def gamma_quarter():
        ref = integrate_half_line(lambda t: t ** -0.75 * np.exp(-t), QuadratureConfig(rel_tol=1e-13))
        return _close(gamma(0.25), ref.value, 1e-12)

    add("gamma", {"x": 0.25, "property": "quadrature"}, gamma_quarter)

    def erfc_one():
        ref = integrate_half_line(lambda t: 2 / math.sqrt(math.pi) * np.exp(-(1 + t) ** 2),
                                  QuadratureConfig(rel_tol=1e-13))
        return _close(erfc(1.0), ref.value, 1e-12)

    add("erfc", {"x": 1.0, "property": "quadrature"}, erfc_one)
    for x in (0.1, 0.8, 1.5, 3.0, 6.0):
        add("erfc", {"x": x, "property": "symmetry"}, lambda x=x: _close(erfc(x) + erfc(-x), 2.0, 1e-15))
    add("erfc", {"x": 30.0}, lambda: Outcome(erfc(30.0), 0.0, erfc(30.0) < 1e-300))

    add("bessel_k", {"nu": 0.5, "x": 1.0},
        lambda: _close(bessel_k(0.5, 1.0), math.sqrt(math.pi / 2) / math.e, 1e-13))

    def k_quadrature(nu=0.25, x=2.0):
        ref = integrate_half_line(lambda t: np.exp(-x * np.cosh(t)) * np.cosh(nu * t),
                                  QuadratureConfig(rel_tol=1e-13))
        return _close(bessel_k(nu, x), ref.value, 1e-11)

    add("bessel_k", {"nu": 0.25, "x": 2.0, "property": "quadrature"}, k_quadrature)

    for z in (0.5, 1.0, 2.0, 4.0):
        add("parabolic_cylinder_d", {"nu": -0.5, "z": z, "property": "bessel_identity"},
            lambda z=z: _close(parabolic_cylinder_d(-0.5, z),
                               math.sqrt(z / (2 * math.pi)) * bessel_k(0.25, z * z / 4), 1e-10))
    for z in np.arange(-3.0, 3.01, 0.5):
        z = float(z)
        add("parabolic_cylinder_d", {"nu": -1, "z": z, "property": "erfc_form"},
            lambda z=z: _close(parabolic_cylinder_d(-1.0, z),
                               math.exp(z * z / 4) * math.sqrt(math.pi / 2) * erfc(z / math.sqrt(2)), 1e-11))

    # recurrence H_{n+1} = x H_n + 2 y n H_{n-1}; the floor is the size of the two summands
    for n, x, y in itertools.product((1, 2, 5, 10, 15, 19, 20, 21, 25, 29), (-5.0, -2.0, 0.5, 3.0, 5.0),
                                     (-5.0, -1.0, 0.5, 5.0)):
        def rec(n=n, x=x, y=y):
            a = x * hc.hermite2(n, (x, y))
            b = 2 * y * n * hc.hermite2(n - 1, (x, y))
            return _close(hc.hermite2(n + 1, (x, y)), a + b, 1e-12, floor=abs(a) + abs(b))

        add("hermite2", {"n": n, "x": x, "y": y, "property": "recurrence"}, rec)

    for n, x, y in itertools.product(range(41), (0.3, 1.7, 4.0), (-2.0, 0.5)):
        def parity(n=n, x=x, y=y):
            floor = abs(hc.hermite2(n, (x, abs(y))))
            return _close(hc.hermite2(n, (-x, y)), (-1) ** n * hc.hermite2(n, (x, y)), 1e-13, floor=floor)

        add("hermite2", {"n": n, "x": x, "y": y, "property": "parity"}, parity)

    for n in range(1, 21):
        def deriv(n=n, x=1.3, y=-0.7):
            # d/dx of sum c_s x^(n-2s) y^s, coefficient by coefficient, against n H_{n-1}
            cn = hc.hermite2_coefficients(n)
            cm = hc.hermite2_coefficients(n - 1)
            shifted = [(n - 2 * s) * c for s, c in enumerate(cn) if n - 2 * s > 0]
            exact = shifted == [n * c for c in cm]
            val = sum(c * x ** (n - 1 - 2 * s) * y ** s for s, c in enumerate(shifted))
            out = _close(val, n * hc.hermite2(n - 1, (x, y)), 1e-13,
                         floor=n * abs(hc.hermite2(n - 1, (x, abs(y)))))
            return out._replace(passed=out.passed and exact)

        add("hermite2_coefficients", {"n": n, "property": "derivative"}, deriv)

    for k in range(31):
        def seq_case(k=k):
            s = hc.hermite2_sequence(30, (1.5, -0.25))
            return _close(s[k], hc.hermite2(k, (1.5, -0.25)), 1e-12)

        add("hermite2_sequence", {"k": k, "x": 1.5, "y": -0.25}, seq_case)
    add("hermite2_sequence", {"n_max": 3, "x": 2, "y": 1},
        lambda: Outcome(hc.hermite2_sequence(3, (2.0, 1.0))[-1], 20.0,
                        hc.hermite2_sequence(3, (2.0, 1.0)) == [1.0, 2.0, 6.0, 20.0]))

    for n, (c, a) in itertools.product(range(25), ((1.0, 1.0), (0.5, -2.0), (-1.5, 0.3))):
        add("hermite4_two_arg", {"n": n, "c": c, "a": a, "property": "gh4_consistency"},
            lambda n=n, c=c, a=a: _close(hc.hermite4_two_arg(n, c, a), hc.hermite_gh4(n, (-c, 0, 0, -a)),
                                         1e-12, floor=hc.hermite_gh4(n, (abs(c), 0, 0, abs(a)))))
    add("hermite4_two_arg", {"n": 4, "c": 1, "a": 1}, lambda: _close(hc.hermite4_two_arg(4, 1, 1), -23.0, 0))

    for l, x, y, t in itertools.product((0, 2, 5), (-2.0, 0.0, 2.0), (-2.0, 0.5, 2.0), (-1.0, -0.5, 0.5, 1.0)):
        def shift(l=l, x=x, y=y, t=t):
            res = hc.umbral_shift_series(l, (x, y), t, n_terms=80)
            return _close(res.value, hc.umbral_shift(l, (x, y), t), 1e-10, floor=1.0, terms_used=80)

        add("umbral_shift", {"l": l, "x": x, "y": y, "t": t, "property": "series_identity"}, shift)

    for n, g, b, x in itertools.product(range(9), (0.5, 1.0), (0.5, 1.0), (-0.7, 0.3, 1.2)):
        def quart(n=n, g=g, b=b, x=x):
            ref = hc.quartic_exp_derivative(n, g, b, x)
            floor = abs(hc.hermite_gh4(n, (abs(2 * g * x + 4 * b * x ** 3), g + 6 * b * x * x,
                                           abs(4 * b * x), b))) * math.exp(-(g * x * x + b * x ** 4))
            return _close(hc.quartic_exp_derivative_umbral(n, g, b, x), ref, 1e-9, floor=floor)

        add("quartic_exp_derivative", {"n": n, "gamma": g, "beta": b, "x": x, "property": "umbral_expansion"},
            quart)

    for t, p in itertools.product((-0.2, 0.1, 0.2), ((1.0, -0.5), (0.0, 0.6), (1.7, -1.1), (-2.0, 0.3))):
        add("gen_even_sum", {"t": t, "x": p[0], "y": p[1]},
            lambda t=t, p=p: _honest(hc.gen_even_sum(t, p, 1e-12), hc.gen_even_closed(t, p), 1e-11))
    return cases


# -- fractional ------------------------------------------------------------

def _fractional_cases():
    cases = []
    add = lambda name, params, fn: cases.append(Case(name, params, fn))

    for n, x, y in itertools.product(range(7), (0.5, 1.0, 2.0), (0.5, 1.0)):
        # H_2(1, -1/2) = 0, so the floor is the sum of absolute coefficients
        add("hermite_frac_integral", {"nu": n, "x": x, "y": y, "property": "integer_index"},
            lambda n=n, x=x, y=y: _close(hermite_frac_integral(n, x, y), hc.hermite2(n, (x, -y)), 1e-8,
                                         floor=hc.hermite2(n, (x, y))))
    for nu, x, y in itertools.product((-0.9, -0.5, -0.1), (0.5, 1.0, 2.0, 3.0), (0.5, 1.0, 2.0)):
        add("hermite_frac_integral", {"nu": nu, "x": x, "y": y, "property": "route_agreement"},
            lambda nu=nu, x=x, y=y: _close(hermite_frac_integral(nu, x, y), hermite_neg(nu, x, y), 1e-8))
    for g, b in itertools.product((0.5, 1.0, 2.0), (0.5, 1.0, 2.0)):
        add("hermite_neg", {"nu": -0.5, "x": g, "y": b, "property": "bessel_form"},
            lambda g=g, b=b: _close(math.sqrt(math.pi) * hermite_neg(-0.5, g, b),
                                    ig.integral_gauss_quartic(g, b, form="k"), 1e-9))
    add("hermite_neg", {"nu": -1, "x": 0, "y": 0.5},
        lambda: _close(hermite_neg(-1.0, 0.0, 0.5), math.sqrt(math.pi / 2), 1e-12))
    add("hermite_neg", {"nu": -0.5, "x": 1, "y": 1, "property": "quadrature"},
        lambda: _close(math.sqrt(math.pi) * hermite_neg(-0.5, 1.0, 1.0), oracles.gauss_quartic_oracle(1, 1).value,
                       1e-8))
    add("hermite_frac_integral", {"nu": 0, "x": 1.3, "y": 0.7},
        lambda: _close(hermite_frac_integral(0, 1.3, 0.7), 1.0, 1e-10))

    for n, x, y in itertools.product((0, 1, 2, 5, 6), (0.5, 2.0), (0.5, 1.0)):
        def exact(n=n, x=x, y=y):
            res = hermite_frac_series(n, x, y)
            return _close(res.value, hc.hermite2(n, (x, -y)), 1e-13, floor=hc.hermite2(n, (x, y)),
                          terms_used=res.terms_used, converged=res.converged)

        add("hermite_frac_series", {"nu": n, "x": x, "y": y, "property": "terminating"}, exact)

    def bounded():
        res = hermite_frac_series(-0.5, 10.0, 0.1)
        ref = hermite_neg(-0.5, 10.0, 0.1)
        return Outcome(res.value, ref, abs(res.value - ref) <= res.error_estimate, res.terms_used, res.converged)

    add("hermite_frac_series", {"nu": -0.5, "x": 10, "y": 0.1, "property": "estimate_bounds_error"}, bounded)

    def flagged():
        res = hermite_frac_series(0.5, 0.5, 2.0)
        return Outcome(res.value, hermite_frac_integral(0.5, 0.5, 2.0), not res.converged, res.terms_used,
                       res.converged)

    add("hermite_frac_series", {"nu": 0.5, "x": 0.5, "y": 2, "property": "divergence_flag"}, flagged)
    return cases


# -- integrals -------------------------------------------------------------

J_GRID = list(itertools.product((0.5, 1.0, 2.0), (-2.0, -1.0, 0.0, 1.0, 2.0), (-2.0, 0.0, 2.0)))
PEARCEY_GRID = list(itertools.product(range(-3, 4), range(0, 5)))


def _j_coverage():
    hits = 0
    for a, b, c in J_GRID:
        res = ig.integral_j_series(a, b, c, 1e-12)
        hits += abs(res.value - oracles.integral_j_oracle(a, b, c).value) <= res.error_estimate
    frac = hits / len(J_GRID)
    return Outcome(frac, 0.95, frac >= 0.95)


def _perturbative_diagnostic():
    res = ig.integral_j_perturbative(1.0, 1.0, 1.0, n_terms=61)
    mags = [abs(t) for t in res.terms[20:61] if t != 0]
    increasing = all(b > a for a, b in zip(mags, mags[1:]))
    return Outcome(res.value, oracles.integral_j_oracle(1, 1, 1).value, increasing and not res.converged,
                   res.terms_used, res.converged)


def _pearcey_case(x, y):
    s = ig.pearcey(x, y, 1e-12)
    r = ig.pearcey_recursive(x, y, 60)
    o = oracles.pearcey_oracle(x, y).value
    vals = (s.value, r.value, r.details["hermite_form"], o)
    ok = all(abs(u - v) <= 1e-8 for u, v in itertools.combinations(vals, 2))
    return Outcome(s.value, o, ok, s.terms_used, s.converged)


def _integral_cases():
    cases = []
    add = lambda name, params, fn: cases.append(Case(name, params, fn))

    for al, be, ga in itertools.product((1.0, 2.0), (-0.5, 0.0, 0.5, 0.9), (-2.0, 0.0, 2.0)):
        add("integral_i_series", {"alpha": al, "beta": be, "gamma": ga},
            lambda al=al, be=be, ga=ga: _series_close(ig.integral_i_series(al, be, ga, 1e-12),
                                                      ig.integral_i_closed(al, be, ga), 1e-9))
    add("integral_i_series", {"alpha": 1, "beta": 0.99, "gamma": 0},
        lambda: _series_close(ig.integral_i_series(1, 0.99, 0, 1e-8), ig.integral_i_closed(1, 0.99, 0), 1e-8))
    add("integral_i_closed", {"alpha": 1, "beta": 1, "gamma": 2},
        lambda: _close(ig.integral_i_closed(1, 1, 2), oracles.integral_i_oracle(1, 1, 2).value, 1e-11))

    for a, b, c in J_GRID:
        def jcase(a=a, b=b, c=c):
            return _series_close(ig.integral_j_series(a, b, c, 1e-12), oracles.integral_j_oracle(a, b, c).value, 1e-6)

        add("integral_j_series", {"a": a, "b": b, "c": c}, jcase)
    add("integral_j_series", {"grid": "a,b,c", "property": "estimate_coverage"}, _j_coverage)

    add("integral_j_perturbative", {"a": 1, "b": 1, "c": 1, "n_terms": 61, "property": "divergence"},
        _perturbative_diagnostic)

    def early():
        res = ig.integral_j_perturbative(1.0, 0.1, 0.1, n_terms=8)
        o = oracles.integral_j_oracle(1, 0.1, 0.1).value
        return Outcome(res.value, o, abs(res.value - o) <= 1e-3, res.terms_used, res.converged)

    add("integral_j_perturbative", {"a": 1, "b": 0.1, "c": 0.1, "n_terms": 8}, early)
    for n in (0, 3, 10, 200):
        add("moment_g", {"n": n, "a": 1.0},
            lambda n=n: _close(ig.moment_g(n, 1.0), integrate_half_line(
                lambda x: np.exp(n * np.log(x) - x ** 4), QuadratureConfig(rel_tol=1e-13)).value, 1e-11))

    for g, b in itertools.product((0.0, 1.0, 2.0), (0.5, 1.0, 2.0)):
        add("integral_gauss_quartic", {"gamma": g, "beta": b},
            lambda g=g, b=b: _close(ig.integral_gauss_quartic(g, b), oracles.gauss_quartic_oracle(g, b).value, 1e-9))
        if g > 0:
            add("integral_gauss_quartic", {"gamma": g, "beta": b, "property": "d_equals_k"},
                lambda g=g, b=b: _close(ig.integral_gauss_quartic(g, b, "d"), ig.integral_gauss_quartic(g, b, "k"),
                                        1e-10))

    for x, y in PEARCEY_GRID:
        add("pearcey", {"x": x, "y": y, "property": "cross_form"}, lambda x=x, y=y: _pearcey_case(x, y))

    for b, g in itertools.product((0.5, 1.0, 2.0), (0.0, 1.0, 3.0)):
        def erfc_form(b=b, g=g):
            ref = math.sqrt(math.pi / (4 * b)) * math.exp(g * g / (4 * b)) * erfc(g / (2 * math.sqrt(b)))
            return _close(ig.integral_power(1, b, g), ref, 1e-10)

        add("integral_power", {"n": 1, "beta": b, "gamma": g, "property": "erfc_form"}, erfc_form)
    add("integral_power", {"n": 2, "beta": 1, "gamma": 1},
        lambda: _close(ig.integral_power(2, 1.0, 1.0), oracles.power_oracle(2, 1.0, 1.0).value, 1e-9))

    for (b, c), m in itertools.product(((0.0, 1.0), (1.0, 1.0), (-1.0, 2.0), (0.5, 0.3)), range(7)):
        add("r_polynomial", {"m": m, "b": b, "c": c, "property": "taylor_coefficient"},
            lambda b=b, c=c, m=m: _close(ig.r_polynomial(m, b, c), oracles.taylor_exp_sqrt_quadratic(6, b, c)[m],
                                         1e-9, floor=1.0))

    def taylor_sum(b=1.0, c=1.0, x=0.1, order=20):
        val = sum(ig.r_polynomial(m, b, c) * x ** m / math.factorial(m) for m in range(order + 1))
        return _close(val, math.exp(math.sqrt(x * x + b * x + c)), 1e-8, terms_used=order + 1)

    add("r_polynomial", {"b": 1, "c": 1, "x": 0.1, "m_max": 20, "property": "taylor_sum"}, taylor_sum)

    for a, b, c in ((2.0, 0.0, 1.0), (4.0, 1.0, 1.0)):
        add("integral_f_series", {"a": a, "b": b, "c": c, "n_terms": 30},
            lambda a=a, b=b, c=c: _series_close(ig.integral_f_series(a, b, c, 30),
                                                oracles.integral_f_oracle(a, b, c).value, 1e-7,
                                                need_converged=False))
    return cases


SUITES = {
    "core": _core_cases,
    "fractional": _fractional_cases,
    "integrals": _integral_cases,
}


def build_suite(suite: str) -> list[Case]:
    """Cases of ``suite`` (one of :data:`SUITES` or ``"all"``) in grid order."""
    if suite == "all":
        return [c for name in SUITES for c in SUITES[name]()]
    try:
        return SUITES[suite]()
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}") from None


def _run_one(case: Case) -> EvalReport:
    t0 = time.perf_counter_ns()
    try:
        out = case.run()
    except (HermiteCalculusError, ArithmeticError) as exc:
        params = dict(case.params, error=type(exc).__name__)
        return EvalReport.build(case.name, params, None, None, None, False,
                                time.perf_counter_ns() - t0, passed=False)
    elapsed = time.perf_counter_ns() - t0
    return EvalReport.build(case.name, case.params, out.series, out.oracle, out.terms_used, out.converged,
                            elapsed, passed=out.passed)


def run_cases(cases: list[Case], threads: int | None = None) -> list[EvalReport]:
    """Run ``cases``; ``threads > 1`` uses a pool, results keep case order."""
    if threads is None:
        threads = int(os.environ.get("THREADS", "1") or 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_run_one, cases))
    return [_run_one(c) for c in cases]


def run_suite(suite: str, threads: int | None = None) -> list[EvalReport]:
    return run_cases(build_suite(suite), threads)
