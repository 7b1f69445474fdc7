import math

import numpy as np
import pytest

from hermite_calculus import (
    ConvergenceError,
    QuadratureConfig,
    QuadratureResult,
    gamma,
    integrate_half_line,
    integrate_periodic,
    integrate_real_line,
)

GAMMA_QUARTER = 3.6256099082219083
BOTH = [QuadratureConfig(transform="double_exponential"), QuadratureConfig(transform="sinh_substitution")]


def test_result_shape():
    res = integrate_real_line(lambda x: np.exp(-x * x))
    assert isinstance(res, QuadratureResult)
    assert res.n_points > 0 and res.error >= 0


@pytest.mark.parametrize("cfg", BOTH, ids=["de", "sinh"])
def test_real_line_gaussian(cfg):
    assert integrate_real_line(lambda x: np.exp(-x * x), cfg).value == pytest.approx(math.sqrt(math.pi), rel=1e-11)


def test_real_line_quartic():
    assert integrate_real_line(lambda x: np.exp(-x ** 4)).value == pytest.approx(GAMMA_QUARTER / 2, rel=1e-10)


def test_real_line_transforms_agree():
    f = lambda x: np.exp(-x * x - x ** 4)
    a, b = (integrate_real_line(f, cfg).value for cfg in BOTH)
    assert a == pytest.approx(b, rel=1e-10)
    assert a == pytest.approx(1.3684268557355088, rel=1e-12)


def test_half_line_examples():
    assert integrate_half_line(lambda t: np.exp(-t)).value == pytest.approx(1.0, rel=1e-11)
    assert integrate_half_line(lambda x: x ** 3 * np.exp(-x ** 4)).value == pytest.approx(0.25, rel=1e-11)
    v = integrate_half_line(lambda t: t ** -0.5 * np.exp(-t * t / 2)).value
    assert v == pytest.approx(GAMMA_QUARTER / 2 ** 0.75, rel=1e-11)


def test_error_estimates_honest():
    cases = [
        (integrate_real_line, lambda x: np.exp(-x * x), math.sqrt(math.pi)),
        (integrate_real_line, lambda x: np.exp(-x ** 4), GAMMA_QUARTER / 2),
        (integrate_half_line, lambda t: np.exp(-t), 1.0),
        (integrate_half_line, lambda x: x ** 3 * np.exp(-x ** 4), 0.25),
        (integrate_half_line, lambda t: t ** -0.5 * np.exp(-t * t / 2), GAMMA_QUARTER / 2 ** 0.75),
    ]
    for fn, f, exact in cases:
        res = fn(f)
        assert abs(res.value - exact) <= res.error
    res = integrate_periodic(lambda p: np.exp(np.cos(p)))
    assert abs(res.value - 2 * math.pi * sum(1 / math.factorial(k) ** 2 / 4 ** k for k in range(30))) <= res.error


def test_linearity():
    f = lambda x: np.exp(-x * x)
    g = lambda x: np.exp(-2 * (x - 0.3) ** 2)
    lhs = integrate_real_line(lambda x: 2.5 * f(x) - 0.7 * g(x)).value
    rhs = 2.5 * integrate_real_line(f).value - 0.7 * integrate_real_line(g).value
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_vanishing_integral_terminates():
    res = integrate_real_line(lambda x: x * np.exp(-x * x))
    assert abs(res.value) < 1e-14


def test_periodic_examples():
    assert integrate_periodic(lambda p: np.ones_like(p)).value == pytest.approx(2 * math.pi, rel=1e-15)
    assert abs(integrate_periodic(lambda p: np.exp(3j * p)).value) < 1e-13
    i0 = sum(1 / math.factorial(k) ** 2 / 4 ** k for k in range(30))
    assert integrate_periodic(lambda p: np.exp(np.cos(p))).value.real == pytest.approx(2 * math.pi * i0, rel=1e-13)


def test_periodic_cap():
    # a jump makes the trapezoid converge only linearly
    with pytest.raises(ConvergenceError):
        integrate_periodic(lambda p: np.where(p < 1.0, 1.0, 0.0), max_points=1 << 10)


def test_real_line_no_convergence():
    with pytest.raises(ConvergenceError):
        integrate_real_line(lambda x: np.exp(-x * x) * np.cos(400 * x), QuadratureConfig(max_depth=2))


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=0)
    with pytest.raises(ValueError):
        QuadratureConfig(max_depth=0)
    with pytest.raises(ValueError):
        QuadratureConfig(transform="gauss")
    with pytest.raises(ValueError):
        integrate_periodic(lambda p: p, n_points=8)


def test_gamma_by_quadrature():
    for s in (0.3, 1.7, 4.2):
        v = integrate_half_line(lambda t: t ** (s - 1) * np.exp(-t)).value
        assert v == pytest.approx(gamma(s), rel=1e-11)
