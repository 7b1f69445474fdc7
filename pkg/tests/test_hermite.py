import math

import pytest
from hypothesis import given, settings, strategies as st

from hermite_calculus import (
    DivergenceError,
    DomainError,
    GH4Args,
    HermitePair,
    gen_even_closed,
    gen_even_sum,
    hermite2,
    hermite2_coefficients,
    hermite2_sequence,
    hermite4_two_arg,
    hermite_gh4,
    quartic_exp_derivative,
    quartic_exp_derivative_umbral,
    umbral_shift,
    umbral_shift_series,
)

small = st.floats(-5.0, 5.0)


def test_hermite2_examples():
    assert hermite2(0, (0.3, 0.7)) == 1
    assert hermite2(2, (3, -1)) == 7
    assert hermite2(5, (1, 0)) == 1
    assert hermite2(4, (1, 1)) == 25


def test_hermite2_accepts_pair_and_complex():
    assert hermite2(3, HermitePair(2.0, 1.0)) == 20.0
    # H_2(i, -1) = i^2 + 2 (-1) = -3
    assert hermite2(2, (1j, -1.0)) == pytest.approx(-3.0)


def test_hermite2_errors():
    with pytest.raises(DomainError):
        hermite2(-1, (1.0, 1.0))
    with pytest.raises(DomainError):
        hermite2(2, (math.inf, 1.0))


def test_hermite2_large_n_reference():
    # 40-digit reference for H_30(1.5, -0.25) and H_40(0.7, 1.3)
    assert hermite2(30, (1.5, -0.25)) == pytest.approx(-354633867769.69514, rel=1e-12)
    assert hermite2(40, (0.7, 1.3)) == pytest.approx(4.8373974414079758e32, rel=1e-12)


def test_coefficients():
    assert hermite2_coefficients(4) == [1, 12, 12]
    assert hermite2_coefficients(5) == [1, 20, 60]


def test_sequence_examples():
    assert hermite2_sequence(1, (0.4, 2.0)) == [1.0, 0.4]
    assert hermite2_sequence(3, (2.0, 1.0)) == [1.0, 2.0, 6.0, 20.0]
    seq = hermite2_sequence(30, (1.5, -0.25))
    for k, v in enumerate(seq):
        assert v == pytest.approx(hermite2(k, (1.5, -0.25)), rel=1e-12)


@given(st.integers(0, 40), small, small)
def test_parity(n, x, y):
    lhs = hermite2(n, (-x, y))
    rhs = (-1) ** n * hermite2(n, (x, y))
    assert abs(lhs - rhs) <= 1e-13 * abs(hermite2(n, (abs(x), abs(y))))


@given(st.integers(1, 29), small, small)
def test_operator_identity(n, x, y):
    a = x * hermite2(n, (x, y))
    b = 2 * y * n * hermite2(n - 1, (x, y))
    assert abs(hermite2(n + 1, (x, y)) - (a + b)) <= 1e-12 * max(abs(a) + abs(b), 1e-300)


@pytest.mark.parametrize("n", range(1, 21))
def test_derivative_identity_coefficients(n):
    # d/dx H_n = n H_{n-1}: shifting the exact coefficient list reproduces n c^(n-1)
    cn = hermite2_coefficients(n)
    shifted = [(n - 2 * s) * c for s, c in enumerate(cn) if n - 2 * s > 0]
    assert shifted == [n * c for c in hermite2_coefficients(n - 1)]


def test_direct_and_recurrence_agree_at_crossover():
    for x, y in ((1.2, -0.4), (-0.5, 2.0)):
        seq = hermite2_sequence(20, (x, y))
        assert hermite2(20, (x, y)) == pytest.approx(seq[20], rel=1e-12)


def test_gh4_examples():
    assert hermite_gh4(0, GH4Args(1, 2, 3, 4)) == 1
    assert hermite_gh4(1, (0.3, 2, 3, 4)) == 0.3
    assert hermite_gh4(4, (0, 0, 0, 2.5)) == 60.0


def test_gh4_generating_function():
    # coefficients of exp(t + t^2) agree with hermite2(n, (1, 1))
    for n in range(12):
        assert hermite_gh4(n, (1, 1, 0, 0)) == pytest.approx(hermite2(n, (1, 1)), rel=1e-14)


def test_hermite4_two_arg_examples():
    assert hermite4_two_arg(2, 2, 5) == 4
    assert hermite4_two_arg(4, 1, 1) == -23
    assert hermite4_two_arg(0, 3, 7) == 1


@pytest.mark.parametrize("n", range(25))
@pytest.mark.parametrize("c, a", [(1.0, 1.0), (0.5, -2.0), (-1.5, 0.3)])
def test_hermite4_two_arg_consistency(n, c, a):
    lhs = hermite4_two_arg(n, c, a)
    rhs = hermite_gh4(n, (-c, 0, 0, -a))
    assert abs(lhs - rhs) <= 1e-12 * hermite_gh4(n, (abs(c), 0, 0, abs(a)))


def test_gen_even_examples():
    assert gen_even_sum(0.0, (1.3, 0.4)).value == 1.0
    res = gen_even_sum(0.1, (1.0, -0.5), 1e-12)
    assert res.converged
    assert res.value == pytest.approx(math.exp(0.1 / 1.2) / math.sqrt(1.2), rel=1e-12)
    assert res.value == pytest.approx(0.9922031096108154, rel=1e-14)
    for t, y in ((0.2, 0.5), (-0.3, 0.6)):
        assert gen_even_sum(t, (0.0, y)).value == pytest.approx(1 / math.sqrt(1 - 4 * y * t), rel=1e-12)


def test_gen_even_divergence():
    with pytest.raises(DivergenceError):
        gen_even_sum(0.5, (1.0, 0.5))
    with pytest.raises(DivergenceError):
        gen_even_sum(-0.25, (1.0, 1.0))


@settings(max_examples=150, deadline=None)
@given(st.floats(-0.5, 0.5), st.floats(-3, 3), st.floats(-2, 2))
def test_gen_even_honest(t, x, y):
    if abs(4 * y * t) >= 0.9:
        return
    res = gen_even_sum(t, (x, y), 1e-12)
    exact = gen_even_closed(t, (x, y))
    if res.converged:
        assert abs(res.value - exact) <= 1e-12 * abs(exact)
    assert abs(res.value - exact) <= 2 * res.error_estimate + 1e-15 * abs(exact)


def test_gen_even_large_parameters_do_not_overflow():
    res = gen_even_sum(0.2, (1.0, 1.2), 1e-12, max_terms=2000)
    assert math.isfinite(res.value)
    assert res.value == pytest.approx(gen_even_closed(0.2, (1.0, 1.2)), rel=1e-9)


def test_umbral_shift_examples():
    assert umbral_shift(0, (0.5, -0.3), 0.7) == pytest.approx(math.exp(0.35 - 0.3 * 0.49))
    assert umbral_shift(1, (1, -1), 0.5) == 0.0
    res = umbral_shift_series(2, (2.0, -1.0), 0.1, n_terms=60)
    assert res.value == pytest.approx(umbral_shift(2, (2.0, -1.0), 0.1), rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 5), st.floats(-2, 2), st.floats(-2, 2), st.floats(-1, 1))
def test_umbral_shift_identity(l, x, y, t):
    res = umbral_shift_series(l, (x, y), t, n_terms=80)
    closed = umbral_shift(l, (x, y), t)
    assert abs(res.value - closed) <= 1e-10 * max(abs(closed), 1.0)


def test_quartic_exp_derivative_examples():
    assert quartic_exp_derivative(0, 0.7, 0.2, 1.1) == pytest.approx(math.exp(-(0.7 * 1.21 + 0.2 * 1.21 ** 2)))
    assert quartic_exp_derivative(1, 1, 1, 1) == pytest.approx(-6 * math.exp(-2), rel=1e-14)


def test_quartic_exp_derivative_finite_difference():
    f = lambda x: math.exp(-(x * x + 0.5 * x ** 4))
    h, x0 = 1e-2, 0.7
    # 8th-order central stencil for the third derivative
    c = {1: -488 / 240, 2: 338 / 240, 3: -72 / 240, 4: 7 / 240}
    fd = sum(w * (f(x0 + k * h) - f(x0 - k * h)) for k, w in c.items()) / h ** 3
    assert quartic_exp_derivative(3, 1.0, 0.5, x0) == pytest.approx(fd, rel=1e-6)


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("g, b, x", [(0.5, 0.5, -0.7), (1.0, 0.5, 0.3), (1.0, 1.0, 1.2), (0.5, 1.0, 0.3)])
def test_umbral_expansion_matches(n, g, b, x):
    ref = quartic_exp_derivative(n, g, b, x)
    scale = abs(hermite_gh4(n, (abs(2 * g * x + 4 * b * x ** 3), g + 6 * b * x * x, abs(4 * b * x), b)))
    scale *= math.exp(-(g * x * x + b * x ** 4))
    assert abs(quartic_exp_derivative_umbral(n, g, b, x) - ref) <= 1e-9 * max(abs(ref), scale)
