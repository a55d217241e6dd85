from __future__ import annotations

from math import comb, factorial

from gmpy2 import mpq
from hypothesis import given, strategies as st

from mtamari.algebra.poly import MultiPoly, var
from mtamari.algebra.series import TruncSeries, fixed_point, lagrange_invert

coeffs = st.lists(st.integers(-6, 6), min_size=1, max_size=7)


@given(coeffs)
def test_exp_log_round_trip(cs):
    S = TruncSeries([0] + cs, 6)
    assert S.exp().log() == S


@given(coeffs, coeffs)
def test_exp_is_a_morphism(a, b):
    A, B = TruncSeries([0] + a, 6), TruncSeries([0] + b, 6)
    assert (A + B).exp() == A.exp() * B.exp()


@given(coeffs)
def test_inverse(cs):
    S = TruncSeries([1] + cs, 6)
    assert S * S.inverse() == TruncSeries.const(1, 6)


def test_exp_coefficients():
    E = TruncSeries.gen(6).exp()
    assert [E[k] for k in range(7)] == [MultiPoly.const(mpq(1, factorial(k))) for k in range(7)]


def test_composition():
    inner = TruncSeries([0, 1, 1], 5)
    outer = TruncSeries([1, 1, 1, 1, 1, 1], 5)  # 1/(1-s)
    assert outer.compose(inner) == (1 - inner).inverse()


def test_lagrange_inversion_catalan():
    # C = 1 + t C^2, i.e. z = C - 1 satisfies z = t (1+z)^2
    phi = TruncSeries([1, 2, 1], 8, "z")
    H = TruncSeries.gen(8, "z")
    for n in range(1, 8):
        assert lagrange_invert(H, phi, n) == MultiPoly.const(comb(2 * n, n) // (n + 1))


def test_fixed_point_catalan():
    C = fixed_point(lambda s: (s * s).shift(1) + 1, 6)
    assert [int(C[k].constant_term()) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_polynomial_coefficients():
    y = var("y")
    S = TruncSeries([0, y], 4).exp()
    assert S[3] == y ** 3 * mpq(1, 6)


def test_integration_gains_an_order():
    S = TruncSeries([1, 2, 3], 2)
    assert S.integ().order == 3
    assert S.integ().deriv() == S
