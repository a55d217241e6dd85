from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from mtamari.algebra.operators import (
    InexactDivision,
    at_u_minus_one,
    coeff_u0,
    delta_qx,
    delta_x,
    divide_one_plus_u,
    negative_part_u,
    nonneg_part_u,
    positive_part_u,
    u_reflect,
)
from mtamari.algebra.poly import MultiPoly, var
from mtamari.algebra.series import TruncSeries

u, x, y, q = var("u"), var("x"), var("y"), var("q")


@st.composite
def laurent(draw):
    out = MultiPoly()
    for e in draw(st.lists(st.integers(-4, 4), max_size=5)):
        out = out + u ** e * draw(st.integers(-5, 5)) * (y if draw(st.booleans()) else 1)
    return out


@st.composite
def x_polys(draw):
    out = MultiPoly()
    for e in draw(st.lists(st.integers(0, 5), max_size=5)):
        out = out + x ** e * draw(st.integers(-5, 5))
    return out


@given(laurent())
def test_parts_partition_a_laurent_polynomial(P):
    assert positive_part_u(P) + coeff_u0(P) + negative_part_u(P) == P
    assert nonneg_part_u(P) == positive_part_u(P) + coeff_u0(P)


@given(laurent())
def test_reflection_is_an_involution(P):
    assert u_reflect(u_reflect(P)) == P


@given(x_polys())
def test_divided_difference(S):
    assert delta_x(S) * (x - 1) == S - S.subs("x", 1)


@given(x_polys())
def test_q_divided_difference(S):
    assert delta_qx(S) * (x * q - 1) == S.subs("x", x * q) - S.subs("x", 1)
    assert delta_qx(S).subs("q", 1) == delta_x(S)


@given(laurent(), st.integers(1, 3))
def test_exact_division_by_powers_of_one_plus_u(P, k):
    assert divide_one_plus_u(P * (1 + u) ** k, k) == P


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        divide_one_plus_u(u ** 2 + 1)


def test_operators_lift_to_series():
    S = TruncSeries([u + u ** -1, u ** 2], 1, "z")
    assert positive_part_u(S) == TruncSeries([u, u ** 2], 1, "z")
    assert at_u_minus_one(S) == TruncSeries([-2, 1], 1, "z")
