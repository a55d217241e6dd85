from __future__ import annotations

import random

import pytest

from mtamari.algebra.poly import MultiPoly, var
from mtamari.algebra.series import TruncSeries
from mtamari.engine.base import base_series, v_laurent
from mtamari.engine.checks import (
    K_minus_one_check,
    SpanError,
    antisymmetry_check_m1,
    closed_form_at_zero_consistency,
    elementary_symmetric_check,
    interpolation_identities,
    linear_combination_check,
    operator_identity_check,
    peel_low_degree_in_A,
    random_v_polynomial,
    reconstruct_from_positive_part,
    reconstruct_m1,
    reflection_check_m1,
)
from mtamari.engine.closed import closed_form_m1
from mtamari.engine.companion import companion_ring, newton_power_sums, to_v_polynomial
from mtamari.engine.tower import from_positive_part

u, v = var("u"), var("v")


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_trace_routes_agree(m):
    R = companion_ring(m)
    for P in [u ** 3 + u, (1 + u) ** (m + 2), u ** (2 * m + 1) * 3 - 1]:
        assert R.trace(P.subs("u", var("U"))) == R.matrix_trace(R.lift(P))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_inverse_in_companion_ring(m):
    R = companion_ring(m)
    assert R.mul(R.inverse_U, var("U")) == MultiPoly.const(1)


def test_newton_sums_slope_one():
    # roots of U^2 - (v-2) U + 1
    s = newton_power_sums(1, 2)
    assert s[1] == v - 2
    assert s[2] == (v - 2) ** 2 - 2


@pytest.mark.parametrize("m", [1, 2, 3])
def test_to_v_polynomial_round_trip(m):
    rng = random.Random(m)
    for _ in range(5):
        P = random_v_polynomial(rng, 3)
        assert to_v_polynomial(P.subs("v", v_laurent(m)), m) == P


def test_to_v_polynomial_rejects():
    with pytest.raises(ValueError):
        to_v_polynomial(u, 1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_interpolation_identities(m):
    assert interpolation_identities(m).ok


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_elementary_symmetric_functions(m):
    assert elementary_symmetric_check(m).ok


@pytest.mark.parametrize("m", [1, 2, 3])
def test_reconstruction_from_positive_part(m):
    rng = random.Random(10 + m)
    assert all(reconstruct_from_positive_part(random_v_polynomial(rng, 3), m) for _ in range(5))


def test_reconstruction_rejects_constant_terms():
    with pytest.raises(ArithmeticError):
        from_positive_part(MultiPoly.const(1), 1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_K_at_minus_one(m):
    assert K_minus_one_check(m, 8).ok


@pytest.mark.parametrize("m", [1, 2])
def test_operator_identity(m):
    assert operator_identity_check(m, 2, 3).ok


def test_peel_rejects_out_of_span():
    E = base_series(1, 2).E
    target = TruncSeries([u ** 5], 2, "z")
    with pytest.raises(SpanError):
        peel_low_degree_in_A(target, 1, E)


@pytest.mark.parametrize("m,N", [(1, 4), (2, 3)])
def test_linear_combination(m, N):
    assert linear_combination_check(m, N).ok


def test_linear_combination_rejects_perturbation():
    G = closed_form_m1(3)
    G = TruncSeries([G[0], G[1] + u, *G.coeffs[2:]], 3, "z")
    assert not linear_combination_check(1, 3, G=G).ok


def test_slope_one_reflection_and_reconstruction():
    assert reflection_check_m1(4, 2).ok
    assert antisymmetry_check_m1(4).ok
    assert reconstruct_m1(4) == closed_form_m1(4)
    assert closed_form_at_zero_consistency(1, 4)
