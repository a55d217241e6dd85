from __future__ import annotations

from math import factorial

import pytest
from gmpy2 import mpq

from mtamari.action import brute_frobenius, q_chain_polynomial
from mtamari.algebra.operators import is_polynomial_in_u
from mtamari.algebra.poly import p, var
from mtamari.algebra.series import TruncSeries
from mtamari.engine.base import base_series
from mtamari.engine.closed import (
    NotPolynomialError,
    bessel_form,
    change_of_variables,
    closed_form_G1,
    closed_form_m1,
    closed_form_m2,
)
from mtamari.engine.extract import character_series_by_exponential, extract_character_series
from mtamari.engine.functional import iterate_functional_equation, q_iterate
from mtamari.engine.tower import assemble_F, phi_tower
from mtamari.engine.unlabelled import (
    prime_counts_from_series,
    unlabelled_counts_from_series,
    unlabelled_series_check,
)
from mtamari.formulas import character_polynomial, unlabelled_count

u = var("u")


def test_base_series_coefficients():
    b = base_series(1, 3)
    assert b.L[1] == p(1) * 2
    assert b.K[2] == p(2) * mpq(1, 2) * (u * 4 + u ** 2)


@pytest.mark.parametrize("m,N", [(1, 4), (2, 3)])
def test_iteration_matches_enumeration(m, N):
    F = iterate_functional_equation(m, N)
    for n in range(N + 1):
        assert F[n] * factorial(n) == brute_frobenius(m, n)


@pytest.mark.parametrize("m,N", [(1, 4), (2, 3)])
def test_q_iteration_matches_chain_lengths(m, N):
    F = q_iterate(m, N)
    for n in range(N + 1):
        assert F[n].subs("x", 1).subs("y", 1) * factorial(n) == q_chain_polynomial(m, n)


def test_change_of_variables_is_polynomial_in_u():
    G = change_of_variables(iterate_functional_equation(2, 3), 2)
    assert is_polynomial_in_u(G)


def test_polynomial_guard():
    from mtamari.engine.closed import _require_polynomial

    with pytest.raises(NotPolynomialError):
        _require_polynomial(TruncSeries([u ** -1], 0, "z"), "probe")


def test_perturbed_series_misses_closed_form():
    F = iterate_functional_equation(1, 3)
    bad = F.map_coeffs(lambda c: c.subs("x", var("x") ** 2))
    assert change_of_variables(bad, 1) != closed_form_m1(3)


def test_slope_one_closed_form():
    assert change_of_variables(iterate_functional_equation(1, 4), 1) == closed_form_m1(4)


def test_slope_one_double_sum():
    assert closed_form_m1(4, "parking") == bessel_form(4)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_y1_closed_form(m):
    G = change_of_variables(iterate_functional_equation(m, 3), m)
    assert G.map_coeffs(lambda c: c.subs("y", 1)) == closed_form_G1(m, 3)


def test_slope_two_closed_form():
    assert change_of_variables(iterate_functional_equation(2, 3), 2) == closed_form_m2(3)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_tower_assembles_the_solution(m):
    tower = phi_tower(m, 3)
    assert tower.divisible_by_v()
    assert assemble_F(tower) == change_of_variables(iterate_functional_equation(m, 3), m)


@pytest.mark.parametrize("m,N", [(1, 5), (2, 4)])
def test_character_extraction(m, N):
    lag = extract_character_series(m, N)
    expo = character_series_by_exponential(m, N)
    for n in range(N + 1):
        assert lag[n] == expo[n] == character_polynomial(m, n)
    assert lag[1] == p(1)


@pytest.mark.parametrize("m", [1, 2])
def test_unlabelled_series(m):
    assert all(unlabelled_series_check(m, 5).values())
    counts = unlabelled_counts_from_series(m, 5)
    assert counts[1:] == [unlabelled_count(m, n) for n in range(1, 6)]


def test_prime_counts():
    assert prime_counts_from_series(1, 4)[1:] == [1, 1, 3, 13]
