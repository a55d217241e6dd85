from __future__ import annotations

from gmpy2 import mpq
from hypothesis import given, strategies as st

from mtamari.algebra.poly import p, var
from mtamari.combinatorics import Partition, partitions_of
from mtamari.formulas import (
    ballot_count,
    character_polynomial,
    chi_formula,
    class_size,
    dim_formula,
    h_series,
    htilde_series,
    prime_formulas,
    unlabelled_count,
)


def test_catalan():
    assert [ballot_count(1, n) for n in range(5)] == [1, 1, 2, 5, 14]


def test_known_counts():
    assert dim_formula(1, 4) == 400
    assert dim_formula(2, 3) == 189
    assert unlabelled_count(1, 3) == 13
    assert unlabelled_count(2, 3) == 58


def test_h2():
    assert h_series(2) == p(1) ** 2 * mpq(1, 2) + p(2) * mpq(1, 2)
    y = var("y")
    assert htilde_series(2) == p(1) ** 2 * y ** 2 * mpq(1, 2) + p(2) * y * mpq(1, 2)


def test_small_character_polynomials():
    assert character_polynomial(1, 1) == p(1)
    assert character_polynomial(1, 2) == p(1) ** 2 * 2 + p(2)


@given(st.integers(1, 4), st.integers(1, 7))
def test_identity_character_is_dimension(m, n):
    assert chi_formula(m, Partition((1,) * n)) == dim_formula(m, n)


@given(st.integers(1, 4), st.integers(1, 7))
def test_orbit_average_is_integral(m, n):
    # number of orbits: average of the character over the group
    total = sum(class_size(lam) * chi_formula(m, lam) for lam in partitions_of(n))
    assert total % sum(class_size(lam) for lam in partitions_of(n)) == 0


@given(st.integers(1, 4), st.integers(1, 7))
def test_prime_formulas_are_consistent(m, n):
    chi, labelled, _ = prime_formulas(m, n, Partition((1,) * n))
    assert chi == labelled
