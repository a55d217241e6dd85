from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from mtamari.action import (
    LabelledInterval,
    a_stat,
    act,
    brute_frobenius,
    character,
    character_table,
    fixed_count,
    frobenius_from_characters,
    is_fixed,
    labelled_interval_count,
    parking_fixed_count,
)
from mtamari.algebra.poly import p
from mtamari.combinatorics import BallotPath, Labelling, Partition, Permutation, enumerate_labellings
from mtamari.formulas import chi_formula, dim_formula, parking_chi
from mtamari.lattice import Interval, cached_lattice, enumerate_intervals


def _labelled(m, n):
    return [LabelledInterval(I, lab) for I in enumerate_intervals(cached_lattice(m, n))
            for lab in enumerate_labellings(I.upper)]


def test_swap_fixes_two_labelled_intervals_at_slope_one():
    sigma = Permutation.from_cycles(2, [(1, 2)])
    fixed = [LI for LI in _labelled(1, 2) if is_fixed(sigma, LI)]
    assert len(fixed) == 2
    for LI in fixed:
        assert a_stat(sigma, LI.interval.upper, LI.labelling) == 1


def test_swap_fixes_three_labelled_intervals_at_slope_two():
    sigma = Permutation.from_cycles(2, [(1, 2)])
    assert fixed_count(cached_lattice(2, 2), sigma) == 3


def test_small_frobenius_polynomial():
    F = brute_frobenius(1, 2).subs("x", 1).subs("y", 1)
    assert F == p(1) ** 2 * 4 + p(2) * 2


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2)])
def test_action_laws(m, n):
    items = _labelled(m, n)
    perms = [Permutation(p_) for p_ in permutations(range(1, n + 1))]
    e = Permutation.identity(n)
    for LI in items:
        assert act(e, LI) == LI
        for s in perms:
            sLI = act(s, LI)
            assert sLI.interval == LI.interval
            for t in perms:
                assert act(s * t, LI) == act(s, act(t, LI))
            assert is_fixed(s, LI) == (sLI == LI)


@given(st.sampled_from([(1, 3), (1, 4), (2, 2), (2, 3)]), st.data())
@settings(max_examples=20)
def test_characters_are_class_functions(mn, data):
    m, n = mn
    perm = Permutation(tuple(data.draw(st.permutations(range(1, n + 1)))))
    conj = Permutation(tuple(data.draw(st.permutations(range(1, n + 1)))))
    L = cached_lattice(m, n)
    assert fixed_count(L, perm) == fixed_count(L, conj * perm * conj.inverse())


@pytest.mark.parametrize("m,n", [(1, 4), (2, 3)])
def test_identity_character_is_dimension(m, n):
    assert character(m, n, Partition((1,) * n)) == labelled_interval_count(m, n) == dim_formula(m, n)


def test_dimension_values():
    assert labelled_interval_count(1, 4) == 400
    assert labelled_interval_count(2, 3) == 189


@pytest.mark.parametrize("m,n", [(1, 3), (2, 3)])
def test_parking_characters(m, n):
    for lam in [Partition((1,) * n), Partition.of([n]), Partition.of([2] + [1] * (n - 2))]:
        assert parking_fixed_count(m, n, Permutation.canonical(lam)) == parking_chi(m, lam)


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (3, 2)])
def test_character_table_matches_formula(m, n):
    table = character_table(m, n)
    assert table.all_match
    assert {lam: chi_formula(m, lam) for lam in table.entries} == table.entries


def test_frobenius_from_characters_agrees_with_brute_force():
    assert frobenius_from_characters(1, 3) == brute_frobenius(1, 3).subs("x", 1).subs("y", 1)


def test_invalid_labelling_rejected():
    I = enumerate_intervals(cached_lattice(1, 2))[0]
    with pytest.raises(ValueError):
        LabelledInterval(I, Labelling((1, 1)))


def test_relabelling_sorts_inside_each_ascent():
    # constructed 2-Tamari interval of size 6; upper ascents of heights 2, 1, 3
    Q = BallotPath(2, "NNEENEEEENNNEEEEEE")
    L = cached_lattice(2, 6)
    LI = LabelledInterval(Interval(L.bottom, Q), Labelling((1, 4, 2, 3, 5, 6)))
    sigma = Permutation((2, 3, 5, 6, 1, 4))
    image = act(sigma, LI)
    assert image.labelling == Labelling((2, 6, 3, 1, 4, 5))
    assert image.interval == LI.interval
    assert act(sigma.inverse(), image) == LI
