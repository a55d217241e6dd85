from __future__ import annotations

import random
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from mtamari.combinatorics import (
    BallotPath,
    DyckPath,
    Partition,
    Permutation,
    ballot_to_mdyck,
    cycle_type,
    enumerate_ballot_paths,
    enumerate_labellings,
    labelling_count,
    mdyck_to_ballot,
    partitions_of,
    z_lambda,
)
from mtamari.formulas import ballot_count

small = st.tuples(st.integers(1, 3), st.integers(0, 4)).filter(lambda t: t[0] * t[1] <= 8)


@pytest.mark.parametrize("word,m,expected", [("NEENEE", 2, 3), ("NENEEE", 2, 2), ("NNEEEE", 2, 2)])
def test_contacts(word, m, expected):
    assert BallotPath(m, word).contacts == expected


def test_rejects_invalid_paths():
    for word in ["EN", "NEEE", "NNE", "NX"]:
        with pytest.raises(ValueError):
            BallotPath(1, word)


@given(small)
def test_ballot_counts(mn):
    m, n = mn
    paths = enumerate_ballot_paths(m, n)
    assert len(paths) == ballot_count(m, n) == comb((m + 1) * n, n) // (m * n + 1)
    assert len({P.steps for P in paths}) == len(paths)


@given(small)
def test_mdyck_round_trip(mn):
    m, n = mn
    for P in enumerate_ballot_paths(m, n):
        D = ballot_to_mdyck(P)
        assert D.size == m * n
        assert mdyck_to_ballot(D) == P


def test_unblocked_dyck_word_rejected():
    with pytest.raises(ValueError):
        DyckPath("uduudd", 2)


@given(small)
def test_labelling_counts(mn):
    m, n = mn
    for P in enumerate_ballot_paths(m, n):
        labs = enumerate_labellings(P)
        assert len(labs) == labelling_count(P) == len(set(labs))
        assert all(lab.is_valid_for(P.ascents) for lab in labs)


@pytest.mark.parametrize("n", range(1, 6))
def test_parking_count(n):
    assert sum(labelling_count(P) for P in enumerate_ballot_paths(1, n)) == (n + 1) ** (n - 1)


@given(st.integers(1, 8))
def test_class_sizes_sum_to_factorial(n):
    assert sum(factorial(n) // z_lambda(lam) for lam in partitions_of(n)) == factorial(n)


@given(st.integers(1, 7), st.randoms(use_true_random=False))
def test_random_permutation_has_requested_cycle_type(n, rnd):
    for lam in partitions_of(n):
        sigma = Permutation.random_of_type(lam, random.Random(rnd.random()))
        assert cycle_type(sigma) == lam
        assert cycle_type(Permutation.canonical(lam)) == lam


@given(st.permutations(range(1, 7)), st.permutations(range(1, 7)))
def test_permutation_group_laws(a, b):
    s, t = Permutation(tuple(a)), Permutation(tuple(b))
    e = Permutation.identity(6)
    assert s * s.inverse() == e
    assert (s * t)(3) == s(t(3))
    assert cycle_type(s * t) == cycle_type(t * s)


def test_partition_parsing():
    lam = Partition.parse("2,1,1")
    assert lam == Partition.of([1, 2, 1])
    assert lam.ell == 3 and lam.n == 4
    assert z_lambda(lam) == 2 * 2
