from __future__ import annotations

import pytest

from mtamari.verify import ALL, run_many, run_suite


@pytest.mark.parametrize("name", ALL + ("extraction",))
def test_suites_pass_at_slope_one(name):
    assert run_suite(name, 1, 3).ok


@pytest.mark.parametrize("name", ["characters", "lattice"])
def test_size_suites(name):
    assert run_suite(name, 2, 3, n=3).ok


def test_parallel_order_is_stable():
    reps = run_many(["oracle", "unlabelled"], 2, 2, jobs=2)
    assert [r.suite for r in reps] == ["oracle", "unlabelled"]
    assert all(r.ok for r in reps)
