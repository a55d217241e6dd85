"""Closed-form counts and characters, evaluated exactly."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Tuple, Union

from gmpy2 import mpq

from .algebra.poly import MultiPoly, p as pvar
from .combinatorics import Partition, partitions_of, z_lambda


class IntegralityError(ArithmeticError):
    """A count evaluated to a non-integer."""


@dataclass(frozen=True)
class FormulaResult:
    name: str
    value: Union[int, mpq]


def _as_int(value, what: str) -> int:
    value = mpq(value)
    if value.denominator != 1:
        raise IntegralityError(f"{what} evaluated to {value}")
    return int(value.numerator)


def _power(base: int, e: int) -> mpq:
    return mpq(base) ** e


def chi_formula(m: int, lam: Partition) -> int:
    """Fixed labelled intervals under a permutation of cycle type ``lam``."""
    n = lam.n
    if n < 1:
        raise ValueError("partition of a positive integer required")
    val = _power(m * n + 1, lam.ell - 2) * prod(comb((m + 1) * k, k) for k in lam)
    return _as_int(val, f"character at m={m}, {lam}")


def dim_formula(m: int, n: int) -> int:
    """Number of labelled intervals of size ``n``."""
    if n == 0:
        return 1
    return _as_int(_power(m * n + 1, n - 2) * (m + 1) ** n, f"dimension at m={m}, n={n}")


def parking_chi(m: int, lam: Partition) -> int:
    """Fixed labelled ballot paths under a permutation of cycle type ``lam``."""
    return (m * lam.n + 1) ** (lam.ell - 1)


def ballot_count(m: int, n: int) -> int:
    return _as_int(mpq(comb((m + 1) * n, n), m * n + 1), "ballot count")


def prime_formulas(m: int, n: int, lam: Partition) -> Tuple[int, int, int]:
    """Character, labelled count and unlabelled count for intervals whose
    lower path touches the line only at its endpoints."""
    if n < 1 or lam.n != n:
        raise ValueError("need a partition of n >= 1")
    r = (m + 1) * n - 1
    chi = _as_int(_power(r, lam.ell - 2) * prod(comb((m + 1) * k - 1, k) for k in lam), "prime character")
    labelled = _as_int(_power(r, n - 2) * m ** n, "prime labelled count")
    unlabelled = _as_int(mpq(m, n * r) * comb((m + 1) ** 2 * n - m - 1, n - 1), "prime unlabelled count")
    return chi, labelled, unlabelled


def unlabelled_count(m: int, n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return _as_int(mpq(m + 1, n * (m * n + 1)) * comb((m + 1) ** 2 * n + m, n - 1), "interval count")


def p_lambda(lam: Partition) -> MultiPoly:
    out = MultiPoly.const(1)
    for k in lam:
        out = out * pvar(k)
    return out


def h_series(k: int) -> MultiPoly:
    """Complete homogeneous symmetric function in power sums."""
    out = MultiPoly()
    for lam in partitions_of(k):
        out = out + p_lambda(lam) * mpq(1, z_lambda(lam))
    return out


def htilde_series(k: int, y: MultiPoly | None = None) -> MultiPoly:
    """Like :func:`h_series` with each ``p_lambda`` weighted by ``y**len(lambda)``."""
    y = MultiPoly.var("y") if y is None else MultiPoly.coerce(y)
    out = MultiPoly()
    for lam in partitions_of(k):
        out = out + p_lambda(lam) * y ** lam.ell * mpq(1, z_lambda(lam))
    return out


def character_polynomial(m: int, n: int) -> MultiPoly:
    """``sum_lambda chi(lambda) * p_lambda / z_lambda`` for size ``n``."""
    if n == 0:
        return MultiPoly.const(1)
    out = MultiPoly()
    for lam in partitions_of(n):
        out = out + p_lambda(lam) * mpq(chi_formula(m, lam), z_lambda(lam))
    return out


def class_size(lam: Partition) -> int:
    return factorial(lam.n) // z_lambda(lam)
