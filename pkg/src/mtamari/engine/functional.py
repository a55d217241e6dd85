"""Order-by-order solution of the divided-difference equation in ``t``.

``dF/dy = sum_k (p_k/k) (t x (F(x,1) D)^m)^k F(x,y)`` with ``F(x,0) = x``,
where ``D`` is a divided difference in ``x``.  Each pass of the loop makes
one more coefficient exact, because the operator raises the ``t``-order.
"""

from __future__ import annotations

from typing import Callable

from gmpy2 import mpq

from ..algebra.operators import delta_qx, delta_x
from ..algebra.poly import MultiPoly
from ..algebra.series import TruncSeries
from .base import X, specializer


def _solve(m: int, order: int, pk: Callable[[int], MultiPoly], kmax: int, diff) -> TruncSeries:
    F = TruncSeries([X], 0)
    for n in range(1, order + 1):
        F = TruncSeries(F.coeffs, n)
        F1 = F.map_coeffs(lambda c: c.subs("y", 1))

        def step(S: TruncSeries) -> TruncSeries:
            for _ in range(m):
                S = F1 * diff(S)
            return (S * X).shift(1)

        rhs = TruncSeries([], n)
        S = F
        for k in range(1, min(kmax, n) + 1):
            S = step(S)
            w = pk(k)
            if w:
                rhs = rhs + S * (w * mpq(1, k))
        G = rhs.map_coeffs(lambda c: c.antiderivative("y"))
        F = G + X
    return F


def iterate_functional_equation(m: int, order: int, spec: str = "generic") -> TruncSeries:
    """Refined Frobenius series through ``t^order`` (exponential in ``t``)."""
    if m < 1 or order < 0:
        raise ValueError("need m >= 1 and order >= 0")
    return _solve(m, order, specializer(spec), order, delta_x)


def q_iterate(m: int, order: int) -> TruncSeries:
    """q-deformed equation with ``p = (1, 0, 0, ...)``."""
    if m < 1 or order < 0:
        raise ValueError("need m >= 1 and order >= 0")
    return _solve(m, order, specializer("parking"), 1, delta_qx)
