"""Character series ``[t^n] F(t, p; 1, 1)`` from the value of the solution at ``u = 0``."""

from __future__ import annotations

from typing import List

from gmpy2 import mpq

from ..algebra.poly import MultiPoly
from ..algebra.series import TruncSeries, lagrange_invert
from .base import base_series
from .closed import G1_at_zero


def extract_character_series(m: int, order: int, spec: str = "generic") -> List[MultiPoly]:
    """``[t^n]`` for ``n = 0 .. order`` by Lagrange inversion of ``z = t exp(mL(z))``."""
    base = base_series(m, order + 1, spec)
    H = G1_at_zero(m, order + 1, spec, base)
    phi = (base.L * m).exp()
    out = [H[0]]
    for n in range(1, order + 1):
        out.append(lagrange_invert(H, phi, n))
    return out


def character_series_by_exponential(m: int, order: int, spec: str = "generic") -> List[MultiPoly]:
    """Second route: ``[z^n] exp((mn+1) L) / (mn+1)^2``."""
    base = base_series(m, max(order, 1), spec)
    out = [MultiPoly.const(1)]
    for n in range(1, order + 1):
        r = m * n + 1
        series: TruncSeries = (base.L * r).exp()
        out.append(series[n] * mpq(1, r * r))
    return out
