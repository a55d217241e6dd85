"""Identities at ``p_k = 1`` for all ``k`` (unlabelled intervals)."""

from __future__ import annotations

from math import comb
from typing import Dict

from ..algebra.poly import MultiPoly
from ..algebra.series import TruncSeries, fixed_point
from .base import U, base_series
from .closed import closed_form_G1
from .extract import extract_character_series
from .functional import iterate_functional_equation


def ballot_series(m: int, order: int) -> TruncSeries:
    """``M = 1 + z M^(m+1)``."""
    return fixed_point(lambda M: (M ** (m + 1)).shift(1) + 1, order, "z")


def _compose_bivariate(G: TruncSeries, zs: TruncSeries, us: TruncSeries) -> TruncSeries:
    """``sum_n g_n(us) zs^n`` where each ``g_n`` is a polynomial in ``u``."""
    order = zs.order
    out = TruncSeries([], order, zs.var)
    zpow = TruncSeries.const(1, order, zs.var)
    for n in range(order + 1):
        parts = G[n].collect("u")
        if parts:
            val = TruncSeries([], order, zs.var)
            for d in range(max(parts), -1, -1):
                val = val * us + parts.get(d, MultiPoly())
            out = out + val * zpow
        zpow = zpow * zs
    return out


def unlabelled_closed_form(m: int, order: int) -> TruncSeries:
    """Contact generating function in the primed variables ``z', u'``."""
    one = TruncSeries.const(1, order, "z")
    zp = TruncSeries.gen(order, "z")
    d = (zp * U + 1)
    bracket_terms = [MultiPoly.const(1)] + [
        MultiPoly.const(-comb(m + 1, i)) * U ** (i - 1) for i in range(1, order + 1) if i <= m + 1
    ]
    bracket = TruncSeries(bracket_terms, order, "z")
    inv_d = d.inverse() ** m
    inv_z = (one - zp).inverse() ** (m + 2)
    return bracket * inv_d * inv_z * (1 + U)


def unlabelled_series_check(m: int, order: int) -> Dict[str, bool]:
    base = base_series(m, order, "ones")
    M = ballot_series(m, order)
    res: Dict[str, bool] = {}
    res["exp(L) = M^(m+1)"] = base.L.exp() == M ** (m + 1)
    res["exp(K) = 1/(1 - u(M-1))"] = base.K.exp() == ((M - 1) * U * (-1) + 1).inverse()
    zL = base.L.deriv().shift(1).truncate(order)
    bridges = TruncSeries([0] + [comb((m + 1) * k, k) for k in range(1, order + 1)], order, "z")
    P = 1 - M.inverse()
    res["bridge identity"] = (
        zL == bridges
        and zL == (M.deriv() * M.inverse()).shift(1).truncate(order) * (m + 1)
        and zL == (P.deriv() * (1 - P).inverse()).shift(1).truncate(order) * (m + 1)
    )
    zp = TruncSeries.gen(order, "z")
    zs = zp * (1 - zp) ** m
    us = (1 - zp) * U * (zp * U + 1).inverse()
    G1 = closed_form_G1(m, order, "ones", base)
    res["primed closed form"] = _compose_bivariate(G1, zs, us) == unlabelled_closed_form(m, order)
    return res


def unlabelled_counts_from_series(m: int, order: int) -> list[int]:
    """``[t^n] F(t, 1; 1, 1)``: with every ``p_k = 1`` the orbit count of Burnside's lemma."""
    return [int(c.constant_term()) for c in extract_character_series(m, order, "ones")]


def prime_counts_from_series(m: int, order: int) -> list[int]:
    """Coefficient of ``x^2`` at ``y = 1``, every ``p_k = 1``: unlabelled prime intervals."""
    F = iterate_functional_equation(m, order, "ones")
    return [int(c.subs("y", 1).coeff("x", 2).constant_term()) for c in F.coeffs]
