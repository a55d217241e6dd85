"""Change of variables ``(t, x) -> (z, u)`` and the explicit solutions."""

from __future__ import annotations

from math import factorial
from typing import Dict

from gmpy2 import mpq

from ..algebra.operators import (
    InexactDivision,
    at_u_minus_one,
    at_u_zero,
    divide_one_plus_u,
    is_polynomial_in_u,
    nonneg_part_u,
    positive_part_u,
    u_reflect,
)
from ..algebra.poly import MultiPoly
from ..algebra.series import TruncSeries
from .base import U, Y, BaseSeries, base_series, specializer


class NotPolynomialError(ArithmeticError):
    """A series that must have polynomial coefficients in ``u`` does not."""


def _require_polynomial(S: TruncSeries, what: str) -> TruncSeries:
    if not is_polynomial_in_u(S):
        raise NotPolynomialError(f"{what} has a negative power of u")
    return S


def change_of_variables(F: TruncSeries, m: int, order: int | None = None,
                        spec: str = "generic", base: BaseSeries | None = None) -> TruncSeries:
    """Substitute ``t = z exp(-mL)`` and ``x = (1+u) exp(-mK(u))``."""
    order = F.order if order is None else min(order, F.order)
    base = base or base_series(m, max(order, 1), spec)
    Xs = (base.K * (-m)).exp() * (1 + U)
    Xs = Xs.truncate(order)
    tfac = (base.L * (-m)).exp().truncate(order)
    powers: Dict[int, TruncSeries] = {0: TruncSeries.const(1, order, "z")}
    out = TruncSeries([], order, "z")
    tpow = TruncSeries.const(1, order, "z")
    for n in range(order + 1):
        term = TruncSeries([], order, "z")
        for j, c in F[n].collect("x").items():
            if j not in powers:
                top = max(powers)
                for e in range(top + 1, j + 1):
                    powers[e] = powers[e - 1] * Xs
            term = term + powers[j] * c
        out = out + (term * tpow).shift(n)
        tpow = tpow * tfac
    return _require_polynomial(out, "change of variables")


def closed_form_G1(m: int, order: int, spec: str = "generic",
                   base: BaseSeries | None = None) -> TruncSeries:
    """``(1 + 1/u) exp(K + L) ((1+u) exp(-mK) - 1)``."""
    base = base or base_series(m, order, spec)
    bracket = (base.K * (-m)).exp() * (1 + U) - 1
    if at_u_zero(bracket).valuation() <= order:
        raise InexactDivision("bracket does not vanish at u = 0")
    body = (base.K + base.L).exp() * bracket * (1 + U)
    out = body.map_coeffs(lambda c: c.mul_var("u", -1))
    return _require_polynomial(out, "G1")


def G1_at_zero(m: int, order: int, spec: str = "generic",
               base: BaseSeries | None = None) -> TruncSeries:
    """``exp(L) (1 - m sum_k (p_k/k) C((m+1)k, k-1) z^k)``."""
    from math import comb

    base = base or base_series(m, order, spec)
    pk = specializer(spec)
    s = [MultiPoly.const(1)] + [pk(k) * mpq(-m * comb((m + 1) * k, k - 1), k) for k in range(1, order + 1)]
    return base.L.exp() * TruncSeries(s, order, "z")


def closed_form_m1(order: int, spec: str = "generic", base: BaseSeries | None = None) -> TruncSeries:
    """``(1+u) [u^>=] (exp(yV - K(u)) - (1/u) exp(yV - K(1/u)))`` for slope 1."""
    base = base or base_series(1, order, spec)
    yV = base.V_laurent * Y
    Kbar = u_reflect(base.K)
    inner = (yV - base.K).exp() - ((yV - Kbar).exp()).map_coeffs(lambda c: c.mul_var("u", -1))
    return _require_polynomial(nonneg_part_u(inner) * (1 + U), "slope-1 solution")


def bessel_form(order: int) -> TruncSeries:
    """Double-sum expansion of the slope-1 solution at ``p = (1, 0, 0, ...)``."""
    y = Y
    out = [MultiPoly() for _ in range(order + 1)]
    for i in range(order + 1):
        for j in range(order + 1 - i):
            w = y ** i * (y - 1) ** j * mpq(1, factorial(i) * factorial(j))
            if i <= j:
                out[i + j] = out[i + j] + w * U ** (j - i)
            else:
                out[i + j] = out[i + j] - w * U ** (i - j - 1)
    e2yz = TruncSeries([0, y * 2], order, "z").exp()
    return e2yz * TruncSeries(out, order, "z") * (1 + U)


# ---------------------------------------------------------------------------
# slope 2 in the quadratic extension w^2 = 1 + 4u

Wq = MultiPoly.var("w")


def reduce_w(P: MultiPoly) -> MultiPoly:
    """Reduce modulo ``w^2 = 1 + 4u``."""
    parts = P.collect("w")
    out = MultiPoly()
    disc = 1 + U * 4
    for e, c in parts.items():
        if e < 0:
            raise ValueError("negative power of w")
        out = out + c * disc ** (e // 2) * Wq ** (e % 2)
    return out


def w_free_part(P: MultiPoly) -> MultiPoly:
    """Half the sum of the two conjugates."""
    return reduce_w(P).coeff("w", 0)


def slope2_roots():
    """The two roots other than ``u`` of ``(1+U)^3 = v U^2``."""
    half = MultiPoly.const(mpq(1, 2))
    a = ((1 + U * 3) * half).mul_var("u", -2)
    b = ((1 + U) * half).mul_var("u", -2)
    return a + b * Wq, a - b * Wq


def closed_form_m2(order: int, spec: str = "generic", with_y: bool = True) -> TruncSeries:
    """Slope-2 solution written with the two conjugate roots ``u_1, u_2``.

    ``X = u_1 (1+u_2) exp(-K(u_1))`` satisfies ``A(u_1) = u^2 X / (1+u)^2``,
    so symmetric sums of ``A(u_1), A(u_2)`` are twice the ``w``-free parts.
    """
    base = base_series(2, order, spec)
    u1, u2 = slope2_roots()
    y = Y if with_y else MultiPoly.const(1)
    E = base.E
    E1 = E.map_coeffs(lambda c: reduce_w(c.subs("u", u1)))
    X = (E1 * reduce_w(u1 * (1 + u2))).map_coeffs(reduce_w)
    aX = X.map_coeffs(w_free_part)
    aX2 = (X * X).map_coeffs(w_free_part)
    eyV = (base.V_laurent * y).exp()
    pos = positive_part_u(eyV * aX * (1 + U) * 2) * MultiPoly.const(-1)
    phi1 = (pos + pos.map_coeffs(lambda c: w_free_part(c.subs("u", u1))) * 2
            - at_u_minus_one(pos) * 3)
    phi1_over_v = divide_one_plus_u(phi1.map_coeffs(lambda c: c.mul_var("u", 2)), 3)
    first = phi1_over_v * (E * (1 + U)).map_coeffs(lambda c: c.mul_var("u", -1)) - phi1_over_v * aX
    second = eyV * (E * E) - eyV * divide_one_plus_u(aX2.map_coeffs(lambda c: c.mul_var("u", 2)), 2)
    out = nonneg_part_u(first + second) * (1 + U)
    return _require_polynomial(out, "slope-2 solution")
