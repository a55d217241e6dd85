"""Executable identity checks on the series of the solution."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Dict, List

from ..algebra.operators import (
    at_u_minus_one,
    at_u_zero,
    delta_u,
    omega,
    positive_part_u,
    u_reflect,
)
from ..algebra.poly import MultiPoly
from ..algebra.ratfunc import lagrange_identities_check
from ..algebra.series import TruncSeries
from .base import U, V, Y, base_series, v_laurent
from .closed import closed_form_m1, closed_form_m2, reduce_w, slope2_roots
from .companion import W, companion_ring, elementary_all_roots, laurent, to_v_polynomial


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def interpolation_identities(m: int) -> CheckResult:
    res = lagrange_identities_check(m)
    return CheckResult(f"interpolation identities m={m}", all(res.values()), str(res))


# ---------------------------------------------------------------------------
# roots of (1+U)^(m+1) = v U^m


def _synthetic_div_linear(coeffs: List[MultiPoly], root: MultiPoly):
    """Divide ``sum coeffs[i] T^i`` (highest first) by ``T - root``."""
    out: List[MultiPoly] = []
    acc = MultiPoly()
    for c in coeffs:
        acc = c + acc * root
        out.append(acc)
    return out[:-1], out[-1]


def other_roots_elementary(m: int) -> Dict[int, MultiPoly]:
    """``e_k(u_1 .. u_m)`` read from the quotient of the root equation by ``T - u``."""
    vl = v_laurent(m)
    coeffs = [MultiPoly.const(comb(m + 1, m + 1 - i)) for i in range(m + 2)]  # T^(m+1) .. T^0
    coeffs[1] = coeffs[1] - vl
    quot, rem = _synthetic_div_linear(coeffs, U)
    if rem:
        raise ArithmeticError("u is not a root")
    return {k: quot[k] * (-1) ** k for k in range(m + 1)}


def other_roots_elementary_closed(m: int, k: int) -> MultiPoly:
    """Closed expression for ``e_k(u_1 .. u_m)`` as a polynomial in ``1/u``."""
    j = m - k
    if j == m:
        return MultiPoly.const(1)
    s = sum((MultiPoly.const(comb(m + 1, p)).mul_var("u", p - j - 1) for p in range(j + 1)), MultiPoly())
    return s * (-1) ** (m - j - 1)


def elementary_symmetric_check(m: int) -> CheckResult:
    """All-root and other-root elementary symmetric functions and ``prod (1+u_i) = v``."""
    ring = companion_ring(m)
    ok = True
    # all roots, from the coefficients of the monic equation
    rule = (1 + W) ** (m + 1) - V * W ** m
    for j in range(m + 2):
        ok &= rule.coeff("U", m + 1 - j) * (-1) ** j == elementary_all_roots(m, j)
    ok &= sum((elementary_all_roots(m, j) for j in range(m + 2)), MultiPoly()) == V
    others = other_roots_elementary(m)
    for k in range(m + 1):
        ok &= others[k] == other_roots_elementary_closed(m, k)
    # e_j(all) = e_j(others) + u e_{j-1}(others)
    for j in range(1, m + 2):
        lhs = laurent(elementary_all_roots(m, j), m)
        rhs = others.get(j, MultiPoly()) + U * others[j - 1]
        ok &= lhs == rhs
    # two trace routes
    for r in range(2 * m + 3):
        ok &= ring.trace(W ** r) == ring.matrix_trace(W ** r)
    ok &= laurent(ring.trace(MultiPoly.const(1)), m) == MultiPoly.const(m + 1)
    return CheckResult(f"elementary symmetric functions m={m}", bool(ok))


def random_v_polynomial(rng: random.Random, degree: int) -> MultiPoly:
    out = MultiPoly()
    for d in range(degree + 1):
        out = out + V ** d * rng.randint(-9, 9)
    return out


def reconstruct_from_positive_part(P: MultiPoly, m: int) -> bool:
    """``P(v) = P(0) + sum_i (P^>(u_i) - P^>(-1))`` with the sum computed as a trace."""
    ring = companion_ring(m)
    pos = positive_part_u(laurent(P, m))
    rhs = P.subs("v", 0) + ring.trace(ring.lift(pos)) - at_u_minus_one(pos) * (m + 1)
    return rhs == P


def K_minus_one_check(m: int, order: int, spec: str = "generic") -> CheckResult:
    base = base_series(m, order, spec)
    ok = base.K_at(-1) == base.L * MultiPoly.const(-1) / (m + 1)
    return CheckResult(f"K(-1) = -L/(m+1) m={m} order={order}", ok)


# ---------------------------------------------------------------------------
# operator identity


class SpanError(ValueError):
    """A series is not in the span of ``A(u)^j v^l`` with ``j < m``."""


def peel_low_degree_in_A(target: TruncSeries, m: int, E: TruncSeries) -> Dict:
    """Coefficients ``c[(j, l)]`` with ``target = (1+u)^(m-1) sum c A^j v^l``.

    ``target`` must already carry the factor ``(1+u)^(m-1)``; each basis
    element ``u^j (1+u)^(m-1-j) v^l exp(-jK)`` has lowest ``u``-exponent
    ``j - m l`` at leading order in ``z``, which determines ``(j, l)``.
    """
    order = target.order
    vl = v_laurent(m)
    found = TruncSeries([], order, "z")
    Epow = [TruncSeries.const(1, order, "z")]
    for _ in range(1, m):
        Epow.append(Epow[-1] * E)
    result: Dict = {}
    for n in range(order + 1):
        rest = target[n] - found[n]
        while rest:
            parts = rest.collect("u")
            e = min(parts)
            l = -(e // m)
            j = e + m * l
            if l < 0:
                raise SpanError(f"order {n}: exponent {e} outside the span")
            c = parts[e]
            rest = rest - c * U ** j * (1 + U) ** (m - 1 - j) * vl ** l
            term = Epow[j] * (U ** j * (1 + U) ** (m - 1 - j) * vl ** l * c)
            found = found + TruncSeries([MultiPoly()] * n + term.coeffs[: order + 1 - n], order, "z")
            result[(j, l, n)] = c
    if found != target:
        raise SpanError("residual after peeling")
    return result


def operator_identity_check(m: int, k_max: int, order: int, spec: str = "generic",
                            H: TruncSeries | None = None) -> CheckResult:
    """Iterating ``H -> z v A^m Lambda^m H`` differs from ``(zv)^k H`` by a
    polynomial in ``A(u)`` of degree below ``m`` with coefficients polynomial in ``v``.

    The default ``H = (1+u) exp(-mK)`` is the solution at ``y = 0``.
    """
    base = base_series(m, order, spec)
    E = base.E
    Em = E ** m
    if H is None:
        H = Em * (1 + U)
    step_factor = (Em * (1 + U)).shift(1)
    vl = v_laurent(m)
    for k in range(k_max + 1):
        S = H
        for _ in range(k):
            for _ in range(m):
                S = delta_u(S) * base.u_over_A
            S = S * step_factor
        diff = S - H * (vl ** k) * TruncSeries.gen(order, "z") ** k
        try:
            peel_low_degree_in_A(diff * (1 + U) ** (m - 1), m, E)
        except SpanError as exc:
            return CheckResult(f"operator identity m={m} k={k}", False, str(exc))
    return CheckResult(f"operator identity m={m} k<={k_max} order={order}", True)


# ---------------------------------------------------------------------------
# reflection and antisymmetrisation (slope 1)


def reflection_check_m1(order: int, k_max: int, spec: str = "generic") -> CheckResult:
    """``((1+u)(1+1/u) Omega)^k G - v^k G`` is a polynomial in ``v``."""
    G = closed_form_m1(order, spec)
    vl = v_laurent(1)
    for k in range(k_max + 1):
        S = G
        for _ in range(k):
            S = omega(S) * vl
        diff = S - G * vl ** k
        if u_reflect(diff) != diff:
            return CheckResult("reflection", False, f"k={k} not symmetric")
        try:
            diff.map_coeffs(lambda c: to_v_polynomial(c, 1))
        except ValueError as exc:
            return CheckResult("reflection", False, f"k={k}: {exc}")
    return CheckResult(f"reflection k<={k_max} order={order}", True)


def antisymmetric_part_m1(order: int, spec: str = "generic") -> TruncSeries:
    """``(1+u)(exp(-K(u)) - exp(-K(1/u))/u) exp(yV)``."""
    base = base_series(1, order, spec)
    E = base.E
    Ebar = u_reflect(E).map_coeffs(lambda c: c.mul_var("u", -1))
    return (E - Ebar) * (1 + U) * (base.V_laurent * Y).exp()


def antisymmetry_check_m1(order: int, spec: str = "generic") -> CheckResult:
    G = closed_form_m1(order, spec)
    ok = G - u_reflect(G) == antisymmetric_part_m1(order, spec)
    return CheckResult(f"antisymmetrisation order={order}", ok)


def reconstruct_m1(order: int, spec: str = "generic") -> TruncSeries:
    """Recover the slope-1 solution from its antisymmetrisation and ``G(-1) = 0``."""
    pos = positive_part_u(antisymmetric_part_m1(order, spec))
    return pos - at_u_minus_one(pos)


# ---------------------------------------------------------------------------
# linear combination over the roots (multiplied by the Vandermonde product)


def _roots(m: int):
    if m == 1:
        return [U, U ** -1], (lambda c: c)
    if m == 2:
        u1, u2 = slope2_roots()
        return [U, u1, u2], reduce_w
    raise ValueError("explicit roots only for m <= 2")


def linear_combination_check(m: int, order: int, spec: str = "generic",
                             G: TruncSeries | None = None) -> CheckResult:
    """``v^m sum_i (-1)^i D_i G(u_i) = v exp(yV) D`` where ``D`` is the
    product of ``B_j - B_k`` over ``j < k``, ``D_i`` omits index ``i`` and
    ``B_i = v A(u_i) = u_i exp(-K(u_i)) prod_{j != i} (1 + u_j)``."""
    roots, red = _roots(m)
    base = base_series(m, order, spec)
    if G is None:
        G = closed_form_m1(order, spec) if m == 1 else closed_form_m2(order, spec)

    def at(S: TruncSeries, r: MultiPoly) -> TruncSeries:
        return S.map_coeffs(lambda c: red(c.subs("u", r)))

    Bs = []
    for i, r in enumerate(roots):
        fac = r
        for j, s in enumerate(roots):
            if j != i:
                fac = red(fac * (1 + s))
        Bs.append(at(base.E, r).map_coeffs(lambda c: red(c * fac)))
    Gs = [at(G, r) for r in roots]

    def vandermonde(skip=None) -> TruncSeries:
        out = TruncSeries.const(1, order, "z")
        idx = [i for i in range(m + 1) if i != skip]
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                out = (out * (Bs[idx[a]] - Bs[idx[b]])).map_coeffs(red)
        return out

    vl = v_laurent(m)
    lhs = TruncSeries([], order, "z")
    for i in range(m + 1):
        lhs = lhs + (vandermonde(i) * Gs[i]).map_coeffs(red) * (-1) ** i
    lhs = lhs * vl ** m
    rhs = ((base.V_laurent * Y).exp() * vandermonde()).map_coeffs(red) * vl
    return CheckResult(f"linear combination m={m} order={order}", lhs.map_coeffs(red) == rhs.map_coeffs(red))


def closed_form_at_zero_consistency(m: int, order: int) -> bool:
    """Sanity: the slope-1 solution vanishes at ``u = -1``."""
    G = closed_form_m1(order) if m == 1 else closed_form_m2(order)
    return not any(at_u_minus_one(G).coeffs) and at_u_zero(G)[0] == MultiPoly.const(1)
