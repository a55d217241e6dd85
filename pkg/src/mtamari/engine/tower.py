"""Descending recursion for the series ``Phi_m, .., Phi_0`` in ``v`` and the
assembly ``F = sum_k Phi_k(v) A(u)^k``."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict

from ..algebra.operators import divide_by_var, divide_one_plus_u, is_polynomial_in_u, positive_part_u
from ..algebra.poly import MultiPoly
from ..algebra.series import TruncSeries
from ..combinatorics import partitions_of
from .base import U, V, Y, base_series
from .closed import NotPolynomialError
from .companion import laurent, newton_power_sums, root_sums


class ReconstructionError(ArithmeticError):
    """A symmetric quantity could not be written as a polynomial in ``v``."""


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


@dataclass
class PhiTower:
    m: int
    order: int
    spec: str
    with_y: bool
    phis: Dict[int, TruncSeries] = field(default_factory=dict)
    positive: Dict[int, TruncSeries] = field(default_factory=dict)

    def divisible_by_v(self) -> bool:
        return all(not c.subs("v", 0) for S in self.phis.values() for c in S.coeffs)


def from_positive_part(Ppos: MultiPoly, m: int) -> MultiPoly:
    """``sum_i (P(u_i) - P(-1))`` over all roots, for ``P`` with positive ``u``-powers only,
    written as a polynomial in ``v``."""
    parts = Ppos.collect("u")
    if not parts:
        return MultiPoly()
    if min(parts) < 1:
        raise ReconstructionError("expected strictly positive powers of u")
    s = newton_power_sums(m, max(parts))
    out = MultiPoly()
    for i, c in parts.items():
        out = out + c * (s[i] - (m + 1) * (-1) ** i)
    return out


def phi_tower(m: int, order: int, with_y: bool = True, spec: str = "generic") -> PhiTower:
    base = base_series(m, order, spec)
    rs = root_sums(m, order, spec, base)
    y = Y if with_y else MultiPoly.const(1)
    tower = PhiTower(m, order, spec, with_y)
    tower.phis[m] = (base.V * y).exp() * V
    vmA: Dict = {}

    def v_mono(lam):
        if lam not in vmA:
            vmA[lam] = rs.v_monomial_A(lam)
        return vmA[lam]

    for k in range(m, 0, -1):
        acc = TruncSeries([], order, "z")
        for j in range(k, m + 1):
            weight = TruncSeries([], order, "z")
            for lam in partitions_of(j - k + 1):
                c = _binom(m - lam.ell, k - lam.ell)
                if c:
                    weight = weight + v_mono(lam) * c
            if not any(weight.coeffs):
                continue
            reduced = divide_by_var(tower.phis[j], "v").map_coeffs(lambda c: laurent(c, m))
            acc = acc + reduced * weight
        pos = positive_part_u(acc) * MultiPoly.const(-1) / comb(m, k)
        phi = pos.map_coeffs(lambda c: from_positive_part(c, m))
        if positive_part_u(phi.map_coeffs(lambda c: laurent(c, m))) != pos:
            raise ReconstructionError(f"Phi_{k - 1} does not reproduce its positive part")
        tower.positive[k - 1] = pos
        tower.phis[k - 1] = phi
    if not tower.divisible_by_v():
        raise ReconstructionError("some Phi_k is not divisible by v")
    return tower


def assemble_F(tower: PhiTower) -> TruncSeries:
    """``sum_k Phi_k(v) A(u)^k``, with polynomial coefficients in ``u``."""
    m, order = tower.m, tower.order
    E = base_series(m, order, tower.spec).E
    uE = E * U
    num = TruncSeries([], order, "z")
    power = TruncSeries.const(1, order, "z")
    for k in range(m + 1):
        phi = tower.phis[k].map_coeffs(lambda c: laurent(c, m))
        num = num + phi * power * (1 + U) ** (m - k)
        power = power * uE
    out = divide_one_plus_u(num, m)
    if not is_polynomial_in_u(out):
        raise NotPolynomialError("assembled series has a negative power of u")
    return out
