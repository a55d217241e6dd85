"""Specialisations of the power-sum variables and the base series V, L, K, A."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from gmpy2 import mpq

from ..algebra.operators import coeff_u0, positive_part_u
from ..algebra.poly import MultiPoly, p as pvar
from ..algebra.series import TruncSeries

SPECS = ("generic", "ones", "parking")


def specializer(spec: str) -> Callable[[int], MultiPoly]:
    """Map ``k`` to the value given to ``p_k``."""
    if spec == "generic":
        return pvar
    if spec == "ones":
        return lambda k: MultiPoly.const(1)
    if spec == "parking":
        return lambda k: MultiPoly.const(1 if k == 1 else 0)
    raise ValueError(f"unknown specialisation {spec!r}; expected one of {SPECS}")


U = MultiPoly.var("u")
V = MultiPoly.var("v")
Y = MultiPoly.var("y")
X = MultiPoly.var("x")


def v_laurent(m: int) -> MultiPoly:
    """``(1+u)^(m+1) / u^m``."""
    return ((1 + U) ** (m + 1)).mul_var("u", -m)


@dataclass
class BaseSeries:
    m: int
    order: int
    spec: str
    L: TruncSeries
    K: TruncSeries
    V: TruncSeries

    def K_at(self, value) -> TruncSeries:
        """``K`` with ``u`` replaced by a polynomial (or Laurent monomial) value."""
        return self.K.map_coeffs(lambda c: c.subs("u", value))

    @property
    def V_laurent(self) -> TruncSeries:
        vl = v_laurent(self.m)
        return self.V.map_coeffs(lambda c: c.subs("v", vl))

    @property
    def E(self) -> TruncSeries:
        """``exp(-K(u))``."""
        return (-self.K).exp()

    @property
    def u_over_A(self) -> TruncSeries:
        """``u / A(u) = (1+u) exp(K(u))``."""
        return self.K.exp() * (1 + U)


def base_series(m: int, order: int, spec: str = "generic") -> BaseSeries:
    if m < 1 or order < 1:
        raise ValueError("need m >= 1 and order >= 1")
    pk = specializer(spec)
    L = [MultiPoly()]
    K = [MultiPoly()]
    Vs = [MultiPoly()]
    for k in range(1, order + 1):
        w = pk(k) * mpq(1, k)
        L.append(w * comb((m + 1) * k, k))
        kpoly = MultiPoly()
        for i in range(1, k + 1):
            kpoly = kpoly + U ** i * comb((m + 1) * k, k - i)
        K.append(w * kpoly)
        Vs.append(w * V ** k)
    return BaseSeries(m, order, spec,
                      TruncSeries(L, order, "z"), TruncSeries(K, order, "z"), TruncSeries(Vs, order, "z"))


def split_V(base: BaseSeries):
    """Constant term and positive part in ``u`` of ``V`` at ``v = (1+u)^(m+1)/u^m``."""
    Vl = base.V_laurent
    return coeff_u0(Vl), positive_part_u(Vl)
