"""Quotients of multivariate polynomials, compared by cross-multiplication."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .poly import MultiPoly


@dataclass(frozen=True)
class RationalFunction:
    num: MultiPoly
    den: MultiPoly

    def __post_init__(self):
        if not self.den:
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def of(cls, p) -> "RationalFunction":
        return cls(MultiPoly.coerce(p), MultiPoly.const(1))

    @staticmethod
    def _c(other) -> "RationalFunction":
        return other if isinstance(other, RationalFunction) else RationalFunction.of(other)

    def __add__(self, other) -> "RationalFunction":
        o = self._c(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._c(other))

    def __mul__(self, other) -> "RationalFunction":
        o = self._c(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        o = self._c(other)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __eq__(self, other) -> bool:
        o = self._c(other)
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.num


def _interpolation_sum(xs, f) -> RationalFunction:
    total = RationalFunction.of(0)
    for i, xi in enumerate(xs):
        den = MultiPoly.const(1)
        for j, xj in enumerate(xs):
            if j != i:
                den = den * (xi - xj)
        total = total + f(xi) / RationalFunction.of(den)
    return total


def lagrange_identities_check(m: int) -> dict:
    """Interpolation identities over ``m+1`` symbolic points ``x0..xm``.

    Returns a mapping from identity name to a boolean.
    """
    if m > 4:
        raise ValueError("symbolic check limited to m <= 4")
    xs = [MultiPoly.var(f"x{i}") for i in range(m + 1)]
    out = {}
    out["top_power"] = _interpolation_sum(xs, lambda x: RationalFunction.of(x ** m)) == 1
    prod_inv = RationalFunction.of(1)
    for x in xs:
        prod_inv = prod_inv / RationalFunction.of(x)
    out["reciprocal"] = _interpolation_sum(
        xs, lambda x: RationalFunction(MultiPoly.const(1), x)) == prod_inv * (-1) ** m
    out["low_degree"] = all(
        _interpolation_sum(xs, lambda x, d=d: RationalFunction.of(x ** d)).is_zero()
        for d in range(m))
    return out


def vandermonde(xs) -> MultiPoly:
    """``prod_{j<k} (x_j - x_k)``."""
    out = MultiPoly.const(1)
    for a, b in combinations(xs, 2):
        out = out * (a - b)
    return out
