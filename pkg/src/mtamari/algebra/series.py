"""Truncated power series in a single expansion variable.

Coefficients may be plain rationals or ``MultiPoly`` values; anything that
supports ring arithmetic and scalar multiplication by ``mpq`` works.
"""

from __future__ import annotations

from typing import Callable, List, Sequence

from .poly import MultiPoly, Q


class TruncSeries:
    """Power series ``sum_k coeffs[k] * t**k`` known exactly through ``order``."""

    __slots__ = ("coeffs", "order", "var")

    def __init__(self, coeffs: Sequence, order: int, var: str = "t"):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs[: order + 1])
        zero = MultiPoly()
        while len(cs) < order + 1:
            cs.append(zero)
        self.coeffs: List = [c if isinstance(c, MultiPoly) else MultiPoly.const(c) for c in cs]
        self.order = order
        self.var = var

    @classmethod
    def const(cls, c, order: int, var: str = "t") -> "TruncSeries":
        return cls([c], order, var)

    @classmethod
    def gen(cls, order: int, var: str = "t") -> "TruncSeries":
        """The expansion variable itself."""
        return cls([0, 1], order, var)

    def _like(self, coeffs) -> "TruncSeries":
        return TruncSeries(coeffs, self.order, self.var)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def __repr__(self) -> str:
        return f"TruncSeries({self.var}, order={self.order}, {[str(c) for c in self.coeffs]})"

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, min(order, self.order), self.var)

    def _order_with(self, other: "TruncSeries") -> int:
        return min(self.order, other.order)

    # ring operations ----------------------------------------------------
    def __add__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            n = self._order_with(other)
            return TruncSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n, self.var)
        cs = list(self.coeffs)
        cs[0] = cs[0] + other
        return self._like(cs)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            n = self._order_with(other)
            return TruncSeries([a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n, self.var)
        return self + (-other)

    def __rsub__(self, other) -> "TruncSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return self._like([c * other for c in self.coeffs])
        n = self._order_with(other)
        a, b = self.coeffs, other.coeffs
        na = [i for i in range(n + 1) if a[i]]
        nb = [j for j in range(n + 1) if b[j]]
        out = [MultiPoly() for _ in range(n + 1)]
        for i in na:
            ai = a[i]
            for j in nb:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + ai * b[j]
        return TruncSeries(out, n, self.var)

    def __rmul__(self, other) -> "TruncSeries":
        return self._like([other * c for c in self.coeffs])

    def __truediv__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        inv = 1 / Q(other)
        return self._like([c * inv for c in self.coeffs])

    def __rtruediv__(self, other) -> "TruncSeries":
        return self.inverse() * other

    def __pow__(self, e: int) -> "TruncSeries":
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncSeries.const(1, self.order, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # analytic operations ------------------------------------------------
    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order + 1

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by ``var**k``; negative ``k`` requires enough vanishing terms."""
        if k >= 0:
            return self._like([MultiPoly()] * k + self.coeffs)
        if self.valuation() < -k:
            raise ValueError("shift would leave a negative power")
        return TruncSeries(self.coeffs[-k:], self.order + k, self.var)

    def deriv(self) -> "TruncSeries":
        cs = [self.coeffs[k] * k for k in range(1, self.order + 1)]
        return TruncSeries(cs, max(self.order - 1, 0), self.var)

    def integ(self) -> "TruncSeries":
        """Antiderivative vanishing at 0; known one order further."""
        cs = [MultiPoly()] + [self.coeffs[k] / (k + 1) for k in range(self.order + 1)]
        return TruncSeries(cs, self.order + 1, self.var)

    def inverse(self) -> "TruncSeries":
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series has no constant term")
        if c0.is_constant():
            inv0 = MultiPoly.const(1 / c0.constant_term())
        elif len(c0) == 1:
            inv0 = c0 ** -1
        else:
            raise ZeroDivisionError("constant term is not a unit")
        out = [inv0]
        a = self.coeffs
        for n in range(1, self.order + 1):
            s = MultiPoly()
            for k in range(1, n + 1):
                if a[k]:
                    s = s + a[k] * out[n - k]
            out.append(-(s * inv0))
        return self._like(out)

    def exp(self) -> "TruncSeries":
        if self.coeffs[0]:
            raise ValueError("exp requires a vanishing constant term")
        a = self.coeffs
        ka = [a[k] * k for k in range(self.order + 1)]
        out = [MultiPoly.const(1)]
        for n in range(1, self.order + 1):
            s = MultiPoly()
            for k in range(1, n + 1):
                if ka[k]:
                    s = s + ka[k] * out[n - k]
            out.append(s / n)
        return self._like(out)

    def log(self) -> "TruncSeries":
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        return (self.deriv() * self.inverse()).integ()

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """``self(inner)``; ``inner`` must have zero constant term."""
        if inner.coeffs[0]:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        out = TruncSeries.const(self.coeffs[n], n, inner.var)
        for k in range(n - 1, -1, -1):
            out = out * inner + self.coeffs[k]
        return out

    def map_coeffs(self, fn: Callable) -> "TruncSeries":
        return self._like([fn(c) for c in self.coeffs])

    def to_json(self) -> dict:
        return {"order": self.order, "var": self.var,
                "terms": [c.to_json() for c in self.coeffs]}


def lagrange_invert(H: TruncSeries, phi: TruncSeries, n: int):
    """``[t^n] H(z)`` where ``z = t * phi(z)``, via ``(1/n)[z^(n-1)](H' phi^n)``."""
    if n < 1:
        raise ValueError("Lagrange extraction needs n >= 1")
    if not phi.coeffs[0]:
        raise ValueError("phi(0) must be invertible")
    if H.order < n or phi.order < n - 1:
        raise ValueError("series not known to sufficient order")
    h = H.truncate(n).deriv()
    return (h * phi.truncate(n - 1) ** n)[n - 1] / n


def fixed_point(step: Callable[[TruncSeries], TruncSeries], order: int, var: str = "t",
                start=None) -> TruncSeries:
    """Iterate ``s -> step(s)`` ``order + 1`` times from ``start`` (default 0).

    Suitable for equations ``s = step(s)`` where ``step`` gains one order of
    precision per application.
    """
    s = start if start is not None else TruncSeries([], order, var)
    for _ in range(order + 1):
        s = step(s)
    return s
