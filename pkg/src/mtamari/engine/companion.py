"""Symmetric functions of the roots of ``(1+U)^(m+1) = v U^m``.

Ring elements are ``MultiPoly`` values in the variable ``U`` of degree at most
``m``; every other variable (``v``, ``y``, the ``p_k``) is a coefficient.  The
trace of ``f(U)`` is ``sum_i f(u_i)`` over all ``m+1`` roots and is a
polynomial in ``v``.  Sums over ``u_1 .. u_m`` alone subtract the ``u_0 = u``
term after substituting ``v = (1+u)^(m+1) / u^m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

from gmpy2 import mpq

from ..algebra.operators import divide_one_plus_u
from ..algebra.poly import MultiPoly
from ..algebra.series import TruncSeries
from ..combinatorics import Partition, partitions_of
from .base import U, V, BaseSeries, base_series, v_laurent

RING_VAR = "U"
W = MultiPoly.var(RING_VAR)


def elementary_all_roots(m: int, j: int) -> MultiPoly:
    """``e_j(u_0, .., u_m) = (-1)^j C(m+1, j) + v [j = 1]``."""
    out = MultiPoly.const((-1) ** j * comb(m + 1, j))
    if j == 1:
        out = out + V
    return out


def newton_power_sums(m: int, top: int) -> List[MultiPoly]:
    """``s_r = sum_i u_i^r`` for ``r = 0 .. top`` as polynomials in ``v``."""
    e = [elementary_all_roots(m, j) for j in range(m + 2)]
    s: List[MultiPoly] = [MultiPoly.const(m + 1)]
    for r in range(1, top + 1):
        acc = MultiPoly()
        for j in range(1, min(r, m + 1) + 1):
            term = e[j] * (r if j == r else s[r - j])
            acc = acc + (term if j % 2 else -term)
        s.append(acc)
    return s


@dataclass
class CompanionRing:
    m: int
    _sums: List[MultiPoly] = field(default_factory=list, repr=False)

    def __post_init__(self):
        m = self.m
        # U^(m+1) = v U^m - sum_{i<=m} C(m+1, i) U^i
        self.top_rule = V * W ** m - sum((W ** i * comb(m + 1, i) for i in range(m + 1)), MultiPoly())
        self.top_parts = self.top_rule.collect(RING_VAR)
        self._sums = newton_power_sums(m, m)

    def reduce(self, P: MultiPoly) -> MultiPoly:
        parts = P.collect(RING_VAR)
        if not parts:
            return MultiPoly()
        if min(parts) < 0:
            raise ValueError("negative power of U; use inverse_U")
        m = self.m
        for d in range(max(parts), m, -1):
            c = parts.pop(d, None)
            if not c:
                continue
            shift = d - m - 1
            for i, r in self.top_parts.items():
                parts[i + shift] = parts.get(i + shift, MultiPoly()) + c * r
        return MultiPoly.from_collected(RING_VAR, {k: c for k, c in parts.items() if c})

    def mul(self, a: MultiPoly, b: MultiPoly) -> MultiPoly:
        return self.reduce(a * b)

    def mul_series(self, a: TruncSeries, b: TruncSeries) -> TruncSeries:
        return (a * b).map_coeffs(self.reduce)

    def power_series(self, a: TruncSeries, r: int) -> TruncSeries:
        out = TruncSeries.const(1, a.order, a.var)
        for _ in range(r):
            out = self.mul_series(out, a)
        return out

    @property
    def inverse_U(self) -> MultiPoly:
        """``1/U``, from the constant term 1 of the modulus."""
        m = self.m
        rest = sum((W ** (i - 1) * comb(m + 1, i) for i in range(1, m + 2)), MultiPoly()) - V * W ** (m - 1)
        return self.reduce(-rest)

    def lift(self, P: MultiPoly, name: str = "u") -> MultiPoly:
        """Replace the variable ``name`` by ``U`` and reduce."""
        return self.reduce(P.subs(name, W))

    def trace(self, P: MultiPoly) -> MultiPoly:
        """``sum_i P(u_i)``, via Newton's identities."""
        out = MultiPoly()
        for i, c in self.reduce(P).collect(RING_VAR).items():
            out = out + c * self._sums[i]
        return out

    def trace_series(self, S: TruncSeries) -> TruncSeries:
        return S.map_coeffs(self.trace)

    def matrix_trace(self, P: MultiPoly) -> MultiPoly:
        """Trace of multiplication by ``P`` on the basis ``1, U, .., U^m``."""
        out = MultiPoly()
        for i in range(self.m + 1):
            out = out + self.mul(P, W ** i).coeff(RING_VAR, i)
        return out

    def B_series(self, base: BaseSeries) -> TruncSeries:
        """``v A(U) = (1+U)^m U^(1-m) exp(-K(U))`` as a ring-valued series."""
        m = self.m
        fac = self.reduce((1 + W) ** m * self.inverse_U ** (m - 1))
        return base.E.map_coeffs(lambda c: self.reduce(self.lift(c) * fac))


def companion_ring(m: int) -> CompanionRing:
    if m < 1:
        raise ValueError("m must be positive")
    return CompanionRing(m)


def B_at_u(m: int, base: BaseSeries) -> TruncSeries:
    """``v A(u)`` at the root ``u_0 = u``, Laurent in ``u``."""
    fac = ((1 + U) ** m).mul_var("u", 1 - m)
    return base.E * fac


def laurent(P: MultiPoly, m: int) -> MultiPoly:
    """Substitute ``v = (1+u)^(m+1) / u^m``."""
    return P.subs("v", v_laurent(m))


@dataclass
class RootSums:
    """Power sums of ``B_i = v A(u_i)`` over the roots ``u_1 .. u_m``."""

    m: int
    order: int
    spec: str
    base: BaseSeries
    ring: CompanionRing
    sums: Dict[int, TruncSeries] = field(default_factory=dict)

    def power_sum_all(self, r: int) -> TruncSeries:
        """``sum_{i=0..m} B_i^r`` as a series with coefficients polynomial in ``v``."""
        B = self.ring.B_series(self.base)
        return self.ring.trace_series(self.ring.power_series(B, r))

    def power_sum(self, r: int) -> TruncSeries:
        got = self.sums.get(r)
        if got is None:
            full = self.power_sum_all(r).map_coeffs(lambda c: laurent(c, self.m))
            got = self.sums[r] = full - B_at_u(self.m, self.base) ** r
        return got

    def v_monomial_A(self, lam: Partition) -> TruncSeries:
        """``v m_lambda(A_1 .. A_m)``, certified Laurent by exact division."""
        m, w = self.m, lam.n
        mB = monomial_from_power_sums(lam, self.power_sum)
        scaled = mB.map_coeffs(lambda c: c.mul_var("u", m * (w - 1)))
        return divide_one_plus_u(scaled, (m + 1) * (w - 1))


def root_sums(m: int, order: int, spec: str = "generic", base: BaseSeries | None = None) -> RootSums:
    base = base or base_series(m, order, spec)
    return RootSums(m, order, spec, base, companion_ring(m))


def power_sums_roots(m: int, r: int, spec: str = "generic") -> MultiPoly:
    """``sum_{i=1..m} u_i^r`` as a Laurent polynomial in ``u``."""
    ring = companion_ring(m)
    return laurent(ring.trace(W ** r), m) - U ** r


@lru_cache(maxsize=None)
def _p_to_m(w: int) -> Tuple[Tuple[Partition, ...], Tuple[Tuple[mpq, ...], ...]]:
    """Inverse of the matrix expressing ``p_mu`` in monomial symmetric functions."""
    parts = partitions_of(w)
    xs = [MultiPoly.var(f"_s{i}") for i in range(w)]
    rows = []
    for mu in parts:
        poly = MultiPoly.const(1)
        for k in mu:
            poly = poly * sum((x ** k for x in xs), MultiPoly())
        rows.append([poly.coeff_monomial({f"_s{i}": e for i, e in enumerate(lam)}) for lam in parts])
    n = len(parts)
    # solve rows * D = I, i.e. invert the transition matrix
    aug = [list(map(mpq, rows[i])) + [mpq(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    inverse = tuple(tuple(aug[i][n:]) for i in range(n))
    return tuple(parts), inverse


def monomial_from_power_sums(lam: Partition, power_sum):
    """``m_lambda`` from a callable returning the power sum ``p_r``.

    With ``p_mu = sum_lambda R[mu][lambda] m_lambda`` the inverse matrix
    gives ``m_lambda = sum_mu R^-1[lambda][mu] p_mu``.
    """
    parts, inv = _p_to_m(lam.n)
    row = inv[parts.index(lam)]
    out = None
    for c, mu in zip(row, parts):
        if c == 0:
            continue
        term = None
        for k in mu:
            term = power_sum(k) if term is None else term * power_sum(k)
        term = term * c
        out = term if out is None else out + term
    return out


def to_v_polynomial(P: MultiPoly, m: int) -> MultiPoly:
    """Write a Laurent polynomial in ``u`` as a polynomial in ``v``.

    ``v^d`` has top ``u``-degree ``d`` with coefficient 1, so the top term is
    peeled repeatedly; a nonzero remainder means ``P`` is not a polynomial
    in ``v``.
    """
    vl = v_laurent(m)
    out = MultiPoly()
    rest = P
    while rest:
        parts = rest.collect("u")
        d = max(parts)
        if d < 0:
            raise ValueError("not a polynomial in v")
        if d == 0:
            if min(parts) < 0:
                raise ValueError("not a polynomial in v")
            return out + parts[0]
        c = parts[d]
        out = out + c * V ** d
        rest = rest - c * vl ** d
    return out
