"""Linear operators on Laurent polynomials in ``u`` and on series built from them.

Every operator accepts either a ``MultiPoly`` or a ``TruncSeries`` with
``MultiPoly`` coefficients; series are handled coefficientwise.
"""

from __future__ import annotations

from typing import Dict

from .poly import MultiPoly, U_INDEX, var_index
from .series import TruncSeries


class InexactDivision(ArithmeticError):
    """A division that must be exact left a remainder."""


def _lift(fn):
    def wrapper(P, *args, **kwargs):
        if isinstance(P, TruncSeries):
            return P.map_coeffs(lambda c: fn(c, *args, **kwargs))
        return fn(P, *args, **kwargs)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _uexp(k) -> int:
    return k[U_INDEX] if k else 0


@_lift
def positive_part_u(P: MultiPoly) -> MultiPoly:
    """Terms with strictly positive ``u`` exponent."""
    return P.select(lambda k: _uexp(k) > 0)


@_lift
def nonneg_part_u(P: MultiPoly) -> MultiPoly:
    return P.select(lambda k: _uexp(k) >= 0)


@_lift
def negative_part_u(P: MultiPoly) -> MultiPoly:
    return P.select(lambda k: _uexp(k) < 0)


@_lift
def coeff_u0(P: MultiPoly) -> MultiPoly:
    return P.select(lambda k: _uexp(k) == 0)


@_lift
def u_reflect(P: MultiPoly) -> MultiPoly:
    """Substitute ``u -> 1/u``."""
    return P.map_exponent("u", lambda e: -e)


@_lift
def at_u_minus_one(P: MultiPoly) -> MultiPoly:
    return P.subs("u", -1)


@_lift
def at_u_zero(P: MultiPoly) -> MultiPoly:
    """Value at ``u = 0``; the input must be a polynomial in ``u``."""
    if any(_uexp(k) < 0 for k in P.terms):
        raise InexactDivision("negative power of u when evaluating at u = 0")
    return coeff_u0(P)


def is_polynomial_in_u(P) -> bool:
    if isinstance(P, TruncSeries):
        return all(is_polynomial_in_u(c) for c in P.coeffs)
    return all(_uexp(k) >= 0 for k in P.terms)


def _div_one_plus(P: MultiPoly, name: str) -> MultiPoly:
    parts = P.collect(name)
    if not parts:
        return MultiPoly()
    lo, hi = min(parts), max(parts)
    quot: Dict[int, MultiPoly] = {}
    prev = MultiPoly()
    for e in range(lo, hi):
        cur = parts.get(e, MultiPoly()) - prev
        if cur:
            quot[e] = cur
        prev = cur
    if parts[hi] != prev:
        raise InexactDivision(f"not divisible by (1+{name})")
    return MultiPoly.from_collected(name, quot)


@_lift
def divide_one_plus_u(P: MultiPoly, power: int = 1, name: str = "u") -> MultiPoly:
    """Exact quotient of a Laurent polynomial by ``(1+u)**power``."""
    for _ in range(power):
        P = _div_one_plus(P, name)
    return P


@_lift
def divide_by_var(P: MultiPoly, name: str = "u", power: int = 1) -> MultiPoly:
    """Exact quotient by ``name**power`` for variables without Laurent support."""
    idx = var_index(name)
    if idx != U_INDEX and any((k[idx] if idx < len(k) else 0) < power for k in P.terms):
        raise InexactDivision(f"not divisible by {name}^{power}")
    return P.mul_var(name, -power)


@_lift
def delta_x(S: MultiPoly, name: str = "x") -> MultiPoly:
    """``(S(x) - S(1)) / (x - 1)`` on a polynomial in ``x``."""
    out = MultiPoly()
    for k, c in S.collect(name).items():
        if k < 0:
            raise InexactDivision(f"negative power of {name}")
        for j in range(k):
            out = out + c.mul_var(name, j)
    return out


@_lift
def delta_qx(S: MultiPoly, name: str = "x") -> MultiPoly:
    """``(S(qx) - S(1)) / (qx - 1)``; equals :func:`delta_x` at ``q = 1``."""
    out = MultiPoly()
    for k, c in S.collect(name).items():
        if k < 0:
            raise InexactDivision(f"negative power of {name}")
        for j in range(k):
            out = out + c.mul_var(name, j).mul_var("q", j)
    return out


@_lift
def omega(H: MultiPoly) -> MultiPoly:
    """``H(u) - H(0)``."""
    return H - at_u_zero(H)


@_lift
def delta_u(H: MultiPoly) -> MultiPoly:
    """``(H(u) - H(0)) / u``."""
    return omega(H).mul_var("u", -1)


def lambda_op(H: TruncSeries, u_over_A: TruncSeries) -> TruncSeries:
    """``(H(u) - H(0)) / A(u)`` given the series ``u / A(u)``."""
    return delta_u(H) * u_over_A
