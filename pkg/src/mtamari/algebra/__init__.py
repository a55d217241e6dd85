"""Exact arithmetic: polynomials, truncated series, operators."""

from .poly import MultiPoly, Q, const, p, var
from .series import TruncSeries, fixed_point, lagrange_invert
from .ratfunc import RationalFunction, lagrange_identities_check

__all__ = [
    "MultiPoly", "Q", "const", "p", "var",
    "TruncSeries", "fixed_point", "lagrange_invert",
    "RationalFunction", "lagrange_identities_check",
]
