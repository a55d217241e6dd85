"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are exponent tuples indexed by a process-wide variable registry.
Trailing zero exponents are stripped, so the constant monomial is ``()``.
The variable ``u`` sits at index 0 and is the only one expected to carry
negative exponents (Laurent polynomials in ``u``).
"""

from __future__ import annotations

from fractions import Fraction
from operator import add
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple, Union

from gmpy2 import mpq

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction, "mpq"]

_BASE_VARS = ["u", "x", "y", "v", "q", "w"]
_VARS: list[str] = list(_BASE_VARS) + [f"p{k}" for k in range(1, 33)]
_INDEX: dict[str, int] = {name: i for i, name in enumerate(_VARS)}

U_INDEX = 0


def var_index(name: str) -> int:
    """Return the registry slot of ``name``, registering it on first use."""
    idx = _INDEX.get(name)
    if idx is None:
        idx = len(_VARS)
        _VARS.append(name)
        _INDEX[name] = idx
    return idx


def var_name(idx: int) -> str:
    return _VARS[idx]


def Q(c) -> mpq:
    """Coerce a scalar to an exact rational."""
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    return mpq(c)


def _strip(k: tuple) -> tuple:
    while k and not k[-1]:
        k = k[:-1]
    return k


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    la, lb = len(a), len(b)
    if not la:
        return b
    if not lb:
        return a
    if la < lb:
        return tuple(map(add, a, b[:la])) + b[la:]
    if la > lb:
        return tuple(map(add, a[:lb], b)) + a[lb:]
    k = tuple(map(add, a, b))
    if not k[-1]:
        k = _strip(k)
    return k


def _get(k: Monomial, idx: int) -> int:
    return k[idx] if idx < len(k) else 0


def _with(k: Monomial, idx: int, e: int) -> Monomial:
    if idx < len(k):
        k = k[:idx] + (e,) + k[idx + 1:]
        return _strip(k) if not e else k
    if not e:
        return k
    return k + (0,) * (idx - len(k)) + (e,)


class MultiPoly:
    """Immutable sparse polynomial; terms map monomial tuples to ``mpq``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        t = {}
        if terms:
            for k, c in terms.items():
                if c:
                    t[_strip(tuple(k))] = Q(c)
        self.terms: Dict[Monomial, mpq] = t
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, mpq]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        return cls._raw({(): Q(c)} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        return cls._raw({_with((), var_index(name), power): mpq(1)})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: Scalar = 1) -> "MultiPoly":
        k: Monomial = ()
        for name, e in exps.items():
            k = _with(k, var_index(name), e)
        return cls._raw({k: Q(coeff)} if coeff else {})

    @classmethod
    def coerce(cls, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return cls.const(other)

    # basic protocol -----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, mpq]]:
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        try:
            c = Q(other)
        except (TypeError, ValueError):
            return NotImplemented
        if not c:
            return not self.terms
        return len(self.terms) == 1 and self.terms.get(()) == c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_term(self) -> mpq:
        return self.terms.get((), mpq(0))

    # arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = Q(other)
            if not c:
                return self
            t = dict(self.terms)
            s = t.get((), 0) + c
            if s:
                t[()] = s
            else:
                t.pop((), None)
            return MultiPoly._raw(t)
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        t = dict(big)
        for k, c in small.items():
            s = t.get(k)
            if s is None:
                t[k] = c
            else:
                s = s + c
                if s:
                    t[k] = s
                else:
                    del t[k]
        return MultiPoly._raw(t)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self + (-Q(other))
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k)
            if s is None:
                t[k] = -c
            else:
                s = s - c
                if s:
                    t[k] = s
                else:
                    del t[k]
        return MultiPoly._raw(t)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, mpq, Fraction)):
                c = Q(other)
                if not c:
                    return MultiPoly._raw({})
                if c == 1:
                    return self
                return MultiPoly._raw({k: v * c for k, v in self.terms.items()})
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            if not kb:
                return MultiPoly._raw({k: v * cb for k, v in a.items()})
            return MultiPoly._raw({_mono_mul(k, kb): v * cb for k, v in a.items()})
        res: Dict[Monomial, mpq] = {}
        get = res.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = _mono_mul(ka, kb)
                res[k] = get(k, 0) + ca * cb
        return MultiPoly._raw({k: c for k, c in res.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if not other.is_constant() or not other:
                raise ZeroDivisionError("only division by nonzero constants is supported")
            other = other.constant_term()
        c = Q(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self * (1 / c)

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            if len(self.terms) == 1:
                (k, c), = self.terms.items()
                return MultiPoly._raw({tuple(x * e for x in k): 1 / c ** (-e)})
            raise ValueError("negative powers only for monomials")
        result = MultiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # queries ------------------------------------------------------------
    def degree(self, name: str) -> int:
        idx = var_index(name)
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(_get(k, idx) for k in self.terms)

    def min_degree(self, name: str) -> int:
        idx = var_index(name)
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return min(_get(k, idx) for k in self.terms)

    def variables(self) -> set[str]:
        out = set()
        for k in self.terms:
            for i, e in enumerate(k):
                if e:
                    out.add(_VARS[i])
        return out

    def collect(self, name: str) -> Dict[int, "MultiPoly"]:
        """Group by the exponent of ``name``; values no longer involve it."""
        idx = var_index(name)
        groups: Dict[int, Dict[Monomial, mpq]] = {}
        for k, c in self.terms.items():
            e = _get(k, idx)
            groups.setdefault(e, {})[_with(k, idx, 0)] = c
        return {e: MultiPoly._raw(t) for e, t in groups.items()}

    @classmethod
    def from_collected(cls, name: str, parts: Mapping[int, "MultiPoly"]) -> "MultiPoly":
        idx = var_index(name)
        t: Dict[Monomial, mpq] = {}
        for e, p in parts.items():
            for k, c in p.terms.items():
                kk = _with(k, idx, _get(k, idx) + e)
                s = t.get(kk, 0) + c
                if s:
                    t[kk] = s
                else:
                    t.pop(kk, None)
        return cls._raw(t)

    def coeff(self, name: str, e: int) -> "MultiPoly":
        idx = var_index(name)
        return MultiPoly._raw({_with(k, idx, 0): c for k, c in self.terms.items() if _get(k, idx) == e})

    def coeff_monomial(self, exps: Mapping[str, int]) -> mpq:
        k: Monomial = ()
        for name, e in exps.items():
            k = _with(k, var_index(name), e)
        return self.terms.get(k, mpq(0))

    def select(self, pred: Callable[[Monomial], bool]) -> "MultiPoly":
        return MultiPoly._raw({k: c for k, c in self.terms.items() if pred(k)})

    def map_exponent(self, name: str, fn: Callable[[int], int]) -> "MultiPoly":
        idx = var_index(name)
        t: Dict[Monomial, mpq] = {}
        for k, c in self.terms.items():
            kk = _with(k, idx, fn(_get(k, idx)))
            s = t.get(kk, 0) + c
            if s:
                t[kk] = s
            else:
                t.pop(kk, None)
        return MultiPoly._raw(t)

    def mul_var(self, name: str, e: int = 1) -> "MultiPoly":
        """Multiply by ``name**e`` (``e`` may be negative)."""
        if not e:
            return self
        return self.map_exponent(name, lambda a: a + e)

    # substitution -------------------------------------------------------
    def subs(self, name: str, value) -> "MultiPoly":
        """Replace ``name`` by a scalar or polynomial value.

        Negative exponents require ``value`` to be an invertible scalar or a
        single monomial.
        """
        parts = self.collect(name)
        if len(parts) == 1 and 0 in parts:
            return self
        if not isinstance(value, MultiPoly):
            value = MultiPoly.const(value)
        cache: Dict[int, MultiPoly] = {}

        def power(e: int) -> MultiPoly:
            if e not in cache:
                cache[e] = value ** e
            return cache[e]

        out = MultiPoly()
        for e, p in parts.items():
            out = out + p * power(e) if e else out + p
        return out

    def subs_many(self, values: Mapping[str, object]) -> "MultiPoly":
        out = self
        for name, val in values.items():
            out = out.subs(name, val)
        return out

    def diff(self, name: str) -> "MultiPoly":
        idx = var_index(name)
        t = {}
        for k, c in self.terms.items():
            e = _get(k, idx)
            if e:
                t[_with(k, idx, e - 1)] = c * e
        return MultiPoly._raw(t)

    def antiderivative(self, name: str) -> "MultiPoly":
        """Integral from 0 in ``name``; requires nonnegative exponents there."""
        idx = var_index(name)
        t = {}
        for k, c in self.terms.items():
            e = _get(k, idx)
            if e < 0:
                raise ValueError(f"cannot integrate negative power of {name}")
            t[_with(k, idx, e + 1)] = c / (e + 1)
        return MultiPoly._raw(t)

    # output -------------------------------------------------------------
    def _sorted_terms(self):
        def key(item):
            k = item[0]
            named = sorted((_VARS[i], e) for i, e in enumerate(k) if e)
            return (sum(abs(e) for _, e in named), named)

        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in self._sorted_terms():
            named = sorted((_VARS[i], e) for i, e in enumerate(k) if e)
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in named)
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def to_json(self) -> list:
        """Canonical term list ``[[{var: exp}, "num/den"], ...]``."""
        out = []
        for k, c in self._sorted_terms():
            named = {_VARS[i]: e for i, e in enumerate(k) if e}
            out.append([dict(sorted(named.items())), str(c)])
        return out

    @classmethod
    def from_json(cls, data: Iterable) -> "MultiPoly":
        out = cls()
        for exps, c in data:
            out = out + cls.monomial(exps, mpq(c))
        return out


def var(name: str) -> MultiPoly:
    return MultiPoly.var(name)


def p(k: int) -> MultiPoly:
    return MultiPoly.var(f"p{k}")


def const(c: Scalar) -> MultiPoly:
    return MultiPoly.const(c)


ZERO = MultiPoly()
ONE = MultiPoly.const(1)
