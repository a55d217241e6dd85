"""Pass/fail records for verification suites, with the first point of divergence."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import List, Optional

from .algebra.poly import MultiPoly, var_name
from .algebra.series import TruncSeries

SCHEMA = "mtamari/1"


@dataclass
class Divergence:
    position: str
    lhs: str
    rhs: str


@dataclass
class Check:
    name: str
    status: str
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    divergence: Optional[Divergence] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def _first_monomial_difference(a: MultiPoly, b: MultiPoly) -> Divergence:
    d = a - b
    k, _ = d._sorted_terms()[0]
    mono = MultiPoly._raw({k: 1})
    return Divergence(str(mono), str(a.coeff_monomial(_named(k))), str(b.coeff_monomial(_named(k))))


def _named(k) -> dict:
    return {var_name(i): e for i, e in enumerate(k) if e}


def _short(text: str, limit: int = 160) -> str:
    return text if len(text) <= limit else text[: limit - 3] + "..."


def compare_poly(name: str, a: MultiPoly, b: MultiPoly, position: str = "") -> Check:
    """Full operands are abbreviated; the divergence entry is always exact."""
    if a == b:
        return Check(name, "pass", _short(str(a)), _short(str(b)))
    div = _first_monomial_difference(a, b)
    if position:
        div.position = f"{position}, monomial {div.position}"
    return Check(name, "fail", _short(str(a)), _short(str(b)), div)


def compare_series(name: str, a: TruncSeries, b: TruncSeries) -> Check:
    """Compare through the smaller order; report the lowest differing coefficient."""
    order = min(a.order, b.order)
    for n in range(order + 1):
        if a[n] != b[n]:
            chk = compare_poly(name, a[n], b[n], f"{a.var}^{n}")
            return chk
    return Check(name, "pass", detail=f"equal through {a.var}^{order}")


def compare_values(name: str, a, b) -> Check:
    if a == b:
        return Check(name, "pass", str(a), str(b))
    return Check(name, "fail", str(a), str(b), Divergence("value", str(a), str(b)))


def flag(name: str, ok: bool, detail: str = "") -> Check:
    return Check(name, "pass" if ok else "fail", detail=detail)


@dataclass
class VerificationReport:
    suite: str
    checks: List[Check] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def payload(self) -> dict:
        """Reproducible content: timing is left out."""
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "status": "pass" if self.ok else "fail",
            "checks": [asdict(c) for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.payload(), indent=1)

    def to_text(self, sep: Optional[str] = None) -> str:
        if sep is not None:
            rows = ["\t".join(["suite", "check", "status", "divergence"]).replace("\t", sep)]
            for c in self.checks:
                div = "" if c.divergence is None else f"{c.divergence.position}: {c.divergence.lhs} != {c.divergence.rhs}"
                rows.append(sep.join([self.suite, c.name, c.status, div]))
            return "\n".join(rows) + "\n"
        lines = []
        for c in self.checks:
            line = f"[{c.status.upper()}] {c.name}"
            if c.divergence is not None:
                d = c.divergence
                line += f"\n    first difference at {d.position}: {d.lhs} != {d.rhs}"
            elif c.detail and not c.ok:
                line += f"\n    {c.detail}"
            lines.append(line)
        summary = "pass" if self.ok else "FAIL"
        lines.append(f"{self.suite}: {sum(c.ok for c in self.checks)}/{len(self.checks)} checks, {summary}")
        return "\n".join(lines) + "\n"
