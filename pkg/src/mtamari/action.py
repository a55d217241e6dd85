"""Symmetric group action on labelled intervals and fixed-point counts."""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .algebra.poly import MultiPoly
from .combinatorics import (
    BallotPath,
    Labelling,
    Partition,
    Permutation,
    all_permutations,
    cycle_type,
    enumerate_ballot_paths,
    enumerate_labellings,
    partitions_of,
    z_lambda,
)
from .formulas import chi_formula, p_lambda
from .lattice import Interval, TamariLattice, cached_lattice


@dataclass(frozen=True)
class LabelledInterval:
    interval: Interval
    labelling: Labelling

    def __post_init__(self):
        if not self.labelling.is_valid_for(self.interval.upper.ascents):
            raise ValueError("labelling does not fit the upper path")

    @property
    def n(self) -> int:
        return self.interval.n


def act(sigma: Permutation, LI: LabelledInterval) -> LabelledInterval:
    """Relabel by ``sigma`` and re-sort inside each ascent of the upper path."""
    if sigma.n != LI.n:
        raise ValueError("size mismatch")
    heights = LI.interval.upper.ascents
    new: List[int] = []
    for block in LI.labelling.blocks(heights):
        new.extend(sorted(sigma(i) for i in block))
    return LabelledInterval(LI.interval, Labelling(tuple(new)))


def _stable(sigma: Permutation, block: Sequence[int]) -> bool:
    s = set(block)
    return all(sigma(i) in s for i in block)


def fixes_labelling(sigma: Permutation, Q: BallotPath, lab: Labelling) -> bool:
    return all(_stable(sigma, b) for b in lab.blocks(Q.ascents))


def is_fixed(sigma: Permutation, LI: LabelledInterval) -> bool:
    if sigma.n != LI.n:
        raise ValueError("size mismatch")
    return fixes_labelling(sigma, LI.interval.upper, LI.labelling)


def a_stat(sigma: Permutation, Q: BallotPath, lab: Labelling) -> int:
    """Cycles of ``sigma`` contained in the first ascent's label set."""
    if not fixes_labelling(sigma, Q, lab):
        raise ValueError("permutation does not fix the labelling")
    if not Q.ascents:
        return 0
    first = set(lab.blocks(Q.ascents)[0])
    return sum(1 for c in sigma.cycles() if c[0] in first)


# ---------------------------------------------------------------------------
# counting


def _labellings(Q: BallotPath, cache: Dict[str, List[Labelling]]) -> List[Labelling]:
    got = cache.get(Q.steps)
    if got is None:
        got = cache[Q.steps] = enumerate_labellings(Q)
    return got


def fixed_count(L: TamariLattice, sigma: Permutation, *, prime_only: bool = False) -> int:
    """Labelled intervals of ``L`` fixed by ``sigma``; stabilisation depends only
    on the upper path, so lowers are counted in bulk."""
    cache: Dict[str, List[Labelling]] = {}
    total = 0
    for j, Q in enumerate(L.nodes):
        lows = L.lowers_of(j)
        if prime_only:
            nlow = sum(1 for i in lows if L.nodes[i].contacts == 2)
        else:
            nlow = len(lows)
        if not nlow:
            continue
        fixed = sum(1 for lab in _labellings(Q, cache) if fixes_labelling(sigma, Q, lab))
        total += fixed * nlow
    return total


def character(m: int, n: int, lam: Partition, sigma: Optional[Permutation] = None) -> int:
    """Brute-force fixed-point count for one permutation of type ``lam``."""
    if lam.n != n:
        raise ValueError("partition size mismatch")
    sigma = sigma or Permutation.canonical(lam)
    if cycle_type(sigma) != lam:
        raise ValueError("permutation has the wrong cycle type")
    return fixed_count(cached_lattice(m, n), sigma)


def labelled_interval_count(m: int, n: int) -> int:
    L = cached_lattice(m, n)
    cache: Dict[str, List[Labelling]] = {}
    return sum(len(_labellings(Q, cache)) * len(L.lowers_of(j)) for j, Q in enumerate(L.nodes))


def prime_character(m: int, n: int, lam: Partition) -> int:
    return fixed_count(cached_lattice(m, n), Permutation.canonical(lam), prime_only=True)


def prime_counts(m: int, n: int) -> Tuple[int, int]:
    """Labelled and unlabelled counts of intervals whose lower path has two contacts."""
    L = cached_lattice(m, n)
    cache: Dict[str, List[Labelling]] = {}
    labelled = unlabelled = 0
    for j, Q in enumerate(L.nodes):
        k = sum(1 for i in L.lowers_of(j) if L.nodes[i].contacts == 2)
        unlabelled += k
        labelled += k * len(_labellings(Q, cache))
    return labelled, unlabelled


def parking_fixed_count(m: int, n: int, sigma: Permutation) -> int:
    """Labelled ballot paths (no interval) fixed by ``sigma``."""
    return sum(
        1 for P in enumerate_ballot_paths(m, n)
        for lab in enumerate_labellings(P) if fixes_labelling(sigma, P, lab)
    )


def brute_frobenius(m: int, n: int) -> MultiPoly:
    """``n!`` times the size-``n`` coefficient of the refined Frobenius series,
    summed over labelled intervals and every permutation fixing them."""
    x = MultiPoly.var("x")
    if n == 0:
        return x
    L = cached_lattice(m, n)
    perms = [(s, cycle_type(s)) for s in all_permutations(n)]
    total = MultiPoly()
    for j, Q in enumerate(L.nodes):
        contacts = Counter(L.nodes[i].contacts for i in L.lowers_of(j))
        xpoly = MultiPoly()
        for c, k in contacts.items():
            xpoly = xpoly + x ** c * k
        weights: Counter = Counter()
        for lab in enumerate_labellings(Q):
            for sigma, lam in perms:
                if fixes_labelling(sigma, Q, lab):
                    weights[(a_stat(sigma, Q, lab), lam)] += 1
        ypoly = MultiPoly()
        for (a, lam), k in weights.items():
            ypoly = ypoly + MultiPoly.var("y") ** a * p_lambda(lam) * k
        total = total + xpoly * ypoly
    return total


def q_chain_polynomial(m: int, n: int) -> MultiPoly:
    """``sum_[P,Q] (number of labellings of Q) q^(longest chain from P to Q)``."""
    q = MultiPoly.var("q")
    if n == 0:
        return MultiPoly.const(1)
    L = cached_lattice(m, n)
    cache: Dict[str, List[Labelling]] = {}
    out = MultiPoly()
    for i in range(len(L)):
        for j, length in L.longest_chains_from(i).items():
            out = out + q ** length * len(_labellings(L.nodes[j], cache))
    return out


# ---------------------------------------------------------------------------
# tables


@dataclass
class CharacterRow:
    partition: Partition
    chi: int
    formula: int
    probe: Optional[int] = None

    @property
    def match(self) -> bool:
        return self.chi == self.formula and (self.probe is None or self.probe == self.chi)


@dataclass
class CharacterTable:
    m: int
    n: int
    rows: List[CharacterRow] = field(default_factory=list)

    @property
    def entries(self) -> Dict[Partition, int]:
        return {r.partition: r.chi for r in self.rows}

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows)

    def to_json(self) -> str:
        return json.dumps({
            "m": self.m,
            "n": self.n,
            "entries": [
                {"partition": list(r.partition.parts), "chi": r.chi, "formula": r.formula, "match": r.match}
                for r in self.rows
            ],
        }, indent=1)

    def to_text(self, sep: Optional[str] = None) -> str:
        header = ["partition", "chi", "formula", "match"]
        body = [[str(r.partition), str(r.chi), str(r.formula), "yes" if r.match else "NO"] for r in self.rows]
        if sep is not None:
            return "\n".join(sep.join(row) for row in [header] + body) + "\n"
        widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
        fmt = "  ".join("{:>%d}" % w for w in widths)
        return "\n".join(fmt.format(*row) for row in [header] + body) + "\n"


def character_table(m: int, n: int, *, probe_seed: Optional[int] = 0) -> CharacterTable:
    """Brute-force characters for every cycle type, with a random second
    representative as a class-function probe."""
    rng = random.Random(probe_seed)
    table = CharacterTable(m, n)
    for lam in partitions_of(n):
        chi = character(m, n, lam)
        probe = None
        if probe_seed is not None:
            probe = character(m, n, lam, Permutation.random_of_type(lam, rng))
        table.rows.append(CharacterRow(lam, chi, chi_formula(m, lam), probe))
    return table


def frobenius_from_characters(m: int, n: int) -> MultiPoly:
    """``sum_lambda chi(lambda) n!/z_lambda p_lambda`` using brute-force characters."""
    out = MultiPoly()
    for lam in partitions_of(n):
        out = out + p_lambda(lam) * mpq(character(m, n, lam) * factorial(n), z_lambda(lam))
    return out


__all__ = [
    "LabelledInterval", "act", "is_fixed", "a_stat", "fixes_labelling", "fixed_count",
    "character", "labelled_interval_count", "prime_character", "prime_counts",
    "parking_fixed_count", "brute_frobenius", "CharacterTable", "CharacterRow",
    "character_table", "frobenius_from_characters", "q_chain_polynomial",
]
