"""The m-Tamari order on ballot paths: covers, closure, intervals, chains."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterator, List, Tuple

from .combinatorics import (
    BallotPath,
    DyckPath,
    ballot_to_mdyck,
    enumerate_ballot_paths,
    is_block_dyck,
    mdyck_to_ballot,
)

DEFAULT_NODE_LIMIT = 50_000


class SizeGuardError(RuntimeError):
    """Requested structure exceeds the configured size bound."""


class LatticeError(RuntimeError):
    """Meet or join failed to exist."""


def _cover_words(word: str, m: int) -> List[str]:
    out = []
    for i in range(len(word) - 1):
        if word[i] != "E" or word[i + 1] != "N":
            continue
        # shortest factor from i+1 returning to its starting line
        d = 0
        j = i + 1
        while True:
            d += m if word[j] == "N" else -1
            if d == 0:
                break
            j += 1
        out.append(word[:i] + word[i + 1:j + 1] + "E" + word[j + 1:])
    return out


def covers(P: BallotPath) -> List[BallotPath]:
    """Paths covering ``P``: swap an east step with the excursion that follows it."""
    return [BallotPath(P.m, w) for w in _cover_words(P.steps, P.m)]


def ballot_count(m: int, n: int) -> int:
    return comb((m + 1) * n, n) // (m * n + 1)


@dataclass(frozen=True)
class Interval:
    lower: BallotPath
    upper: BallotPath

    @property
    def n(self) -> int:
        return self.upper.n

    def __str__(self) -> str:
        return f"[{self.lower}, {self.upper}]"


def _north_index_sum(word: str) -> int:
    return sum(i for i, s in enumerate(word) if s == "N")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class TamariLattice:
    """Nodes in lexicographic order with up- and down-sets stored as int bitsets."""

    def __init__(self, m: int, n: int, nodes: List[BallotPath]):
        self.m = m
        self.n = n
        self.nodes = nodes
        self.index: Dict[str, int] = {P.steps: i for i, P in enumerate(nodes)}
        self.cover_edges: List[List[int]] = [
            [self.index[w] for w in _cover_words(P.steps, m)] for P in nodes
        ]
        self.cover_down: List[List[int]] = [[] for _ in nodes]
        for i, ups in enumerate(self.cover_edges):
            for j in ups:
                self.cover_down[j].append(i)
        # covers move an N step left, so the N-index sum strictly drops
        self.topo = sorted(range(len(nodes)), key=lambda i: -_north_index_sum(nodes[i].steps))
        up = [0] * len(nodes)
        for i in reversed(self.topo):
            mask = 1 << i
            for j in self.cover_edges[i]:
                mask |= up[j]
            up[i] = mask
        down = [0] * len(nodes)
        for i in self.topo:
            mask = 1 << i
            for j in self.cover_down[i]:
                mask |= down[j]
            down[i] = mask
        self.up = up
        self.down = down

    def __len__(self) -> int:
        return len(self.nodes)

    def _idx(self, P) -> int:
        if isinstance(P, int):
            return P
        key = P.steps if isinstance(P, BallotPath) else P
        return self.index[key]

    @property
    def bottom(self) -> BallotPath:
        return self.nodes[self.topo[0]]

    @property
    def top(self) -> BallotPath:
        return self.nodes[self.topo[-1]]

    def leq(self, P, Q) -> bool:
        return bool(self.up[self._idx(P)] >> self._idx(Q) & 1)

    def meet(self, P, Q) -> BallotPath:
        common = self.down[self._idx(P)] & self.down[self._idx(Q)]
        for k in _bits(common):
            if self.down[k] == common:
                return self.nodes[k]
        raise LatticeError(f"no meet for {P}, {Q}")

    def join(self, P, Q) -> BallotPath:
        common = self.up[self._idx(P)] & self.up[self._idx(Q)]
        for k in _bits(common):
            if self.up[k] == common:
                return self.nodes[k]
        raise LatticeError(f"no join for {P}, {Q}")

    def interval_pairs(self) -> Iterator[Tuple[int, int]]:
        for i in range(len(self.nodes)):
            for j in _bits(self.up[i]):
                yield i, j

    def interval_count(self) -> int:
        return sum(bin(u).count("1") for u in self.up)

    def lowers_of(self, Q) -> List[int]:
        return list(_bits(self.down[self._idx(Q)]))

    def longest_chain(self, P, Q) -> int:
        i, j = self._idx(P), self._idx(Q)
        if not self.up[i] >> j & 1:
            raise ValueError(f"{self.nodes[i]} is not below {self.nodes[j]}")
        inside = self.up[i] & self.down[j]
        best = {i: 0}
        for k in self.topo:
            if not inside >> k & 1 or k not in best:
                continue
            for c in self.cover_edges[k]:
                if inside >> c & 1 and best.get(c, -1) < best[k] + 1:
                    best[c] = best[k] + 1
        return best[j]

    def longest_chains_from(self, P) -> Dict[int, int]:
        """Longest chain length from ``P`` to every element above it."""
        i = self._idx(P)
        best = {i: 0}
        for k in self.topo:
            if k not in best:
                continue
            for c in self.cover_edges[k]:
                if best.get(c, -1) < best[k] + 1:
                    best[c] = best[k] + 1
        return best

    def check_lattice(self) -> bool:
        """Every pair has a meet and a join, and absorption holds."""
        N = len(self.nodes)
        for a in range(N):
            for b in range(a, N):
                mt = self._idx(self.meet(a, b))
                jn = self._idx(self.join(a, b))
                if self._idx(self.join(a, mt)) != a or self._idx(self.meet(a, jn)) != a:
                    return False
        return True

    def to_dot(self) -> str:
        lines = [f'digraph "tamari_m{self.m}_n{self.n}" {{', "  rankdir=BT;"]
        for P in self.nodes:
            lines.append(f'  "{P}";')
        for i, ups in enumerate(self.cover_edges):
            for j in ups:
                lines.append(f'  "{self.nodes[i]}" -> "{self.nodes[j]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def intervals_json(self) -> str:
        data = {
            "m": self.m,
            "n": self.n,
            "intervals": [[str(self.nodes[i]), str(self.nodes[j])] for i, j in self.interval_pairs()],
        }
        return json.dumps(data, indent=1)


def build_lattice(m: int, n: int, *, force: bool = False,
                  node_limit: int = DEFAULT_NODE_LIMIT) -> TamariLattice:
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    size = ballot_count(m, n)
    if size > node_limit and not force:
        raise SizeGuardError(
            f"lattice for m={m}, n={n} has {size} nodes (limit {node_limit}); pass force to override")
    return TamariLattice(m, n, enumerate_ballot_paths(m, n))


_CACHE: Dict[Tuple[int, int], TamariLattice] = {}


def cached_lattice(m: int, n: int) -> TamariLattice:
    key = (m, n)
    if key not in _CACHE:
        _CACHE[key] = build_lattice(m, n)
    return _CACHE[key]


def enumerate_intervals(L: TamariLattice) -> List[Interval]:
    return [Interval(L.nodes[i], L.nodes[j]) for i, j in L.interval_pairs()]


def longest_chain(L: TamariLattice, P, Q) -> int:
    return L.longest_chain(P, Q)


def embed_check(m: int, n: int) -> bool:
    """Blowing north steps up into ``m`` up steps is an order isomorphism
    onto the Dyck paths of size ``mn`` above ``(u^m d^m)^n``."""
    Lm = build_lattice(m, n)
    L1 = build_lattice(1, m * n)
    image = [ballot_to_mdyck(P).steps.replace("u", "N").replace("d", "E") for P in Lm.nodes]
    idx = [L1.index[w] for w in image]
    base = L1.index[("N" * m + "E" * m) * n]
    above = {L1.nodes[k].steps for k in _bits(L1.up[base])}
    blocked = {w for w in above if is_block_dyck(w.replace("N", "u").replace("E", "d"), m)}
    if set(image) != above or blocked != above:
        return False
    for a in range(len(Lm)):
        for b in range(len(Lm)):
            if Lm.leq(a, b) != L1.leq(idx[a], idx[b]):
                return False
    return True


# ---------------------------------------------------------------------------
# decomposition of Dyck intervals


@dataclass(frozen=True)
class DyckInterval:
    lower: str
    upper: str

    @property
    def size(self) -> int:
        return self.upper.count("u")


@dataclass(frozen=True)
class PointedInterval:
    interval: DyckInterval
    split: int

    def __post_init__(self):
        low = self.interval.lower
        if not 0 <= self.split <= len(low) or _height(low[: self.split]) != 0:
            raise ValueError("split must be a contact of the lower path")

    @property
    def proper(self) -> bool:
        return self.split != 0


def _height(word: str) -> int:
    return word.count("u") - word.count("d")


def first_return(word: str) -> int:
    """Length of the prefix ending at the first return to height 0."""
    h = 0
    for i, s in enumerate(word):
        h += 1 if s == "u" else -1
        if h == 0:
            return i + 1
    raise ValueError("empty or unbalanced word")


def dyck_contacts(word: str) -> int:
    h, c = 0, 1
    for s in word:
        h += 1 if s == "u" else -1
        if h == 0:
            c += 1
    return c


def decompose(I: DyckInterval) -> Tuple[PointedInterval, DyckInterval]:
    P, Q = I.lower, I.upper
    if not Q:
        raise ValueError("cannot decompose the empty interval")
    r = first_return(Q)
    Q1, Q2 = Q[1:r - 1], Q[r:]
    P1, P2 = P[:r], P[r:]
    if _height(P1) != 0:
        raise ValueError("lower path is not below the upper path")
    s = first_return(P1)
    left, right = P1[1:s - 1], P1[s:]
    return PointedInterval(DyckInterval(left + right, Q1), len(left)), DyckInterval(P2, Q2)


def compose(I1: PointedInterval, I2: DyckInterval) -> DyckInterval:
    low, k = I1.interval.lower, I1.split
    return DyckInterval("u" + low[:k] + "d" + low[k:] + I2.lower, "u" + I1.interval.upper + "d" + I2.upper)


def dyck_interval(I: Interval) -> DyckInterval:
    return DyckInterval(ballot_to_mdyck(I.lower).steps, ballot_to_mdyck(I.upper).steps)


def ballot_interval(D: DyckInterval, m: int) -> Interval:
    return Interval(mdyck_to_ballot(DyckPath(D.lower), m), mdyck_to_ballot(DyckPath(D.upper), m))


def _as_ballot_word(dyck: str) -> str:
    return dyck.replace("u", "N").replace("d", "E")


def _is_dyck_interval(D: DyckInterval) -> bool:
    L = cached_lattice(1, D.size)
    return L.leq(_as_ballot_word(D.lower), _as_ballot_word(D.upper))


@dataclass
class DecompositionReport:
    m: int
    n: int
    intervals: int = 0
    roundtrip: bool = True
    components_valid: bool = True
    contacts_identity: bool = True
    injective: bool = True
    counts_match: bool = True

    @property
    def ok(self) -> bool:
        return (self.roundtrip and self.components_valid and self.contacts_identity
                and self.injective and self.counts_match)


def decomposition_check(m: int, n: int) -> DecompositionReport:
    """Round trip, interval components and contact bookkeeping on every
    nonempty interval of the m-lattice, viewed as Dyck intervals of size ``mn``.

    For ``m = 1`` the interval count is also checked against the number of
    (pointed interval, interval) pairs, which together with injectivity makes
    the decomposition a bijection.
    """
    rep = DecompositionReport(m, n)
    if n == 0:
        return rep
    L = cached_lattice(m, n)
    seen = set()
    for I in enumerate_intervals(L):
        D = dyck_interval(I)
        rep.intervals += 1
        pointed, rest = decompose(D)
        if compose(pointed, rest) != D:
            rep.roundtrip = False
        if not (_is_dyck_interval(pointed.interval) and _is_dyck_interval(rest)):
            rep.components_valid = False
        right = pointed.interval.lower[pointed.split:]
        if dyck_contacts(D.lower) - 1 != (dyck_contacts(right) - 1) + dyck_contacts(rest.lower):
            rep.contacts_identity = False
        key = (pointed, rest)
        if key in seen:
            rep.injective = False
        seen.add(key)
    if m == 1:
        total = 0
        for a in range(n):
            pointed = sum(dyck_contacts(_dyck(L1.nodes[i])) for L1 in [cached_lattice(1, a)]
                          for i, _ in L1.interval_pairs())
            total += pointed * cached_lattice(1, n - 1 - a).interval_count()
        rep.counts_match = total == rep.intervals
    return rep


def _dyck(P: BallotPath) -> str:
    return ballot_to_mdyck(P).steps
