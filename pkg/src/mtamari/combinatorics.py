"""Ballot paths, Dyck words, partitions, permutations and labellings."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import factorial, prod
from typing import Iterator, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class BallotPath:
    """North/east path from ``(0,0)`` to ``(mn, n)`` weakly above ``x = my``."""

    m: int
    steps: str

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("slope m must be positive")
        x = y = 0
        for s in self.steps:
            if s == "N":
                y += 1
            elif s == "E":
                x += 1
                if x > self.m * y:
                    raise ValueError(f"{self.steps!r} goes below x = {self.m}y")
            else:
                raise ValueError(f"invalid step {s!r}")
        if x != self.m * y:
            raise ValueError(f"{self.steps!r} does not end on x = {self.m}y")

    @property
    def n(self) -> int:
        return self.steps.count("N")

    def __str__(self) -> str:
        return self.steps or "()"

    def __len__(self) -> int:
        return len(self.steps)

    @cached_property
    def contacts(self) -> int:
        return contacts(self)

    @cached_property
    def ascents(self) -> Tuple[int, ...]:
        return tuple(ascent_heights(self))

    @classmethod
    def parse(cls, m: int, word: str) -> "BallotPath":
        word = word.strip().upper()
        return cls(m, "" if word in ("", "()") else word)


@dataclass(frozen=True)
class DyckPath:
    """Up/down word; ``block_size`` > 1 asks for up-runs in blocks of that size."""

    steps: str
    block_size: int = 1

    def __post_init__(self):
        h = 0
        for s in self.steps:
            if s == "u":
                h += 1
            elif s == "d":
                h -= 1
                if h < 0:
                    raise ValueError(f"{self.steps!r} dips below zero")
            else:
                raise ValueError(f"invalid step {s!r}")
        if h:
            raise ValueError(f"{self.steps!r} does not return to zero")
        if self.block_size > 1 and not is_block_dyck(self.steps, self.block_size):
            raise ValueError(f"{self.steps!r} is not blocked by {self.block_size}")

    @property
    def size(self) -> int:
        return self.steps.count("u")

    def __str__(self) -> str:
        return self.steps or "()"


def is_block_dyck(word: str, m: int) -> bool:
    """True when up steps come in consecutive runs whose lengths are multiples of ``m``."""
    run = 0
    for s in word + "d":
        if s == "u":
            run += 1
        else:
            if run % m:
                return False
            run = 0
    return True


def enumerate_ballot_paths(m: int, n: int) -> List[BallotPath]:
    """All m-ballot paths of size ``n`` in lexicographic order of step words."""
    if m < 1:
        raise ValueError("slope m must be positive")
    if n < 0:
        raise ValueError("size must be nonnegative")
    out: List[str] = []
    buf: List[str] = []

    def rec(x: int, y: int):
        if y == n and x == m * n:
            out.append("".join(buf))
            return
        if x < m * y:
            buf.append("E")
            rec(x + 1, y)
            buf.pop()
        if y < n:
            buf.append("N")
            rec(x, y + 1)
            buf.pop()

    rec(0, 0)
    return [BallotPath(m, w) for w in out]


def contacts(P: BallotPath) -> int:
    """Vertices on ``x = my``, origin included."""
    x = y = 0
    c = 1
    for s in P.steps:
        if s == "N":
            y += 1
        else:
            x += 1
            if x == P.m * y:
                c += 1
    return c


def ascent_heights(P: BallotPath) -> List[int]:
    out = []
    run = 0
    for s in P.steps:
        if s == "N":
            run += 1
        elif run:
            out.append(run)
            run = 0
    if run:
        out.append(run)
    return out


def ballot_to_mdyck(P: BallotPath) -> DyckPath:
    word = "".join("u" * P.m if s == "N" else "d" for s in P.steps)
    return DyckPath(word, P.m)


def mdyck_to_ballot(D: DyckPath, m: Optional[int] = None) -> BallotPath:
    m = m or D.block_size
    if not is_block_dyck(D.steps, m):
        raise ValueError(f"{D.steps!r} is not blocked by {m}")
    word = D.steps.replace("u" * m, "N").replace("d", "E")
    return BallotPath(m, word)


def dyck_word(P: BallotPath) -> str:
    return ballot_to_mdyck(P).steps


# ---------------------------------------------------------------------------
# partitions and permutations


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError("parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def ell(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        return cls.of([int(t) for t in text.replace(" ", ",").split(",") if t])


def partitions_of(n: int, max_part: Optional[int] = None) -> List[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    max_part = n if max_part is None else max_part

    def rec(rest: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in rec(n, max_part)]


def z_lambda(lam: Partition) -> int:
    """Centralizer order ``prod_i i**a_i * a_i!``."""
    return prod(i ** a * factorial(a) for i, a in lam.multiplicities().items())


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[i-1]`` is the image of ``i``."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    @classmethod
    def canonical(cls, lam: Partition) -> "Permutation":
        """Cycles on consecutive integers, in the order of the parts."""
        cycles, start = [], 1
        for part in lam:
            cycles.append(list(range(start, start + part)))
            start += part
        return cls.from_cycles(lam.n, cycles)

    @classmethod
    def random_of_type(cls, lam: Partition, rng: random.Random) -> "Permutation":
        perm = list(range(1, lam.n + 1))
        rng.shuffle(perm)
        cycles, start = [], 0
        for part in lam:
            cycles.append(perm[start:start + part])
            start += part
        return cls.from_cycles(lam.n, cycles)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(self * other)(i) = self(other(i))``."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(1, self.n + 1):
            if i in seen:
                continue
            cyc = []
            j = i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return " ".join(map(str, self.images))


def cycle_type(sigma: Permutation) -> Partition:
    return Partition.of([len(c) for c in sigma.cycles()])


def all_permutations(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


# ---------------------------------------------------------------------------
# labellings


@dataclass(frozen=True)
class Labelling:
    """Labels of the north steps in path order, increasing along each ascent."""

    labels: Tuple[int, ...]

    def blocks(self, heights: Sequence[int]) -> List[Tuple[int, ...]]:
        out, i = [], 0
        for h in heights:
            out.append(self.labels[i:i + h])
            i += h
        return out

    def is_valid_for(self, heights: Sequence[int]) -> bool:
        if sorted(self.labels) != list(range(1, sum(heights) + 1)):
            return False
        return all(list(b) == sorted(b) for b in self.blocks(heights))


def enumerate_labellings(P: BallotPath) -> List[Labelling]:
    """Assign sorted label sets to ascents; ``n! / prod a_i!`` results."""
    heights = P.ascents
    n = P.n
    out: List[Labelling] = []

    def rec(k: int, remaining: Tuple[int, ...], acc: Tuple[int, ...]):
        if k == len(heights):
            out.append(Labelling(acc))
            return
        for chosen in combinations(remaining, heights[k]):
            rest = tuple(r for r in remaining if r not in chosen)
            rec(k + 1, rest, acc + chosen)

    rec(0, tuple(range(1, n + 1)), ())
    return out


def labelling_count(P: BallotPath) -> int:
    return factorial(P.n) // prod(factorial(a) for a in P.ascents)
