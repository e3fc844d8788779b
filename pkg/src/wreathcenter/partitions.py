"""
Integer partitions and plain permutations.

Partitions are stored as weakly decreasing tuples of positive parts. The
exponential notation ``(1^2,3,6^2)`` is only a display format.

>>> lam = Partition((1, 1, 3, 6, 6))
>>> lam
Partition((6, 6, 3, 1, 1))
>>> lam.exponential()
'(1^2,3,6^2)'
>>> proper_part(lam)
Partition((6, 6, 3))
>>> z(Partition((2, 1)))
2
"""

from __future__ import annotations

__all__ = [
    "Partition", "Permutation",
    "enumerate_partitions", "partition_count", "z", "union", "subtract",
    "proper_part", "cycle_type", "parse_partition",
]

import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotBijection, NotSubtractable, ParseError


@dataclass(frozen=True)
class Partition:
    """A partition, normalized to weakly decreasing order on construction."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> Partition:
        return cls(tuple(i for i, m in mult.items() for _ in range(m)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)

    def multiplicities(self) -> dict[int, int]:
        """Map ``i -> m_i`` for every part value that occurs."""
        return dict(sorted(Counter(self.parts).items()))

    def is_proper(self) -> bool:
        return 1 not in self.parts

    def exponential(self) -> str:
        if not self.parts:
            return "()"
        items = []
        for i, m in self.multiplicities().items():
            items.append(str(i) if m == 1 else f"{i}^{m}")
        return "(" + ",".join(items) + ")"

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"

    def __repr__(self):
        return f"Partition({self.parts!r})"


EMPTY = Partition()

_PARTITION_RE = re.compile(r"^\s*\[\s*(\d+(\s*,\s*\d+)*)?\s*\]\s*$")


def parse_partition(text: str) -> Partition:
    """Parse the bracketed text form, e.g. ``[3,1,1]`` or ``[]``."""
    if not _PARTITION_RE.match(text):
        raise ParseError(f"not a partition: {text!r}")
    body = text.strip()[1:-1].strip()
    parts = tuple(int(t) for t in body.split(",")) if body else ()
    if any(p < 1 for p in parts):
        raise ParseError(f"partition parts must be positive: {text!r}")
    if list(parts) != sorted(parts, reverse=True):
        raise ParseError(f"parts must be weakly decreasing: {text!r}")
    return Partition(parts)


def _rev_lex(m: int, largest: int):
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _rev_lex(m - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(m: int) -> tuple[Partition, ...]:
    """
    All partitions of `m` in reverse lexicographic order.

    >>> [str(p) for p in enumerate_partitions(3)]
    ['[3]', '[2,1]', '[1,1,1]']
    >>> enumerate_partitions(0)
    (Partition(()),)
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    return tuple(Partition(p) for p in _rev_lex(m, m))


def partition_count(m: int) -> int:
    return len(enumerate_partitions(m))


def z(lam: Partition) -> int:
    """The centralizer order prod_i i^{m_i} m_i!; ``m!/z(lam)`` is the class size in S_m."""
    out = 1
    for i, m in lam.multiplicities().items():
        out *= i**m * math.factorial(m)
    return out


def union(*lams: Partition) -> Partition:
    """Multiset union of parts: multiplicities add."""
    return Partition(tuple(p for lam in lams for p in lam.parts))


def subtract(lam: Partition, delta: Partition) -> Partition:
    have = Counter(lam.parts)
    take = Counter(delta.parts)
    for i, m in take.items():
        if have[i] < m:
            raise NotSubtractable(
                f"{lam} \\ {delta}: part {i} occurs {have[i]} times, need {m}"
            )
    return Partition(tuple((have - take).elements()))


def proper_part(lam: Partition) -> Partition:
    return Partition(tuple(p for p in lam.parts if p != 1))


@dataclass(frozen=True)
class Permutation:
    """
    A permutation of ``[m] = {1, ..., m}`` in one-line notation.

    Products compose right to left: ``(a * b)(i) == a(b(i))``.

    >>> s = Permutation.from_cycles(4, (1, 2, 3))
    >>> s.images
    (2, 3, 1, 4)
    >>> str(s * s)
    '(1,3,2)(4)'
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise NotBijection(f"{images} is not a bijection of [{len(images)}]")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def from_cycles(cls, m: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(1, m + 1))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least element, fixed points included."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start - 1]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out

    def cycle_notation(self, fixed_points: bool = True) -> str:
        cycs = [c for c in self.cycles() if fixed_points or len(c) > 1]
        if not cycs:
            return "1"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    def __str__(self):
        return self.cycle_notation()


def cycle_type(sigma: Permutation | Iterable[int]) -> Partition:
    """
    Cycle lengths of a permutation, as a partition of its degree.

    >>> cycle_type(Permutation.from_cycles(12, (2,4,1,6), (3,8,10,12), (7,9,11)))
    Partition((4, 4, 3, 1))
    """
    if not isinstance(sigma, Permutation):
        sigma = Permutation(tuple(sigma))
    return Partition(tuple(len(c) for c in sigma.cycles()))
