"""
The block permutation group B(k, n): permutations of ``[kn]`` that map each
block ``{(i-1)k+1, ..., ik}`` onto a block. It is isomorphic to the wreath
product of S_k by S_n through :func:`psi` and :func:`phi`.

Conjugacy classes are labelled by a :class:`ClassType`, one partition per
partition of k. Each cycle of the induced block permutation, of length r,
carries a cycle product in S_k (the local actions composed once around the
cycle); that cycle contributes a part r to the slot of the cycle product's
cycle type.

>>> w = BlockPermutation(3, (1, 3, 2, 6, 5, 4))
>>> str(blocks_permutation(w))
'(1)(2)'
>>> str(type_of(w))
'{[2,1]:[1,1]}'
"""

from __future__ import annotations

__all__ = [
    "BlockPermutation", "WreathElement", "ClassType",
    "validate", "compose", "inverse", "blocks_permutation", "restriction",
    "psi", "phi", "wreath_multiply", "type_of", "conjugate", "extend",
    "enumerate_group", "group_order", "slot_order",
    "parse_one_line", "format_one_line", "parse_class_type",
    "DEFAULT_BUDGET",
]

import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations, product
from typing import Iterator, Mapping, Sequence

from .errors import (
    BudgetExceeded, DimensionMismatch, NotBijection, NotBlockPreserving,
    ParseError, ShrinkNotAllowed,
)
from .partitions import Partition, Permutation, enumerate_partitions, parse_partition

# visits of group elements allowed before enumeration refuses to start
DEFAULT_BUDGET = 10**8


@lru_cache(maxsize=None)
def slot_order(k: int) -> tuple[Partition, ...]:
    """Partitions of k in the order used for ClassType slots: ``(1^k)`` first, ``(k)`` last."""
    return tuple(reversed(enumerate_partitions(k)))


@lru_cache(maxsize=None)
def _slot_index(k: int) -> dict[tuple[int, ...], int]:
    return {rho.parts: i for i, rho in enumerate(slot_order(k))}


def _perm_cycle_type(g: Sequence[int]) -> tuple[int, ...]:
    # g is 0-based
    seen = [False] * len(g)
    lengths = []
    for s in range(len(g)):
        if seen[s]:
            continue
        r = 0
        j = s
        while not seen[j]:
            seen[j] = True
            j = g[j]
            r += 1
        lengths.append(r)
    lengths.sort(reverse=True)
    return tuple(lengths)


def _type_key(img: Sequence[int], k: int, n: int) -> tuple[tuple[int, int], ...]:
    """Sorted ``(slot, r)`` pairs of a 0-based image tuple; the fast form of :func:`type_of`."""
    slots = _slot_index(k)
    seen = bytearray(n)
    key = []
    for a in range(n):
        if seen[a]:
            continue
        pos = list(range(k))
        cur = a
        r = 0
        while True:
            seen[cur] = 1
            base = cur * k
            nxt = img[base] // k
            pos = [img[base + t] - nxt * k for t in pos]
            cur = nxt
            r += 1
            if cur == a:
                break
        key.append((slots[_perm_cycle_type(pos)], r))
    key.sort()
    return tuple(key)


@dataclass(frozen=True)
class BlockPermutation:
    """
    An element of B(k, n), in one-line notation over ``[kn]`` (1-based).

    Construction validates the bijection and block conditions.
    """

    k: int
    images: tuple[int, ...]

    def __post_init__(self):
        k = int(self.k)
        images = tuple(int(v) for v in self.images)
        if k < 1:
            raise ValueError("block size k must be positive")
        if len(images) % k:
            raise DimensionMismatch(f"length {len(images)} is not a multiple of k={k}")
        size = len(images)
        if sorted(images) != list(range(1, size + 1)):
            raise NotBijection(f"images are not a bijection of [{size}]")
        for r in range(size // k):
            targets = {(v - 1) // k for v in images[r * k:(r + 1) * k]}
            if len(targets) != 1:
                raise NotBlockPreserving(
                    f"block {r + 1} is not mapped onto a single block", block=r + 1
                )
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "images", images)

    @classmethod
    def _trusted(cls, k: int, images0: Sequence[int]) -> BlockPermutation:
        # skips validation; images0 is 0-based and known to be block preserving
        obj = object.__new__(cls)
        object.__setattr__(obj, "k", k)
        object.__setattr__(obj, "images", tuple(v + 1 for v in images0))
        return obj

    @classmethod
    def identity(cls, k: int, n: int) -> BlockPermutation:
        return cls._trusted(k, range(k * n))

    @property
    def n(self) -> int:
        return len(self.images) // self.k

    @cached_property
    def _img0(self) -> tuple[int, ...]:
        return tuple(v - 1 for v in self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: BlockPermutation) -> BlockPermutation:
        return compose(self, other)

    def as_permutation(self) -> Permutation:
        return Permutation(self.images)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def __str__(self):
        return format_one_line(self)


def validate(k: int, images: Sequence[int]) -> BlockPermutation:
    return BlockPermutation(k, tuple(images))


def _check_same(a: BlockPermutation, b: BlockPermutation):
    if a.k != b.k or a.n != b.n:
        raise DimensionMismatch(f"B({a.k},{a.n}) vs B({b.k},{b.n})")


def compose(a: BlockPermutation, b: BlockPermutation) -> BlockPermutation:
    """``(a∘b)(i) = a(b(i))``."""
    _check_same(a, b)
    ai = a._img0
    return BlockPermutation._trusted(a.k, [ai[j] for j in b._img0])


def _inverse0(img: Sequence[int]) -> list[int]:
    inv = [0] * len(img)
    for i, v in enumerate(img):
        inv[v] = i
    return inv


def inverse(a: BlockPermutation) -> BlockPermutation:
    return BlockPermutation._trusted(a.k, _inverse0(a._img0))


def conjugate(gamma: BlockPermutation, omega: BlockPermutation) -> BlockPermutation:
    """``gamma ∘ omega ∘ gamma^-1``."""
    _check_same(gamma, omega)
    g = gamma._img0
    ginv = _inverse0(g)
    w = omega._img0
    return BlockPermutation._trusted(gamma.k, [g[w[ginv[i]]] for i in range(len(g))])


def blocks_permutation(omega: BlockPermutation) -> Permutation:
    k = omega.k
    return Permutation(tuple(omega._img0[r * k] // k + 1 for r in range(omega.n)))


def restriction(omega: BlockPermutation, i: int) -> Permutation:
    """
    The normalized restriction ``omega_i``: the local action of omega on the
    block that lands on block i, read in block-relative coordinates 1..k.
    """
    k, n = omega.k, omega.n
    if not 1 <= i <= n:
        raise IndexError(f"block index {i} outside 1..{n}")
    src = blocks_permutation(omega).inverse()(i)
    base = k * (src - 1)
    return Permutation(tuple((omega.images[base + b] - 1) % k + 1 for b in range(k)))


@dataclass(frozen=True)
class WreathElement:
    """
    Wreath coordinates ``((sigma_1, ..., sigma_n); p)`` with sigma_i in S_k and p in S_n.

    Multiplication follows
    ``(sigma; p)(eps; q) = ((sigma_i eps_{p^-1(i)})_i; pq)``.
    """

    k: int
    locals: tuple[Permutation, ...]
    outer: Permutation

    def __post_init__(self):
        locals_ = tuple(
            s if isinstance(s, Permutation) else Permutation(tuple(s)) for s in self.locals
        )
        outer = self.outer if isinstance(self.outer, Permutation) else Permutation(tuple(self.outer))
        if len(locals_) != outer.degree:
            raise DimensionMismatch(f"{len(locals_)} local permutations for outer degree {outer.degree}")
        if any(s.degree != self.k for s in locals_):
            raise DimensionMismatch(f"every local permutation must have degree k={self.k}")
        object.__setattr__(self, "locals", locals_)
        object.__setattr__(self, "outer", outer)

    @classmethod
    def identity(cls, k: int, n: int) -> WreathElement:
        return cls(k, tuple(Permutation.identity(k) for _ in range(n)), Permutation.identity(n))

    @property
    def n(self) -> int:
        return self.outer.degree

    def __mul__(self, other: WreathElement) -> WreathElement:
        return wreath_multiply(self, other)

    def inverse(self) -> WreathElement:
        p = self.outer
        return WreathElement(
            self.k,
            tuple(self.locals[p(i) - 1].inverse() for i in range(1, self.n + 1)),
            p.inverse(),
        )

    def __str__(self):
        locs = ",".join(s.cycle_notation(fixed_points=False) for s in self.locals)
        return f"(({locs}); {self.outer.cycle_notation()})"


def wreath_multiply(x: WreathElement, y: WreathElement) -> WreathElement:
    if x.k != y.k or x.n != y.n:
        raise DimensionMismatch(f"S_{x.k} wr S_{x.n} vs S_{y.k} wr S_{y.n}")
    pinv = x.outer.inverse()
    locs = tuple(x.locals[i - 1] * y.locals[pinv(i) - 1] for i in range(1, x.n + 1))
    return WreathElement(x.k, locs, x.outer * y.outer)


def psi(omega: BlockPermutation) -> WreathElement:
    """``omega -> ((omega_1, ..., omega_n); p_omega)``."""
    k, n = omega.k, omega.n
    img = omega._img0
    p = [img[r * k] // k for r in range(n)]
    locs = [None] * n
    for a in range(n):
        base = a * k
        tgt = p[a] * k
        locs[p[a]] = Permutation(tuple(img[base + b] - tgt + 1 for b in range(k)))
    return WreathElement(k, tuple(locs), Permutation(tuple(v + 1 for v in p)))


def _phi0(k: int, locals0: Sequence[Sequence[int]], outer0: Sequence[int]) -> list[int]:
    # sigma(k*a + b) = k*p(a) + sigma_{p(a)}(b), all 0-based
    img = [0] * (k * len(outer0))
    for a, pa in enumerate(outer0):
        loc = locals0[pa]
        base = k * a
        tgt = k * pa
        for b in range(k):
            img[base + b] = tgt + loc[b]
    return img


def phi(w: WreathElement) -> BlockPermutation:
    locals0 = [tuple(v - 1 for v in s.images) for s in w.locals]
    outer0 = [v - 1 for v in w.outer.images]
    return BlockPermutation._trusted(w.k, _phi0(w.k, locals0, outer0))


@dataclass(frozen=True)
class ClassType:
    """
    A conjugacy class label: one partition per partition rho of k.

    ``slots[i]`` is the partition attached to ``slot_order(k)[i]``, so for
    k = 2 the slots read ``(x(1,1), x(2))`` and for k = 3
    ``(x(1,1,1), x(2,1), x(3))``.
    """

    k: int
    slots: tuple[Partition, ...]

    def __post_init__(self):
        slots = tuple(s if isinstance(s, Partition) else Partition(tuple(s)) for s in self.slots)
        if len(slots) != len(slot_order(self.k)):
            raise ValueError(
                f"k={self.k} needs {len(slot_order(self.k))} slots, got {len(slots)}"
            )
        object.__setattr__(self, "slots", slots)

    @classmethod
    def from_mapping(cls, k: int, mapping: Mapping) -> ClassType:
        """Build from ``{rho: partition}``; keys may be Partitions or tuples, missing slots are empty."""
        index = _slot_index(k)
        slots = [Partition()] * len(index)
        for rho, part in mapping.items():
            key = rho.parts if isinstance(rho, Partition) else Partition(tuple(rho)).parts
            if key not in index:
                raise ValueError(f"{key} is not a partition of {k}")
            slots[index[key]] = part if isinstance(part, Partition) else Partition(tuple(part))
        return cls(k, tuple(slots))

    @classmethod
    def identity(cls, k: int, n: int) -> ClassType:
        return cls.from_mapping(k, {(1,) * k: (1,) * n})

    @classmethod
    def _from_key(cls, k: int, key) -> ClassType:
        parts = [[] for _ in slot_order(k)]
        for s, r in key:
            parts[s].append(r)
        return cls(k, tuple(Partition(tuple(p)) for p in parts))

    def __getitem__(self, rho) -> Partition:
        key = rho.parts if isinstance(rho, Partition) else Partition(tuple(rho)).parts
        return self.slots[_slot_index(self.k)[key]]

    def items(self):
        return zip(slot_order(self.k), self.slots)

    @property
    def size(self) -> int:
        return sum(s.size for s in self.slots)

    @property
    def n(self) -> int:
        return self.size

    @property
    def fixed(self) -> Partition:
        """The slot of the trivial cycle type ``(1^k)``."""
        return self.slots[0]

    def is_proper(self) -> bool:
        return self.fixed.is_proper()

    @property
    def proper_size(self) -> int:
        """Number of blocks that are not fixed with trivial local action."""
        return self.size - self.fixed.multiplicity(1)

    @cached_property
    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((i, r) for i, s in enumerate(self.slots) for r in s.parts))

    def __str__(self):
        body = "; ".join(f"{rho}:{x}" for rho, x in self.items() if x)
        return "{" + body + "}"


def type_of(omega: BlockPermutation) -> ClassType:
    return ClassType._from_key(omega.k, _type_key(omega._img0, omega.k, omega.n))


def extend(omega: BlockPermutation, n_new: int) -> BlockPermutation:
    """Embed omega into B(k, n_new) by fixing every added point."""
    if n_new < omega.n:
        raise ShrinkNotAllowed(f"cannot extend B({omega.k},{omega.n}) to n={n_new}")
    return BlockPermutation._trusted(
        omega.k, omega._img0 + tuple(range(omega.k * omega.n, omega.k * n_new))
    )


def group_order(k: int, n: int) -> int:
    return math.factorial(k) ** n * math.factorial(n)


def enumerate_group(k: int, n: int, budget: int = DEFAULT_BUDGET) -> Iterator[BlockPermutation]:
    """
    Every element of B(k, n) exactly once, outer permutation rank first, then
    local permutation ranks, each in lexicographic order.
    """
    order = group_order(k, n)
    if order > budget:
        raise BudgetExceeded(f"|B({k},{n})| = {order} exceeds budget {budget}", limit=budget)
    return _enumerate_group(k, n)


def _enumerate_group(k, n):
    local_perms = list(permutations(range(k)))
    for outer in permutations(range(n)):
        for locs in product(local_perms, repeat=n):
            yield BlockPermutation._trusted(k, _phi0(k, locs, outer))


def format_one_line(omega: BlockPermutation) -> str:
    return " ".join(map(str, omega.images))


def parse_one_line(text: str) -> tuple[int, ...]:
    tokens = text.replace(",", " ").split()
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise ParseError(f"not a one-line permutation: {text!r}") from None


_ENTRY_RE = re.compile(r"^\s*(\[[^\]]*\])\s*:\s*(\[[^\]]*\])\s*$")


def parse_class_type(text: str, k: int | None = None) -> ClassType:
    """
    Parse the text form ``{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}``.

    Omitted slots are empty. ``k`` is inferred from the keys when not given;
    the empty family ``{}`` needs an explicit k.
    """
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ParseError(f"class type must be enclosed in braces: {text!r}")
    body = s[1:-1].strip()
    mapping = {}
    if body:
        for entry in body.split(";"):
            m = _ENTRY_RE.match(entry)
            if not m:
                raise ParseError(f"bad class type entry {entry!r}")
            rho = parse_partition(m.group(1))
            if rho.parts in mapping:
                raise ParseError(f"duplicate slot {rho}")
            mapping[rho.parts] = parse_partition(m.group(2))
    sizes = {sum(rho) for rho in mapping}
    if k is None:
        if len(sizes) != 1:
            raise ParseError(f"cannot infer k from {text!r}")
        k = sizes.pop()
    elif sizes - {k}:
        raise ParseError(f"slot keys of {text!r} are not partitions of k={k}")
    return ClassType.from_mapping(k, mapping)
