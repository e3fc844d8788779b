"""
Conjugacy classes of B(k, n): labels, sizes, padded (extended) classes,
canonical representatives and direct generation of class elements.

>>> from wreathcenter.wreath import parse_class_type
>>> class_size(parse_class_type("{[3]:[2]}"))
12
>>> x = parse_class_type("{[2]:[2]}")
>>> str(pad(x, 4)), extended_class_size(x, 4)
('{[1,1]:[1,1]; [2]:[2]}', 12)
"""

from __future__ import annotations

__all__ = [
    "enumerate_class_types", "class_size", "class_size_k2", "class_size_k3",
    "pad", "extended_class_size", "representative", "class_elements",
    "k2_view", "k3_view", "class_record", "parse_class_record",
]

import math
from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .errors import BudgetExceeded, NotProper, TooSmall, WrongK
from .partitions import Partition, enumerate_partitions, parse_partition, union, z
from .wreath import (
    DEFAULT_BUDGET, BlockPermutation, ClassType, _perm_cycle_type, slot_order,
)


def _size_vectors(n: int, slots: int):
    # compositions of n into `slots` nonnegative parts, first slot largest first
    if slots == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _size_vectors(n - first, slots - 1):
            yield (first,) + rest


def enumerate_class_types(k: int, n: int) -> list[ClassType]:
    """
    Every class label of B(k, n), each once.

    Order: slot-size vectors with x(1^k) largest first, then each slot's
    partitions in reverse lexicographic order.

    >>> [str(x) for x in enumerate_class_types(2, 1)]
    ['{[1,1]:[1]}', '{[2]:[1]}']
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    out = []
    nslots = len(slot_order(k))
    for sizes in _size_vectors(n, nslots):
        for slots in product(*(enumerate_partitions(s) for s in sizes)):
            out.append(ClassType(k, slots))
    return out


def class_size(x: ClassType) -> int:
    k, n = x.k, x.size
    denom = 1
    for rho, part in x.items():
        denom *= z(part) * z(rho) ** part.length
    num = math.factorial(n) * math.factorial(k) ** n
    q, r = divmod(num, denom)
    assert r == 0, f"class size of {x} is not integral"
    return q


def class_size_k2(lam: Partition, delta: Partition) -> int:
    """Hyperoctahedral class size for the pair (x(1,1), x(2)) = (lam, delta)."""
    n = lam.size + delta.size
    return (2**n * math.factorial(n)) // (
        2 ** (lam.length + delta.length) * z(lam) * z(delta)
    )


def class_size_k3(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Class size for k = 3 with (x(1,1,1), x(2,1), x(3)) = (alpha, beta, gamma)."""
    n = alpha.size + beta.size + gamma.size
    return (
        2 ** (n - alpha.length - beta.length)
        * 3 ** (n - alpha.length - gamma.length)
        * math.factorial(n)
        // (z(alpha) * z(beta) * z(gamma))
    )


def _require_proper(x: ClassType):
    if not x.is_proper():
        raise NotProper(f"{x} is not proper: the (1^{x.k}) slot has a part equal to 1")


def pad(x: ClassType, n: int) -> ClassType:
    """The label of C_x(n): add ``n - |x|`` parts 1 to the x(1^k) slot of a proper family."""
    _require_proper(x)
    if n < x.size:
        raise TooSmall(f"n={n} is smaller than |x|={x.size}")
    return ClassType(x.k, (union(x.fixed, Partition((1,) * (n - x.size))),) + x.slots[1:])


def extended_class_size(x: ClassType, n: int) -> int:
    """``|C_x(n)|`` for a proper family x, evaluated without padding."""
    _require_proper(x)
    k, n0 = x.k, x.size
    if n < n0:
        raise TooSmall(f"n={n} is smaller than |x|={n0}")
    denom = z(x.fixed) * math.factorial(n - n0)
    for rho, part in list(x.items())[1:]:
        denom *= z(part) * z(rho) ** part.length
    num = math.factorial(n) * math.factorial(k) ** (n0 - x.fixed.length)
    q, r = divmod(num, denom)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def _canonical_local(rho: Partition) -> tuple[int, ...]:
    # consecutive cycles, shortest first; the lexicographically least one-line
    # permutation of cycle type rho
    img = []
    start = 0
    for r in sorted(rho.parts):
        img.extend(range(start + 1, start + r))
        img.append(start)
        start += r
    return tuple(img)


def representative(x: ClassType) -> BlockPermutation:
    """
    A canonical element of type x.

    Slots are filled in slot order and parts in decreasing order, each part r
    taking the next r consecutive blocks as a block cycle ``b -> b+1 -> ... -> b``.
    Local actions are trivial except on the step closing the cycle, which
    carries the least permutation of cycle type rho.
    """
    k = x.k
    img = []
    block = 0
    for rho, part in x.items():
        closing = _canonical_local(rho)
        for r in part.parts:
            for j in range(r):
                src = block + j
                if j < r - 1:
                    img.extend(k * (src + 1) + b for b in range(k))
                else:
                    img.extend(k * block + closing[b] for b in range(k))
            block += r
    return BlockPermutation._trusted(k, img)


@lru_cache(maxsize=None)
def _locals_by_slot(k: int):
    sk = list(permutations(range(k)))
    order = {rho.parts: i for i, rho in enumerate(slot_order(k))}
    by_slot = [[] for _ in order]
    for g in sk:
        by_slot[order[_perm_cycle_type(g)]].append(g)
    return sk, by_slot


def _class_images(x: ClassType) -> Iterator[tuple[int, ...]]:
    """
    0-based image tuples of every element of type x.

    Each block cycle is rooted at its least unused block, so every
    (block permutation, slot assignment) pair is produced once. Along a cycle
    ``c_0 -> ... -> c_{r-1} -> c_0`` the first r-1 local steps are free and the
    closing step is solved so the cycle product has the prescribed type.
    """
    k, n = x.k, x.size
    sk, by_slot = _locals_by_slot(k)
    ident = tuple(range(k))
    remaining = Counter(x.key)
    used = [False] * n
    img = [0] * (k * n)

    def place(lo):
        a = lo
        while a < n and used[a]:
            a += 1
        if a == n:
            yield tuple(img)
            return
        used[a] = True
        for s, r in sorted(remaining):
            if not remaining[(s, r)]:
                continue
            remaining[(s, r)] -= 1
            free = [b for b in range(a + 1, n) if not used[b]]
            for rest in permutations(free, r - 1):
                for b in rest:
                    used[b] = True
                cyc = (a,) + rest
                for taus in product(sk, repeat=r - 1):
                    h = ident
                    for t in taus:
                        h = tuple(t[v] for v in h)
                    hinv = [0] * k
                    for i, v in enumerate(h):
                        hinv[v] = i
                    for j in range(r - 1):
                        src, dst, tau = k * cyc[j], k * cyc[j + 1], taus[j]
                        for b in range(k):
                            img[src + b] = dst + tau[b]
                    src, dst = k * cyc[-1], k * a
                    for g in by_slot[s]:
                        for b in range(k):
                            img[src + b] = dst + g[hinv[b]]
                        yield from place(a + 1)
                for b in rest:
                    used[b] = False
            remaining[(s, r)] += 1
        used[a] = False

    return place(0)


def class_elements(x: ClassType, budget: int = DEFAULT_BUDGET) -> Iterator[BlockPermutation]:
    """Stream every element of type x without touching the rest of the group."""
    size = class_size(x)
    if size > budget:
        raise BudgetExceeded(f"|C_x| = {size} exceeds budget {budget}", limit=budget)
    k = x.k
    return (BlockPermutation._trusted(k, im) for im in _class_images(x))


def k2_view(x: ClassType) -> tuple[Partition, Partition]:
    if x.k != 2:
        raise WrongK(f"pair view needs k=2, got k={x.k}")
    return x.slots[0], x.slots[1]


def k3_view(x: ClassType) -> tuple[Partition, Partition, Partition]:
    if x.k != 3:
        raise WrongK(f"triple view needs k=3, got k={x.k}")
    return x.slots[0], x.slots[1], x.slots[2]


def class_record(x: ClassType) -> dict:
    """JSON-ready record; the size is a decimal string."""
    return {
        "k": x.k,
        "n": x.size,
        "type": {str(rho): str(part) for rho, part in x.items() if part},
        "size": str(class_size(x)),
    }


def parse_class_record(record: dict) -> ClassType:
    k = int(record["k"])
    mapping = {parse_partition(rho): parse_partition(p) for rho, p in record["type"].items()}
    x = ClassType.from_mapping(k, mapping)
    if x.size != int(record["n"]):
        raise ValueError(f"record n={record['n']} disagrees with |x|={x.size}")
    return x
