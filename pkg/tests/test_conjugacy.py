import inspect
import json
import math
from collections import Counter
from itertools import permutations

import pytest

from wreathcenter import (
    BlockPermutation, BudgetExceeded, ClassType, NotProper, Partition, TooSmall,
    WrongK, class_elements, class_record, class_size, class_size_k2, class_size_k3,
    cycle_type, enumerate_class_types, enumerate_partitions, extended_class_size,
    k2_view, k3_view, pad, parse_class_record, parse_class_type, representative,
    type_of,
)
from wreathcenter.conjugacy import _canonical_local
from wreathcenter.goldens import K2_N8, K3_N8

import oracles

P = Partition
T = parse_class_type


def as_scan(t):
    return oracles.freeze({rho.parts: part.parts for rho, part in t.items() if part})


def test_enumerate_class_types_k1_is_partitions():
    types = enumerate_class_types(1, 4)
    assert [t.slots[0] for t in types] == list(enumerate_partitions(4))


def test_enumerate_class_types_k2_n2():
    # direct double loop over pairs (lam, delta) with |lam| + |delta| = 2
    pairs = {
        (lam, delta)
        for a in range(3)
        for lam in enumerate_partitions(a)
        for delta in enumerate_partitions(2 - a)
    }
    types = enumerate_class_types(2, 2)
    assert len(types) == len(pairs) == 5
    assert {k2_view(t) for t in types} == pairs


def test_enumerate_class_types_k3_n1():
    types = enumerate_class_types(3, 1)
    assert len(types) == 3
    assert all(sum(1 for s in t.slots if s) == 1 and t.size == 1 for t in types)


@pytest.mark.parametrize("k,n", [(1, 6), (2, 4), (3, 3), (4, 2)])
def test_enumerate_class_types_unique_and_sized(k, n):
    types = enumerate_class_types(k, n)
    assert len(set(types)) == len(types)
    assert all(t.size == n and t.k == k for t in types)


def test_class_size_examples():
    assert class_size(T("{[3]:[2]}")) == 12
    assert class_size(T("{[1,1]:[1]; [2]:[2]}")) == 6
    for lam in enumerate_partitions(5):
        assert class_size(ClassType(1, (lam,))) == math.factorial(5) // math.prod(
            i**m * math.factorial(m) for i, m in lam.multiplicities().items()
        )


def test_class_size_examples_against_brute_force():
    sizes = oracles.brute_class_sizes(3, 2)
    assert sizes[oracles.freeze({(3,): (2,)})] == 12
    sizes = oracles.brute_class_sizes(2, 3)
    assert sizes[oracles.freeze({(1, 1): (1,), (2,): (2,)})] == 6
    sizes = oracles.brute_class_sizes(2, 2)
    assert sizes[oracles.freeze({(1, 1): (1,), (2,): (1,)})] == 2


@pytest.mark.parametrize("k,n", [(1, 4), (1, 5), (2, 2), (2, 3), (3, 2)])
def test_class_sizes_partition_the_group(k, n):
    brute = oracles.brute_class_sizes(k, n)
    types = enumerate_class_types(k, n)
    assert {as_scan(t) for t in types} == set(brute)
    for t in types:
        assert class_size(t) == brute[as_scan(t)]


@pytest.mark.parametrize("k,n", [(1, n) for n in range(9)] + [(2, n) for n in range(7)]
                         + [(3, n) for n in range(6)] + [(4, n) for n in range(4)])
def test_class_sizes_sum_to_order(k, n):
    assert sum(class_size(t) for t in enumerate_class_types(k, n)) == oracles.group_order(k, n)


def test_class_size_k2_examples():
    assert class_size_k2(P((3, 2, 1)), P((2,))) == 53760
    assert class_size_k2(P((1,) * 5), P()) == 1
    assert class_size_k2(P((1,)), P((1,))) == 2


def test_class_size_k3_examples():
    assert class_size_k3(P(), P(), P((2,))) == 12
    assert class_size_k3(P((1,) * 4), P(), P()) == 1
    a, b, c = P((1,)), P((2, 1)), P((2, 2))
    assert class_size_k3(a, b, c) == class_size(ClassType(3, (a, b, c)))


@pytest.mark.parametrize("n", range(7))
def test_special_formulas_agree_with_general(n):
    for t in enumerate_class_types(2, n):
        assert class_size_k2(*k2_view(t)) == class_size(t)
    for t in enumerate_class_types(3, n):
        assert class_size_k3(*k3_view(t)) == class_size(t)


def test_views():
    assert k3_view(type_of(K3_N8)) == (P((1,)), P((2, 1)), P((2, 2)))
    assert k2_view(type_of(K2_N8)) == (P((3, 2, 1)), P((2,)))
    assert k2_view(ClassType.identity(2, 3)) == (P((1, 1, 1)), P())
    with pytest.raises(WrongK):
        k2_view(ClassType.identity(3, 1))
    with pytest.raises(WrongK):
        k3_view(ClassType.identity(2, 1))


def test_pad_examples():
    assert pad(ClassType.identity(1, 0), 3) == ClassType(1, (P((1, 1, 1)),))
    assert pad(T("{[2]:[2]}"), 4) == T("{[1,1]:[1,1]; [2]:[2]}")
    x = T("{[1,1,1]:[2]; [3]:[1]}")
    assert pad(x, x.size) == x
    with pytest.raises(TooSmall):
        pad(x, 2)
    with pytest.raises(NotProper):
        pad(T("{[1,1]:[1]}"), 3)


def test_extended_class_size_examples():
    x = T("{[1]:[2]}")
    assert extended_class_size(x, 4) == 6 == oracles.sym_class_size((2, 1, 1))
    assert [extended_class_size(x, n) for n in range(2, 8)] == [n * (n - 1) // 2 for n in range(2, 8)]
    y = T("{[2]:[2]}")
    assert extended_class_size(y, 4) == 12 == 4 * 3
    assert extended_class_size(y, 2) == class_size(y)


def proper_families(k, max_size):
    for s in range(max_size + 1):
        for t in enumerate_class_types(k, s):
            if t.is_proper():
                yield t


@pytest.mark.parametrize("k", [1, 2, 3])
def test_extended_class_size_matches_padding(k):
    for x in proper_families(k, 4):
        for n in range(x.size, x.size + 5):
            assert extended_class_size(x, n) == class_size(pad(x, n))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_canonical_local_is_least_of_its_type(k):
    for rho in enumerate_partitions(k):
        least = next(
            p for p in permutations(range(k)) if cycle_type(tuple(v + 1 for v in p)) == rho
        )
        assert _canonical_local(rho) == least


def test_representative_examples():
    assert representative(ClassType.identity(3, 4)).is_identity()
    r = representative(T("{[3]:[2]}"))
    assert type_of(r) == T("{[3]:[2]}")
    assert r.images == (4, 5, 6, 2, 3, 1)
    assert representative(T("{[2]:[1]}")).images == (2, 1)


@pytest.mark.parametrize("k,n", [(1, 5), (2, 4), (3, 3), (4, 2)])
def test_representatives_have_their_type(k, n):
    for t in enumerate_class_types(k, n):
        r = representative(t)
        assert type_of(r) == t
        assert representative(t) == r


def test_class_elements_examples():
    assert list(class_elements(ClassType.identity(2, 3))) == [BlockPermutation.identity(2, 3)]
    assert len(list(class_elements(T("{[1,1]:[1]; [2]:[1]}")))) == 2
    x = T("{[3]:[2]}")
    generated = {g.images for g in class_elements(x)}
    filtered = {g for g in oracles.brute_group(3, 2)
                if oracles.freeze(oracles.scan_type(g, 3)) == as_scan(x)}
    assert generated == filtered and len(generated) == 12


@pytest.mark.parametrize("k,n", [(1, 5), (2, 2), (2, 3), (3, 2)])
def test_class_elements_equal_brute_force_filter(k, n):
    by_type = {}
    for g in oracles.brute_group(k, n):
        by_type.setdefault(oracles.freeze(oracles.scan_type(g, k)), set()).add(g)
    for t in enumerate_class_types(k, n):
        els = [g.images for g in class_elements(t)]
        assert len(els) == len(set(els)) == class_size(t)
        assert set(els) == by_type[as_scan(t)]


@pytest.mark.parametrize("k,n", [(2, 4), (3, 3), (4, 2)])
def test_class_elements_type_and_count(k, n):
    for t in enumerate_class_types(k, n):
        els = list(class_elements(t))
        assert len(els) == len(set(els)) == class_size(t)
        assert all(type_of(g) == t for g in els)


def test_class_elements_is_lazy_and_budgeted():
    x = pad(T("{[3]:[2]}"), 6)
    assert inspect.isgenerator(class_elements(x))
    with pytest.raises(BudgetExceeded):
        class_elements(x, budget=10)


def test_class_record_round_trip():
    t = type_of(K3_N8)
    rec = class_record(t)
    assert rec == {"k": 3, "n": 8,
                   "type": {"[1,1,1]": "[1]", "[2,1]": "[2,1]", "[3]": "[2,2]"},
                   "size": str(class_size(t))}
    assert parse_class_record(json.loads(json.dumps(rec))) == t


def test_type_counter_over_group_matches_sizes():
    counts = Counter(type_of(BlockPermutation(2, g)) for g in oracles.brute_group(2, 3))
    assert all(counts[t] == class_size(t) for t in enumerate_class_types(2, 3))
