"""
Partitions and permutations
===========================

Conjugacy classes of the symmetric group are indexed by integer partitions.
This script builds a few partitions, enumerates all partitions of 6 and
checks that the class sizes m!/z_lambda add up to the group order.
"""

import math

from wreathcenter import (
    Partition, Permutation, cycle_type, enumerate_partitions, proper_part, union, z,
)

# Parts are stored in decreasing order regardless of input order.
lam = Partition((1, 3, 1, 2))
print("lambda =", lam, " exponential form:", lam.exponential())
print("proper part (parts of size 1 removed):", proper_part(lam))
print("union with [2]:", union(lam, Partition((2,))))

# %%
# Partitions of 6 come out in reverse lexicographic order.
parts = enumerate_partitions(6)
print(len(parts), "partitions of 6:", " ".join(str(p) for p in parts))

total = sum(math.factorial(6) // z(p) for p in parts)
print("sum of class sizes:", total, "== 6! ->", total == math.factorial(6))

# %%
# Permutations use one-line notation and compose right to left.
sigma = Permutation.from_cycles(6, (1, 2, 3), (4, 5))
tau = Permutation((2, 1, 3, 4, 5, 6))
print("sigma =", sigma.cycle_notation(), " type", cycle_type(sigma))
print("tau sigma tau^-1 =", (tau * sigma * tau.inverse()).cycle_notation())
