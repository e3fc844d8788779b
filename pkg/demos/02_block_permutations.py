"""
Block permutations and wreath coordinates
=========================================

B(k, n) is the group of permutations of {1, ..., kn} that send each block
of k consecutive points onto another block. Every such permutation splits
into a permutation of the n blocks plus one local permutation of S_k per
block, which identifies B(k, n) with the wreath product S_k wr S_n.
"""

from wreathcenter import (
    BlockPermutation, blocks_permutation, compose, parse_one_line, phi, psi,
    restriction, type_of,
)

alpha = BlockPermutation(3, parse_one_line("12 10 11 5 6 4 8 7 9 15 13 14 16 18 17 3 2 1"))
beta = BlockPermutation(3, parse_one_line("4 5 6 18 17 16 8 9 7 1 2 3 12 11 10 15 14 13"))

print("alpha moves blocks as", blocks_permutation(alpha))
for i in range(1, 7):
    print(f"  local action on the block sent to block {i}:", restriction(alpha, i).cycle_notation())

# %%
# psi gives wreath coordinates and phi undoes it.
a, b = psi(alpha), psi(beta)
print("psi(alpha) =", a)
print("psi(beta)  =", b)
assert phi(a) == alpha and phi(b) == beta

# %%
# The coordinates multiply like the permutations do.
ab = compose(alpha, beta)
print("psi(alpha beta) =", psi(ab))
print("homomorphism holds:", a * b == psi(ab))

# %%
# The conjugacy type records, for each cycle of the blocks permutation,
# the cycle type of the product of local actions around it.
print("type(alpha beta) =", type_of(ab))
