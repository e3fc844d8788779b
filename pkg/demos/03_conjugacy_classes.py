"""
Conjugacy classes of B(k, n)
============================

A class is labelled by a family of partitions indexed by the partitions of
k. Here we list the classes of B(2, 3), compare sizes against a direct
count over the group and generate one class element by element.
"""

from collections import Counter

from wreathcenter import (
    class_elements, class_size, enumerate_class_types, enumerate_group,
    extended_class_size, pad, parse_class_type, representative, type_of,
)

k, n = 2, 3
types = enumerate_class_types(k, n)
counted = Counter(type_of(g) for g in enumerate_group(k, n))

print(f"{len(types)} classes in B({k},{n})")
for x in types:
    print(f"  {str(x):32} size {class_size(x):3}  counted {counted[x]:3}")

# %%
# Class elements are produced lazily without touching the rest of the group.
x = parse_class_type("{[3]:[2]}")
print("representative of", x, "is", representative(x))
print("all", class_size(x), "elements:")
for g in class_elements(x):
    print("   ", g)

# %%
# A proper family (no fixed blocks with trivial local action) padded to
# larger n gives a sequence of classes with polynomial sizes.
y = parse_class_type("{[2]:[2]}")
for m in range(2, 7):
    print(f"n={m}: {pad(y, m)} has {extended_class_size(y, m)} elements")
