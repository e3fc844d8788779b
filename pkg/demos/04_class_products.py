"""
Products of class sums
======================

Class sums span the center of the group algebra, so the product of two of
them is again a combination of class sums. The coefficients count ways of
writing a fixed element of the target class as a product.
"""

from wreathcenter import class_product, class_size, pad, parse_class_type, structure_coefficient

# In S_n (k = 1) the square of the transposition class is the classic example.
for n in (4, 5, 6):
    t = pad(parse_class_type("{[1]:[2]}"), n)
    print(f"n={n}:", class_product(t, t))

# %%
# The same in B(3, n) for two small classes.
x0 = parse_class_type("{[2,1]:[1]; [3]:[1]}")
y0 = parse_class_type("{[3]:[1]}")
for n in (3, 4, 5):
    x, y = pad(x0, n), pad(y0, n)
    e = class_product(x, y)
    print(f"\nn={n}:")
    for z, c in e.terms.items():
        print(f"  {c:3} x C{z}")
    print("  mass check:", e.mass() == class_size(x) * class_size(y))

# %%
# A single coefficient can be requested directly.
x, y = pad(x0, 4), pad(y0, 4)
z = pad(parse_class_type("{[2,1]:[1]}"), 4)
print("\nsingle coefficient:", structure_coefficient(x, y, z))
