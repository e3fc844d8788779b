"""
Worked reference values for B(k, n), checked by ``wreathcenter verify-paper``.

Each check returns ``(name, passed, detail)``; :func:`run_all` runs the ten
of them in a fixed order.
"""

from __future__ import annotations

__all__ = ["CHECKS", "run_all", "PRODUCT_IDENTITIES"]

from .center import class_product
from .conjugacy import pad
from .wreath import (
    BlockPermutation, blocks_permutation, compose, parse_class_type, parse_one_line,
    phi, psi, restriction, type_of,
)

K3_N8 = BlockPermutation(3, parse_one_line(
    "12 10 11 20 21 19 8 7 9 1 2 3 16 18 17 15 14 13 5 4 6 22 23 24"
))
K2_N8 = BlockPermutation(2, parse_one_line("14 13 1 2 16 15 7 8 12 11 10 9 4 3 5 6"))
ALPHA = BlockPermutation(3, parse_one_line("12 10 11 5 6 4 8 7 9 15 13 14 16 18 17 3 2 1"))
BETA = BlockPermutation(3, parse_one_line("4 5 6 18 17 16 8 9 7 1 2 3 12 11 10 15 14 13"))
ALPHA_BETA = BlockPermutation(3, parse_one_line("5 6 4 1 2 3 7 9 8 12 10 11 14 13 15 17 18 16"))

# (k, x, y, {h: coefficient as a function of n}, n values); x, y, h proper families
PRODUCT_IDENTITIES = [
    (1, "{[1]:[2]}", "{[1]:[2]}",
     {"{}": lambda n: n * (n - 1) // 2, "{[1]:[3]}": lambda n: 3, "{[1]:[2,2]}": lambda n: 2},
     (4, 5, 6, 7)),
    (1, "{[1]:[2]}", "{[1]:[3]}",
     {"{[1]:[2]}": lambda n: 2 * (n - 2), "{[1]:[4]}": lambda n: 4, "{[1]:[3,2]}": lambda n: 1},
     (5, 6, 7)),
    (2, "{[2]:[2]}", "{[2]:[2]}",
     {"{}": lambda n: n * (n - 1), "{[2]:[2,2]}": lambda n: 2,
      "{[2]:[1,1]}": lambda n: 2, "{[1,1]:[3]}": lambda n: 3},
     (4, 5)),
    (3, "{[2,1]:[1]; [3]:[1]}", "{[3]:[1]}",
     {"{[2,1]:[1]; [3]:[1,1]}": lambda n: 2, "{[2,1]:[1]}": lambda n: 2 * (n - 1),
      "{[2,1]:[1]; [3]:[1]}": lambda n: 3},
     (3, 4)),
    (3, "{[2,1]:[1]; [3]:[1]}", "{[2,1]:[1]}",
     {"{[2,1]:[1,1]; [3]:[1]}": lambda n: 2, "{[3]:[1]}": lambda n: 3 * (n - 1),
      "{[2,1]:[1,1]}": lambda n: 4, "{[3]:[1,1]}": lambda n: 6},
     (3, 4)),
]


def _check_k3_type():
    t = type_of(K3_N8)
    ok = (t[(3,)].parts == (2, 2) and t[(2, 1)].parts == (2, 1) and t[(1, 1, 1)].parts == (1,))
    return "type extraction, k=3 n=8", ok, str(t)


def _check_blocks_perm():
    p = blocks_permutation(K3_N8)
    return "blocks permutation, k=3 n=8", str(p) == "(1,4)(2,7)(3)(5,6)(8)", str(p)


def _check_k2_type():
    t = type_of(K2_N8)
    ok = t[(1, 1)].parts == (3, 2, 1) and t[(2,)].parts == (2,)
    return "type extraction, k=2 n=8", ok, str(t)


def _check_restrictions():
    got = [restriction(ALPHA, i).cycle_notation(fixed_points=False) for i in range(1, 7)]
    want = ["(1,3)", "(1,2,3)", "(1,2)", "(1,3,2)", "(1,3,2)", "(2,3)"]
    return "normalized restrictions", got == want, " ".join(got)


def _check_isomorphism():
    ok = (
        str(psi(ALPHA)) == "(((1,3),(1,2,3),(1,2),(1,3,2),(1,3,2),(2,3)); (1,4,5,6)(2)(3))"
        and str(psi(BETA)) == "((1,1,(1,2,3),(1,3),(1,3),(1,3)); (1,2,6,5,4)(3))"
        and str(psi(ALPHA_BETA)) == "((1,(1,2,3),(2,3),(1,3,2),(1,2),(1,2,3)); (1,2)(3)(4)(5)(6))"
        and compose(ALPHA, BETA) == ALPHA_BETA
        and psi(ALPHA) * psi(BETA) == psi(ALPHA_BETA)
        and phi(psi(ALPHA)) == ALPHA and phi(psi(BETA)) == BETA
    )
    return "wreath coordinates of a product", ok, str(psi(ALPHA_BETA))


def check_identity(k, xs, ys, expected, ns):
    """Compare a full class-sum product against its stated coefficients at each n."""
    x, y = parse_class_type(xs, k), parse_class_type(ys, k)
    for n in ns:
        got = class_product(pad(x, n), pad(y, n))
        want = {pad(parse_class_type(h, k), n): f(n) for h, f in expected.items()}
        if got.terms != want:
            return False, f"n={n}: {got}"
    return True, f"n in {list(ns)}"


def _identity_check(i):
    k, xs, ys, expected, ns = PRODUCT_IDENTITIES[i]

    def run():
        ok, detail = check_identity(k, xs, ys, expected, ns)
        return f"class product k={k}: {xs} * {ys}", ok, detail
    return run


CHECKS = [
    _check_k3_type, _check_blocks_perm, _check_k2_type, _check_restrictions,
    _check_isomorphism,
] + [_identity_check(i) for i in range(len(PRODUCT_IDENTITIES))]


def run_all():
    return [check() for check in CHECKS]
