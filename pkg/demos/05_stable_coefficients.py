"""
Coefficients as polynomials in n
================================

Fix proper families x, y and h. The coefficient of C_h(n) in C_x(n) C_y(n)
is a polynomial in n. We fit it exactly over the rationals on a few values
of n and confirm the fit on values held back from the interpolation.
"""

from wreathcenter import interpolate, polynomiality_report, parse_class_type as T

# Newton interpolation is exact over Fraction.
print("through (4,12), (5,20), (6,30):", interpolate([(4, 12), (5, 20), (6, 30)]))

cases = [
    ("k=1", T("{[1]:[2]}"), T("{[1]:[2]}"), T("{}", 1)),
    ("k=2", T("{[2]:[2]}"), T("{[2]:[2]}"), T("{}", 2)),
    ("k=3", T("{[2,1]:[1]; [3]:[1]}"), T("{[2,1]:[1]}"), T("{[3]:[1]}")),
]
for label, x, y, h in cases:
    rep = polynomiality_report(x, y, h)
    print(f"\n{label}: x={x} y={y} h={h}")
    print("  values   ", [(n, int(c)) for n, c in rep.points])
    print("  fit      ", rep.poly, f"(degree {rep.degree}, bound {rep.bound})")
    print("  falling  ", [str(c) for c in rep.falling_coefficients], "in powers (n-|h|)_j")
    print("  holdouts exact:", rep.holdout_exact, " nonnegative:", rep.nonnegative)
