"""
Exact univariate polynomials over the rationals and Newton interpolation.

>>> p = interpolate([(4, 12), (5, 20), (6, 30)])
>>> str(p)
'n^2 - n'
>>> p.falling_basis(0)
[Fraction(0, 1), Fraction(0, 1), Fraction(1, 1)]
"""

from __future__ import annotations

__all__ = ["RationalPolynomial", "interpolate", "falling_factorial"]

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .errors import DuplicateAbscissa


@dataclass(frozen=True)
class RationalPolynomial:
    """Coefficients in ascending degree, trailing zeros stripped."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coefficients, other.coefficients
        m = max(len(a), len(b))
        return RationalPolynomial(tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)
        ))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coefficients

    def falling_basis(self, shift: int = 0) -> list[Fraction]:
        """
        Coefficients ``c_j`` with ``p(n) = sum_j c_j (n - shift)(n - shift - 1)...(n - shift - j + 1)``,
        read off the forward differences of p at ``shift``.
        """
        d = self.degree
        if d < 0:
            return []
        vals = [self(shift + i) for i in range(d + 1)]
        out = []
        for j in range(d + 1):
            out.append(vals[0] / factorial(j))
            vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
        return out

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if i == 0 else ("n" if i == 1 else f"n^{i}")
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(v) -> RationalPolynomial:
    return v if isinstance(v, RationalPolynomial) else RationalPolynomial((Fraction(v),))


def falling_factorial(shift: int, j: int) -> RationalPolynomial:
    """``(n - shift)(n - shift - 1)...(n - shift - j + 1)`` as a polynomial in n."""
    out = RationalPolynomial((Fraction(1),))
    for i in range(j):
        out = out * RationalPolynomial((Fraction(-shift - i), Fraction(1)))
    return out


def interpolate(points: Iterable[tuple[int, object]]) -> RationalPolynomial:
    """The unique polynomial of degree < len(points) through the points, by divided differences."""
    pts: Sequence = [(Fraction(a), Fraction(v)) for a, v in points]
    if not pts:
        raise ValueError("need at least one point")
    xs = [a for a, _ in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa(f"repeated abscissa in {sorted(xs)}")
    coef = [v for _, v in pts]
    m = len(pts)
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # Horner on the Newton form
    poly = RationalPolynomial((coef[-1],))
    for i in range(m - 2, -1, -1):
        poly = poly * RationalPolynomial((-xs[i], Fraction(1))) + coef[i]
    return poly
