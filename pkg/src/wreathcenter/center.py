"""
Structure coefficients of the center of the group algebra of B(k, n).

A coefficient ``c_{xy}^z`` counts the ways to write one fixed element of
class z as a product of an element of class x and one of class y. It is
computed by walking the generated class x (never the whole group) and
testing the type of the cofactor.

>>> from wreathcenter.wreath import parse_class_type
>>> x = parse_class_type("{[1]:[2,1,1]}")
>>> str(class_product(x, x))
'6 C{[1]:[1,1,1,1]} + 3 C{[1]:[3,1]} + 2 C{[1]:[2,2]}'
"""

from __future__ import annotations

__all__ = [
    "ClassExpansion", "PolynomialityReport",
    "structure_coefficient", "class_product", "proper_coefficient",
    "polynomiality_report",
]

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .conjugacy import _class_images, class_size, enumerate_class_types, pad, representative
from .errors import (
    BoundaryWarning, BudgetExceeded, DimensionMismatch, TooFewPoints, TooSmall,
)
from .polynomials import RationalPolynomial, interpolate
from .wreath import DEFAULT_BUDGET, BlockPermutation, ClassType, _type_key


def _check_compatible(*types: ClassType):
    ks = {t.k for t in types}
    ns = {t.size for t in types}
    if len(ks) != 1 or len(ns) != 1:
        raise DimensionMismatch(
            "class types must share k and n: " + ", ".join(f"(k={t.k}, n={t.size})" for t in types)
        )


def _class_list(x: ClassType, budget: int) -> list[tuple[int, ...]]:
    size = class_size(x)
    if size > budget:
        raise BudgetExceeded(f"|C_x| = {size} exceeds budget {budget}", limit=budget)
    return list(_class_images(x))


def _count(xs: Sequence[tuple[int, ...]], ykey, omega: Sequence[int], k: int, n: int) -> int:
    # #{a in C_x : a^-1∘omega in C_y}; C_x is closed under inversion, so
    # substitute a -> a^-1 and skip the inverse

    hits = 0
    for a in xs:
        if _type_key([a[v] for v in omega], k, n) == ykey:
            hits += 1
    return hits


def structure_coefficient(
    x: ClassType,
    y: ClassType,
    z: ClassType,
    omega: BlockPermutation | None = None,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """
    Number of pairs ``(a, b)`` in ``C_x × C_y`` with ``a∘b = omega``.

    omega defaults to :func:`representative` of z; any element of type z
    gives the same count.
    """
    _check_compatible(x, y, z)
    if omega is None:
        omega = representative(z)
    elif _type_key(omega._img0, omega.k, omega.n) != z.key:
        raise ValueError("omega does not have type z")
    xs = _class_list(x, budget)
    return _count(xs, y.key, omega._img0, x.k, x.size)


@dataclass
class ClassExpansion:
    """A central element written as ``sum_z terms[z] * C_z``."""

    k: int
    n: int
    terms: dict[ClassType, int] = field(default_factory=dict)

    def __getitem__(self, z: ClassType) -> int:
        return self.terms.get(z, 0)

    def mass(self) -> int:
        """Total number of group elements counted with multiplicity: ``sum c_z |C_z|``."""
        return sum(c * class_size(z) for z, c in self.terms.items())

    def to_json(self) -> list[dict]:
        return [{"type": str(z), "coeff": str(c)} for z, c in self.terms.items()]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c} C{z}" for z, c in self.terms.items())


def class_product(x: ClassType, y: ClassType, budget: int = DEFAULT_BUDGET) -> ClassExpansion:
    """
    Expand ``C_x C_y`` in the class-sum basis.

    Candidate classes are those whose proper size is at most the sum of the
    proper sizes of x and y; terms appear in :func:`enumerate_class_types` order.
    """
    _check_compatible(x, y)
    k, n = x.k, x.size
    xs = _class_list(x, budget)
    bound = x.proper_size + y.proper_size
    terms = {}
    for zt in enumerate_class_types(k, n):
        if zt.proper_size > bound:
            continue
        c = _count(xs, y.key, representative(zt)._img0, k, n)
        if c:
            terms[zt] = c
    return ClassExpansion(k, n, terms)


def proper_coefficient(
    x: ClassType, y: ClassType, h: ClassType, n: int, budget: int = DEFAULT_BUDGET
) -> int:
    """Coefficient of ``C_h(n)`` in ``C_x(n) C_y(n)`` for proper families x, y, h."""
    top = max(x.size, y.size, h.size)
    if n < top:
        raise TooSmall(f"n={n} is smaller than max(|x|,|y|,|h|)={top}")
    if n == top:
        warnings.warn(
            f"n={n} equals max(|x|,|y|,|h|); stability is only claimed for larger n",
            BoundaryWarning,
            stacklevel=2,
        )
    return structure_coefficient(pad(x, n), pad(y, n), pad(h, n), budget=budget)


@dataclass
class PolynomialityReport:
    x: ClassType
    y: ClassType
    h: ClassType
    points: list[tuple[int, int]]
    poly: RationalPolynomial
    bound: int
    holdout_exact: bool

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def falling_coefficients(self) -> list[Fraction]:
        """Coefficients in the basis ``(n - |h|)_j`` of falling factorials."""
        return self.poly.falling_basis(self.h.size)

    @property
    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.falling_coefficients)

    @property
    def monomial_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.poly.coefficients)

    @property
    def weak_bound(self) -> bool:
        return self.degree <= self.bound

    @property
    def strict_bound(self) -> bool:
        return self.degree < self.bound

    def to_json(self) -> dict:
        return {
            "x": str(self.x),
            "y": str(self.y),
            "h": str(self.h),
            "points": [[n, str(c)] for n, c in self.points],
            "poly": [str(c) for c in self.poly.coefficients],
            "degree": self.degree,
            "bound": self.bound,
            "holdout_exact": self.holdout_exact,
            "falling_shift": self.h.size,
            "falling_basis": [str(c) for c in self.falling_coefficients],
            "nonnegative": self.nonnegative,
            "monomial_nonnegative": self.monomial_nonnegative,
            "strict_bound": self.strict_bound,
            "weak_bound": self.weak_bound,
        }


def default_n_range(x: ClassType, y: ClassType, h: ClassType) -> range:
    lo = max(x.size, y.size, h.size) + 1
    d = max(x.size + y.size - h.size, 0)
    return range(lo, lo + d + 3)


def polynomiality_report(
    x: ClassType,
    y: ClassType,
    h: ClassType,
    n_range: Sequence[int] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> PolynomialityReport:
    """
    Fit ``n -> c_{xy}^h(n)`` exactly on the first ``d + 1`` values of n_range,
    with ``d = |x| + |y| - |h|``, and check the fit on the remaining values.
    """
    d = x.size + y.size - h.size
    fit = max(d, 0) + 1
    ns = list(default_n_range(x, y, h) if n_range is None else n_range)
    if len(ns) < fit + 1:
        raise TooFewPoints(f"need at least {fit + 1} values of n, got {len(ns)}")
    top = max(x.size, y.size, h.size)
    if min(ns) <= top:
        raise TooSmall(f"every n must exceed max(|x|,|y|,|h|)={top}")
    points = [(n, proper_coefficient(x, y, h, n, budget=budget)) for n in ns]
    poly = interpolate(points[:fit])
    holdout = all(poly(n) == c for n, c in points[fit:])
    return PolynomialityReport(x, y, h, points, poly, d, holdout)
