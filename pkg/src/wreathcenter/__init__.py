"""Conjugacy classes and class-sum algebra of the block permutation groups B(k, n) ≅ S_k wr S_n."""

from .center import (
    ClassExpansion, PolynomialityReport, class_product, polynomiality_report,
    proper_coefficient, structure_coefficient,
)
from .conjugacy import (
    class_elements, class_record, class_size, class_size_k2, class_size_k3,
    enumerate_class_types, extended_class_size, k2_view, k3_view, pad,
    parse_class_record, representative,
)
from .errors import (
    BoundaryWarning, BudgetExceeded, DimensionMismatch, DuplicateAbscissa,
    NotBijection, NotBlockPreserving, NotProper, NotSubtractable, ParseError,
    ShrinkNotAllowed, TooFewPoints, TooSmall, WreathError, WrongK,
)
from .partitions import (
    Partition, Permutation, cycle_type, enumerate_partitions, parse_partition,
    proper_part, subtract, union, z,
)
from .polynomials import RationalPolynomial, interpolate
from .wreath import (
    DEFAULT_BUDGET, BlockPermutation, ClassType, WreathElement, blocks_permutation,
    compose, conjugate, enumerate_group, extend, format_one_line, group_order,
    inverse, parse_class_type, parse_one_line, phi, psi, restriction, type_of,
    validate, wreath_multiply,
)

__version__ = "0.1.0"
