"""Exact generalized inverses over Q and Q(i).

The package computes group, Drazin, and Moore-Penrose inverses in exact
rational (or Gaussian-rational) arithmetic, with closed-form fast paths
for the adjacency-pattern matrices of weighted double star and D-linked
stars digraphs, each cross-checked against general-purpose algorithms.
"""

from .field import (
    FieldBase,
    FieldConfig,
    Involution,
    ParseError,
    QI_CONJ,
    QI_IDENT,
    QQ,
    Scalar,
    format_scalar,
    parse_scalar,
)
from .geninv import (
    DrazinResult,
    InverseKind,
    InverseReport,
    Method,
    drazin_equations,
    drazin_inverse,
    drazin_via_core_nilpotent,
    group_inverse,
    moore_penrose,
    penrose_equations,
)
from .graphs import DLinkedSpec, DoubleStarSpec, StarPair, build_d_linked, build_double_star
from .closedform import (
    DoubleStarCase,
    DoubleStarCaseTag,
    classify_double_star,
    double_star_drazin,
    double_star_group,
    double_star_mp,
    d_linked_drazin,
    d_linked_group,
    d_linked_mp,
)
from .matrix import DimensionMismatchError, ExactMatrix, NotInvertibleError
from .polynomial import Polynomial

__version__ = "1.0.0"

__all__ = [
    "DLinkedSpec",
    "DimensionMismatchError",
    "DoubleStarCase",
    "DoubleStarCaseTag",
    "DoubleStarSpec",
    "DrazinResult",
    "ExactMatrix",
    "FieldBase",
    "FieldConfig",
    "InverseKind",
    "InverseReport",
    "Involution",
    "Method",
    "NotInvertibleError",
    "ParseError",
    "Polynomial",
    "QI_CONJ",
    "QI_IDENT",
    "QQ",
    "Scalar",
    "StarPair",
    "build_d_linked",
    "build_double_star",
    "classify_double_star",
    "d_linked_drazin",
    "d_linked_group",
    "d_linked_mp",
    "double_star_drazin",
    "double_star_group",
    "double_star_mp",
    "drazin_equations",
    "drazin_inverse",
    "drazin_via_core_nilpotent",
    "group_inverse",
    "moore_penrose",
    "parse_scalar",
    "format_scalar",
    "penrose_equations",
    "__version__",
]
