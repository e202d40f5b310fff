"""General-purpose group, Drazin, and Moore-Penrose inverses.

Two independent Drazin routes are kept deliberately separate so results
can be cross-checked entrywise:

* the minimal-polynomial route: with psi = lambda^k g(lambda) and
  g = g_0 + g_1 lambda + ..., the matrix
  X = -(1/g_0)(g_1 I + g_2 A + ... ) satisfies A^D = A^k X^{k+1};
* the core-nilpotent route: split A = U diag(C, N) U^{-1} with C
  invertible and N nilpotent, then A^D = U diag(C^{-1}, 0) U^{-1}.

Group inverses use the full-rank-factorization criterion (A = FG has a
group inverse iff GF is invertible, and then A^# = F (GF)^{-2} G); the
Moore-Penrose inverse uses A^dagger = G* (GG*)^{-1} (F*F)^{-1} F*, which
exists iff both Gram matrices are invertible.  Over the identity
involution on Q(i) the Gram matrices can be singular, so existence is
genuinely conditional and is reported, never thrown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .matrix import (
    DimensionMismatchError,
    ExactMatrix,
    NotInvertibleError,
    core_nilpotent,
    full_rank_factorize,
    hstack,
    inverse,
    minimal_polynomial,
    rank,
    rref,
)
from .polynomial import Polynomial, zero_multiplicity


class InverseKind(enum.Enum):
    GROUP = "group"
    DRAZIN = "drazin"
    MOORE_PENROSE = "mp"


class Method(enum.Enum):
    GENERAL = "general"
    CLOSED_FORM = "closed_form"


class RankDeficientError(ValueError):
    """A one-sided inverse was requested for a matrix without full rank."""


@dataclass(frozen=True)
class InverseReport:
    """Outcome of an inverse computation; non-existence is data, not an error."""

    kind: InverseKind
    exists: bool
    method: Method
    matrix: ExactMatrix | None = None
    index: int | None = None
    min_poly: Polynomial | None = None
    reason: str | None = None
    offending_stars: tuple[int, ...] | None = None


@dataclass(frozen=True)
class DrazinResult:
    """Drazin inverse with the index and minimal-polynomial split psi = lambda^k g."""

    inverse: ExactMatrix
    index: int
    min_poly: Polynomial
    g_part: Polynomial


def group_inverse(a: ExactMatrix) -> InverseReport:
    """Group inverse via full-rank factorization; exists iff GF is invertible.

    The zero matrix is its own group inverse (index 1).
    """
    if not a.is_square():
        raise DimensionMismatchError("group inverse needs a square matrix")
    if a.rows == 0:
        return InverseReport(InverseKind.GROUP, True, Method.GENERAL, matrix=a, index=0)
    if a.is_zero():
        return InverseReport(InverseKind.GROUP, True, Method.GENERAL, matrix=a, index=1)
    frf = full_rank_factorize(a)
    gf = frf.g * frf.f
    try:
        gf_inv = inverse(gf)
    except NotInvertibleError:
        return InverseReport(
            InverseKind.GROUP,
            False,
            Method.GENERAL,
            reason="GF is singular, so the index exceeds 1",
        )
    x = frf.f * gf_inv * gf_inv * frf.g
    index = 0 if frf.rank == a.rows else 1
    return InverseReport(InverseKind.GROUP, True, Method.GENERAL, matrix=x, index=index)


def drazin_inverse(a: ExactMatrix) -> DrazinResult:
    """Drazin inverse from the minimal polynomial (works for any square A;
    index 0 gives the ordinary inverse, nilpotent matrices give 0)."""
    if not a.is_square():
        raise DimensionMismatchError("Drazin inverse needs a square matrix")
    psi = minimal_polynomial(a)
    k, g = zero_multiplicity(psi)
    x = Polynomial(g.coeffs[1:]).eval_matrix(a).scale(-g.coeffs[0].inv())
    ad = (a**k) * (x ** (k + 1))
    return DrazinResult(ad, k, psi, g)


def drazin_via_core_nilpotent(a: ExactMatrix) -> DrazinResult:
    """Independent Drazin route through the core-nilpotent decomposition.

    The minimal polynomial is reassembled as lambda^k * psi_core rather
    than recomputed from A, keeping the two routes disjoint end to end.
    """
    if not a.is_square():
        raise DimensionMismatchError("Drazin inverse needs a square matrix")
    dec = core_nilpotent(a)
    n = a.rows
    r = dec.core.rows
    core_inv = inverse(dec.core) if r else dec.core
    middle = ExactMatrix.block(
        [
            [core_inv, ExactMatrix.zeros(r, n - r, a.cfg)],
            [ExactMatrix.zeros(n - r, r, a.cfg), ExactMatrix.zeros(n - r, n - r, a.cfg)],
        ]
    )
    ad = dec.transform * middle * dec.transform_inv
    g = minimal_polynomial(dec.core) if r else Polynomial.one()
    psi = g.shifted(dec.index)
    return DrazinResult(ad, dec.index, psi, g)


def cline_product_drazin(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """(AB)^D = A ((BA)^D)^2 B."""
    if a.cols != b.rows or a.rows != b.cols:
        raise DimensionMismatchError("need conformable A, B with AB square")
    ba_d = drazin_inverse(b * a).inverse
    return a * ba_d * ba_d * b


def moore_penrose(a: ExactMatrix) -> InverseReport:
    """Moore-Penrose inverse w.r.t. the configured involution.

    With A = FG of full rank, A^dagger exists iff GG* and F*F are both
    invertible; then A^dagger = G*(GG*)^{-1}(F*F)^{-1}F*.  The zero
    matrix maps to the zero matrix of transposed shape.
    """
    if a.is_zero():
        return InverseReport(
            InverseKind.MOORE_PENROSE,
            True,
            Method.GENERAL,
            matrix=ExactMatrix.zeros(a.cols, a.rows, a.cfg),
        )
    frf = full_rank_factorize(a)
    g_adj = frf.g.adjoint()
    f_adj = frf.f.adjoint()
    singular: list[str] = []
    gg_inv = ff_inv = None
    try:
        gg_inv = inverse(frf.g * g_adj)
    except NotInvertibleError:
        singular.append("GG*")
    try:
        ff_inv = inverse(f_adj * frf.f)
    except NotInvertibleError:
        singular.append("F*F")
    if singular:
        return InverseReport(
            InverseKind.MOORE_PENROSE,
            False,
            Method.GENERAL,
            reason="singular Gram matrix: " + ", ".join(singular),
        )
    x = g_adj * gg_inv * ff_inv * f_adj
    return InverseReport(InverseKind.MOORE_PENROSE, True, Method.GENERAL, matrix=x)


def drazin_equations(a: ExactMatrix, x: ExactMatrix, k: int) -> dict[str, bool]:
    """The three Drazin conditions at index k (k = 1 checks the group inverse)."""
    if a.shape != x.shape or not a.is_square():
        raise DimensionMismatchError("candidate shape does not match")
    if k < 0:
        raise ValueError("index must be nonnegative")
    ak = a**k
    return {
        "power": ak * a * x == ak,
        "xax": x * a * x == x,
        "commute": a * x == x * a,
    }


def penrose_equations(a: ExactMatrix, x: ExactMatrix) -> dict[str, bool]:
    """The four Penrose conditions w.r.t. the configured involution."""
    if x.shape != (a.cols, a.rows):
        raise DimensionMismatchError("candidate shape does not match")
    ax = a * x
    xa = x * a
    return {
        "axa": ax * a == a,
        "xax": xa * x == x,
        "ax_adjoint": ax.adjoint() == ax,
        "xa_adjoint": xa.adjoint() == xa,
    }


@dataclass(frozen=True)
class OneSidedResult:
    """A one-sided inverse plus which construction produced it."""

    matrix: ExactMatrix
    gram_based: bool


def _right_inverse_by_elimination(a: ExactMatrix) -> ExactMatrix:
    # caller guarantees full row rank, so every pivot lands inside A's columns
    m = a.rows
    res = rref(hstack(a, ExactMatrix.identity(m, a.cfg)))
    out = ExactMatrix.zeros(a.cols, m, a.cfg).to_rows()
    for i, pc in enumerate(res.pivot_cols):
        out[pc] = res.reduced.row_list(i)[a.cols :]
    return ExactMatrix.from_rows(out, a.cfg)


def right_inverse(a: ExactMatrix) -> OneSidedResult:
    """Some X with AX = I for a full-row-rank A.

    Prefers X = A*(AA*)^{-1}; when the Gram matrix is singular (possible
    under the identity involution on Q(i)) falls back to elimination.
    """
    if rank(a) != a.rows:
        raise RankDeficientError("right inverse needs full row rank")
    a_adj = a.adjoint()
    try:
        return OneSidedResult(a_adj * inverse(a * a_adj), True)
    except NotInvertibleError:
        return OneSidedResult(_right_inverse_by_elimination(a), False)


def left_inverse(a: ExactMatrix) -> OneSidedResult:
    """Some X with XA = I for a full-column-rank A.

    Prefers X = (A*A)^{-1}A*; falls back to elimination on the transpose.
    """
    if rank(a) != a.cols:
        raise RankDeficientError("left inverse needs full column rank")
    a_adj = a.adjoint()
    try:
        return OneSidedResult(inverse(a_adj * a) * a_adj, True)
    except NotInvertibleError:
        return OneSidedResult(
            _right_inverse_by_elimination(a.transpose()).transpose(), False
        )
