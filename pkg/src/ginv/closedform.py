"""Closed-form generalized inverses for the star-pattern matrix families.

Every formula here is a direct block transcription; nothing calls the
general group/Drazin/Moore-Penrose algorithms (small plain inverses of
fixed-size blocks are the only elimination used), so results can be
cross-checked against :mod:`ginv.geninv` as genuinely independent routes.

Double stars split into five cases by the leaf cycle sums p = x.y and
q = z.w:

* both nonzero: group invertible, A^# = F(GF)^{-2}G with the explicit
  rank-4 factorization;
* both zero: index 2, psi = lambda^2 (lambda^2 - ab);
* p nonzero, q zero, zeta = p + ab nonzero: index 3,
  psi = lambda^3 (lambda^2 - zeta);
* p nonzero, q zero, zeta = 0: nilpotent of index 5, psi = lambda^5,
  Drazin inverse 0 (checked before the previous case);
* p zero, q nonzero: mirror image, handled by swapping the stars and
  conjugating with the swap permutation.

For D-linked stars the group and Moore-Penrose inverses have closed
forms; the Drazin inverse in the all-links-zero case has no known closed
form, so it is computed generally with the proved index relation
i(M) = i(A) + 2 asserted as a hard check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .field import FieldConfig, ONE, Scalar, ZERO
from .geninv import DrazinResult, InverseKind, InverseReport, Method, drazin_inverse
from .graphs import (
    DLinkedSpec,
    DoubleStarSpec,
    build_d_linked,
    build_double_star,
    swap_stars,
)
from .matrix import ExactMatrix, inverse, minimal_polynomial
from .polynomial import Polynomial, zero_multiplicity


class WrongCaseError(ValueError):
    """A closed form was asked for outside the case it covers."""


class HypothesisViolatedError(ValueError):
    """Input does not satisfy the hypothesis of the requested routine."""

    def __init__(self, message: str, offending_stars: tuple[int, ...] = ()):
        super().__init__(message)
        self.offending_stars = offending_stars


class IndexPredictionError(RuntimeError):
    """The proved index relation failed; indicates a bug, never expected."""


class DoubleStarCaseTag(enum.Enum):
    GROUP_INVERTIBLE = "group_invertible"
    BOTH_ZERO = "both_zero"
    FIRST_NONZERO_SECOND_ZERO = "first_nonzero_second_zero"
    NILPOTENT_CASE = "nilpotent_case"
    MIRRORED = "mirrored"


@dataclass(frozen=True)
class DoubleStarCase:
    """Classification of a double star spec by its leaf cycle sums."""

    tag: DoubleStarCaseTag
    xy: Scalar
    zw: Scalar
    zeta: Scalar | None


def classify_double_star(spec: DoubleStarSpec) -> DoubleStarCase:
    """Partition on (x.y, z.w); zeta = x.y + ab is attached to the two
    cases where it decides the outcome, and the nilpotent case (zeta = 0)
    is split off before the generic first-nonzero case."""
    xy = spec.xy()
    zw = spec.zw()
    if xy and zw:
        return DoubleStarCase(DoubleStarCaseTag.GROUP_INVERTIBLE, xy, zw, None)
    if not xy and not zw:
        return DoubleStarCase(DoubleStarCaseTag.BOTH_ZERO, xy, zw, None)
    if xy:
        zeta = xy + spec.a * spec.b
        if not zeta:
            return DoubleStarCase(DoubleStarCaseTag.NILPOTENT_CASE, xy, zw, zeta)
        return DoubleStarCase(DoubleStarCaseTag.FIRST_NONZERO_SECOND_ZERO, xy, zw, zeta)
    return DoubleStarCase(DoubleStarCaseTag.MIRRORED, xy, zw, None)


def _sm(s: Scalar, cfg: FieldConfig) -> ExactMatrix:
    return ExactMatrix(1, 1, (s,), cfg)


def _row(values: tuple[Scalar, ...], cfg: FieldConfig) -> ExactMatrix:
    return ExactMatrix(1, len(values), values, cfg)


def _col(values: tuple[Scalar, ...], cfg: FieldConfig) -> ExactMatrix:
    return ExactMatrix(len(values), 1, values, cfg)


def _outer(u: tuple[Scalar, ...], v: tuple[Scalar, ...], cfg: FieldConfig) -> ExactMatrix:
    return _col(u, cfg) * _row(v, cfg)


def double_star_factorization(spec: DoubleStarSpec) -> tuple[ExactMatrix, ExactMatrix]:
    """The explicit rank-4 full-rank factorization M = F G of a double star."""
    cfg = spec.cfg
    m, n = spec.m, spec.n
    z1 = ExactMatrix.zeros
    f = ExactMatrix.block(
        [
            [_sm(ZERO, cfg), _sm(ONE, cfg), _sm(spec.a, cfg), _sm(ZERO, cfg)],
            [_col(spec.y, cfg), z1(m, 1, cfg), z1(m, 1, cfg), z1(m, 1, cfg)],
            [_sm(spec.b, cfg), _sm(ZERO, cfg), _sm(ZERO, cfg), _sm(ONE, cfg)],
            [z1(n, 1, cfg), z1(n, 1, cfg), _col(spec.w, cfg), z1(n, 1, cfg)],
        ]
    )
    g = ExactMatrix.block(
        [
            [_sm(ONE, cfg), z1(1, m, cfg), _sm(ZERO, cfg), z1(1, n, cfg)],
            [_sm(ZERO, cfg), _row(spec.x, cfg), _sm(ZERO, cfg), z1(1, n, cfg)],
            [_sm(ZERO, cfg), z1(1, m, cfg), _sm(ONE, cfg), z1(1, n, cfg)],
            [_sm(ZERO, cfg), z1(1, m, cfg), _sm(ZERO, cfg), _row(spec.z, cfg)],
        ]
    )
    return f, g


def double_star_group(spec: DoubleStarSpec) -> InverseReport:
    """Group inverse of a double star: exists iff both leaf cycle sums are
    nonzero, and then M^# = F (GF)^{-2} G for the explicit factorization."""
    case = classify_double_star(spec)
    if case.tag is not DoubleStarCaseTag.GROUP_INVERTIBLE:
        vanished = [name for name, val in (("x.y", case.xy), ("z.w", case.zw)) if not val]
        return InverseReport(
            InverseKind.GROUP,
            False,
            Method.CLOSED_FORM,
            reason="vanishing leaf cycle sum: " + ", ".join(vanished),
        )
    f, g = double_star_factorization(spec)
    gf_inv = inverse(g * f)
    x = f * gf_inv * gf_inv * g
    index = 0 if spec.order == 4 else 1
    return InverseReport(InverseKind.GROUP, True, Method.CLOSED_FORM, matrix=x, index=index)


def minimal_polynomial_prediction(spec: DoubleStarSpec) -> Polynomial:
    """Closed-form minimal polynomial for the non-group-invertible cases."""
    case = classify_double_star(spec)
    tag = case.tag
    if tag is DoubleStarCaseTag.GROUP_INVERTIBLE:
        raise WrongCaseError("no closed-form minimal polynomial in the group-invertible case")
    if tag is DoubleStarCaseTag.BOTH_ZERO:
        return Polynomial((ZERO, ZERO, -(spec.a * spec.b), ZERO, ONE))
    if tag is DoubleStarCaseTag.NILPOTENT_CASE:
        return Polynomial.lambda_power(5)
    if tag is DoubleStarCaseTag.FIRST_NONZERO_SECOND_ZERO:
        assert case.zeta is not None
        return Polynomial((ZERO, ZERO, ZERO, -case.zeta, ZERO, ONE))
    swapped, _ = swap_stars(spec)
    return minimal_polynomial_prediction(swapped)


def double_star_drazin(spec: DoubleStarSpec) -> DrazinResult:
    """Drazin inverse of a double star, dispatching on the classification.

    The singular cases use the literal block closed forms with their
    predicted index and minimal polynomial; the group-invertible case
    reuses the group closed form (index <= 1 makes them coincide).
    """
    case = classify_double_star(spec)
    tag = case.tag
    cfg = spec.cfg
    m, n = spec.m, spec.n
    z1 = ExactMatrix.zeros
    a, b = spec.a, spec.b

    if tag is DoubleStarCaseTag.GROUP_INVERTIBLE:
        rep = double_star_group(spec)
        assert rep.matrix is not None
        psi = minimal_polynomial(build_double_star(spec))
        k, g_part = zero_multiplicity(psi)
        return DrazinResult(rep.matrix, k, psi, g_part)

    if tag is DoubleStarCaseTag.BOTH_ZERO:
        body = ExactMatrix.block(
            [
                [_sm(ZERO, cfg), _row(spec.x, cfg), _sm(a, cfg), z1(1, n, cfg)],
                [
                    _col(spec.y, cfg),
                    z1(m, m, cfg),
                    z1(m, 1, cfg),
                    _outer(spec.y, spec.z, cfg).scale(b.inv()),
                ],
                [_sm(b, cfg), z1(1, m, cfg), _sm(ZERO, cfg), _row(spec.z, cfg)],
                [
                    z1(n, 1, cfg),
                    _outer(spec.w, spec.x, cfg).scale(a.inv()),
                    _col(spec.w, cfg),
                    z1(n, n, cfg),
                ],
            ]
        ).scale((a * b).inv())
        psi = minimal_polynomial_prediction(spec)
        return DrazinResult(body, 2, psi, Polynomial((-(a * b), ZERO, ONE)))

    if tag is DoubleStarCaseTag.NILPOTENT_CASE:
        size = spec.order
        return DrazinResult(
            ExactMatrix.zeros(size, size, cfg),
            5,
            Polynomial.lambda_power(5),
            Polynomial.one(),
        )

    if tag is DoubleStarCaseTag.FIRST_NONZERO_SECOND_ZERO:
        assert case.zeta is not None
        zeta = case.zeta
        zinv = zeta.inv()
        body = ExactMatrix.block(
            [
                [_sm(ZERO, cfg), _row(spec.x, cfg), _sm(a, cfg), z1(1, n, cfg)],
                [
                    _col(spec.y, cfg),
                    z1(m, m, cfg),
                    z1(m, 1, cfg),
                    _outer(spec.y, spec.z, cfg).scale(a * zinv),
                ],
                [
                    _sm(b, cfg),
                    z1(1, m, cfg),
                    _sm(ZERO, cfg),
                    _row(spec.z, cfg).scale(a * b * zinv),
                ],
                [
                    z1(n, 1, cfg),
                    _outer(spec.w, spec.x, cfg).scale(b * zinv),
                    _col(spec.w, cfg).scale(a * b * zinv),
                    z1(n, n, cfg),
                ],
            ]
        ).scale(zinv)
        psi = minimal_polynomial_prediction(spec)
        return DrazinResult(body, 3, psi, Polynomial((-zeta, ZERO, ONE)))

    # mirrored: swap the stars, solve there, conjugate back by the permutation
    swapped, perm = swap_stars(spec)
    inner = double_star_drazin(swapped)
    back = perm.transpose() * inner.inverse * perm
    return DrazinResult(back, inner.index, inner.min_poly, inner.g_part)


@dataclass(frozen=True)
class MPWitness:
    """The four self-products deciding Moore-Penrose existence of a double star."""

    s: Scalar  # sum x_i conj(x_i)
    u: Scalar  # sum y_i conj(y_i)
    t: Scalar  # sum z_i conj(z_i)
    v: Scalar  # sum w_i conj(w_i)

    def vanished(self) -> tuple[str, ...]:
        return tuple(
            name for name in ("s", "u", "t", "v") if not getattr(self, name)
        )


def _self_product(values: tuple[Scalar, ...], cfg: FieldConfig) -> Scalar:
    acc = ZERO
    for value in values:
        acc = acc + value * cfg.involute(value)
    return acc


def _involuted(values: tuple[Scalar, ...], cfg: FieldConfig) -> tuple[Scalar, ...]:
    return tuple(cfg.involute(v) for v in values)


def double_star_mp(spec: DoubleStarSpec) -> tuple[InverseReport, MPWitness]:
    """Moore-Penrose inverse of a double star w.r.t. the configured involution.

    Exists iff the four self-products s, u, t, v are all nonzero (over the
    identity involution on Q(i) any of them can vanish).  The witness is
    always returned so callers can report exactly what failed.
    """
    cfg = spec.cfg
    witness = MPWitness(
        s=_self_product(spec.x, cfg),
        u=_self_product(spec.y, cfg),
        t=_self_product(spec.z, cfg),
        v=_self_product(spec.w, cfg),
    )
    dead = witness.vanished()
    if dead:
        report = InverseReport(
            InverseKind.MOORE_PENROSE,
            False,
            Method.CLOSED_FORM,
            reason="vanishing self-products: " + ", ".join(dead),
        )
        return report, witness
    m, n = spec.m, spec.n
    z1 = ExactMatrix.zeros
    xbar = _involuted(spec.x, cfg)
    ybar = _involuted(spec.y, cfg)
    zbar = _involuted(spec.z, cfg)
    wbar = _involuted(spec.w, cfg)
    s_inv, u_inv, t_inv, v_inv = (
        witness.s.inv(),
        witness.u.inv(),
        witness.t.inv(),
        witness.v.inv(),
    )
    body = ExactMatrix.block(
        [
            [_sm(ZERO, cfg), _row(ybar, cfg).scale(u_inv), _sm(ZERO, cfg), z1(1, n, cfg)],
            [
                _col(xbar, cfg).scale(s_inv),
                z1(m, m, cfg),
                z1(m, 1, cfg),
                _outer(xbar, wbar, cfg).scale(-(spec.a * s_inv * v_inv)),
            ],
            [_sm(ZERO, cfg), z1(1, m, cfg), _sm(ZERO, cfg), _row(wbar, cfg).scale(v_inv)],
            [
                z1(n, 1, cfg),
                _outer(zbar, ybar, cfg).scale(-(spec.b * t_inv * u_inv)),
                _col(zbar, cfg).scale(t_inv),
                z1(n, n, cfg),
            ],
        ]
    )
    report = InverseReport(InverseKind.MOORE_PENROSE, True, Method.CLOSED_FORM, matrix=body)
    return report, witness


# -- D-linked stars ------------------------------------------------------------


def _offending(products: tuple[Scalar, ...]) -> tuple[int, ...]:
    """1-based star positions whose product vanished."""
    return tuple(i + 1 for i, p in enumerate(products) if not p)


def d_linked_group(spec: DLinkedSpec) -> InverseReport:
    """Group inverse of a D-linked stars matrix: exists iff every per-star
    cycle sum x_i . y_i is nonzero, and then
    M^# = [[0, (BC)^{-1}B], [C(BC)^{-1}, -C(BC)^{-1}A(BC)^{-1}B]]."""
    products = spec.link_products()
    dead = _offending(products)
    if dead:
        return InverseReport(
            InverseKind.GROUP,
            False,
            Method.CLOSED_FORM,
            reason="vanishing star cycle sums at stars: "
            + ", ".join(str(i) for i in dead),
            offending_stars=dead,
        )
    _, b, c = build_d_linked(spec)
    cfg = spec.cfg
    n = spec.base.rows
    bc_inv = ExactMatrix.diagonal([p.inv() for p in products], cfg)
    tr = bc_inv * b
    bl = c * bc_inv
    br = -(bl * spec.base * tr)
    x = ExactMatrix.block([[ExactMatrix.zeros(n, n, cfg), tr], [bl, br]])
    index = 0 if spec.leaf_count == n else 1
    return InverseReport(InverseKind.GROUP, True, Method.CLOSED_FORM, matrix=x, index=index)


def d_linked_drazin(spec: DLinkedSpec) -> tuple[DrazinResult, int]:
    """Drazin inverse when every star cycle sum vanishes.

    No closed form is known for the inverse itself, so it is computed by
    the general algorithm; the index relation i(M) = i(A) + 2 is proved
    for this case and asserted, with IndexPredictionError on violation.
    Returns (result, predicted index).
    """
    products = spec.link_products()
    alive = tuple(i + 1 for i, p in enumerate(products) if p)
    if alive:
        raise HypothesisViolatedError(
            "expected every star cycle sum to vanish; nonzero at stars: "
            + ", ".join(str(i) for i in alive),
            offending_stars=alive,
        )
    base_index, _ = zero_multiplicity(minimal_polynomial(spec.base))
    predicted = base_index + 2
    m, _, _ = build_d_linked(spec)
    result = drazin_inverse(m)
    if result.index != predicted:
        raise IndexPredictionError(
            f"index {result.index} != predicted {predicted}; this is a bug"
        )
    return result, predicted


def d_linked_mp(spec: DLinkedSpec) -> InverseReport:
    """Moore-Penrose inverse of a D-linked stars matrix.

    Exists iff every per-star self-product sum x_i conj(x_i) and
    sum y_i conj(y_i) is nonzero (these are the diagonals of BB* and C*C);
    then M^dagger = [[0, (C*C)^{-1}C*], [B*(BB*)^{-1}, -B*(BB*)^{-1}A(C*C)^{-1}C*]].
    """
    cfg = spec.cfg
    x_products = tuple(_self_product(s.x, cfg) for s in spec.stars)
    y_products = tuple(_self_product(s.y, cfg) for s in spec.stars)
    dead = tuple(sorted(set(_offending(x_products)) | set(_offending(y_products))))
    if dead:
        return InverseReport(
            InverseKind.MOORE_PENROSE,
            False,
            Method.CLOSED_FORM,
            reason="vanishing self-products at stars: " + ", ".join(str(i) for i in dead),
            offending_stars=dead,
        )
    _, b, c = build_d_linked(spec)
    n = spec.base.rows
    bb_inv = ExactMatrix.diagonal([p.inv() for p in x_products], cfg)
    cc_inv = ExactMatrix.diagonal([p.inv() for p in y_products], cfg)
    tr = cc_inv * c.adjoint()
    bl = b.adjoint() * bb_inv
    br = -(bl * spec.base * tr)
    x = ExactMatrix.block([[ExactMatrix.zeros(n, n, cfg), tr], [bl, br]])
    return InverseReport(InverseKind.MOORE_PENROSE, True, Method.CLOSED_FORM, matrix=x)
