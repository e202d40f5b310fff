"""Verb layer shared by the CLI and the HTTP service.

Every operation takes parsed JSON payloads (plain dicts) and returns
(report dict, exit code).  Exit codes follow one contract everywhere:
0 success, 1 requested inverse does not exist / campaign failures
(report still emitted), 2 malformed input (raised as InputError), 3
closed form and general algorithm disagree (raised as
DisagreementError or returned when the agreement flag is false --
either way it means a bug, not a data condition).
"""

from __future__ import annotations

from typing import Any

from .campaign import run_campaign
from .closedform import (
    DoubleStarCaseTag,
    IndexPredictionError,
    classify_double_star,
    d_linked_drazin,
    d_linked_group,
    d_linked_mp,
    double_star_drazin,
    double_star_group,
    double_star_mp,
)
from .geninv import (
    InverseKind,
    InverseReport,
    Method,
    drazin_equations,
    drazin_inverse,
    group_inverse,
    moore_penrose,
    penrose_equations,
)
from .graphs import DLinkedSpec, DoubleStarSpec, build_d_linked, build_double_star
from .jsonio import (
    InputError,
    classification_to_json,
    d_linked_from_json,
    detect_payload,
    double_star_from_json,
    matrix_from_json,
    matrix_to_json,
    report_to_json,
)
from .matrix import DimensionMismatchError, ExactMatrix, minimal_polynomial
from .field import FieldConfig
from .polynomial import zero_multiplicity


class DisagreementError(RuntimeError):
    """Closed form and general algorithm disagreed; a defect, never data."""


Payload = tuple[str, "ExactMatrix | DoubleStarSpec | DLinkedSpec"]


def load_payload(obj: Any, override: FieldConfig | None = None) -> Payload:
    """Parse a JSON object into whichever input schema it follows."""
    shape = detect_payload(obj)
    if shape == "matrix":
        return shape, matrix_from_json(obj, override)
    if shape == "double_star":
        return shape, double_star_from_json(obj, override)
    return shape, d_linked_from_json(obj, override)


def _built_matrix(shape: str, item) -> ExactMatrix:
    if shape == "matrix":
        return item
    if shape == "double_star":
        return build_double_star(item)
    return build_d_linked(item)[0]


def build_op(obj: Any, override: FieldConfig | None = None) -> tuple[dict, int]:
    """Assemble (or normalize) the matrix behind a payload."""
    shape, item = load_payload(obj, override)
    return matrix_to_json(_built_matrix(shape, item)), 0


def classify_op(obj: Any, override: FieldConfig | None = None) -> tuple[dict, int]:
    """Classify a double star spec into its five-way case partition."""
    shape, item = load_payload(obj, override)
    if shape != "double_star":
        raise InputError("classify needs a double star spec")
    return classification_to_json(classify_double_star(item)), 0


def _drazin_report(result, method: Method) -> InverseReport:
    return InverseReport(
        InverseKind.DRAZIN,
        True,
        method,
        matrix=result.inverse,
        index=result.index,
        min_poly=result.min_poly,
    )


def _reports_agree(closed: InverseReport, general: InverseReport) -> bool:
    if closed.exists != general.exists:
        return False
    if not closed.exists:
        return True
    if closed.matrix != general.matrix:
        return False
    if closed.index is not None and general.index is not None:
        if closed.index != general.index:
            return False
    if closed.min_poly is not None and general.min_poly is not None:
        if closed.min_poly != general.min_poly:
            return False
    return True


def inverse_op(
    kind: str,
    obj: Any,
    override: FieldConfig | None = None,
    with_oracle: bool = True,
) -> tuple[dict, int]:
    """Compute one of the three inverses, cross-checking closed form
    against the general algorithm whenever the input is a spec of a
    covered case.  The emitted report is the closed-form one when it
    applies, with an ``agreement`` field (null when single-routed)."""
    if kind not in ("group", "drazin", "mp"):
        raise InputError(f"unknown inverse kind {kind!r}")
    shape, item = load_payload(obj, override)

    witness = None
    predicted_index = None
    agreement: bool | None = None

    if shape == "matrix":
        report = _general_report(kind, item)
        return report_to_json(report), _exit_code(report, None)

    matrix = _built_matrix(shape, item)

    if shape == "double_star":
        if kind == "group":
            report = double_star_group(item)
        elif kind == "drazin":
            report = _drazin_report(double_star_drazin(item), Method.CLOSED_FORM)
        else:
            report, witness = double_star_mp(item)
    else:
        if kind == "group":
            report = d_linked_group(item)
        elif kind == "drazin":
            products = item.link_products()
            if all(not p for p in products):
                result, predicted_index = d_linked_drazin(item)
                report = _drazin_report(result, Method.GENERAL)
                out = report_to_json(report, predicted_index=predicted_index)
                return out, 0
            if all(bool(p) for p in products):
                base = d_linked_group(item)
                assert base.matrix is not None
                report = InverseReport(
                    InverseKind.DRAZIN,
                    True,
                    Method.CLOSED_FORM,
                    matrix=base.matrix,
                    index=base.index,
                )
            else:
                # mixed star sums: no covered closed form, general only
                report = _drazin_report(drazin_inverse(matrix), Method.GENERAL)
                return report_to_json(report), 0
        else:
            report = d_linked_mp(item)

    if with_oracle:
        general = _general_report(kind, matrix)
        agreement = _reports_agree(report, general)

    out = report_to_json(
        report,
        witness=witness,
        predicted_index=predicted_index,
        agreement=agreement,
    )
    return out, _exit_code(report, agreement)


def _general_report(kind: str, matrix: ExactMatrix) -> InverseReport:
    try:
        if kind == "group":
            return group_inverse(matrix)
        if kind == "drazin":
            return _drazin_report(drazin_inverse(matrix), Method.GENERAL)
        return moore_penrose(matrix)
    except DimensionMismatchError as exc:
        raise InputError(str(exc)) from exc


def _exit_code(report: InverseReport, agreement: bool | None) -> int:
    if agreement is False:
        return 3
    return 0 if report.exists else 1


def verify_op(
    matrix_obj: Any,
    candidate_obj: Any,
    kind: str,
    index: int | None = None,
    override: FieldConfig | None = None,
) -> tuple[dict, int]:
    """Check a candidate inverse against the defining equations."""
    if kind not in ("group", "drazin", "mp"):
        raise InputError(f"unknown inverse kind {kind!r}")
    a = matrix_from_json(matrix_obj, override, "matrix")
    x = matrix_from_json(candidate_obj, override, "candidate")
    if a.cfg != x.cfg:
        raise InputError("candidate and matrix use different field configs")
    try:
        if kind == "mp":
            eqs = penrose_equations(a, x)
            index_used = None
        else:
            if kind == "group":
                index_used = 1
            elif index is not None:
                if index < 0:
                    raise InputError("index must be nonnegative")
                index_used = index
            else:
                index_used, _ = zero_multiplicity(minimal_polynomial(a))
            eqs = drazin_equations(a, x, index_used)
    except DimensionMismatchError as exc:
        raise InputError(str(exc)) from exc
    valid = all(eqs.values())
    out: dict[str, Any] = {"kind": kind, "valid": valid}
    if index_used is not None:
        out["index_used"] = index_used
    out["equations"] = eqs
    return out, 0 if valid else 1


def proptest_op(cases: int, seed: int, family: str | None = None) -> tuple[dict, int]:
    """Run the randomized cross-validation campaign."""
    try:
        result = run_campaign(cases, seed, family)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return result.to_json(), 0 if not result.failures else 1


__all__ = [
    "DisagreementError",
    "IndexPredictionError",
    "build_op",
    "classify_op",
    "inverse_op",
    "verify_op",
    "proptest_op",
    "load_payload",
]
