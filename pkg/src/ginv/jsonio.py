"""JSON wire formats: field configs, matrices, star specs, reports.

All scalars travel as canonical strings (see :mod:`ginv.field`), all keys
are lower_snake_case, and converters build dicts in a fixed key order so
serialized output is deterministic.  Malformed payloads raise InputError
with a message naming the offending key.
"""

from __future__ import annotations

import json
from typing import Any

from .closedform import DoubleStarCase, MPWitness
from .field import (
    FieldBase,
    FieldConfig,
    Involution,
    ParseError,
    Scalar,
    format_scalar,
    parse_scalar,
)
from .geninv import InverseReport
from .graphs import DLinkedSpec, DoubleStarSpec, SpecViolationError, StarPair
from .matrix import ExactMatrix
from .polynomial import Polynomial


class InputError(ValueError):
    """A JSON payload failed validation."""


def _need(obj: dict, key: str, where: str) -> Any:
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected an object")
    if key not in obj:
        raise InputError(f"{where}: missing key {key!r}")
    return obj[key]


def _scalar(value: Any, cfg: FieldConfig, where: str) -> Scalar:
    if not isinstance(value, str):
        raise InputError(f"{where}: scalars must be strings, got {type(value).__name__}")
    try:
        return parse_scalar(value, cfg)
    except ParseError as exc:
        raise InputError(f"{where}: {exc}") from exc


def _scalar_list(value: Any, cfg: FieldConfig, where: str) -> list[Scalar]:
    if not isinstance(value, list):
        raise InputError(f"{where}: expected a list")
    return [_scalar(v, cfg, f"{where}[{i}]") for i, v in enumerate(value)]


# -- field configs ---------------------------------------------------------


def field_to_json(cfg: FieldConfig) -> dict:
    return {"base": cfg.base.value, "involution": cfg.involution.value}


def field_from_json(obj: Any, where: str = "field") -> FieldConfig:
    base_txt = _need(obj, "base", where)
    inv_txt = obj.get("involution", "identity")
    try:
        base = FieldBase(base_txt)
    except ValueError:
        raise InputError(f"{where}.base: unknown field {base_txt!r}") from None
    try:
        inv = Involution(inv_txt)
    except ValueError:
        raise InputError(f"{where}.involution: unknown involution {inv_txt!r}") from None
    return FieldConfig(base, inv)


def field_from_text(text: str) -> FieldConfig:
    """Parse a field override: JSON object, 'base', or 'base:involution'."""
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"field override: invalid JSON ({exc})") from exc
        return field_from_json(obj, "field override")
    parts = text.split(":")
    if len(parts) == 1:
        return field_from_json({"base": parts[0]}, "field override")
    if len(parts) == 2:
        return field_from_json({"base": parts[0], "involution": parts[1]}, "field override")
    raise InputError(f"field override: cannot parse {text!r}")


# -- matrices ----------------------------------------------------------------


def matrix_to_json(m: ExactMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "field": field_to_json(m.cfg),
        "entries": [[format_scalar(v) for v in m.row_list(i)] for i in range(m.rows)],
    }


def matrix_from_json(
    obj: Any, override: FieldConfig | None = None, where: str = "matrix"
) -> ExactMatrix:
    rows = _need(obj, "rows", where)
    cols = _need(obj, "cols", where)
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
        raise InputError(f"{where}: rows/cols must be nonnegative integers")
    cfg = override if override is not None else field_from_json(
        _need(obj, "field", where), f"{where}.field"
    )
    entries = _need(obj, "entries", where)
    if not isinstance(entries, list) or len(entries) != rows:
        raise InputError(f"{where}.entries: expected {rows} rows")
    flat: list[Scalar] = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise InputError(f"{where}.entries[{i}]: expected {cols} entries")
        for j, cell in enumerate(row):
            flat.append(_scalar(cell, cfg, f"{where}.entries[{i}][{j}]"))
    return ExactMatrix(rows, cols, flat, cfg)


# -- star specs -----------------------------------------------------------------


def double_star_to_json(spec: DoubleStarSpec) -> dict:
    return {
        "a": format_scalar(spec.a),
        "b": format_scalar(spec.b),
        "x": [format_scalar(v) for v in spec.x],
        "y": [format_scalar(v) for v in spec.y],
        "z": [format_scalar(v) for v in spec.z],
        "w": [format_scalar(v) for v in spec.w],
        "field": field_to_json(spec.cfg),
    }


def double_star_from_json(obj: Any, override: FieldConfig | None = None) -> DoubleStarSpec:
    where = "double star spec"
    cfg = override if override is not None else field_from_json(
        _need(obj, "field", where), "field"
    )
    try:
        return DoubleStarSpec(
            a=_scalar(_need(obj, "a", where), cfg, "a"),
            b=_scalar(_need(obj, "b", where), cfg, "b"),
            x=tuple(_scalar_list(_need(obj, "x", where), cfg, "x")),
            y=tuple(_scalar_list(_need(obj, "y", where), cfg, "y")),
            z=tuple(_scalar_list(_need(obj, "z", where), cfg, "z")),
            w=tuple(_scalar_list(_need(obj, "w", where), cfg, "w")),
            cfg=cfg,
        )
    except SpecViolationError as exc:
        raise InputError(f"{where}: {exc}") from exc


def d_linked_to_json(spec: DLinkedSpec) -> dict:
    return {
        "A": matrix_to_json(spec.base),
        "stars": [
            {
                "x": [format_scalar(v) for v in star.x],
                "y": [format_scalar(v) for v in star.y],
            }
            for star in spec.stars
        ],
    }


def d_linked_from_json(obj: Any, override: FieldConfig | None = None) -> DLinkedSpec:
    where = "d-linked spec"
    base = matrix_from_json(_need(obj, "A", where), override, "A")
    stars_obj = _need(obj, "stars", where)
    if not isinstance(stars_obj, list):
        raise InputError("stars: expected a list")
    stars = []
    for i, item in enumerate(stars_obj):
        stars.append(
            StarPair(
                x=tuple(_scalar_list(_need(item, "x", f"stars[{i}]"), base.cfg, f"stars[{i}].x")),
                y=tuple(_scalar_list(_need(item, "y", f"stars[{i}]"), base.cfg, f"stars[{i}].y")),
            )
        )
    try:
        return DLinkedSpec(base=base, stars=tuple(stars))
    except SpecViolationError as exc:
        raise InputError(f"{where}: {exc}") from exc


def detect_payload(obj: Any) -> str:
    """Which schema a loaded JSON object follows:
    'matrix', 'double_star', or 'd_linked'."""
    if not isinstance(obj, dict):
        raise InputError("top level: expected a JSON object")
    if "entries" in obj:
        return "matrix"
    if "stars" in obj or "A" in obj:
        return "d_linked"
    if "x" in obj and "z" in obj:
        return "double_star"
    raise InputError(
        "top level: cannot tell matrix / double star / d-linked payloads apart "
        "(need 'entries', 'stars', or 'x'+'z')"
    )


# -- derived objects ----------------------------------------------------------


def polynomial_to_json(p: Polynomial) -> list[str]:
    return [format_scalar(c) for c in p.coeffs]


def classification_to_json(case: DoubleStarCase) -> dict:
    out = {
        "case": case.tag.value,
        "xy": format_scalar(case.xy),
        "zw": format_scalar(case.zw),
    }
    if case.zeta is not None:
        out["zeta"] = format_scalar(case.zeta)
    return out


def witness_to_json(witness: MPWitness) -> dict:
    return {
        "s": format_scalar(witness.s),
        "u": format_scalar(witness.u),
        "t": format_scalar(witness.t),
        "v": format_scalar(witness.v),
    }


def report_to_json(
    report: InverseReport,
    *,
    witness: MPWitness | None = None,
    predicted_index: int | None = None,
    agreement: bool | None = None,
) -> dict:
    """Report dict in canonical key order; optional keys are omitted when
    absent (``agreement`` appears only when a dual-route check ran)."""
    out: dict[str, Any] = {"kind": report.kind.value, "exists": report.exists}
    if report.index is not None:
        out["index"] = report.index
    if report.min_poly is not None:
        out["min_poly"] = polynomial_to_json(report.min_poly)
    if report.matrix is not None:
        out["matrix"] = matrix_to_json(report.matrix)
    out["method"] = report.method.value
    if report.reason is not None:
        out["reason"] = report.reason
    if report.offending_stars is not None:
        out["offending_stars"] = list(report.offending_stars)
    if witness is not None:
        out["witness"] = witness_to_json(witness)
    if predicted_index is not None:
        out["predicted_index"] = predicted_index
    if agreement is not None:
        out["agreement"] = agreement
    return out


def dumps(obj: Any) -> str:
    """Canonical serialization: UTF-8-safe, two-space indent, fixed key order."""
    return json.dumps(obj, indent=2, ensure_ascii=True)
