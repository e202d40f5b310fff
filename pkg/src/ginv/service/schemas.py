"""Request and response models for the ginv HTTP service.

Response model fields are declared in the same order the verb layer
emits them, and endpoints serialize with ``exclude_none`` so optional
keys disappear exactly as they do in direct CLI output.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field


class FieldModel(BaseModel):
    base: Literal["rationals", "gaussian_rationals"]
    involution: Literal["identity", "conjugation"]


class PayloadRequest(BaseModel):
    """A matrix or graph-spec payload, with an optional field override."""

    payload: Any
    field: FieldModel | None = None


class InverseRequest(PayloadRequest):
    no_oracle: bool = False


class VerifyRequest(BaseModel):
    matrix: Any
    candidate: Any
    kind: Literal["group", "drazin", "mp"]
    index: int | None = Field(default=None, ge=0)
    field: FieldModel | None = None


class ProptestRequest(BaseModel):
    cases: int = Field(default=100, ge=1)
    seed: int = 0
    family: Literal["double-star", "d-linked", "general"] | None = None


class MatrixModel(BaseModel):
    rows: int
    cols: int
    field: FieldModel
    entries: list[list[str]]


class ClassificationModel(BaseModel):
    case: str
    xy: str
    zw: str
    zeta: str | None = None


class WitnessModel(BaseModel):
    s: str
    u: str
    t: str
    v: str


class InverseReportModel(BaseModel):
    kind: str
    exists: bool
    index: int | None = None
    min_poly: list[str] | None = None
    matrix: MatrixModel | None = None
    method: str
    reason: str | None = None
    offending_stars: list[int] | None = None
    witness: WitnessModel | None = None
    predicted_index: int | None = None
    agreement: bool | None = None


class VerifyReportModel(BaseModel):
    kind: str
    valid: bool
    index_used: int | None = None
    equations: dict[str, bool]


class FailureModel(BaseModel):
    case: int
    family: str
    seed: str
    spec: Any
    check: str
    expected: Any
    got: Any


class CampaignModel(BaseModel):
    cases_run: int
    seed: int
    families: list[str]
    failures: list[FailureModel]


class ServiceInfo(BaseModel):
    name: str
    version: str
    verbs: list[str]
