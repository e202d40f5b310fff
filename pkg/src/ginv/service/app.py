"""FastAPI service exposing the ginv verb layer over HTTP.

Run with ``uvicorn ginv.service.app:app``.  Bad inputs come back as
422 with a detail message; a closed-form/general disagreement or a
failed index prediction is a 500, because it means a bug rather than a
data condition.  Reports that merely say "no such inverse" are plain
200s -- clients read ``exists``/``valid``/``failures`` from the body.
"""

from __future__ import annotations

import logging

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__, ops
from ..closedform import IndexPredictionError
from ..field import FieldBase, FieldConfig, Involution, ParseError
from ..graphs import SpecViolationError
from ..jsonio import InputError
from ..matrix import DimensionMismatchError
from . import schemas

_INPUT_ERRORS = (InputError, ParseError, SpecViolationError, DimensionMismatchError)
_BUG_ERRORS = (ops.DisagreementError, IndexPredictionError)

_VERBS = ["build", "classify", "group", "drazin", "mp", "verify", "proptest"]

logger = logging.getLogger("ginv.service")


def _override(field: schemas.FieldModel | None) -> FieldConfig | None:
    if field is None:
        return None
    return FieldConfig(FieldBase(field.base), Involution(field.involution))


def create_app() -> FastAPI:
    app = FastAPI(
        title="ginv",
        version=__version__,
        description="Exact group, Drazin, and Moore-Penrose inverses over Q and Q(i).",
    )

    # Handlers are registered per class (not as a catch-all for Exception)
    # so Starlette resolves them in ExceptionMiddleware, which responds
    # without re-raising: a malformed payload must not leave a crash
    # traceback in the server log.

    async def _input_error(request: Request, exc: Exception):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    async def _bug_error(request: Request, exc: Exception):
        logger.error("internal disagreement: %s", exc)
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    for _cls in _INPUT_ERRORS:
        app.add_exception_handler(_cls, _input_error)
    for _cls in _BUG_ERRORS:
        app.add_exception_handler(_cls, _bug_error)

    @app.get("/", response_model=schemas.ServiceInfo)
    async def info() -> schemas.ServiceInfo:
        return schemas.ServiceInfo(name="ginv", version=__version__, verbs=_VERBS)

    @app.post(
        "/build",
        response_model=schemas.MatrixModel,
        response_model_exclude_none=True,
    )
    async def build(req: schemas.PayloadRequest):
        doc, _ = ops.build_op(req.payload, _override(req.field))
        return doc

    @app.post(
        "/classify",
        response_model=schemas.ClassificationModel,
        response_model_exclude_none=True,
    )
    async def classify(req: schemas.PayloadRequest):
        doc, _ = ops.classify_op(req.payload, _override(req.field))
        return doc

    def _register_inverse(kind: str) -> None:
        @app.post(
            f"/{kind}",
            response_model=schemas.InverseReportModel,
            response_model_exclude_none=True,
            name=kind,
        )
        async def inverse(req: schemas.InverseRequest):
            doc, _ = ops.inverse_op(
                kind, req.payload, _override(req.field), with_oracle=not req.no_oracle
            )
            return doc

    for _kind in ("group", "drazin", "mp"):
        _register_inverse(_kind)

    @app.post(
        "/verify",
        response_model=schemas.VerifyReportModel,
        response_model_exclude_none=True,
    )
    async def verify(req: schemas.VerifyRequest):
        doc, _ = ops.verify_op(
            req.matrix, req.candidate, req.kind, req.index, _override(req.field)
        )
        return doc

    @app.post(
        "/proptest",
        response_model=schemas.CampaignModel,
        response_model_exclude_none=True,
    )
    async def proptest(req: schemas.ProptestRequest):
        doc, _ = ops.proptest_op(req.cases, req.seed, req.family)
        return doc

    return app


app = create_app()
