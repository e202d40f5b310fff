"""The ``ginv`` command line: a thin client over the verb layer.

By default every verb runs in process.  With ``--server URL`` the same
payloads are POSTed to a running ginv HTTP service and the response is
printed unchanged, with identical exit-code semantics:

0 success, 1 inverse does not exist or campaign/verify failures (the
report is still printed), 2 malformed input (message on stderr), 3
closed form vs general disagreement (a bug).

The environment variable GINV_FIELD overrides the field block of every
loaded payload; it accepts ``rationals``, ``gaussian_rationals``,
``base:involution``, or a JSON field object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Any

from . import ops
from .closedform import IndexPredictionError
from .field import FieldConfig, ParseError
from .graphs import SpecViolationError
from .jsonio import InputError, detect_payload, dumps, field_from_text
from .matrix import DimensionMismatchError

_INPUT_ERRORS = (InputError, ParseError, SpecViolationError, DimensionMismatchError)
_BUG_ERRORS = (ops.DisagreementError, IndexPredictionError)


def _load_json_file(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc


def _field_override() -> FieldConfig | None:
    text = os.environ.get("GINV_FIELD")
    if not text:
        return None
    return field_from_text(text)


def _emit(doc: Any, out_path: str | None) -> None:
    text = dumps(doc) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load_input(args: argparse.Namespace) -> Any:
    if args.spec and args.matrix:
        raise InputError("give either --spec or --matrix, not both")
    if not args.spec and not args.matrix:
        raise InputError("one of --spec or --matrix is required")
    path = args.spec or args.matrix
    obj = _load_json_file(path)
    shape = detect_payload(obj)
    if args.matrix and shape != "matrix":
        raise InputError(f"{path}: --matrix expects a matrix payload, found a {shape} spec")
    if args.spec and shape == "matrix":
        raise InputError(f"{path}: --spec expects a spec payload, found a matrix")
    return obj


# -- server transport -----------------------------------------------------------


def _post(server: str, path: str, body: dict) -> tuple[Any, int]:
    """POST to a running service; returns (json body, exit code class)."""
    import httpx

    url = server.rstrip("/") + path
    try:
        response = httpx.post(url, json=body, timeout=300.0)
    except httpx.HTTPError as exc:
        raise InputError(f"server {url}: {exc}") from exc
    if response.status_code == 422:
        detail = response.json().get("detail", response.text)
        raise InputError(f"server rejected input: {detail}")
    if response.status_code == 500:
        detail = response.json().get("detail", response.text)
        raise ops.DisagreementError(str(detail))
    if response.status_code != 200:
        raise InputError(f"server {url}: unexpected status {response.status_code}")
    return response.json(), 0


def _report_exit_code(verb: str, doc: Any) -> int:
    if not isinstance(doc, dict):
        return 0
    if doc.get("agreement") is False:
        return 3
    if verb in ("group", "drazin", "mp") and doc.get("exists") is False:
        return 1
    if verb == "verify" and doc.get("valid") is False:
        return 1
    if verb == "proptest" and doc.get("failures"):
        return 1
    return 0


def _field_json(override: FieldConfig | None) -> dict | None:
    if override is None:
        return None
    return {"base": override.base.value, "involution": override.involution.value}


# -- verb handlers ---------------------------------------------------------------


def _run_payload_verb(args: argparse.Namespace, verb: str) -> int:
    payload = _load_input(args)
    override = _field_override()
    if args.server:
        body: dict[str, Any] = {"payload": payload, "field": _field_json(override)}
        if verb in ("group", "drazin", "mp"):
            body["no_oracle"] = args.no_oracle
        doc, _ = _post(args.server, f"/{verb}", body)
        code = _report_exit_code(verb, doc)
    elif verb == "build":
        doc, code = ops.build_op(payload, override)
    elif verb == "classify":
        doc, code = ops.classify_op(payload, override)
    else:
        doc, code = ops.inverse_op(verb, payload, override, with_oracle=not args.no_oracle)
    _emit(doc, args.out)
    return code


def _run_verify(args: argparse.Namespace) -> int:
    matrix_obj = _load_json_file(args.matrix)
    candidate_obj = _load_json_file(args.candidate)
    override = _field_override()
    if args.server:
        body = {
            "matrix": matrix_obj,
            "candidate": candidate_obj,
            "kind": args.kind,
            "index": args.index,
            "field": _field_json(override),
        }
        doc, _ = _post(args.server, "/verify", body)
        code = _report_exit_code("verify", doc)
    else:
        doc, code = ops.verify_op(matrix_obj, candidate_obj, args.kind, args.index, override)
    _emit(doc, args.out)
    return code


def _run_proptest(args: argparse.Namespace) -> int:
    started = time.monotonic()
    if args.server:
        body = {"cases": args.cases, "seed": args.seed, "family": args.family}
        doc, _ = _post(args.server, "/proptest", body)
        code = _report_exit_code("proptest", doc)
    else:
        doc, code = ops.proptest_op(args.cases, args.seed, args.family)
    _emit(doc, args.out)
    # timing goes to stderr so stdout stays byte-identical run to run
    print(f"elapsed_seconds: {time.monotonic() - started:.3f}", file=sys.stderr)
    return code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ginv",
        description="Exact group, Drazin, and Moore-Penrose inverses over Q and Q(i), "
        "with closed forms for star-pattern digraph matrices.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p: argparse.ArgumentParser, with_oracle_flag: bool = False) -> None:
        p.add_argument("--spec", help="JSON spec file (double star or d-linked stars)")
        p.add_argument("--matrix", help="JSON matrix file")
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        p.add_argument("--server", help="route through a running ginv service at this URL")
        if with_oracle_flag:
            p.add_argument(
                "--no-oracle",
                action="store_true",
                help="skip the general-algorithm cross-check",
            )

    add_common(sub.add_parser("build", help="assemble the matrix behind a payload"))
    add_common(sub.add_parser("classify", help="classify a double star spec"))
    for kind, text in (
        ("group", "group inverse"),
        ("drazin", "Drazin inverse"),
        ("mp", "Moore-Penrose inverse"),
    ):
        add_common(sub.add_parser(kind, help=f"compute the {text}"), with_oracle_flag=True)

    verify = sub.add_parser("verify", help="check a candidate against the defining equations")
    verify.add_argument("--matrix", required=True, help="JSON matrix file")
    verify.add_argument("--candidate", required=True, help="JSON candidate inverse file")
    verify.add_argument("--kind", required=True, choices=("group", "drazin", "mp"))
    verify.add_argument("--index", type=int, help="Drazin index to check at (default: computed)")
    verify.add_argument("--out", help="write the JSON report here instead of stdout")
    verify.add_argument("--server", help="route through a running ginv service at this URL")

    prop = sub.add_parser("proptest", help="run the randomized cross-validation campaign")
    prop.add_argument("--cases", type=int, default=100, help="number of cases (default 100)")
    prop.add_argument("--seed", type=int, default=0, help="campaign seed (default 0)")
    prop.add_argument(
        "--family",
        choices=("double-star", "d-linked", "general"),
        help="restrict to one input family (default: interleave all)",
    )
    prop.add_argument("--out", help="write the JSON report here instead of stdout")
    prop.add_argument("--server", help="route through a running ginv service at this URL")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.verb in ("build", "classify", "group", "drazin", "mp"):
            if not hasattr(args, "no_oracle"):
                args.no_oracle = False
            return _run_payload_verb(args, args.verb)
        if args.verb == "verify":
            return _run_verify(args)
        return _run_proptest(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _BUG_ERRORS as exc:
        print(f"internal disagreement: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
