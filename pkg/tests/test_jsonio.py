"""JSON round-trips, payload detection, and located error messages."""

from __future__ import annotations

import json

import pytest

from ginv.field import IMAG, QI_CONJ, QI_IDENT, QQ, Scalar
from ginv.graphs import DLinkedSpec, DoubleStarSpec, StarPair
from ginv.jsonio import (
    InputError,
    d_linked_from_json,
    d_linked_to_json,
    detect_payload,
    double_star_from_json,
    double_star_to_json,
    dumps,
    field_from_json,
    field_from_text,
    field_to_json,
    matrix_from_json,
    matrix_to_json,
    polynomial_to_json,
    report_to_json,
)
from ginv.geninv import moore_penrose
from ginv.matrix import ExactMatrix
from ginv.polynomial import Polynomial

M = ExactMatrix.from_rows


class TestFieldJson:
    def test_round_trip(self, fields):
        for cfg in fields:
            assert field_from_json(field_to_json(cfg)) == cfg

    def test_involution_defaults_to_identity(self):
        assert field_from_json({"base": "rationals"}) == QQ

    def test_unknown_values_located(self):
        with pytest.raises(InputError, match=r"field\.base: unknown field 'reals'"):
            field_from_json({"base": "reals"})
        with pytest.raises(InputError, match=r"field\.involution: unknown"):
            field_from_json({"base": "rationals", "involution": "transpose"})

    @pytest.mark.parametrize(
        "text, expected_name",
        [
            ("rationals", "QQ"),
            ("gaussian_rationals:conjugation", "QI_CONJ"),
            ("gaussian_rationals:identity", "QI_IDENT"),
            ('{"base": "gaussian_rationals", "involution": "conjugation"}', "QI_CONJ"),
        ],
    )
    def test_field_from_text(self, text, expected_name):
        expected = {"QQ": QQ, "QI_CONJ": QI_CONJ, "QI_IDENT": QI_IDENT}[expected_name]
        assert field_from_text(text) == expected

    def test_field_from_text_rejects_garbage(self):
        with pytest.raises(InputError):
            field_from_text("a:b:c")
        with pytest.raises(InputError):
            field_from_text("{not json")


class TestMatrixJson:
    def test_round_trip(self, fields):
        for cfg in fields:
            a = M([[1, 2], [3, 4]], cfg)
            assert matrix_from_json(matrix_to_json(a)) == a

    def test_gaussian_entries(self):
        a = M([[Scalar(1, 2)]], QI_CONJ)
        doc = matrix_to_json(a)
        assert doc["entries"] == [["1+2i"]]
        assert matrix_from_json(doc) == a

    def test_override_changes_field(self):
        doc = matrix_to_json(M([[1]], QQ))
        again = matrix_from_json(doc, QI_CONJ)
        assert again.cfg == QI_CONJ

    def test_errors_name_the_location(self):
        with pytest.raises(InputError, match="matrix: missing key 'rows'"):
            matrix_from_json({"cols": 1})
        doc = {
            "rows": 1,
            "cols": 2,
            "field": {"base": "rationals"},
            "entries": [["1", "oops"]],
        }
        with pytest.raises(InputError, match=r"entries\[0\]\[1\]"):
            matrix_from_json(doc)

    def test_shape_mismatch_rejected(self):
        doc = {
            "rows": 2,
            "cols": 1,
            "field": {"base": "rationals"},
            "entries": [["1"]],
        }
        with pytest.raises(InputError):
            matrix_from_json(doc)

    def test_imaginary_entry_over_rationals_rejected(self):
        doc = {
            "rows": 1,
            "cols": 1,
            "field": {"base": "rationals"},
            "entries": [["i"]],
        }
        with pytest.raises(InputError):
            matrix_from_json(doc)


class TestSpecJson:
    def test_double_star_round_trip(self, fields):
        for cfg in fields:
            spec = DoubleStarSpec(
                a=2, b=3, x=(1, 2), y=(3, 4), z=(5,), w=(7,), cfg=cfg
            )
            assert double_star_from_json(double_star_to_json(spec)) == spec

    def test_double_star_error_location(self):
        doc = double_star_to_json(
            DoubleStarSpec(a=1, b=1, x=(1,), y=(1,), z=(1,), w=(1,), cfg=QQ)
        )
        doc["y"] = ["1", "0"]
        with pytest.raises(InputError, match=r"double star spec: y\[1\]"):
            double_star_from_json(doc)

    def test_d_linked_round_trip(self):
        spec = DLinkedSpec(
            base=M([[1, 2], [3, 4]], QQ),
            stars=(StarPair((5, 6), (7, 8)), StarPair((9,), (10,))),
        )
        doc = d_linked_to_json(spec)
        assert set(doc) == {"A", "stars"}
        assert d_linked_from_json(doc) == spec

    def test_d_linked_star_error_location(self):
        spec = DLinkedSpec(
            base=M([[1, 2], [3, 4]], QQ),
            stars=(StarPair((5,), (7,)), StarPair((9,), (10,))),
        )
        doc = d_linked_to_json(spec)
        doc["stars"][1]["x"] = ["bad"]
        with pytest.raises(InputError, match=r"stars\[1\]\.x\[0\]"):
            d_linked_from_json(doc)


class TestDetectPayload:
    def test_each_shape(self):
        assert detect_payload({"entries": []}) == "matrix"
        assert detect_payload({"A": {}, "stars": []}) == "d_linked"
        assert detect_payload({"x": [], "z": []}) == "double_star"

    def test_undetectable(self):
        with pytest.raises(InputError, match="cannot tell"):
            detect_payload({"foo": 1})
        with pytest.raises(InputError, match="top level"):
            detect_payload([1, 2])


class TestReportJson:
    def test_key_order_and_omissions(self):
        a = M([[1, 0], [0, 0]], QQ)
        report = moore_penrose(a)
        doc = report_to_json(report)
        assert list(doc) == ["kind", "exists", "matrix", "method"]
        assert "agreement" not in doc
        doc2 = report_to_json(report, agreement=True)
        assert list(doc2)[-1] == "agreement"
        assert doc2["agreement"] is True

    def test_polynomial_coefficients_constant_first(self):
        p = Polynomial((Scalar(0), Scalar(0), Scalar(-4), Scalar(0), Scalar(1)))
        assert polynomial_to_json(p) == ["0", "0", "-4", "0", "1"]

    def test_dumps_is_deterministic(self):
        doc = {"b": 1, "a": [1, 2]}
        assert dumps(doc) == json.dumps(doc, indent=2, ensure_ascii=True)
        assert dumps(doc) == dumps({"b": 1, "a": [1, 2]})
