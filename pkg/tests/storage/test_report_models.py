import math
from datetime import datetime

import numpy as np
import pytest

from graphnorm.storage import (
    ExperimentReport,
    ReportRow,
    ReportSummary,
    RowStatus,
    SeriesBoundError,
    decode_value,
    encode_value,
)


def _report() -> ExperimentReport:
    rows = [
        ReportRow.check("within", 1e-12, 1e-9, inputs={"n": 10}, values={"g": 0.5 + 0.25j}),
        ReportRow.verdict("dense", False, values={"witness": [1.0, float("inf")]}),
        ReportRow.info("note", values={"value": float("nan")}),
    ]
    return ExperimentReport(
        command="riemann",
        parameters={"n_list": [1, 2], "eps": 1e-10},
        rows=rows,
        summary=ReportSummary(max_residual=1e-12, achieved=0.36787944, passed=False, target=math.exp(-1)),
        versions={"graphnorm": "0.1.0"},
        created_at=datetime(2026, 1, 2, 3, 4, 5),
    )


def test_check_rows():
    assert ReportRow.check("a", 1e-10, 1e-9).status == RowStatus.PASS
    assert ReportRow.check("a", 1e-8, 1e-9).status == RowStatus.FAIL
    assert ReportRow.check("a", float("nan"), 1e-9).status == RowStatus.FAIL
    assert ReportRow.check("a", np.float64(0.0), 0.0).passed


def test_verdict_and_info_rows():
    assert ReportRow.verdict("v", True).passed
    assert not ReportRow.verdict("v", False).passed
    info = ReportRow.info("i", values={"x": 1})
    assert info.status == RowStatus.INFO
    assert info.passed
    assert info.residual is None


@pytest.mark.parametrize(
    "value, encoded",
    [
        (1 + 2j, {"re": 1.0, "im": 2.0}),
        (float("inf"), "inf"),
        (float("-inf"), "-inf"),
        (np.float64(0.25), 0.25),
        (np.array([1, 2]), [1, 2]),
        ((1, "a", None, True), [1, "a", None, True]),
        (RowStatus.PASS, "pass"),
    ],
)
def test_encode_value(value, encoded):
    assert encode_value(value) == encoded


def test_encode_nan_and_nested():
    assert encode_value(float("nan")) == "nan"
    assert encode_value({1: [np.complex128(1j)]}) == {"1": [{"re": 0.0, "im": 1.0}]}


def test_decode_value():
    assert decode_value({"re": 1.0, "im": -1.0}) == 1 - 1j
    assert decode_value(["inf", "x"]) == [math.inf, "x"]
    assert math.isnan(decode_value("nan"))
    assert decode_value({"a": {"re": 0, "im": "inf"}}) == {"a": complex(0, math.inf)}


def test_report_dict_round_trip():
    report = _report()
    restored = ExperimentReport.from_dict(report.to_dict())
    assert restored.command == "riemann"
    assert restored.created_at == report.created_at
    assert restored.rows[0].values["g"] == 0.5 + 0.25j
    assert restored.rows[1].values["witness"][1] == math.inf
    assert math.isnan(restored.rows[2].values["value"])
    assert restored.rows[1].status == RowStatus.FAIL
    assert restored.summary == report.summary
    assert not restored.passed


def test_row_dict_carries_pass_flag():
    data = ReportRow.check("a", 0.0, 1.0).to_dict()
    assert data["pass"] is True
    assert data["status"] == "pass"


def test_unknown_schema_is_rejected():
    data = _report().to_dict()
    data["schema"] = 2
    with pytest.raises(ValueError):
        ExperimentReport.from_dict(data)


def test_series_bound_error_carries_details():
    err = SeriesBoundError("too slow", achieved_bound=1e-3, last_index=1000)
    assert str(err) == "too slow"
    assert err.achieved_bound == 1e-3
    assert err.last_index == 1000
