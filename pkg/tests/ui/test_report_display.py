import pytest

from graphnorm.storage import ExperimentReport, ReportRow, ReportSummary
from graphnorm.ui import display_report, display_run_summary, format_value


@pytest.mark.parametrize(
    "value, text",
    [
        (None, "None"),
        (True, "True"),
        (0.0, "0"),
        (0.5, "0.5"),
        (1.5e-7, "1.500e-07"),
        (float("inf"), "inf"),
        (1 - 2j, "1-2j"),
        ([1, 2, 3, 4, 5, 6, 7], "[1, 2, 3, 4, 5, 6, ...]"),
        ({"a": 0.25}, "a=0.25"),
        ({"pieces": []}, "<vector>"),
    ],
)
def test_format_value(value, text):
    assert format_value(value) == text


def _report(passed: bool) -> ExperimentReport:
    return ExperimentReport(
        command="psi-infinity",
        parameters={"model": {"model": "momentum"}},
        rows=[ReportRow.check("graph norm", 0.0, 1e-12)],
        summary=ReportSummary(max_residual=0.0, achieved=1.0, passed=passed),
        versions={},
    )


def test_display_report(capsys):
    display_report(_report(True))
    out = capsys.readouterr().out
    assert "psi-infinity" in out
    assert "PASS" in out


def test_display_run_summary(capsys):
    display_run_summary([_report(True), _report(False)])
    out = capsys.readouterr().out
    assert "1 of 2 experiments failed" in out
