import csv
import json

import pytest

from graphnorm.storage import ExperimentReport, ReportRow, ReportStore, ReportSummary


@pytest.fixture
def store(tmp_path) -> ReportStore:
    return ReportStore(tmp_path / "reports")


@pytest.fixture
def report() -> ExperimentReport:
    rows = [
        ReportRow.check("n=1", 0.0, 1e-9, inputs={"n": 1}, values={"g": 0.5}),
        ReportRow.info("n=2", inputs={"n": 2}, values={"g": 0.4016, "z": 1j}),
    ]
    return ExperimentReport(
        command="riemann",
        parameters={"n_list": [1, 2]},
        rows=rows,
        summary=ReportSummary(max_residual=0.0, achieved=0.4016, passed=True),
        versions={"graphnorm": "0.1.0"},
    )


def test_resolve_places_bare_names_under_report_dir(store, tmp_path):
    assert store.resolve("out.json") == tmp_path / "reports" / "out.json"
    nested = tmp_path / "elsewhere" / "out.json"
    assert store.resolve(nested) == nested


def test_save_and_load_json(store, report):
    path = store.save_json(report, "riemann.json")
    assert path.exists()
    assert json.loads(path.read_text())["schema"] == 1
    loaded = store.load("riemann.json")
    assert loaded.command == "riemann"
    assert loaded.rows[1].values["z"] == 1j
    assert store.load(path).passed


def test_save_csv(store, report, tmp_path):
    path = store.save_csv(report, tmp_path / "csv" / "rows.csv")
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        records = list(reader)
    assert reader.fieldnames[:4] == ["label", "status", "residual", "tolerance"]
    assert "inputs.n" in reader.fieldnames
    assert "values.z" in reader.fieldnames
    assert records[0]["status"] == "pass"
    assert records[0]["values.z"] == ""
    assert records[1]["residual"] == ""
    assert json.loads(records[1]["values.z"]) == {"re": 0.0, "im": 1.0}


def test_load_missing_file(store):
    with pytest.raises(FileNotFoundError):
        store.load("missing.json")
