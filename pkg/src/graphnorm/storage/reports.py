"""
Report persistence: one JSON document per command, optional flat CSV of the rows.
"""

import csv
import json
import logging
from pathlib import Path
from typing import Any

from .models import ExperimentReport

logger = logging.getLogger(__name__)

CSV_FIXED_COLUMNS = ["label", "status", "residual", "tolerance"]


class ReportStore:
    """
    Reads and writes experiment reports.

    Paths without a directory component are placed under report_dir.
    """

    def __init__(self, report_dir: str | Path = "reports"):
        self.report_dir = Path(report_dir)

    def resolve(self, path: str | Path) -> Path:
        path = Path(path)
        if path.parent == Path("."):
            return self.report_dir / path
        return path

    def save_json(self, report: ExperimentReport, path: str | Path) -> Path:
        """Write the report; float values keep full repr precision."""
        target = self.resolve(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8") as f:
            json.dump(report.to_dict(), f, indent=2)
            f.write("\n")
        logger.info(f"Wrote {report.command} report to {target}")
        return target

    def save_csv(self, report: ExperimentReport, path: str | Path) -> Path:
        """Flatten rows into columns label/status/residual/tolerance plus inputs.* and values.*."""
        target = self.resolve(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        records = [_flatten_row(row.to_dict()) for row in report.rows]
        extra: list[str] = []
        for record in records:
            for key in record:
                if key not in CSV_FIXED_COLUMNS and key not in extra:
                    extra.append(key)
        with open(target, "w", encoding="utf-8", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=CSV_FIXED_COLUMNS + extra, restval="")
            writer.writeheader()
            writer.writerows(records)
        logger.info(f"Wrote {len(records)} CSV rows to {target}")
        return target

    def load(self, path: str | Path) -> ExperimentReport:
        """
        Read a JSON report.

        Raises:
            FileNotFoundError: If the file does not exist
            ValueError: If the schema version is not supported
        """
        target = Path(path)
        if not target.exists():
            target = self.resolve(path)
        with open(target, encoding="utf-8") as f:
            data = json.load(f)
        return ExperimentReport.from_dict(data)


def _flatten_row(row: dict[str, Any]) -> dict[str, Any]:
    record = {
        "label": row["label"],
        "status": row["status"],
        "residual": _cell(row["residual"]),
        "tolerance": _cell(row["tolerance"]),
    }
    for section in ("inputs", "values"):
        for key, value in row[section].items():
            record[f"{section}.{key}"] = _cell(value)
    return record


def _cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    return value
