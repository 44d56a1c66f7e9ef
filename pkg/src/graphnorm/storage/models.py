"""
Data models for experiment reports.
Uses dataclasses for clean, type-hinted report records.
Also hosts the exception hierarchy shared by every layer of the package.
"""

import math
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any

REPORT_SCHEMA_VERSION = 1

# ===== Enum Definitions =====


class ModelKind(Enum):
    """Bundled operator models"""

    MOMENTUM = "momentum"
    DIAGONAL = "diag"


class RowStatus(Enum):
    """Outcome of a single report row"""

    PASS = "pass"
    FAIL = "fail"
    INFO = "info"


# ===== Custom Exceptions =====


class GraphNormError(Exception):
    """Base class for every error raised by graphnorm"""

    pass


class NotHermitianError(GraphNormError):
    """Raised when a matrix violates the Hermitian invariant"""

    pass


class NotGramMatrixError(GraphNormError):
    """Raised when a matrix has an eigenvalue below -1e-10 * ||G||"""

    pass


class IndexRangeError(GraphNormError):
    """Raised when index sets point outside a Gram matrix"""

    pass


class NotSquareIntegrableError(GraphNormError):
    """Raised when an L2 operand is required but the membership flag fails"""

    pass


class DomainViolationError(GraphNormError):
    """Raised when a vector lies outside the domain an operation needs"""

    pass


class ConditionViolationError(GraphNormError):
    """Raised when a span family fails the well-definedness condition of an extension"""

    pass


class SeriesBoundError(GraphNormError):
    """Raised when a certified sum cannot reach its target accuracy"""

    def __init__(self, message: str, achieved_bound: float, last_index: int):
        super().__init__(message)
        self.achieved_bound = achieved_bound
        self.last_index = last_index


class UnsupportedOperationError(GraphNormError):
    """Raised when a model or configuration cannot perform an operation"""

    pass


class ModelMismatchError(GraphNormError):
    """Raised when two span families live over different models"""

    pass


class ConfigurationError(GraphNormError):
    """Raised when an environment setting cannot be parsed"""

    pass


class LiteralSyntaxError(GraphNormError):
    """Raised when a CLI literal (vector, symbol, functional, list) cannot be parsed"""

    pass


class RuntimeGuardError(GraphNormError):
    """Raised when a requested parameter exceeds a desk-scale runtime guard"""

    pass


# ===== Report Dataclasses =====


@dataclass
class ReportRow:
    """One row of an experiment: inputs, computed values and an optional tolerance check"""

    label: str
    inputs: dict[str, Any] = field(default_factory=dict)
    values: dict[str, Any] = field(default_factory=dict)
    residual: float | None = None
    tolerance: float | None = None
    status: RowStatus = RowStatus.INFO

    @classmethod
    def check(
        cls,
        label: str,
        residual: float,
        tolerance: float,
        inputs: dict[str, Any] | None = None,
        values: dict[str, Any] | None = None,
    ) -> "ReportRow":
        """Build a row that passes when residual <= tolerance (NaN never passes)."""
        residual = float(residual)
        passed = not math.isnan(residual) and residual <= tolerance
        return cls(
            label=label,
            inputs=inputs or {},
            values=values or {},
            residual=residual,
            tolerance=tolerance,
            status=RowStatus.PASS if passed else RowStatus.FAIL,
        )

    @classmethod
    def verdict(
        cls,
        label: str,
        passed: bool,
        inputs: dict[str, Any] | None = None,
        values: dict[str, Any] | None = None,
    ) -> "ReportRow":
        """Build a row carrying a boolean verdict instead of a numeric tolerance."""
        return cls(
            label=label,
            inputs=inputs or {},
            values=values or {},
            status=RowStatus.PASS if passed else RowStatus.FAIL,
        )

    @classmethod
    def info(
        cls,
        label: str,
        inputs: dict[str, Any] | None = None,
        values: dict[str, Any] | None = None,
    ) -> "ReportRow":
        """Build a row that only records values."""
        return cls(label=label, inputs=inputs or {}, values=values or {})

    @property
    def passed(self) -> bool:
        return self.status != RowStatus.FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "inputs": encode_value(self.inputs),
            "values": encode_value(self.values),
            "residual": encode_value(self.residual),
            "tolerance": encode_value(self.tolerance),
            "status": self.status.value,
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ReportRow":
        residual = decode_value(data.get("residual"))
        tolerance = decode_value(data.get("tolerance"))
        return cls(
            label=data["label"],
            inputs=decode_value(data.get("inputs", {})),
            values=decode_value(data.get("values", {})),
            residual=None if residual is None else float(residual),
            tolerance=None if tolerance is None else float(tolerance),
            status=RowStatus(data.get("status", RowStatus.INFO.value)),
        )


@dataclass
class ReportSummary:
    """Aggregate verdict of a report"""

    max_residual: float
    achieved: float
    passed: bool
    target: float | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_residual": encode_value(self.max_residual),
            "target": encode_value(self.target),
            "achieved": encode_value(self.achieved),
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ReportSummary":
        target = decode_value(data.get("target"))
        return cls(
            max_residual=float(decode_value(data["max_residual"])),
            achieved=float(decode_value(data["achieved"])),
            passed=bool(data["pass"]),
            target=None if target is None else float(target),
        )


@dataclass
class ExperimentReport:
    """Machine-readable output record of one CLI command"""

    command: str
    parameters: dict[str, Any]
    rows: list[ReportRow]
    summary: ReportSummary
    versions: dict[str, str]
    created_at: datetime | None = None
    schema: int = REPORT_SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return self.summary.passed

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": self.schema,
            "command": self.command,
            "parameters": encode_value(self.parameters),
            "rows": [row.to_dict() for row in self.rows],
            "summary": self.summary.to_dict(),
            "versions": dict(self.versions),
            "created_at": datetime_to_json(self.created_at),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ExperimentReport":
        schema = data.get("schema")
        if schema != REPORT_SCHEMA_VERSION:
            raise ValueError(f"Unsupported report schema: {schema!r}")
        return cls(
            command=data["command"],
            parameters=decode_value(data.get("parameters", {})),
            rows=[ReportRow.from_dict(row) for row in data.get("rows", [])],
            summary=ReportSummary.from_dict(data["summary"]),
            versions=dict(data.get("versions", {})),
            created_at=datetime_from_json(data.get("created_at")),
            schema=schema,
        )


# ===== Helper Functions =====


def encode_value(value: Any) -> Any:
    """Convert complex numbers, numpy scalars and containers into JSON-safe values."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return _encode_float(value)
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    # numpy scalars and arrays expose item()/tolist()
    if hasattr(value, "tolist"):
        return encode_value(value.tolist())
    if hasattr(value, "item"):
        return encode_value(value.item())
    return str(value)


def decode_value(value: Any) -> Any:
    """Inverse of encode_value for the shapes it produces."""
    if isinstance(value, dict):
        if set(value) == {"re", "im"}:
            return complex(_decode_float(value["re"]), _decode_float(value["im"]))
        return {k: decode_value(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode_value(v) for v in value]
    if isinstance(value, str) and value in ("inf", "-inf", "nan"):
        return float(value)
    return value


def _encode_float(x: float) -> float | str:
    # JSON has no infinities; strings keep the round trip lossless
    if math.isfinite(x):
        return x
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


def _decode_float(x: Any) -> float:
    return float(x)


def datetime_to_json(dt: datetime | None) -> str | None:
    """Convert datetime to an ISO8601 string for report files"""
    return dt.isoformat() if dt else None


def datetime_from_json(s: str | None) -> datetime | None:
    """Convert an ISO8601 string from a report file to a datetime object"""
    return datetime.fromisoformat(s) if s else None
