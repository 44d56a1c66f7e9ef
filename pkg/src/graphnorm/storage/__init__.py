"""
Storage package for graphnorm reports.

Provides:
- Report dataclasses and enums
- The shared exception hierarchy
- JSON/CSV persistence
"""

# Models
from .models import (
    REPORT_SCHEMA_VERSION,
    # Exceptions
    ConditionViolationError,
    ConfigurationError,
    DomainViolationError,
    # Records
    ExperimentReport,
    GraphNormError,
    IndexRangeError,
    LiteralSyntaxError,
    ModelKind,
    ModelMismatchError,
    NotGramMatrixError,
    NotHermitianError,
    NotSquareIntegrableError,
    ReportRow,
    ReportSummary,
    # Enums
    RowStatus,
    RuntimeGuardError,
    SeriesBoundError,
    UnsupportedOperationError,
    datetime_from_json,
    # Helper functions
    datetime_to_json,
    decode_value,
    encode_value,
)

# Persistence
from .reports import ReportStore

__all__ = [
    "REPORT_SCHEMA_VERSION",
    # Enums
    "ModelKind",
    "RowStatus",
    # Exceptions
    "GraphNormError",
    "NotHermitianError",
    "NotGramMatrixError",
    "IndexRangeError",
    "NotSquareIntegrableError",
    "DomainViolationError",
    "ConditionViolationError",
    "SeriesBoundError",
    "UnsupportedOperationError",
    "ModelMismatchError",
    "ConfigurationError",
    "LiteralSyntaxError",
    "RuntimeGuardError",
    # Records
    "ReportRow",
    "ReportSummary",
    "ExperimentReport",
    # Helper functions
    "encode_value",
    "decode_value",
    "datetime_to_json",
    "datetime_from_json",
    # Persistence
    "ReportStore",
]
