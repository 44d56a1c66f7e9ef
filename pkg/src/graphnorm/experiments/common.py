"""
Shared plumbing for experiment commands: run context, model construction, report
assembly.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any

import numpy as np
import scipy

from .. import __version__
from ..config import Settings
from ..engines import SpanFamily
from ..models import HilbertModel, ModelRegistry
from ..parsing import parse_int_list, parse_symbol, parse_vector_list
from ..storage.models import ExperimentReport, LiteralSyntaxError, ReportRow, ReportSummary

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240607
DEFAULT_SAMPLES = 32


@dataclass
class ExperimentContext:
    """
    Everything a command needs: settings plus the raw CLI options.

    Options stay as strings until a command parses them, so a malformed literal is
    reported by the command that uses it.
    """

    settings: Settings = field(default_factory=Settings)
    options: dict[str, Any] = field(default_factory=dict)

    def option(self, name: str, default: Any = None) -> Any:
        value = self.options.get(name)
        return default if value is None else value

    @property
    def seed(self) -> int:
        return int(self.option("seed", DEFAULT_SEED))

    @property
    def samples(self) -> int:
        n = int(self.option("samples", DEFAULT_SAMPLES))
        if n < 1:
            raise LiteralSyntaxError(f"--samples must be positive, got {n}")
        return n

    @property
    def workers(self) -> int:
        return self.settings.workers

    def model_id(self, default: str = "momentum") -> str:
        return self.option("model", default)

    def model(self, default: str = "momentum") -> HilbertModel:
        """
        Build the model selected by --model/--symbol.

        Raises:
            LiteralSyntaxError: If the model id or symbol is malformed
        """
        model_id = self.model_id(default)
        symbol_text = self.option("symbol")
        try:
            return ModelRegistry.create(
                model_id,
                symbol=parse_symbol(symbol_text) if symbol_text else None,
                eps=self.settings.eps,
                max_index=self.settings.max_index,
            )
        except ValueError as e:
            raise LiteralSyntaxError(str(e)) from e

    def int_list(self, name: str, default: str, minimum: int = 1) -> list[int]:
        return parse_int_list(self.option(name, default), minimum)

    def family(self, model: HilbertModel, text: str) -> SpanFamily:
        return SpanFamily.build(model, parse_vector_list(model, text), self.settings.rank_tol, self.workers)

    def with_options(self, **options) -> "ExperimentContext":
        merged = dict(self.options)
        merged.update(options)
        return ExperimentContext(self.settings, merged)


def versions() -> dict[str, str]:
    return {"graphnorm": __version__, "numpy": np.__version__, "scipy": scipy.__version__}


def finalize_report(
    command: str,
    parameters: dict[str, Any],
    rows: Sequence[ReportRow],
    target: float | None = None,
    achieved: float | None = None,
) -> ExperimentReport:
    """
    Assemble the report; it passes iff every row passes.

    max_residual is the largest residual of any checked row (inf if one is inf);
    achieved defaults to max_residual.
    """
    residuals = [row.residual for row in rows if row.residual is not None]
    max_residual = max(residuals, default=0.0)
    if any(math.isnan(r) for r in residuals):
        max_residual = math.nan
    passed = all(row.passed for row in rows)
    summary = ReportSummary(
        max_residual=max_residual,
        achieved=max_residual if achieved is None else achieved,
        passed=passed,
        target=target,
    )
    report = ExperimentReport(
        command=command,
        parameters=parameters,
        rows=list(rows),
        summary=summary,
        versions=versions(),
        created_at=datetime.now(timezone.utc),
    )
    level = logging.INFO if passed else logging.WARNING
    logger.log(level, f"{command}: {len(rows)} rows, pass={passed}, max residual {max_residual:.3e}")
    return report


def nonincreasing(values: Sequence[float], slack: float) -> bool:
    return all(b <= a + slack for a, b in zip(values, values[1:], strict=False))
