"""
all: every experiment with default parameters, model-dependent ones on both bundled models.
"""

import logging
from collections.abc import Callable

from ..models import ModelRegistry
from ..storage.models import ExperimentReport
from .common import ExperimentContext

logger = logging.getLogger(__name__)

# per-run literals that only make sense for one model
MODEL_SPECIFIC_OPTIONS = ("phi", "functional", "psi", "symbol")

COMMAND_DEFINITION = {
    "name": "all",
    "description": "Run every experiment with default parameters; exit 0 iff all pass.",
    "arguments": {},
}


def execute(ctx: ExperimentContext, commands: dict[str, tuple[dict, Callable]]) -> list[ExperimentReport]:
    """
    Run the experiments.

    Args:
        ctx: Run context; --samples, --seed and --workers carry over, vector literals do not
        commands: Command registry, name -> (COMMAND_DEFINITION, execute)

    Returns:
        One ExperimentReport per (command, model) in registry order
    """
    base = ctx.with_options(**{key: None for key in MODEL_SPECIFIC_OPTIONS}, model=None)
    reports = []
    for name, (definition, run) in commands.items():
        if "default_model" not in definition:
            reports.append(run(base))
            continue
        for model_id in ModelRegistry.ids():
            logger.info(f"all: {name} on {model_id}")
            reports.append(run(base.with_options(model=model_id)))
    failed = [r.command for r in reports if not r.passed]
    logger.info(f"all: {len(reports)} reports, {len(failed)} failing {failed}")
    return reports
