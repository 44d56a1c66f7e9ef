"""
recover: the parameter M is determined by the extension A_M alone.
"""

from ..engines import ExtensionOperator, gap_metric, recover_parameter
from ..storage.models import ConditionViolationError, ReportRow
from .common import ExperimentContext, finalize_report

RECOVERY_TOL = 1e-8
DEFAULT_CONFIGS = {
    "momentum": ["", "kernel:0", "kernel:0;kernel:5"],
    "diag": ["", "tail:1,2"],
}

COMMAND_DEFINITION = {
    "name": "recover",
    "description": "Round trip M -> A_M -> recovered parameter, measured in the gap metric.",
    "arguments": {},
    "default_model": "momentum",
}


def execute(ctx: ExperimentContext):
    """
    Run the experiment.

    Args:
        ctx: Run context (uses --model, --symbol, --phi); without --phi the model's
            default configurations are run

    Returns:
        ExperimentReport with gap(M, recover(A_M)) per configuration
    """
    model = ctx.model(COMMAND_DEFINITION["default_model"])
    phi_text = ctx.option("phi")
    configs = [phi_text] if phi_text is not None else DEFAULT_CONFIGS[model.id]

    rows = []
    worst = 0.0
    for text in configs:
        family = ctx.family(model, text)
        label = f"M = {family.describe()}"
        try:
            E = ExtensionOperator(family)
        except ConditionViolationError as e:
            rows.append(ReportRow.verdict(f"{label}: A_M well defined", False, values={"error": str(e)}))
            continue
        recovered = recover_parameter(E, ctx.workers)
        gap = gap_metric(family, recovered)
        worst = max(worst, gap)
        rows.append(
            ReportRow.check(
                f"gap({label}, recovered)",
                gap,
                RECOVERY_TOL,
                {"phi": text},
                {"rank": family.rank, "recovered_rank": recovered.rank, "recovered": recovered.describe()},
            )
        )

    return finalize_report(
        COMMAND_DEFINITION["name"],
        {"model": model.parameters(), "configurations": configs},
        rows,
        target=RECOVERY_TOL,
        achieved=worst,
    )
