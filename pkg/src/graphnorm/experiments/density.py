"""
density: decide whether C_M is densely defined, with an orthogonal witness when it is not.
"""

import math

from ..engines import MinusOneFunctional, density_criterion, density_decision
from ..functions import interval_indicator, max_coefficient_gap
from ..storage.models import ReportRow
from .common import ExperimentContext, finalize_report

ORTHOGONALITY_TOL = 1e-9
WITNESS_TOL = 1e-12
DEFAULT_PHI = {"momentum": "psi_inf", "diag": "tail:1,2"}

COMMAND_DEFINITION = {
    "name": "density",
    "description": "Dense-definedness of C_M for M = span(--phi); emits the witness (1 + AA*)phi when not dense.",
    "arguments": {},
    "default_model": "momentum",
}


def execute(ctx: ExperimentContext):
    """
    Run the experiment.

    Args:
        ctx: Run context (uses --model, --symbol, --phi, --samples, --seed)

    Returns:
        ExperimentReport with the decision, witness diagnostics and the agreement with
        the functional-side criterion
    """
    model = ctx.model(COMMAND_DEFINITION["default_model"])
    phi_text = ctx.option("phi", DEFAULT_PHI[model.id])
    family = ctx.family(model, phi_text)
    result = density_decision(family, ctx.samples, ctx.seed)

    rows = [
        ReportRow.info(
            "C_M densely defined",
            {"M": family.describe()},
            {"dense": result.dense, "rank": family.rank},
        )
    ]
    if not result.dense:
        rows.append(
            ReportRow.info(
                "witness",
                values={
                    "phi": model.describe(result.witness),
                    "coefficients": result.coefficients,
                    "embedding": model.vector_to_dict(result.embedding),
                },
            )
        )
        rows.append(ReportRow.verdict("witness (1 + AA*)phi nonzero", result.embedding_norm > 0, values={"norm": result.embedding_norm}))
        rows.append(
            ReportRow.check(
                f"witness orthogonal to {ctx.samples} D(C_M) samples",
                result.max_orthogonality,
                ORTHOGONALITY_TOL,
                {"samples": ctx.samples, "seed": ctx.seed},
            )
        )
        if model.id == "momentum" and phi_text.strip() == "psi_inf":
            expected = interval_indicator(0.0, 1.0, math.sqrt(math.e))
            rows.append(
                ReportRow.check(
                    "witness = sqrt(e) chi_[0,1]",
                    max_coefficient_gap(result.embedding, expected),
                    WITNESS_TOL,
                )
            )

    functionals = [MinusOneFunctional(model, g) for g in family.generators]
    criterion = density_criterion(model, functionals, family.rank_tol)
    rows.append(
        ReportRow.verdict(
            "density_criterion agrees",
            criterion.dense == result.dense,
            values={"criterion_dense": criterion.dense},
        )
    )

    return finalize_report(
        COMMAND_DEFINITION["name"],
        {"model": model.parameters(), "phi": phi_text, "samples": ctx.samples, "seed": ctx.seed},
        rows,
        target=ORTHOGONALITY_TOL,
        achieved=result.max_orthogonality,
    )
