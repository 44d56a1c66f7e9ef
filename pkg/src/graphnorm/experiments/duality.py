"""
duality: A_M* = C_M, checked on deterministic samples for a handful of span families.
"""

import numpy as np

from ..engines import (
    ExtensionOperator,
    LcgStream,
    adjoint_duality_check,
    extension_decompose,
    extension_input,
    graph_decomposition_residual,
    random_probe,
)
from ..storage.models import ConditionViolationError, ReportRow
from .common import ExperimentContext, finalize_report

DUALITY_TOL = 1e-8
DECOMPOSITION_TOL = 1e-10
DEFAULT_CONFIGS = {
    "momentum": ["", "kernel:0", "kernel:0;kernel:5"],
    "diag": ["", "tail:1,2", "tail:1,2;tail:1,2.25"],
}

COMMAND_DEFINITION = {
    "name": "duality",
    "description": "Adjoint identity <g, A_M u> = <C_M g, u> and the graph decomposition of D(A_M).",
    "arguments": {},
    "default_model": "diag",
}


def _decomposition_rows(E: ExtensionOperator, label: str, n_samples: int, seed: int) -> list[ReportRow]:
    model, family = E.model, E.family
    probes = model.probe_vectors()
    rng = LcgStream(seed)
    orthogonality = 0.0
    recovery = 0.0
    for _ in range(n_samples):
        f = random_probe(model, probes, rng)
        c = rng.coefficients(family.size)
        scale = (1.0 + model.norm(f) + model.norm(model.apply_A(f))) * (1.0 + float(np.linalg.norm(c)))
        orthogonality = max(orthogonality, graph_decomposition_residual(E, f, c) / scale)
        parts = extension_decompose(E, extension_input(E, f, c))
        if parts is None:
            recovery = float("inf")
            continue
        if family.size:
            recovery = max(recovery, float(np.max(np.abs(parts.coefficients - np.asarray(c)))))
    return [
        ReportRow.check(f"{label}: <f, A*phi> = <Af, phi>", orthogonality, DECOMPOSITION_TOL, {"samples": n_samples}),
        ReportRow.check(f"{label}: decompose(f + A*phi) recovers phi", recovery, DECOMPOSITION_TOL, {"samples": n_samples}),
    ]


def execute(ctx: ExperimentContext):
    """
    Run the experiment.

    Args:
        ctx: Run context (uses --model, --symbol, --phi, --samples, --seed); without
            --phi the model's default configurations are run

    Returns:
        ExperimentReport with the duality residual and decomposition checks per family
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
        result = adjoint_duality_check(family, ctx.samples, ctx.seed, ctx.workers)
        worst = max(worst, result.max_residual)
        rows.append(
            ReportRow.check(
                f"{label}: |<g, A_M u> - <C_M g, u>|",
                result.max_residual,
                DUALITY_TOL,
                {"phi": text, "samples": ctx.samples, "seed": ctx.seed},
            )
        )
        rows.extend(_decomposition_rows(E, label, ctx.samples, ctx.seed))

    return finalize_report(
        COMMAND_DEFINITION["name"],
        {"model": model.parameters(), "configurations": configs, "samples": ctx.samples, "seed": ctx.seed},
        rows,
        target=DUALITY_TOL,
        achieved=worst,
    )
