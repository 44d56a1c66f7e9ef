"""
reproducing-kernel: <f, phi_lam>_{+1} = conj(f(lam)) on random probes, and the
closed-form kernel Gram against generic inner products.
"""

import numpy as np

from ..engines import LcgStream, gram_matrix, parallel_map, random_probe
from ..functions import kernel_phi
from ..storage.models import ReportRow
from .common import ExperimentContext, finalize_report

IDENTITY_TOL = 1e-10
GRAM_TOL = 1e-12
N_DRAWS = 100
LOCATION_RANGE = 3.0
MAX_COORDINATE = 10
GRAM_NODES = (-2.5, -1.0, 0.0, 1.0 / 3.0, 0.5, 2.0, 4.25)

COMMAND_DEFINITION = {
    "name": "reproducing-kernel",
    "description": "Reproducing identity of point-evaluation representatives and the closed-form kernel Gram.",
    "arguments": {},
    "default_model": "momentum",
}


def _location(model_id: str, rng: LcgStream) -> float:
    if model_id == "diag":
        return float(1 + rng.choice(MAX_COORDINATE))
    return LOCATION_RANGE * rng.uniform()


def _gram_rows(model, ctx: ExperimentContext) -> list[ReportRow]:
    kernels = [kernel_phi(lam) for lam in GRAM_NODES]
    probes = model.probe_vectors()
    rows = []
    for graph in (True, False):
        inner = model.graph_inner if graph else model.inner
        fast = gram_matrix(model, kernels, graph=graph, workers=ctx.workers)
        generic = np.array([[inner(u, v) for v in kernels] for u in kernels])
        label = "graph" if graph else "ambient"
        rows.append(ReportRow.check(f"closed-form {label} Gram of kernels", float(np.max(np.abs(fast - generic))), GRAM_TOL))
    cross = gram_matrix(model, kernels, probes, graph=True, workers=ctx.workers)
    generic = np.array([[model.graph_inner(u, v) for v in probes] for u in kernels])
    rows.append(ReportRow.check("kernel x probe Gram by point evaluation", float(np.max(np.abs(cross - generic))), GRAM_TOL))
    return rows


def execute(ctx: ExperimentContext):
    """
    Run the experiment.

    Args:
        ctx: Run context (uses --model, --symbol, --seed)

    Returns:
        ExperimentReport with the worst scaled reproducing residual over the draws and,
        on the momentum model, the Gram fast-path comparison
    """
    model = ctx.model(COMMAND_DEFINITION["default_model"])
    probes = model.probe_vectors()
    rng = LcgStream(ctx.seed)
    draws = []
    for _ in range(N_DRAWS):
        f = random_probe(model, probes, rng)
        draws.append((f, _location(model.id, rng)))

    def residual(draw) -> float:
        f, lam = draw
        rep = model.point_representative(lam)
        value = model.graph_inner(f, rep)
        return abs(value - np.conj(model.point_value(f, lam))) / (1.0 + model.graph_norm(f))

    residuals = parallel_map(residual, draws, ctx.workers)
    worst = max(residuals, default=0.0)
    rows = [
        ReportRow.check(
            "|<f, phi_lam>_{+1} - conj(f(lam))| / (1 + ||f||_{+1})",
            worst,
            IDENTITY_TOL,
            {"draws": N_DRAWS, "seed": ctx.seed},
            {"locations": [lam for _, lam in draws[:10]]},
        )
    ]
    if model.id == "momentum":
        rows.extend(_gram_rows(model, ctx))

    return finalize_report(
        COMMAND_DEFINITION["name"],
        {"model": model.parameters(), "draws": N_DRAWS, "seed": ctx.seed},
        rows,
        target=IDENTITY_TOL,
        achieved=worst,
    )
