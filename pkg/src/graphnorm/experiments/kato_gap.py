"""
kato-gap: the lifted graphs of span{psi_n} converge to that of span{psi_inf} in the
gap metric.
"""

from ..engines import (
    SpanFamily,
    gap_metric,
    normalized_graph_distance,
    parallel_map,
    restriction_gap,
)
from ..functions import psi_infinity, psi_n
from ..models import MomentumLine
from ..storage.models import ReportRow
from .common import ExperimentContext, finalize_report, nonincreasing

MONOTONE_SLACK = 1e-6
FINAL_BOUND = 0.05
BOUND_FROM_N = 1024
SANITY_TOL = 1e-12

COMMAND_DEFINITION = {
    "name": "kato-gap",
    "description": "Gap between span{psi_n} and span{psi_inf} for growing n.",
    "arguments": {
        "n_list": {"flag": "--n-list", "help": "Comma list of n values", "default": "2,4,8,16,32,64,128,256,512,1024"},
    },
}


def execute(ctx: ExperimentContext):
    """
    Run the experiment.

    Args:
        ctx: Run context (uses --n-list)

    Returns:
        ExperimentReport with delta_n per n, a monotonicity verdict and the final bound
    """
    model = MomentumLine()
    n_list = ctx.int_list("n_list", COMMAND_DEFINITION["arguments"]["n_list"]["default"])
    rank_tol = ctx.settings.rank_tol
    limit = SpanFamily.build(model, [psi_infinity()], rank_tol)

    rows = [ReportRow.check("gap(M, M) = 0", gap_metric(limit, limit), SANITY_TOL)]

    def cell(n: int) -> tuple[float, float, float]:
        psi = psi_n(n)
        family = SpanFamily.build(model, [psi], rank_tol)
        delta = gap_metric(family, limit)
        return delta, restriction_gap(family, limit), normalized_graph_distance(model, psi, limit.generators[0])

    results = parallel_map(cell, n_list, ctx.workers)
    deltas = []
    for n, (delta, restricted, distance) in zip(n_list, results, strict=True):
        deltas.append(delta)
        rows.append(
            ReportRow.info(
                f"delta_{n}",
                {"n": n},
                {"delta": delta, "restriction_gap": restricted, "normalized_distance": distance},
            )
        )

    rows.append(ReportRow.verdict("delta_n nonincreasing", nonincreasing(deltas, MONOTONE_SLACK)))
    if deltas and n_list[-1] >= BOUND_FROM_N:
        rows.append(ReportRow.check(f"delta_{n_list[-1]} below bound", deltas[-1], FINAL_BOUND))
    return finalize_report(
        COMMAND_DEFINITION["name"],
        {"n_list": n_list, "rank_tol": rank_tol},
        rows,
        target=FINAL_BOUND,
        achieved=deltas[-1] if deltas else 0.0,
    )
