"""
closability: graph distance from psi_inf to kernel spans on rational grids (shrinks to
zero) and on integer grids (stabilizes at a positive value).
"""

import logging
import math

from ..engines import SpanFamily, graph_project, parallel_map
from ..functions import kernel_phi, psi_infinity
from ..models import MomentumLine
from ..storage.models import ReportRow
from .common import ExperimentContext, finalize_report, nonincreasing

logger = logging.getLogger(__name__)

MONOTONE_SLACK = 1e-9
RATIONAL_BOUND = 0.05
BOUND_FROM_M = 1024
BOUND_SLACK = 1e-12
STABILITY_RATIO = 0.1
IRRATIONAL_NODE = 1.0 / math.sqrt(2.0)

COMMAND_DEFINITION = {
    "name": "closability",
    "description": "Distances from psi_inf (and phi_{1/sqrt 2}) to kernel spans over 1/m grids and integer grids.",
    "arguments": {
        "n_list": {"flag": "--n-list", "help": "Comma list of grid denominators m", "default": "1,2,4,8,16,32,64,128,256,512,1024"},
        "k_list": {"flag": "--K-list", "help": "Comma list of integer cutoffs K", "default": "1,2,4,8,16,32"},
    },
}


def rational_family(model: MomentumLine, m: int, rank_tol: float) -> SpanFamily:
    """span{phi_{j/m} : j = 0..m}"""
    return SpanFamily.build(model, [kernel_phi(j / m) for j in range(m + 1)], rank_tol)


def integer_family(model: MomentumLine, k: int, rank_tol: float) -> SpanFamily:
    """span{phi_z : |z| <= K}"""
    return SpanFamily.build(model, [kernel_phi(float(z)) for z in range(-k, k + 1)], rank_tol)


def _distances(family: SpanFamily, targets: list) -> tuple[list[float], int]:
    dropped = family.frame.dropped
    if dropped:
        logger.warning(f"{family.describe()}: {dropped} Gram directions below rank tolerance")
    return [graph_project(family, t).distance for t in targets], dropped


def execute(ctx: ExperimentContext):
    """
    Run the experiment.

    Args:
        ctx: Run context (uses --n-list for m and --K-list)

    Returns:
        ExperimentReport with d_rat(m), d_int(K), the kernel-approximation supplement and
        the monotonicity/stabilization verdicts
    """
    model = MomentumLine()
    rank_tol = ctx.settings.rank_tol
    m_list = ctx.int_list("n_list", COMMAND_DEFINITION["arguments"]["n_list"]["default"])
    k_list = ctx.int_list("k_list", COMMAND_DEFINITION["arguments"]["k_list"]["default"])
    psi = psi_infinity()
    phi_irrational = kernel_phi(IRRATIONAL_NODE)
    targets = [psi, phi_irrational]

    rows = []
    rational = parallel_map(lambda m: _distances(rational_family(model, m, rank_tol), targets), m_list, ctx.workers)
    d_rat = []
    for m, ((d_psi, d_phi), dropped) in zip(m_list, rational, strict=True):
        d_rat.append(d_psi)
        rows.append(ReportRow.info(f"d_rat({m})", {"m": m}, {"distance": d_psi, "dropped_directions": dropped}))
        # the nearest node sits within 1/(2m), which bounds the distance of phi_{1/sqrt 2}
        bound = math.sqrt(0.5 * (1.0 - math.exp(-1.0 / m)))
        excess = max(0.0, d_phi - bound)
        rows.append(ReportRow.check(f"d_kernel_rat({m})", excess, BOUND_SLACK, {"m": m}, {"distance": d_phi, "bound": bound}))

    integer = parallel_map(lambda k: _distances(integer_family(model, k, rank_tol), targets), k_list, ctx.workers)
    d_int = []
    for k, ((d_psi, d_phi), dropped) in zip(k_list, integer, strict=True):
        d_int.append(d_psi)
        rows.append(ReportRow.info(f"d_int({k})", {"K": k}, {"distance": d_psi, "dropped_directions": dropped}))
        rows.append(ReportRow.info(f"d_kernel_int({k})", {"K": k}, {"distance": d_phi}))

    rows.append(ReportRow.verdict("d_rat nonincreasing in m", nonincreasing(d_rat, MONOTONE_SLACK)))
    if d_rat and m_list[-1] >= BOUND_FROM_M:
        rows.append(ReportRow.check(f"d_rat({m_list[-1]}) below bound", d_rat[-1], RATIONAL_BOUND))
    if len(d_int) >= 2:
        previous, final = d_int[-2], d_int[-1]
        rows.append(
            ReportRow.check(
                f"|d_int({k_list[-1]}) - d_int({k_list[-2]})| relative",
                abs(final - previous) / previous if previous > 0 else math.inf,
                STABILITY_RATIO,
            )
        )
        rows.append(ReportRow.verdict(f"d_int({k_list[-1]}) > 0", final > 0, values={"limit": final}))

    return finalize_report(
        COMMAND_DEFINITION["name"],
        {"m_list": m_list, "k_list": k_list, "rank_tol": rank_tol},
        rows,
        target=RATIONAL_BOUND,
        achieved=d_rat[-1] if d_rat else 0.0,
    )
