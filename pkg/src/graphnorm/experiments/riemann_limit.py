"""
riemann-limit: the normalized kernel sums g(n) = ||psi_n||^2_{+1} / n^2 approach 1/e.
"""

import math

import numpy as np

from ..engines import parallel_map
from ..storage.models import IndexRangeError, ReportRow, RuntimeGuardError
from .common import ExperimentContext, finalize_report, nonincreasing

MAX_N = 1_000_000
LIMIT = math.exp(-1.0)
LIMIT_TOL = 1e-3
EXACT_TOL = 1e-15

COMMAND_DEFINITION = {
    "name": "riemann-limit",
    "description": "Closed-form graph Gram of the Riemann kernel sums psi_n; g(n) -> 1/e.",
    "arguments": {
        "n_list": {"flag": "--n-list", "help": "Comma list of n values", "default": "1,2,10,100,1000,10000"},
    },
}


def riemann_g(n: int) -> float:
    """
    g(n) = (1/n^2) sum_{j,l<n} exp(-|j-l|/n) / 2, by counting pairs at each distance.

    Raises:
        IndexRangeError: If n < 1
        RuntimeGuardError: If n exceeds MAX_N
    """
    if n < 1:
        raise IndexRangeError(f"n must be at least 1, got {n}")
    if n > MAX_N:
        raise RuntimeGuardError(f"n = {n} exceeds the guard of {MAX_N}")
    d = np.arange(1, n, dtype=float)
    off_diagonal = math.fsum(((n - d) * np.exp(-d / n)).tolist())
    return (0.5 * n + off_diagonal) / (n * n)


def execute(ctx: ExperimentContext):
    """
    Run the experiment.

    Args:
        ctx: Run context (uses --n-list)

    Returns:
        ExperimentReport with one row per n and checks on monotone approach
    """
    n_list = ctx.int_list("n_list", COMMAND_DEFINITION["arguments"]["n_list"]["default"])
    values = parallel_map(riemann_g, n_list, ctx.workers)

    rows = []
    for n, g in zip(n_list, values, strict=True):
        gap = abs(g - LIMIT)
        inputs = {"n": n}
        out = {"g": g, "abs_error": gap}
        if n == 1:
            rows.append(ReportRow.check("g(1) = 1/2", abs(g - 0.5), EXACT_TOL, inputs, out))
        elif n == 2:
            exact = (1.0 + math.exp(-0.5)) / 4.0
            rows.append(ReportRow.check("g(2) = (1 + e^-1/2)/4", abs(g - exact), EXACT_TOL, inputs, out))
        elif n >= 10_000:
            rows.append(ReportRow.check(f"|g({n}) - 1/e|", gap, LIMIT_TOL, inputs, out))
        else:
            rows.append(ReportRow.info(f"g({n})", inputs, out))

    ordered = sorted(zip(n_list, values, strict=True))
    errors = [abs(g - LIMIT) for _, g in ordered]
    rows.append(
        ReportRow.verdict(
            "error decreases with n",
            nonincreasing(errors, 0.0),
            values={"errors": errors},
        )
    )
    final = ordered[-1][1] if ordered else math.nan
    return finalize_report(
        COMMAND_DEFINITION["name"],
        {"n_list": n_list},
        rows,
        target=LIMIT,
        achieved=final,
    )
