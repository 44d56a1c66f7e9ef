"""
psi-infinity: the limit function psi_inf solves psi - psi'' = sqrt(e) * indicator[0, 1],
has unit graph norm and lies in H2.
"""

import math

import numpy as np

from ..engines import norm_minus_one
from ..functions import (
    derivative,
    in_h2,
    interval_indicator,
    jump_vector,
    linear_combination,
    max_coefficient_gap,
    psi_infinity,
)
from ..models import MomentumLine
from ..storage.models import ReportRow
from .common import ExperimentContext, finalize_report

IDENTITY_TOL = 1e-12
NORM_TOL = 1e-9

COMMAND_DEFINITION = {
    "name": "psi-infinity",
    "description": "Symbolic check of psi_inf - psi_inf'' = sqrt(e) chi_[0,1], its graph norm and H2 membership.",
    "arguments": {},
}


def execute(ctx: ExperimentContext):
    """
    Run the experiment.

    Args:
        ctx: Run context (no command-specific options)

    Returns:
        ExperimentReport with identity, norm and membership rows
    """
    model = MomentumLine()
    psi = psi_infinity()
    dpsi = derivative(psi)
    source = interval_indicator(0.0, 1.0, math.sqrt(math.e))
    lhs = linear_combination([psi, derivative(dpsi)], [1.0, -1.0])

    rows = [
        ReportRow.check(
            "psi - psi'' - sqrt(e) chi coefficients",
            max_coefficient_gap(lhs, source),
            IDENTITY_TOL,
            values={"breakpoints": list(psi.breakpoints)},
        )
    ]

    bps = [0.0, 1.0]
    continuity = float(np.max(np.abs(np.concatenate([jump_vector(psi, bps), jump_vector(dpsi, bps)]))))
    rows.append(ReportRow.check("jumps of psi and psi' at 0 and 1", continuity, IDENTITY_TOL))

    norm = model.graph_norm(psi)
    rows.append(ReportRow.check("||psi_inf||_{+1} - 1", abs(norm - 1.0), NORM_TOL, values={"graph_norm": norm}))

    rows.append(ReportRow.verdict("psi_inf in H2 = D(AA*)", in_h2(psi), values={"in_h2": in_h2(psi)}))

    # the functional sqrt(e) * int_0^1 has representative psi_inf, so both norms agree
    minus_one = norm_minus_one(model, source)
    rows.append(
        ReportRow.check(
            "||sqrt(e) chi||_{-1} - ||psi_inf||_{+1}",
            abs(minus_one - norm),
            NORM_TOL,
            values={"norm_minus_one": minus_one},
        )
    )
    return finalize_report(COMMAND_DEFINITION["name"], {"model": model.id}, rows, target=1.0, achieved=norm)
