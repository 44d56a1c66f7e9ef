"""
vonneumann: defect vectors, the circle of self-adjoint extensions C_{phi,theta} and the
rank-one resolvent formula, for a rank-one restriction of a self-adjoint model.
"""

import itertools
import math

from ..engines import (
    ExtensionParameter,
    RankOneRestrictionConfig,
    defect_vectors,
    domain_samples,
    extension_apply_theta,
    parallel_map,
    rank_one_resolvent,
    symmetric_pairing_check,
    verify_resolvent_round_trip,
)
from ..parsing import parse_theta_list, parse_vector, parse_vector_list
from ..storage.models import ReportRow
from .common import ExperimentContext, finalize_report

DEFECT_TOL = 1e-10
NORM_TOL = 1e-9
ROUND_TRIP_TOL = 1e-8
TRIVIAL_ROUND_TRIP_TOL = 1e-10
PAIRING_TOL = 1e-9
IDENTITY_TOL = 1e-12
INJECTIVITY_GAP = 1e-6

DEFAULT_PHI = {"momentum": "kernel:0", "diag": "tail:1,2"}
DEFAULT_PSI = {"momentum": "chi:0,1;kernel:0.5;kernel:-1", "diag": "e:1;e:2;e:3;e:4;e:5"}
DEFAULT_THETA = "0,pi/2,-pi/2,2,pi"

COMMAND_DEFINITION = {
    "name": "vonneumann",
    "description": "Defect spaces, self-adjoint extensions C_{phi,theta} and the rank-one resolvent difference.",
    "arguments": {},
    "default_model": "diag",
}


def _line_distance(model, u, v) -> float:
    """sqrt(1 - |<u, v>|^2 / (||u||^2 ||v||^2)): sine of the angle between two lines of H."""
    nu, nv = model.norm(u), model.norm(v)
    overlap = min(1.0, abs(model.inner(u, v)) / (nu * nv))
    return math.sqrt(max(0.0, 1.0 - overlap * overlap))


def execute(ctx: ExperimentContext):
    """
    Run the experiment.

    Args:
        ctx: Run context (uses --model, --symbol, --phi, --theta, --psi, --samples, --seed)

    Returns:
        ExperimentReport with defect identities, resolvent round trips per (theta, psi)
        and symmetry residuals

    Raises:
        UnsupportedOperationError: If the model is not self-adjoint
    """
    model = ctx.model(COMMAND_DEFINITION["default_model"])
    phi_text = ctx.option("phi", DEFAULT_PHI[model.id])
    psi_text = ctx.option("psi", DEFAULT_PSI[model.id])
    theta_text = ctx.option("theta", DEFAULT_THETA)
    thetas = [ExtensionParameter(t) for t in parse_theta_list(theta_text)]
    psis = parse_vector_list(model, psi_text)
    cfg = RankOneRestrictionConfig.build(model, parse_vector(model, phi_text))

    defect = defect_vectors(cfg)
    rows = [
        ReportRow.check("C_phi* n_+ = i n_+", defect.residual_plus, DEFECT_TOL),
        ReportRow.check("C_phi* n_- = -i n_-", defect.residual_minus, DEFECT_TOL),
        ReportRow.check("||n_+|| = 1", abs(defect.norm_plus - 1.0), NORM_TOL, values={"norm": defect.norm_plus}),
        ReportRow.check("||n_-|| = 1", abs(defect.norm_minus - 1.0), NORM_TOL, values={"norm": defect.norm_minus}),
    ]

    for theta in thetas:
        coefficient = theta.resolvent_coefficient
        if theta.is_trivial:
            rows.append(ReportRow.check("rank-one coefficient at theta = pi", abs(coefficient), 0.0))
        else:
            rows.append(ReportRow.info(f"rank-one coefficient at theta = {theta.theta:.6g}", values={"coefficient": coefficient}))

    domain_lines = [cfg.domain_vector(theta) for theta in thetas]
    if len(thetas) >= 2:
        separation = min(
            _line_distance(model, domain_lines[i], domain_lines[j])
            for i, j in itertools.combinations(range(len(thetas)), 2)
        )
        distinct = len({theta.theta for theta in thetas}) == len(thetas)
        rows.append(
            ReportRow.verdict(
                "distinct theta give distinct extensions",
                not distinct or separation > INJECTIVITY_GAP,
                values={"min_separation": separation},
            )
        )

    cells = list(itertools.product(thetas, psis))
    trips = parallel_map(lambda cell: verify_resolvent_round_trip(cfg, cell[0], cell[1]), cells, ctx.workers)
    for (theta, psi), trip in zip(cells, trips, strict=True):
        tol = TRIVIAL_ROUND_TRIP_TOL if theta.is_trivial else ROUND_TRIP_TOL
        values = {"lambda": trip.lam, "membership_residual": trip.membership_residual}
        if trip.diagnostics:
            values["diagnostics"] = trip.diagnostics
        rows.append(
            ReportRow.check(
                f"(C_theta + i) R psi = psi, theta = {theta.theta:.6g}, psi = {model.describe(psi)}",
                trip.residual,
                tol,
                {"theta": theta.theta},
                values,
            )
        )

    for theta in (t for t in thetas if t.is_trivial):
        for psi in psis:
            difference = model.sub(rank_one_resolvent(cfg, theta, psi), model.resolvent_at(1, psi))
            rows.append(ReportRow.check(f"theta = pi gives (S + i)^-1 {model.describe(psi)}", model.norm(difference), IDENTITY_TOL))

    rows.append(
        ReportRow.check(
            "C_phi symmetric",
            symmetric_pairing_check(cfg, None, ctx.samples, ctx.seed),
            PAIRING_TOL,
            {"samples": ctx.samples},
        )
    )
    for theta in thetas:
        rows.append(
            ReportRow.check(
                f"C_theta symmetric, theta = {theta.theta:.6g}",
                symmetric_pairing_check(cfg, theta, ctx.samples, ctx.seed),
                PAIRING_TOL,
                {"samples": ctx.samples, "theta": theta.theta},
            )
        )

    # with lam = 0 every extension acts as S on D(C_phi)
    f = domain_samples(cfg.restriction(), 1, ctx.seed)[0]
    s_f = model.apply_A(f)
    worst = 0.0
    for theta in thetas:
        worst = max(worst, model.norm(model.sub(extension_apply_theta(cfg, theta, f, 0.0), s_f)))
    rows.append(ReportRow.check("C_theta f = S f on D(C_phi)", worst / (1.0 + model.norm(s_f)), IDENTITY_TOL))

    return finalize_report(
        COMMAND_DEFINITION["name"],
        {
            "model": model.parameters(),
            "phi": phi_text,
            "normalization": cfg.normalization,
            "theta": [t.theta for t in thetas],
            "psi": psi_text,
            "samples": ctx.samples,
            "seed": ctx.seed,
        },
        rows,
        target=ROUND_TRIP_TOL,
        achieved=max((t.residual for t in trips), default=0.0),
    )
