"""
gelfand: H_{-1} norms, embeddings of functionals into H, and the functional form of the
density criterion.
"""

from ..engines import (
    LcgStream,
    MinusOneFunctional,
    density_criterion,
    density_decision,
    domain_samples,
    functional_in_H,
    functional_membership,
    norm_minus_one,
    random_probe,
    representative_family,
    restriction_from_functionals,
    restriction_membership,
)
from ..parsing import parse_functional_list
from ..storage.models import ReportRow
from .common import ExperimentContext, finalize_report

NORM_TOL = 1e-9
BOUND_SLACK = 1e-12
N_PROBES = 100
DEFAULT_FUNCTIONALS = {
    "momentum": ["interval-integral:0,1,sqrt(e)", "point:0;point:1"],
    "diag": ["point:1;rep:tail:1,2", "rep:tail:1,2"],
}

COMMAND_DEFINITION = {
    "name": "gelfand",
    "description": "H_{-1} norm routes, functional embeddings into H and the density criterion for A'_L.",
    "arguments": {},
    "default_model": "momentum",
}


def _norm_rows(model, n_probes: int, seed: int) -> list[ReportRow]:
    probes = model.probe_vectors()
    rng = LcgStream(seed)
    excess = 0.0
    route_gap = 0.0
    for _ in range(n_probes):
        v = random_probe(model, probes, rng)
        norm, minus_one = model.norm(v), norm_minus_one(model, v)
        excess = max(excess, (minus_one - norm) / (1.0 + norm))
        # ||v||_{-1} read off the Riesz representative of <v, .>
        riesz = MinusOneFunctional.from_h_vector(model, v).norm
        route_gap = max(route_gap, abs(riesz - minus_one) / (1.0 + norm))
    return [
        ReportRow.check("||v||_{-1} <= ||v||", max(0.0, excess), BOUND_SLACK, {"probes": n_probes}),
        ReportRow.check("H_{-1} norm routes agree", route_gap, NORM_TOL, {"probes": n_probes}),
    ]


def _functional_rows(ctx: ExperimentContext, model, text: str) -> list[ReportRow]:
    functionals = parse_functional_list(model, text)
    rows = []
    for ell in functionals:
        embedding = functional_in_H(ell)
        values = {"norm_minus_one": ell.norm, "in_H": embedding.in_h}
        rows.append(ReportRow.info(ell.describe(), {"functional": ell.describe()}, values))
        if embedding.in_h:
            w = embedding.vector
            via_h = norm_minus_one(model, w)
            rows.append(
                ReportRow.check(
                    f"{ell.describe()}: ||w||_{{-1}} = ||l||_{{-1}}",
                    abs(via_h - ell.norm),
                    NORM_TOL,
                    values={"via_h": via_h, "h_norm": model.norm(w)},
                )
            )

    criterion = density_criterion(model, functionals, ctx.settings.rank_tol)
    family = representative_family(model, functionals, ctx.settings.rank_tol, ctx.workers)
    decision = density_decision(family, ctx.samples, ctx.seed)
    rows.append(
        ReportRow.verdict(
            f"L = {{{text}}}: criterion agrees with density decision",
            criterion.dense == decision.dense,
            values={"criterion_dense": criterion.dense, "decision_dense": decision.dense},
        )
    )

    R = restriction_from_functionals(model, functionals, ctx.settings.rank_tol, ctx.workers)
    rng = LcgStream(ctx.seed)
    probes = model.probe_vectors()
    candidates = domain_samples(R, ctx.samples, ctx.seed)
    candidates += [random_probe(model, probes, rng) for _ in range(ctx.samples)]
    mismatches = sum(functional_membership(functionals, g) != restriction_membership(R, g).member for g in candidates)
    rows.append(
        ReportRow.verdict(
            f"L = {{{text}}}: D(A'_L) membership agrees with D(C_M)",
            mismatches == 0,
            {"candidates": len(candidates)},
            {"mismatches": mismatches},
        )
    )
    return rows


def execute(ctx: ExperimentContext):
    """
    Run the experiment.

    Args:
        ctx: Run context (uses --model, --symbol, --functional, --samples, --seed);
            without --functional the model's default lists are run

    Returns:
        ExperimentReport with norm comparisons, per-functional embeddings and the
        criterion agreement
    """
    model = ctx.model(COMMAND_DEFINITION["default_model"])
    functional_text = ctx.option("functional")
    configs = [functional_text] if functional_text is not None else DEFAULT_FUNCTIONALS[model.id]

    rows = _norm_rows(model, N_PROBES, ctx.seed)
    for text in configs:
        rows.extend(_functional_rows(ctx, model, text))

    return finalize_report(
        COMMAND_DEFINITION["name"],
        {"model": model.parameters(), "functionals": configs, "samples": ctx.samples, "seed": ctx.seed},
        rows,
        target=NORM_TOL,
    )
