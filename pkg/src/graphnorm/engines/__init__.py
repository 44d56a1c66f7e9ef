"""Operator-theoretic engines: graph geometry, extensions/restrictions, Gel'fand triple, von Neumann."""

from .extension import (
    Decomposition,
    DensityResult,
    DualityResult,
    ExtensionOperator,
    Membership,
    RestrictionOperator,
    adjoint_duality_check,
    density_decision,
    domain_samples,
    extension_apply,
    extension_decompose,
    extension_input,
    graph_decomposition_residual,
    random_probe,
    recover_parameter,
    restriction_apply,
    restriction_membership,
    restriction_project_into_domain,
)
from .gelfand import (
    CriterionResult,
    Embedding,
    MinusOneFunctional,
    density_criterion,
    functional_eval,
    functional_in_H,
    functional_membership,
    norm_minus_one,
    representative_family,
    restriction_from_functionals,
)
from .geometry import (
    ConditionResult,
    GraphProjection,
    SpanFamily,
    condition_precloscon,
    gap_metric,
    graph_project,
    gram_matrix,
    normalize_coefficients,
    normalized_graph_distance,
    restriction_gap,
    same_model,
)
from .utils import LcgStream, parallel_map
from .vonneumann import (
    DefectVectors,
    ExtensionParameter,
    RankOneRestrictionConfig,
    RoundTrip,
    adjoint_apply,
    decompose_theta,
    defect_vectors,
    extension_apply_theta,
    rank_one_resolvent,
    symmetric_pairing_check,
    verify_resolvent_round_trip,
)

__all__ = [
    "ConditionResult",
    "CriterionResult",
    "Decomposition",
    "DefectVectors",
    "DensityResult",
    "DualityResult",
    "Embedding",
    "ExtensionOperator",
    "ExtensionParameter",
    "GraphProjection",
    "LcgStream",
    "Membership",
    "MinusOneFunctional",
    "RankOneRestrictionConfig",
    "RestrictionOperator",
    "RoundTrip",
    "SpanFamily",
    "adjoint_apply",
    "adjoint_duality_check",
    "condition_precloscon",
    "decompose_theta",
    "defect_vectors",
    "density_criterion",
    "density_decision",
    "domain_samples",
    "extension_apply",
    "extension_apply_theta",
    "extension_decompose",
    "extension_input",
    "functional_eval",
    "functional_in_H",
    "functional_membership",
    "gap_metric",
    "graph_decomposition_residual",
    "graph_project",
    "gram_matrix",
    "norm_minus_one",
    "normalize_coefficients",
    "normalized_graph_distance",
    "parallel_map",
    "random_probe",
    "rank_one_resolvent",
    "recover_parameter",
    "representative_family",
    "restriction_apply",
    "restriction_from_functionals",
    "restriction_gap",
    "restriction_membership",
    "restriction_project_into_domain",
    "same_model",
    "symmetric_pairing_check",
    "verify_resolvent_round_trip",
]
