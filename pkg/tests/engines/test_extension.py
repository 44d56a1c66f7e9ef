import math

import numpy as np
import pytest

from graphnorm.engines import (
    ExtensionOperator,
    RestrictionOperator,
    SpanFamily,
    adjoint_duality_check,
    density_decision,
    domain_samples,
    extension_apply,
    extension_decompose,
    extension_input,
    gap_metric,
    graph_decomposition_residual,
    recover_parameter,
    restriction_apply,
    restriction_membership,
    restriction_project_into_domain,
)
from graphnorm.functions import (
    interval_indicator,
    kernel_phi,
    max_coefficient_gap,
    psi_infinity,
    scale,
)
from graphnorm.sequences import SeqVector
from graphnorm.storage import ConditionViolationError, DomainViolationError

SQRT_E = math.sqrt(math.e)


@pytest.fixture
def kernel_family(momentum):
    return SpanFamily.build(momentum, [kernel_phi(0.0)])


# ===== Extension side =====


def test_extension_rejects_a_violating_family(momentum):
    with pytest.raises(ConditionViolationError):
        ExtensionOperator(SpanFamily.build(momentum, [psi_infinity()]))


def test_extension_apply(momentum, kernel_family):
    E = ExtensionOperator(kernel_family)
    f = kernel_phi(1.0)
    assert max_coefficient_gap(extension_apply(E, f, [0.0]), momentum.apply_A(f)) <= 1e-15
    assert max_coefficient_gap(extension_apply(E, momentum.zero(), [1.0]), scale(kernel_phi(0.0), -1.0)) <= 1e-15
    with pytest.raises(ValueError):
        extension_apply(E, f, [1.0, 2.0])
    with pytest.raises(DomainViolationError):
        extension_apply(E, interval_indicator(0.0, 1.0), [0.0])


def test_decompose_pure_adjoint_image(momentum, kernel_family):
    E = ExtensionOperator(kernel_family)
    parts = extension_decompose(E, momentum.apply_Astar(kernel_phi(0.0)))
    assert parts is not None
    assert momentum.norm(parts.f) <= 1e-12
    assert parts.coefficients[0] == pytest.approx(1.0)


def test_decompose_mixed_vector(momentum, kernel_family):
    E = ExtensionOperator(kernel_family)
    h = extension_input(E, kernel_phi(1.0), [1.0])
    parts = extension_decompose(E, h)
    assert parts is not None
    assert max_coefficient_gap(parts.f, kernel_phi(1.0)) <= 1e-12
    assert parts.coefficients[0] == pytest.approx(1.0)
    assert graph_decomposition_residual(E, parts.f, parts.coefficients) <= 1e-12


def test_decompose_domain_vector_and_outsider(momentum, kernel_family):
    E = ExtensionOperator(kernel_family)
    inside = extension_decompose(E, kernel_phi(1.0))
    assert inside is not None
    assert inside.coefficients[0] == pytest.approx(0.0, abs=1e-12)
    assert extension_decompose(E, interval_indicator(0.0, 1.0)) is None


def test_extension_on_sequences(diag):
    E = ExtensionOperator(SpanFamily.build(diag, [SeqVector.power_tail(1.0, 2.0)]))
    u = extension_input(E, SeqVector.basis(1), [1.0])
    assert u.coordinate(1) == pytest.approx(2.0)
    assert u.coordinate(3) == pytest.approx(1 / 3)
    image = extension_apply(E, SeqVector.basis(1), [1.0])
    assert image.coordinate(1) == pytest.approx(0.0, abs=1e-15)
    assert image.coordinate(3) == pytest.approx(-1 / 9)
    parts = extension_decompose(E, u)
    assert parts is not None
    assert parts.coefficients[0] == pytest.approx(1.0)
    assert parts.f.coordinate(1) == pytest.approx(1.0)
    assert parts.f.is_finite


# ===== Restriction side =====


def test_restriction_membership(momentum, kernel_family):
    R = RestrictionOperator(kernel_family)
    outsider = restriction_membership(R, kernel_phi(0.0))
    assert not outsider.member
    assert outsider.max_residual == pytest.approx(0.5)
    assert restriction_membership(R, momentum.zero()).member
    member = momentum.linear_combination([kernel_phi(1.0), kernel_phi(0.0)], [1.0, -math.exp(-1.0)])
    assert restriction_membership(R, member).member
    with pytest.raises(DomainViolationError):
        restriction_membership(R, interval_indicator(0.0, 1.0))


def test_restriction_apply(momentum, kernel_family):
    R = RestrictionOperator(kernel_family)
    with pytest.raises(DomainViolationError):
        restriction_apply(R, kernel_phi(0.0))
    g = restriction_project_into_domain(R, kernel_phi(1.0))
    assert g(0.0) == pytest.approx(0.0, abs=1e-15)
    assert max_coefficient_gap(restriction_apply(R, g), momentum.apply_Astar(g)) == 0.0
    assert momentum.norm(restriction_project_into_domain(R, kernel_phi(0.0))) <= 1e-12


def test_domain_samples_are_members(kernel_family):
    R = RestrictionOperator(kernel_family)
    samples = domain_samples(R, 5, seed=3)
    assert len(samples) == 5
    assert all(restriction_membership(R, g).member for g in samples)


# ===== Checks =====


@pytest.mark.parametrize(
    "model_name, generators",
    [
        ("momentum", [kernel_phi(0.0)]),
        ("momentum", []),
        ("diag", [SeqVector.power_tail(1.0, 2.0)]),
    ],
)
def test_adjoint_duality(request, model_name, generators):
    model = request.getfixturevalue(model_name)
    result = adjoint_duality_check(SpanFamily.build(model, generators), n_samples=8)
    assert len(result.residuals) == 8
    assert result.max_residual <= 1e-8


def test_density_of_kernel_family(kernel_family):
    assert density_decision(kernel_family, n_samples=4).dense


def test_density_witness_for_smooth_generator(momentum):
    result = density_decision(SpanFamily.build(momentum, [psi_infinity()]), n_samples=8)
    assert not result.dense
    assert max_coefficient_gap(result.embedding, interval_indicator(0.0, 1.0, SQRT_E)) <= 1e-12
    assert result.embedding_norm == pytest.approx(SQRT_E)
    assert result.max_orthogonality <= 1e-9


def test_density_witness_on_sequences(diag):
    result = density_decision(SpanFamily.build(diag, [SeqVector.basis(1)]), n_samples=4)
    assert not result.dense
    np.testing.assert_allclose(result.coefficients, [1.0])
    assert result.embedding.coordinate(1) == pytest.approx(2.0)


@pytest.mark.parametrize("nodes", [[0.0], [0.0, 5.0]])
def test_recover_parameter(momentum, nodes):
    family = SpanFamily.build(momentum, [kernel_phi(t) for t in nodes])
    recovered = recover_parameter(ExtensionOperator(family))
    assert recovered.rank == family.rank
    assert gap_metric(recovered, family) <= 1e-8


def test_recover_trivial_parameter(momentum):
    recovered = recover_parameter(ExtensionOperator(SpanFamily.empty(momentum)))
    assert recovered.rank == 0
