import math

import pytest

from graphnorm.engines import (
    ExtensionParameter,
    RankOneRestrictionConfig,
    adjoint_apply,
    decompose_theta,
    defect_vectors,
    extension_apply_theta,
    rank_one_resolvent,
    symmetric_pairing_check,
    verify_resolvent_round_trip,
)
from graphnorm.functions import kernel_phi
from graphnorm.models import DiagonalSequence
from graphnorm.sequences import DiagonalSymbol, SeqVector
from graphnorm.storage import ConditionViolationError, DomainViolationError, UnsupportedOperationError

ZETA_2 = 1.6449340668482264
ZETA_4 = 1.0823232337111382


@pytest.fixture
def tail_config(diag):
    return RankOneRestrictionConfig.build(diag, SeqVector.power_tail(1.0, 2.0))


@pytest.fixture
def kernel_config(momentum):
    return RankOneRestrictionConfig.build(momentum, kernel_phi(0.0))


def test_parameter_range():
    assert ExtensionParameter(math.pi).is_trivial
    assert ExtensionParameter(math.pi).phase == -1
    assert ExtensionParameter(math.pi).resolvent_coefficient == 0
    assert ExtensionParameter(0.0).resolvent_coefficient == pytest.approx(-1j)
    for theta in (-math.pi, 3.5, -4.0):
        with pytest.raises(UnsupportedOperationError):
            ExtensionParameter(theta)


def test_build_normalizes(tail_config):
    assert tail_config.normalization == pytest.approx(math.sqrt(ZETA_4 + ZETA_2), abs=1e-9)
    assert tail_config.phi.coordinate(2) == pytest.approx(0.25 / tail_config.normalization)


def test_build_rejects_unsuitable_input(diag):
    with pytest.raises(UnsupportedOperationError):
        RankOneRestrictionConfig.build(DiagonalSequence(DiagonalSymbol((0, 1j))), SeqVector.power_tail(1.0, 2.0))
    with pytest.raises(DomainViolationError):
        RankOneRestrictionConfig.build(diag, SeqVector.zero())
    with pytest.raises(DomainViolationError):
        RankOneRestrictionConfig.build(diag, SeqVector.power_tail(1.0, 1.0))
    with pytest.raises(ConditionViolationError):
        RankOneRestrictionConfig.build(diag, SeqVector.basis(1))


@pytest.mark.parametrize("config", ["tail_config", "kernel_config"])
def test_defect_vectors(request, config):
    cfg = request.getfixturevalue(config)
    defects = defect_vectors(cfg)
    assert defects.residual_plus <= 1e-10
    assert defects.residual_minus <= 1e-10
    assert defects.norm_plus == pytest.approx(1.0, abs=1e-9)
    assert defects.norm_minus == pytest.approx(1.0, abs=1e-9)


def test_adjoint_apply_on_domain_vectors(diag, tail_config):
    f = SeqVector.basis(2)
    image = adjoint_apply(tail_config, f, 0.0)
    assert image.coordinate(2) == pytest.approx(2.0)


def test_extension_on_the_defect_direction(diag, tail_config):
    # i((S+i)phi - (S-i)phi) = -2 phi
    image = extension_apply_theta(tail_config, ExtensionParameter(0.0), diag.zero(), 1.0)
    assert diag.norm(diag.linear_combination([image, tail_config.phi], [1.0, 2.0])) <= 1e-12
    with pytest.raises(DomainViolationError):
        extension_apply_theta(tail_config, ExtensionParameter(0.0), tail_config.phi, 0.0)


def test_trivial_parameter_gives_back_the_resolvent(diag, tail_config):
    psi = SeqVector.basis(3)
    r = rank_one_resolvent(tail_config, ExtensionParameter(math.pi), psi)
    assert r.coordinate(3) == pytest.approx(1 / (3 + 1j))


def test_resolvent_of_the_defect_vector(momentum, kernel_config):
    theta = ExtensionParameter(0.7)
    r = rank_one_resolvent(kernel_config, theta, kernel_config.n_plus)
    expected = momentum.scale(kernel_config.domain_vector(theta), 1 / 2j)
    assert momentum.norm(momentum.sub(r, expected)) <= 1e-10
    parts = decompose_theta(kernel_config, theta, r)
    assert parts is not None
    assert parts[1] == pytest.approx(1 / 2j)


@pytest.mark.parametrize("theta", [math.pi, 0.0, math.pi / 2, -math.pi / 2])
def test_round_trip_on_sequences(tail_config, theta):
    result = verify_resolvent_round_trip(tail_config, ExtensionParameter(theta), SeqVector.basis(1))
    assert result.residual <= 1e-8
    assert result.diagnostics == ""


def test_round_trip_on_the_line(kernel_config):
    result = verify_resolvent_round_trip(kernel_config, ExtensionParameter(0.7), kernel_phi(0.5))
    assert result.residual <= 1e-8


@pytest.mark.parametrize("theta", [None, 0.0, math.pi / 2])
def test_symmetric_pairing(tail_config, theta):
    parameter = None if theta is None else ExtensionParameter(theta)
    assert symmetric_pairing_check(tail_config, parameter, n_samples=4) <= 1e-9
