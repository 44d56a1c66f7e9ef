import math

import numpy as np
import pytest

from graphnorm.engines import (
    MinusOneFunctional,
    density_criterion,
    functional_eval,
    functional_in_H,
    functional_membership,
    norm_minus_one,
    restriction_from_functionals,
    restriction_membership,
)
from graphnorm.functions import (
    integrate,
    interval_indicator,
    kernel_phi,
    max_coefficient_gap,
    psi_infinity,
    scale,
)
from graphnorm.sequences import SeqVector
from graphnorm.storage import DomainViolationError

SQRT_E = math.sqrt(math.e)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_minus_one_norm_of_basis_vectors(diag, k):
    assert norm_minus_one(diag, SeqVector.basis(k)) ** 2 == pytest.approx(1 / (1 + k * k))


def test_minus_one_norm_on_the_line(momentum):
    assert norm_minus_one(momentum, momentum.zero()) == 0.0
    assert norm_minus_one(momentum, interval_indicator(0.0, 1.0, SQRT_E)) == pytest.approx(1.0, abs=1e-12)
    for v in momentum.probe_vectors():
        assert norm_minus_one(momentum, v) <= momentum.norm(v) + 1e-12


def test_point_functional_reproduces_values(momentum):
    ell = MinusOneFunctional.point(momentum, 0.4)
    f = momentum.linear_combination([kernel_phi(1.0), psi_infinity()], [1 + 2j, 1.0])
    assert functional_eval(ell, f) == pytest.approx(f(0.4), abs=1e-12)
    assert functional_eval(ell, momentum.zero()) == 0
    assert ell.norm == pytest.approx(math.sqrt(0.5))
    assert ell.describe() == "point:0.4"


def test_interval_functional_integrates(momentum):
    ell = MinusOneFunctional.interval_integral(momentum, 0.0, 1.0, SQRT_E)
    assert max_coefficient_gap(ell.representative, psi_infinity()) <= 1e-12
    f = scale(kernel_phi(0.0), 1 + 1j)
    assert functional_eval(ell, f) == pytest.approx(SQRT_E * integrate(f, 0.0, 1.0), abs=1e-12)
    # |l(f)| <= ||l||_{-1} ||f||_{+1}
    assert abs(functional_eval(ell, f)) <= ell.norm * momentum.graph_norm(f) + 1e-12


def test_h_vector_functional(diag):
    ell = MinusOneFunctional.from_h_vector(diag, SeqVector.basis(2))
    assert ell.norm == pytest.approx(norm_minus_one(diag, SeqVector.basis(2)))
    assert ell.norm == pytest.approx(math.sqrt(1 / 5))


def test_representative_outside_domain(momentum):
    with pytest.raises(DomainViolationError):
        MinusOneFunctional(momentum, interval_indicator(0.0, 1.0))


def test_embedding_into_h(momentum, diag):
    assert not functional_in_H(MinusOneFunctional(momentum, kernel_phi(0.0))).in_h
    embedded = functional_in_H(MinusOneFunctional(momentum, psi_infinity()))
    assert embedded.in_h
    assert max_coefficient_gap(embedded.vector, interval_indicator(0.0, 1.0, SQRT_E)) <= 1e-12
    assert not functional_in_H(MinusOneFunctional(diag, SeqVector.power_tail(1.0, 2.0))).in_h
    finite = functional_in_H(MinusOneFunctional(diag, SeqVector.basis(2)))
    assert finite.in_h
    assert finite.vector.coordinate(2) == pytest.approx(5.0)


def test_restriction_from_functionals(momentum):
    functionals = [MinusOneFunctional.point(momentum, 0.0)]
    R = restriction_from_functionals(momentum, functionals)
    assert R.family.size == 1
    member = momentum.linear_combination([kernel_phi(1.0), kernel_phi(0.0)], [1.0, -math.exp(-1.0)])
    for f in (member, kernel_phi(2.0)):
        assert functional_membership(functionals, f) == restriction_membership(R, f).member
    assert functional_membership([], kernel_phi(2.0))
    assert restriction_from_functionals(momentum, []).family.size == 0


def test_density_criterion(momentum):
    points = [MinusOneFunctional.point(momentum, 0.0), MinusOneFunctional.point(momentum, 1.0)]
    assert density_criterion(momentum, points).dense
    assert density_criterion(momentum, []).dense

    integral = [MinusOneFunctional.interval_integral(momentum, 0.0, 1.0, SQRT_E)]
    result = density_criterion(momentum, integral)
    assert not result.dense
    np.testing.assert_allclose(result.coefficients, [1.0])
    assert max_coefficient_gap(result.embedding, interval_indicator(0.0, 1.0, SQRT_E)) <= 1e-12


def test_density_criterion_on_sequences(diag):
    functionals = [MinusOneFunctional.point(diag, 1.0), MinusOneFunctional(diag, SeqVector.power_tail(1.0, 2.0))]
    result = density_criterion(diag, functionals)
    assert not result.dense
    assert result.coefficients[1] == 0
    assert result.witness.tails == ()
    assert result.embedding.coordinate(1) == pytest.approx(1.0)


def test_density_criterion_cancels_kernel_parts(momentum):
    # the kernel parts cancel; what is left is psi_inf, whose functional lies in H
    shifted = momentum.linear_combination([kernel_phi(0.0), psi_infinity()], [1.0, 1.0])
    functionals = [MinusOneFunctional(momentum, shifted), MinusOneFunctional(momentum, kernel_phi(0.0))]
    result = density_criterion(momentum, functionals)
    assert not result.dense
    np.testing.assert_allclose(np.abs(result.coefficients), [1.0, 1.0])
    assert momentum.in_dom_AAstar(result.witness)
    sign = result.coefficients[0]
    assert max_coefficient_gap(result.embedding, interval_indicator(0.0, 1.0, sign * SQRT_E)) <= 1e-9
