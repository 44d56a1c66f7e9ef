import math

import numpy as np
import pytest

from graphnorm.engines import LcgStream, gram_matrix
from graphnorm.functions import (
    derivative,
    interval_indicator,
    kernel_phi,
    linear_combination,
    max_coefficient_gap,
    psi_infinity,
    scale,
)
from graphnorm.storage import DomainViolationError, UnsupportedOperationError

SQRT_E = math.sqrt(math.e)


@pytest.mark.parametrize("lam, mu", [(0.0, 0.0), (0.3, -1.2), (2.0, 2.5)])
def test_graph_inner_of_kernels(momentum, lam, mu):
    value = momentum.graph_inner(kernel_phi(lam), kernel_phi(mu))
    assert value == pytest.approx(0.5 * math.exp(-abs(lam - mu)), abs=1e-14)


def test_adjoint_action(momentum):
    image = momentum.apply_Astar(kernel_phi(0.0))
    assert image(-1.0) == pytest.approx(1j * 0.5 * math.exp(-1.0))
    assert image(1.0) == pytest.approx(-1j * 0.5 * math.exp(-1.0))


def test_indicator_is_outside_the_domain(momentum):
    chi = interval_indicator(0.0, 1.0)
    assert not momentum.in_dom_A(chi)
    with pytest.raises(DomainViolationError):
        momentum.apply_A(chi)
    with pytest.raises(DomainViolationError):
        momentum.graph_inner(chi, kernel_phi(0.0))


def test_kernel_of_adjoint_is_trivial(momentum):
    assert momentum.kernel_Astar_basis() == []


def test_solve_recovers_psi_infinity(momentum):
    solved = momentum.solve_one_plus_AAstar(interval_indicator(0.0, 1.0, SQRT_E))
    assert max_coefficient_gap(solved, psi_infinity()) <= 1e-12


def test_solve_residual(momentum):
    phi = kernel_phi(0.0)
    g = momentum.solve_one_plus_AAstar(phi)
    residual = linear_combination([g, derivative(derivative(g))], [1.0, -1.0])
    assert max_coefficient_gap(residual, phi) <= 1e-12


@pytest.mark.parametrize("sign", [1, -1])
def test_resolvent_inverts_a_plus_i(momentum, sign):
    f = kernel_phi(0.4)
    r = momentum.resolvent_at(sign, f)
    back = linear_combination([momentum.apply_A(r), r], [1.0, sign * 1j])
    assert max_coefficient_gap(back, f) <= 1e-12
    assert momentum.norm(r) <= momentum.norm(f) + 1e-12


def test_resolvent_rejects_other_points(momentum):
    with pytest.raises(UnsupportedOperationError):
        momentum.resolvent_at(2, kernel_phi(0.0))


def test_fast_path_matches_generic_inner_products(momentum):
    kernels = [scale(kernel_phi(t), c) for t, c in [(-1.0, 1.0), (0.0, 2j), (0.5, 1 - 1j), (2.0, 0.3)]]
    others = [psi_infinity(), momentum.solve_one_plus_AAstar(interval_indicator(-1.0, 0.5))]
    for graph in (True, False):
        slow = np.array([[momentum.graph_inner(f, g) if graph else momentum.inner(f, g) for g in kernels] for f in kernels])
        fast = gram_matrix(momentum, kernels, graph=graph)
        np.testing.assert_allclose(fast, slow, atol=1e-12)
    mixed = gram_matrix(momentum, kernels, others)
    slow_mixed = np.array([[momentum.graph_inner(f, g) for g in others] for f in kernels])
    np.testing.assert_allclose(mixed, slow_mixed, atol=1e-12)


def test_adjoint_pairing_on_probes(momentum):
    probes = momentum.probe_vectors()
    assert all(momentum.in_dom_A(p) for p in probes)
    rng = LcgStream(11)
    for _ in range(6):
        f = probes[rng.choice(len(probes))]
        g = probes[rng.choice(len(probes))]
        lhs = momentum.inner(g, momentum.apply_A(f))
        rhs = momentum.inner(momentum.apply_Astar(g), f)
        assert abs(lhs - rhs) <= 1e-12


def test_obstruction_records_jumps(momentum):
    o = momentum.obstruction([momentum.apply_Astar(kernel_phi(0.0)), kernel_phi(1.0)])
    assert o.shape == (2, 2)
    # A* phi_0 = i phi_0' jumps by -i at 0; phi_1 is continuous
    assert o[0, 0] == pytest.approx(-1j)
    np.testing.assert_allclose(o[:, 1], 0.0, atol=1e-15)


def test_point_functionals(momentum):
    rep = momentum.point_representative(0.7)
    assert max_coefficient_gap(rep, kernel_phi(0.7)) == 0.0
    f = psi_infinity()
    assert momentum.graph_inner(rep, f) == pytest.approx(momentum.point_value(f, 0.7), abs=1e-12)


def test_interval_representative(momentum):
    rep = momentum.interval_representative(0.0, 1.0, 2.0)
    f = kernel_phi(0.0)
    assert momentum.graph_inner(rep, f) == pytest.approx(1 - math.exp(-1.0), abs=1e-12)


def test_describe(momentum):
    assert momentum.describe(kernel_phi(0.0)) == "1*phi_0"
    assert momentum.describe(momentum.zero()) == "0"
    assert momentum.describe(psi_infinity()) == "pwexp[0, 1]"
