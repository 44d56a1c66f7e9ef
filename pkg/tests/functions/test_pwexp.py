import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from graphnorm.functions import (
    anticausal_exp_integral,
    causal_exp_integral,
    derivative,
    differentiate,
    evaluate,
    from_pieces,
    in_h1,
    in_h2,
    inner_product,
    integrate,
    interval_indicator,
    jumps,
    kernel_combination,
    kernel_node,
    kernel_phi,
    l2_norm_sq,
    linear_combination,
    max_coefficient_gap,
    point_eval,
    psi_infinity,
    psi_n,
    scale,
    translate,
)
from graphnorm.storage import DomainViolationError, NotSquareIntegrableError

SQRT_E = math.sqrt(math.e)


def quad_inner(f, g, lo=-40.0, hi=40.0):
    """Numerical L2 inner product split at the breakpoints of both operands."""
    cuts = sorted({lo, hi, *f.breakpoints, *g.breakpoints})

    def integrand(x, part):
        value = np.conj(point_eval(f, x)) * point_eval(g, x)
        return value.real if part == "re" else value.imag

    total = 0j
    for a, b in zip(cuts, cuts[1:], strict=False):
        total += quad(integrand, a, b, args=("re",))[0] + 1j * quad(integrand, a, b, args=("im",))[0]
    return total


# ===== Kernels and algebra =====


def test_kernel_values():
    phi = kernel_phi(0.0)
    assert point_eval(phi, 0.0) == pytest.approx(0.5)
    assert phi(2.0) == pytest.approx(0.5 * math.exp(-2.0))
    assert l2_norm_sq(kernel_phi(3.0)) == pytest.approx(0.25, abs=1e-14)


def test_difference_with_itself_is_zero():
    psi = psi_infinity()
    assert (psi - psi).is_zero
    assert (psi + (-psi)).is_zero


def test_translate_moves_the_kernel():
    moved = translate(kernel_phi(0.0), 1.7)
    target = kernel_phi(1.7)
    assert moved.breakpoints == target.breakpoints
    assert max_coefficient_gap(moved, target) <= 1e-12


def test_kernel_node_recognizes_scaled_kernels():
    node = kernel_node(kernel_combination([0.5], [2.0]))
    assert node is not None
    lam, c = node
    assert lam == pytest.approx(0.5)
    assert c == pytest.approx(2.0)
    assert kernel_node(psi_infinity()) is None


def test_psi_n_breakpoints_and_value():
    psi = psi_n(2)
    assert psi.breakpoints == pytest.approx((0.0, 0.5))
    assert psi(0.0) == pytest.approx(0.5 + 0.5 * math.exp(-0.5))


@pytest.mark.parametrize(
    "build",
    [
        lambda: psi_n(0),
        lambda: interval_indicator(1.0, 1.0),
        lambda: linear_combination([kernel_phi(0.0)], [1.0, 2.0]),
        lambda: from_pieces([0.0], [[]]),
        lambda: from_pieces([], [[(1.0, -1, 0.0)]]),
        lambda: causal_exp_integral(kernel_phi(0.0), decay=0.0),
    ],
)
def test_invalid_construction_raises_value_error(build):
    with pytest.raises(ValueError):
        build()


# ===== Derivatives and jumps =====


def test_kernel_derivative_is_continuous_free_of_jumps():
    df, jump_report = differentiate(kernel_phi(0.0))
    assert jump_report.is_empty
    assert df(-1.0) == pytest.approx(0.5 * math.exp(-1.0))
    assert df(2.0) == pytest.approx(-0.5 * math.exp(-2.0))


def test_kernel_second_derivative_jump():
    _, jump_report = differentiate(derivative(kernel_phi(0.0)))
    assert jump_report.locations == (0.0,)
    # right minus left limit of phi_0'
    assert jump_report.jump_values[0] == pytest.approx(-1.0)
    assert jump_report.max_jump() == pytest.approx(1.0)


def test_indicator_jumps():
    df, jump_report = differentiate(interval_indicator(0.0, 1.0))
    assert df.is_zero
    assert jump_report.locations == (0.0, 1.0)
    assert jump_report.jump_values == pytest.approx((1.0, -1.0))


def test_sobolev_membership():
    assert in_h1(kernel_phi(0.0))
    assert not in_h2(kernel_phi(0.0))
    assert not in_h1(interval_indicator(0.0, 1.0))
    assert in_h2(psi_infinity())


# ===== Integrals =====


@pytest.mark.parametrize(
    "f, g, expected",
    [
        (kernel_phi(0.0), kernel_phi(0.0), 0.25),
        (kernel_phi(0.0), kernel_phi(1.0), 0.5 * math.exp(-1.0)),
        (derivative(kernel_phi(0.0)), derivative(kernel_phi(1.0)), 0.0),
    ],
)
def test_inner_product_closed_forms(f, g, expected):
    assert inner_product(f, g) == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize(
    "f, g",
    [
        (kernel_phi(0.3), psi_infinity()),
        (scale(kernel_phi(-1.0), 1 + 2j), interval_indicator(0.0, 1.0, 1j)),
        (psi_n(3), derivative(psi_infinity())),
    ],
)
def test_inner_product_matches_quadrature(f, g):
    assert inner_product(f, g) == pytest.approx(quad_inner(f, g), abs=1e-8)


def test_inner_product_is_antilinear_in_first_slot():
    f, g = kernel_phi(0.0), kernel_phi(0.5)
    assert inner_product(scale(f, 1j), g) == pytest.approx(-1j * inner_product(f, g))
    assert inner_product(f, scale(g, 1j)) == pytest.approx(1j * inner_product(f, g))


def test_non_square_integrable_operands():
    constant = from_pieces([], [[(1.0, 0, 0.0)]])
    with pytest.raises(NotSquareIntegrableError):
        inner_product(constant, kernel_phi(0.0))
    with pytest.raises(DomainViolationError):
        integrate(constant)
    growing = from_pieces([0.0], [[(1.0, 0, -2.0)], []])
    with pytest.raises(NotSquareIntegrableError):
        causal_exp_integral(growing)


def test_integrate_on_finite_interval():
    assert integrate(kernel_phi(0.0), 0.0, 1.0) == pytest.approx(0.5 * (1 - math.exp(-1.0)))
    assert integrate(interval_indicator(0.0, 1.0, 3.0), 0.5, 4.0) == pytest.approx(1.5)


# ===== psi_infinity =====


def test_psi_infinity_values():
    psi = psi_infinity()
    expected = SQRT_E * (0.5 * math.exp(-1.0) - 0.5 * math.exp(-2.0))
    assert psi(-1.0) == pytest.approx(expected, abs=1e-12)
    assert psi(-1.0) == pytest.approx(0.1917002, abs=1e-6)
    assert psi.breakpoints == pytest.approx((0.0, 1.0))
    assert jumps(psi).is_empty


def test_psi_infinity_solves_the_second_order_equation():
    psi = psi_infinity()
    residual = linear_combination([psi, derivative(derivative(psi))], [1.0, -1.0])
    assert max_coefficient_gap(residual, interval_indicator(0.0, 1.0, SQRT_E)) <= 1e-12


def test_psi_infinity_graph_norm_is_one():
    psi = psi_infinity()
    dpsi = derivative(psi)
    assert (inner_product(psi, psi) + inner_product(dpsi, dpsi)).real == pytest.approx(1.0, abs=1e-12)


# ===== Convolutions =====


def test_causal_integral_of_indicator():
    xs = np.array([-2.0, -0.1, 0.2, 0.9, 1.5, 3.0])
    expected = np.where(xs < 0, 0.0, np.where(xs <= 1, 1 - np.exp(-xs), (math.e - 1) * np.exp(-xs)))
    got = evaluate(causal_exp_integral(interval_indicator(0.0, 1.0)), xs)
    np.testing.assert_allclose(got, expected, atol=1e-14)


def test_anticausal_integral_of_indicator():
    xs = np.array([-2.0, -0.1, 0.2, 0.9, 1.5, 3.0])
    expected = np.where(
        xs < 0, np.exp(xs) * (1 - math.exp(-1.0)), np.where(xs <= 1, 1 - np.exp(xs - 1), 0.0)
    )
    got = evaluate(anticausal_exp_integral(interval_indicator(0.0, 1.0)), xs)
    np.testing.assert_allclose(got, expected, atol=1e-14)


# ===== Reproducing property =====

coefficient = st.complex_numbers(max_magnitude=5.0, allow_nan=False, allow_infinity=False)


@given(
    st.lists(st.tuples(st.integers(min_value=-12, max_value=12), coefficient), min_size=1, max_size=5),
    st.floats(min_value=-3.0, max_value=3.0, allow_nan=False),
)
def test_kernels_reproduce_point_values(terms, lam):
    f = kernel_combination([k / 4 for k, _ in terms], [c for _, c in terms])
    phi = kernel_phi(lam)
    graph = inner_product(f, phi) + inner_product(derivative(f), derivative(phi))
    scale_ = 1.0 + sum(abs(c) for _, c in terms)
    assert abs(graph - np.conj(f(lam))) <= 1e-12 * scale_
