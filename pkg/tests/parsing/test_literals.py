import math

import pytest

from graphnorm.functions import (
    interval_indicator,
    kernel_combination,
    kernel_phi,
    max_coefficient_gap,
    psi_infinity,
)
from graphnorm.parsing import (
    parse_complex,
    parse_functional,
    parse_functional_list,
    parse_int_list,
    parse_real,
    parse_symbol,
    parse_theta_list,
    parse_vector,
    parse_vector_list,
)
from graphnorm.sequences import DiagonalSymbol
from graphnorm.storage import LiteralSyntaxError

# ===== Numbers and lists =====


@pytest.mark.parametrize(
    "text, value",
    [("2.5", 2.5), ("pi", math.pi), ("-pi", -math.pi), ("sqrt(e)", math.sqrt(math.e)), (" E ", math.e)],
)
def test_parse_real(text, value):
    assert parse_real(text) == pytest.approx(value)


def test_parse_complex():
    assert parse_complex("1+2j") == 1 + 2j
    assert parse_complex("(1 + 2j)") == 1 + 2j
    assert parse_complex("sqrt(e)") == pytest.approx(math.sqrt(math.e))
    with pytest.raises(LiteralSyntaxError):
        parse_complex("one")


def test_parse_int_list():
    assert parse_int_list("10, 100,1000") == [10, 100, 1000]
    for bad in ("", "1,,2", "a", "1.5"):
        with pytest.raises(LiteralSyntaxError):
            parse_int_list(bad)
    with pytest.raises(LiteralSyntaxError):
        parse_int_list("0,1", minimum=1)


def test_parse_theta_list():
    thetas = parse_theta_list("0, pi/2, -pi/2, 2*pi/3, pi")
    assert thetas == pytest.approx([0.0, math.pi / 2, -math.pi / 2, 2 * math.pi / 3, math.pi])
    for bad in ("-pi", "4", "pi/x"):
        with pytest.raises(LiteralSyntaxError):
            parse_theta_list(bad)


# ===== Symbols =====


@pytest.mark.parametrize(
    "text, coefficients",
    [
        ("n", (0, 1)),
        ("n^2+1", (1, 0, 1)),
        ("2*n - 0.5", (-0.5, 2)),
        ("1j*n", (0, 1j)),
        ("n - 3", (-3, 1)),
        ("1", (1,)),
    ],
)
def test_parse_symbol(text, coefficients):
    assert parse_symbol(text) == DiagonalSymbol(coefficients)


@pytest.mark.parametrize("text", ["", "   ", "n n", "x", "n^"])
def test_parse_symbol_rejects_garbage(text):
    with pytest.raises(LiteralSyntaxError):
        parse_symbol(text)


# ===== Vectors =====


def test_momentum_vectors(momentum):
    v = parse_vector(momentum, "kernel:0 + 2*kernel:1")
    assert max_coefficient_gap(v, kernel_combination([0.0, 1.0], [1.0, 2.0])) <= 1e-14
    assert max_coefficient_gap(parse_vector(momentum, "psi_inf"), psi_infinity()) == 0.0
    assert max_coefficient_gap(parse_vector(momentum, "chi:0,1"), interval_indicator(0.0, 1.0)) == 0.0
    complex_scaled = parse_vector(momentum, "(1+2j)*kernel:0")
    assert complex_scaled(0.0) == pytest.approx(0.5 + 1j)
    assert parse_vector(momentum, "zero").is_zero


def test_diag_vectors(diag):
    v = parse_vector(diag, "e:1 + tail:1,2")
    assert v.coordinate(1) == pytest.approx(2.0)
    assert v.coordinate(3) == pytest.approx(1 / 9)
    started = parse_vector(diag, "tail:1,2,5")
    assert started.coordinate(4) == 0
    assert started.coordinate(5) == pytest.approx(1 / 25)
    assert parse_vector(diag, "geom:1,0.5").coordinate(2) == pytest.approx(0.25)
    assert parse_vector(diag, "zero").is_zero


@pytest.mark.parametrize(
    "model_name, text",
    [
        ("momentum", "e:1"),
        ("momentum", "kernel:"),
        ("momentum", "psi:0"),
        ("diag", "kernel:0"),
        ("diag", "geom:1,2"),
        ("diag", ""),
    ],
)
def test_invalid_vectors(request, model_name, text):
    with pytest.raises(LiteralSyntaxError):
        parse_vector(request.getfixturevalue(model_name), text)


def test_vector_lists(momentum):
    assert len(parse_vector_list(momentum, "kernel:0; kernel:5")) == 2
    assert parse_vector_list(momentum, "") == []
    assert parse_vector_list(momentum, "{}") == []


# ===== Functionals =====


def test_functionals(momentum):
    point = parse_functional(momentum, "point:0")
    assert max_coefficient_gap(point.representative, kernel_phi(0.0)) == 0.0
    integral = parse_functional(momentum, "interval-integral:0,1,sqrt(e)")
    assert max_coefficient_gap(integral.representative, psi_infinity()) <= 1e-12
    rep = parse_functional(momentum, "rep:kernel:2")
    assert max_coefficient_gap(rep.representative, kernel_phi(2.0)) == 0.0
    assert rep.describe() == "rep:kernel:2"
    h = parse_functional(momentum, "h:chi:0,1")
    assert h.norm == pytest.approx(math.exp(-0.5), abs=1e-12)
    assert len(parse_functional_list(momentum, "point:0;point:1")) == 2
    assert parse_functional_list(momentum, "") == []


def test_coordinate_functional(diag):
    assert parse_functional(diag, "point:1").representative.coordinate(1) == pytest.approx(0.5)


@pytest.mark.parametrize("text", ["point", "bogus:1", "interval-integral:0", "point:x"])
def test_invalid_functionals(momentum, text):
    with pytest.raises(LiteralSyntaxError):
        parse_functional(momentum, text)
