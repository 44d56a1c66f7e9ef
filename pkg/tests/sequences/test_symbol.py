import numpy as np
import pytest

from graphnorm.sequences import DiagonalSymbol


@pytest.mark.parametrize(
    "coefficients, roots",
    [
        ((-3, 1), [3]),
        ((6, -5, 1), [2, 3]),
        ((0, 1), []),
        ((1, 0, 1), []),
        ((2.5, -1), []),
    ],
)
def test_integer_roots(coefficients, roots):
    assert DiagonalSymbol(coefficients).integer_roots() == roots


def test_trailing_zeros_are_trimmed():
    symbol = DiagonalSymbol((1, 2, 0, 0))
    assert symbol.degree == 1
    assert symbol == DiagonalSymbol((1, 2))


def test_evaluation():
    np.testing.assert_allclose(DiagonalSymbol((-3, 1))(np.array([1, 2, 3])), [-2, -1, 0])


def test_one_plus_abs_sq():
    assert DiagonalSymbol.identity().one_plus_abs_sq() == DiagonalSymbol((1, 0, 1))
    assert DiagonalSymbol((0, 1j)).one_plus_abs_sq() == DiagonalSymbol((1, 0, 1))


def test_reality():
    assert DiagonalSymbol.identity().is_real
    assert not DiagonalSymbol((0, 1j)).is_real
    assert DiagonalSymbol((0, 1j)).conjugate() == DiagonalSymbol((0, -1j))


@pytest.mark.parametrize(
    "coefficients, text",
    [
        ((0, 1), "n"),
        ((1, 0, 1), "1 + n^2"),
        ((-0.5, 2), "-0.5 + 2*n"),
        ((0,), "0"),
    ],
)
def test_describe(coefficients, text):
    assert DiagonalSymbol(coefficients).describe() == text
