"""
Polynomial symbols a_n of diagonal operators.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

COEFF_TOL = 1e-14


def trim_poly(coeffs) -> tuple[complex, ...]:
    """Drop trailing (highest-degree) zero coefficients; the zero polynomial becomes (0,)."""
    c = [complex(x) for x in coeffs]
    scale = max((abs(x) for x in c), default=0.0)
    while len(c) > 1 and abs(c[-1]) <= COEFF_TOL * scale:
        c.pop()
    return tuple(c) if c else (0j,)


def poly_mul(a, b) -> tuple[complex, ...]:
    return trim_poly(P.polymul(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)))


def poly_eval(coeffs, n):
    """Evaluate an ascending-coefficient polynomial at n (scalar or array)."""
    return P.polyval(n, np.asarray(coeffs, dtype=complex))


@dataclass(frozen=True)
class DiagonalSymbol:
    """
    Polynomial a_n = sum_k coefficients[k] * n**k (ascending powers).

    Real symbols give self-adjoint diagonal operators.
    """

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", trim_poly(self.coefficients))

    @classmethod
    def identity(cls) -> "DiagonalSymbol":
        """a_n = n"""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        if len(self.coefficients) == 1 and self.coefficients[0] == 0:
            return 0
        return len(self.coefficients) - 1

    @property
    def is_real(self) -> bool:
        return all(abs(c.imag) <= COEFF_TOL * max(1.0, abs(c)) for c in self.coefficients)

    def __call__(self, n):
        return poly_eval(self.coefficients, n)

    def conjugate(self) -> "DiagonalSymbol":
        return DiagonalSymbol(tuple(c.conjugate() for c in self.coefficients))

    def shifted(self, c: complex) -> "DiagonalSymbol":
        """a_n + c"""
        coeffs = list(self.coefficients)
        coeffs[0] += c
        return DiagonalSymbol(tuple(coeffs))

    def times(self, other: "DiagonalSymbol") -> "DiagonalSymbol":
        return DiagonalSymbol(poly_mul(self.coefficients, other.coefficients))

    def one_plus_abs_sq(self) -> "DiagonalSymbol":
        """1 + a_n conj(a_n), the symbol of 1 + AA*."""
        return self.times(self.conjugate()).shifted(1.0)

    def integer_roots(self, limit: int = 10_000) -> list[int]:
        """Indices k >= 1 with a_k = 0."""
        if self.degree == 0:
            return []
        roots = P.polyroots(np.asarray(self.coefficients, dtype=complex))
        found = set()
        for r in roots:
            k = int(round(r.real))
            if 1 <= k <= limit and abs(self(k)) <= 1e-9 * max(1.0, max(abs(c) for c in self.coefficients)) * k**self.degree:
                found.add(k)
        return sorted(found)

    def describe(self) -> str:
        parts = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            value = f"{c.real:g}" if c.imag == 0 else f"({c.real:g}{c.imag:+g}j)"
            if k == 0:
                parts.append(value)
            else:
                mono = "n" if k == 1 else f"n^{k}"
                parts.append(mono if value == "1" else f"{value}*{mono}")
        return " + ".join(parts) if parts else "0"
