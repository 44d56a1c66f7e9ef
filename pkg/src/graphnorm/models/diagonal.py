"""
DiagonalSequence: A = multiplication by a polynomial symbol a_n on l2(N).
"""

import logging
from collections.abc import Sequence
from typing import Any

import numpy as np

from ..sequences import (
    DiagonalSymbol,
    SeqVector,
    apply_diag,
    linear_combination,
    resolvent_diag,
    seq_inner_product,
    solve_one_plus_aastar,
)
from ..sequences.summation import DEFAULT_EPS, DEFAULT_MAX_INDEX
from ..storage.models import IndexRangeError, ModelKind
from .base import HilbertModel
from .registry import ModelRegistry

logger = logging.getLogger(__name__)


class DiagonalSequence(HilbertModel):
    """
    Diagonal operator (Af)_n = a_n f_n with A* given by the conjugate symbol.

    Inner products are certified sums to within eps; domain membership is decided
    from tail exponents and ratios.
    """

    id = "diag"
    kind = ModelKind.DIAGONAL

    def __init__(
        self,
        symbol: DiagonalSymbol | None = None,
        eps: float = DEFAULT_EPS,
        max_index: int = DEFAULT_MAX_INDEX,
    ):
        self.symbol = symbol or DiagonalSymbol.identity()
        self.adjoint_symbol = self.symbol.conjugate()
        self.eps = eps
        self.max_index = max_index
        self.self_adjoint = self.symbol.is_real

    @classmethod
    def from_options(
        cls,
        symbol: DiagonalSymbol | None = None,
        eps: float | None = None,
        max_index: int | None = None,
        **_,
    ) -> "DiagonalSequence":
        return cls(
            symbol,
            DEFAULT_EPS if eps is None else eps,
            DEFAULT_MAX_INDEX if max_index is None else max_index,
        )

    def zero(self) -> SeqVector:
        return SeqVector.zero()

    def linear_combination(self, vectors: Sequence[SeqVector], coeffs: Sequence[complex]) -> SeqVector:
        return linear_combination(vectors, coeffs)

    def is_zero(self, f: SeqVector) -> bool:
        return f.is_zero

    def in_dom_A(self, f: SeqVector) -> bool:
        return f.is_ell2 and apply_diag(self.symbol, f).is_ell2

    def in_dom_Astar(self, f: SeqVector) -> bool:
        return f.is_ell2 and apply_diag(self.adjoint_symbol, f).is_ell2

    def _apply_A(self, f: SeqVector) -> SeqVector:
        return apply_diag(self.symbol, f)

    def _apply_Astar(self, f: SeqVector) -> SeqVector:
        return apply_diag(self.adjoint_symbol, f)

    def inner(self, f: SeqVector, g: SeqVector) -> complex:
        return complex(seq_inner_product(f, g, self.eps, self.max_index).value)

    def kernel_Astar_basis(self) -> list[SeqVector]:
        return [SeqVector.basis(k) for k in self.adjoint_symbol.integer_roots()]

    def solve_one_plus_AAstar(self, f: SeqVector) -> SeqVector:
        return solve_one_plus_aastar(self.symbol, f)

    def _resolvent(self, sign: int, f: SeqVector) -> SeqVector:
        return resolvent_diag(self.symbol, sign, f)

    def obstruction(self, vectors: Sequence[SeqVector]) -> np.ndarray:
        # one row per divergent tail class (power, ratio, weight) of A v
        rows: dict[tuple, int] = {}
        entries: list[tuple[int, int, complex]] = []
        for i, v in enumerate(vectors):
            for t in apply_diag(self.symbol, v).tails:
                if t.is_ell2:
                    continue
                row = rows.setdefault(t.key(), len(rows))
                entries.append((row, i, t.coeff))
        o = np.zeros((len(rows), len(vectors)), dtype=complex)
        for row, i, c in entries:
            o[row, i] += c
        return o

    def point_representative(self, location: float) -> SeqVector:
        """Representative of f -> f_k: e_k / (1 + |a_k|^2)."""
        k = int(round(location))
        if k < 1 or abs(k - location) > 1e-12:
            raise IndexRangeError(f"Coordinate functionals need an index >= 1, got {location}")
        return self.solve_one_plus_AAstar(SeqVector.basis(k))

    def point_value(self, f: SeqVector, location: float) -> complex:
        return f.coordinate(int(round(location)))

    def probe_vectors(self) -> list[SeqVector]:
        candidates = [SeqVector.basis(k) for k in range(1, 6)]
        candidates += [
            SeqVector.power_tail(1.0, 2.0),
            SeqVector.power_tail(1.0, 3.0),
            SeqVector.geometric_tail(1.0, 0.5),
            SeqVector.geometric_tail(1.0, -1.0, s=2.5),
        ]
        probes = [v for v in candidates if self.in_dom_A(v)]
        logger.debug(f"{len(probes)} of {len(candidates)} probes lie in D(A) for a_n = {self.symbol.describe()}")
        return probes

    def describe(self, f: SeqVector) -> str:
        return f.describe()

    def vector_to_dict(self, f: SeqVector) -> dict[str, Any]:
        return f.to_dict()

    def vector_from_dict(self, data: dict[str, Any]) -> SeqVector:
        return SeqVector.from_dict(data)

    def parameters(self) -> dict[str, Any]:
        params = super().parameters()
        params["symbol"] = self.symbol.describe()
        params["eps"] = self.eps
        return params


ModelRegistry.register(DiagonalSequence)
