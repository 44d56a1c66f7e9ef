"""
The operator-pair contract shared by every bundled model.

A model is a densely defined closed operator A on a Hilbert space H together with
its adjoint A*, exposed through exactly decidable domain predicates and the few
inverses (1 + AA*)^-1 and (A +- i)^-1 the calculus needs.
"""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import Any

import numpy as np

from ..storage.models import DomainViolationError, ModelKind, UnsupportedOperationError


class HilbertModel(ABC):
    """
    Abstract operator pair (A, A*).

    A and A* stay separate slots even for self-adjoint models; only the resolvent and
    the von Neumann layer rely on self_adjoint.
    """

    id: str = ""
    kind: ModelKind
    self_adjoint: bool = True

    @classmethod
    def from_options(cls, **options) -> "HilbertModel":
        """Build the model from CLI/registry options; models without options ignore them."""
        return cls()

    # ----- vector algebra -----

    @abstractmethod
    def zero(self) -> Any:
        """The zero vector."""

    @abstractmethod
    def linear_combination(self, vectors: Sequence[Any], coeffs: Sequence[complex]) -> Any:
        """sum_i coeffs[i] * vectors[i]"""

    def add(self, f: Any, g: Any) -> Any:
        return self.linear_combination([f, g], [1.0, 1.0])

    def sub(self, f: Any, g: Any) -> Any:
        return self.linear_combination([f, g], [1.0, -1.0])

    def scale(self, f: Any, c: complex) -> Any:
        return self.linear_combination([f], [c])

    @abstractmethod
    def is_zero(self, f: Any) -> bool:
        """Exact structural zero test."""

    # ----- domains and actions -----

    @abstractmethod
    def in_dom_A(self, f: Any) -> bool:
        """Decidable membership f in D(A)."""

    @abstractmethod
    def in_dom_Astar(self, f: Any) -> bool:
        """Decidable membership f in D(A*)."""

    @abstractmethod
    def _apply_A(self, f: Any) -> Any: ...

    @abstractmethod
    def _apply_Astar(self, f: Any) -> Any: ...

    def apply_A(self, f: Any) -> Any:
        """
        A f.

        Raises:
            DomainViolationError: If f is not in D(A)
        """
        if not self.in_dom_A(f):
            raise DomainViolationError(f"{self.describe(f)} is not in D(A) for model {self.id}")
        return self._apply_A(f)

    def apply_Astar(self, f: Any) -> Any:
        """
        A* f.

        Raises:
            DomainViolationError: If f is not in D(A*)
        """
        if not self.in_dom_Astar(f):
            raise DomainViolationError(f"{self.describe(f)} is not in D(A*) for model {self.id}")
        return self._apply_Astar(f)

    def in_dom_AAstar(self, f: Any) -> bool:
        """f in D(AA*): A*f exists and lies in D(A)."""
        return self.in_dom_Astar(f) and self.in_dom_A(self._apply_Astar(f))

    # ----- inner products -----

    @abstractmethod
    def inner(self, f: Any, g: Any) -> complex:
        """Ambient <f, g>, antilinear in f."""

    def graph_inner(self, f: Any, g: Any) -> complex:
        """<f, g>_{+1} = <f, g> + <A*f, A*g>."""
        return self.inner(f, g) + self.inner(self.apply_Astar(f), self.apply_Astar(g))

    def norm(self, f: Any) -> float:
        return float(np.sqrt(max(0.0, self.inner(f, f).real)))

    def graph_norm(self, f: Any) -> float:
        return float(np.sqrt(max(0.0, self.graph_inner(f, f).real)))

    def gram_fast_path(self, left: Sequence[Any], right: Sequence[Any], graph: bool) -> np.ndarray | None:
        """Closed-form Gram block for special families, or None to fall back to inner products."""
        return None

    # ----- structure -----

    @abstractmethod
    def kernel_Astar_basis(self) -> list[Any]:
        """Linearly independent vectors spanning ker A*."""

    @abstractmethod
    def solve_one_plus_AAstar(self, f: Any) -> Any:
        """g with g + AA*g = f."""

    @abstractmethod
    def _resolvent(self, sign: int, f: Any) -> Any: ...

    def resolvent_at(self, sign: int, f: Any) -> Any:
        """
        (A + sign*i)^-1 f.

        Raises:
            UnsupportedOperationError: On a non-self-adjoint model or sign other than +-1
        """
        if not self.self_adjoint:
            raise UnsupportedOperationError(f"Model {self.id} is not self-adjoint; +-i may lie in the spectrum")
        if sign not in (1, -1):
            raise UnsupportedOperationError(f"Resolvents are available at +-i only, got sign {sign}")
        return self._resolvent(sign, f)

    @abstractmethod
    def obstruction(self, vectors: Sequence[Any]) -> np.ndarray:
        """
        Linear obstruction to D(A) membership.

        Returns a matrix O with one column per vector such that, for vectors of H,
        sum_i c_i vectors[i] lies in D(A) exactly when O c = 0. Zero rows means every
        combination is in D(A).
        """

    # ----- functionals and sampling -----

    @abstractmethod
    def point_representative(self, location: float) -> Any:
        """Riesz representative in H_{+1} of point evaluation (momentum) or coordinate evaluation (diag)."""

    @abstractmethod
    def point_value(self, f: Any, location: float) -> complex:
        """f(location), or the coordinate f_k on sequence models."""

    def interval_representative(self, a: float, b: float, c: complex) -> Any:
        raise UnsupportedOperationError(f"Interval functionals are not defined on model {self.id}")

    @abstractmethod
    def probe_vectors(self) -> list[Any]:
        """Fixed dictionary of D(A) vectors used to manufacture samples."""

    # ----- presentation -----

    @abstractmethod
    def describe(self, f: Any) -> str: ...

    @abstractmethod
    def vector_to_dict(self, f: Any) -> dict[str, Any]: ...

    @abstractmethod
    def vector_from_dict(self, data: dict[str, Any]) -> Any: ...

    def parameters(self) -> dict[str, Any]:
        """Model description recorded in reports."""
        return {"model": self.id, "self_adjoint": self.self_adjoint}
