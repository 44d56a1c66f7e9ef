"""
H_{+1} and H_{-1} in executable form.

Every H_{-1} element is carried by its Riesz representative phi in D(A*), so that
l(f) = <phi, f>_{+1}. Only (1 + AA*)^{+-1} and graph inner products are ever formed.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, NamedTuple

import numpy as np

from ..linalg import DEFAULT_RANK_TOL
from ..models import HilbertModel
from ..storage.models import DomainViolationError
from .extension import MEMBERSHIP_TOL, RestrictionOperator
from .geometry import SpanFamily, condition_precloscon

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MinusOneFunctional:
    """Bounded functional on H_{+1}, held by its Riesz representative."""

    model: HilbertModel
    representative: Any
    label: str = ""

    def __post_init__(self):
        if not self.model.in_dom_Astar(self.representative):
            raise DomainViolationError(
                f"Representative {self.model.describe(self.representative)} is not in D(A*)"
            )

    @classmethod
    def point(cls, model: HilbertModel, location: float) -> "MinusOneFunctional":
        """Point evaluation (momentum) or coordinate evaluation (diag)."""
        return cls(model, model.point_representative(location), f"point:{location:g}")

    @classmethod
    def interval_integral(cls, model: HilbertModel, a: float, b: float, c: complex = 1.0) -> "MinusOneFunctional":
        """f -> c * integral of f over [a, b]"""
        return cls(model, model.interval_representative(a, b, c), f"interval-integral:{a:g},{b:g},{c:g}")

    @classmethod
    def from_h_vector(cls, model: HilbertModel, v: Any, label: str = "") -> "MinusOneFunctional":
        """f -> <v, f> for v in H; the representative is (1 + AA*)^-1 v."""
        return cls(model, model.solve_one_plus_AAstar(v), label or f"h:{model.describe(v)}")

    @property
    def norm(self) -> float:
        """||l||_{-1} = ||phi||_{+1}"""
        return self.model.graph_norm(self.representative)

    def describe(self) -> str:
        return self.label or f"rep:{self.model.describe(self.representative)}"


class Embedding(NamedTuple):
    in_h: bool
    vector: Any = None


class CriterionResult(NamedTuple):
    dense: bool
    witness: Any = None
    embedding: Any = None
    coefficients: np.ndarray | None = None


def norm_minus_one(model: HilbertModel, v: Any) -> float:
    """||v||_{-1} = sqrt(<v, (1 + AA*)^-1 v>) for v in H."""
    return float(np.sqrt(max(0.0, model.inner(v, model.solve_one_plus_AAstar(v)).real)))


def functional_eval(ell: MinusOneFunctional, f: Any) -> complex:
    """
    l(f) = <phi, f>_{+1}.

    Raises:
        DomainViolationError: If f is not in D(A*)
    """
    return ell.model.graph_inner(ell.representative, f)


def functional_in_H(ell: MinusOneFunctional) -> Embedding:
    """
    Whether l is <w, .> for some w in H.

    That happens exactly when A*phi lies in D(A); then w = (1 + AA*)phi.
    """
    model, phi = ell.model, ell.representative
    if not model.in_dom_AAstar(phi):
        return Embedding(False)
    return Embedding(True, model.add(phi, model.apply_A(model.apply_Astar(phi))))


def representative_family(
    model: HilbertModel,
    functionals: Sequence[MinusOneFunctional],
    rank_tol: float = DEFAULT_RANK_TOL,
    workers: int = 1,
) -> SpanFamily:
    return SpanFamily.build(model, [ell.representative for ell in functionals], rank_tol, workers)


def restriction_from_functionals(
    model: HilbertModel,
    functionals: Sequence[MinusOneFunctional],
    rank_tol: float = DEFAULT_RANK_TOL,
    workers: int = 1,
) -> RestrictionOperator:
    """A'_L: A* on the common zero set of the functionals, i.e. C_M with M spanned by their representatives."""
    return RestrictionOperator(representative_family(model, functionals, rank_tol, workers))


def functional_membership(functionals: Sequence[MinusOneFunctional], f: Any) -> bool:
    """f in D(A'_L): every l(f) vanishes within 1e-9 (1 + ||f||_{+1})."""
    if not functionals:
        return True
    model = functionals[0].model
    threshold = MEMBERSHIP_TOL * (1.0 + model.graph_norm(f))
    return all(abs(functional_eval(ell, f)) <= threshold for ell in functionals)


def density_criterion(
    model: HilbertModel,
    functionals: Sequence[MinusOneFunctional],
    rank_tol: float = DEFAULT_RANK_TOL,
) -> CriterionResult:
    """
    A'_L is densely defined iff span(L) meets H only in 0.

    A nonzero combination of representatives whose functional lies in H is returned as
    witness together with its H vector.
    """
    if not functionals:
        return CriterionResult(True)
    family = representative_family(model, functionals, rank_tol)
    condition = condition_precloscon(family)
    if condition.ok:
        return CriterionResult(True)
    phi = condition.witness
    embedding = model.add(phi, model.apply_A(model.apply_Astar(phi)))
    logger.debug(f"Functional combination {condition.coefficients} lies in H")
    return CriterionResult(False, phi, embedding, condition.coefficients)
