"""
Span families M in D(A*), their Gram matrices, graph projections, the gap metric
between lifted graphs and the well-definedness condition of extensions.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any, NamedTuple

import numpy as np

from ..linalg import (
    DEFAULT_RANK_TOL,
    FrameCoefficients,
    hermitian_eig,
    null_directions,
    orthonormalize_from_gram,
    projection_difference_norm,
)
from ..models import HilbertModel
from ..storage.models import DomainViolationError, ModelMismatchError, RuntimeGuardError
from .utils import parallel_map

logger = logging.getLogger(__name__)

MAX_GENERATORS = 4097
OBSTRUCTION_TOL = 1e-9
COEFF_CHOP_TOL = 1e-12


# ===== Gram assembly =====


def gram_matrix(
    model: HilbertModel,
    left: Sequence[Any],
    right: Sequence[Any] | None = None,
    graph: bool = True,
    workers: int = 1,
) -> np.ndarray:
    """
    Matrix of inner products <left_i, right_j> (graph or ambient).

    With right omitted the result is the Hermitian Gram of left; only its upper
    triangle is evaluated. Each entry is one inner product, so the result does not
    depend on the number of workers.
    """
    symmetric = right is None
    right = left if right is None else right
    fast = model.gram_fast_path(left, right, graph)
    if fast is not None:
        return np.asarray(fast, dtype=complex)

    inner = model.graph_inner if graph else model.inner
    if symmetric:
        cells = [(i, j) for i in range(len(left)) for j in range(i, len(left))]
    else:
        cells = [(i, j) for i in range(len(left)) for j in range(len(right))]
    values = parallel_map(lambda ij: inner(left[ij[0]], right[ij[1]]), cells, workers)

    out = np.zeros((len(left), len(right)), dtype=complex)
    for (i, j), v in zip(cells, values, strict=True):
        out[i, j] = v
        if symmetric and i != j:
            out[j, i] = np.conj(v)
    if symmetric:
        out[np.diag_indices(len(left))] = out.diagonal().real
    return out


# ===== Span families =====


@dataclass(frozen=True, eq=False)
class SpanFamily:
    """
    Finite-dimensional subspace M of D(A*) with frozen ambient and graph Grams.

    The graph Gram is also the Gram of the lifted vectors (phi, A*phi) in H + H.
    """

    model: HilbertModel
    generators: tuple[Any, ...]
    gram_ambient: np.ndarray
    gram_graph: np.ndarray
    rank_tol: float = DEFAULT_RANK_TOL

    @classmethod
    def build(
        cls,
        model: HilbertModel,
        generators: Sequence[Any],
        rank_tol: float = DEFAULT_RANK_TOL,
        workers: int = 1,
    ) -> "SpanFamily":
        """
        Validate generators and compute both Gram matrices.

        Raises:
            RuntimeGuardError: If more than MAX_GENERATORS generators are given
            DomainViolationError: If a generator is not in D(A*)
        """
        generators = tuple(generators)
        if len(generators) > MAX_GENERATORS:
            raise RuntimeGuardError(f"Span families are capped at {MAX_GENERATORS} generators, got {len(generators)}")
        for k, g in enumerate(generators):
            if not model.in_dom_Astar(g):
                raise DomainViolationError(f"Generator {k} ({model.describe(g)}) is not in D(A*)")
        gram_graph = gram_matrix(model, generators, graph=True, workers=workers)
        gram_ambient = gram_matrix(model, generators, graph=False, workers=workers)
        logger.debug(f"Built span family of {len(generators)} generators over {model.id}")
        return cls(model, generators, gram_ambient, gram_graph, rank_tol)

    @classmethod
    def empty(cls, model: HilbertModel, rank_tol: float = DEFAULT_RANK_TOL) -> "SpanFamily":
        z = np.zeros((0, 0), dtype=complex)
        return cls(model, (), z, z, rank_tol)

    @property
    def size(self) -> int:
        return len(self.generators)

    @cached_property
    def frame(self) -> FrameCoefficients:
        """Graph-orthonormal frame of M in terms of the generators."""
        return orthonormalize_from_gram(self.gram_graph, self.rank_tol)

    @property
    def rank(self) -> int:
        return self.frame.rank

    @cached_property
    def astar_images(self) -> tuple[Any, ...]:
        return tuple(self.model.apply_Astar(g) for g in self.generators)

    def vector(self, coefficients: Sequence[complex]) -> Any:
        """sum_i c_i phi_i"""
        return self.model.linear_combination(list(self.generators), list(coefficients))

    def astar_vector(self, coefficients: Sequence[complex]) -> Any:
        """A* sum_i c_i phi_i"""
        return self.model.linear_combination(list(self.astar_images), list(coefficients))

    def gram_defect(self) -> float:
        """max |(graph Gram - ambient Gram) - Gram of {A*phi_i}|"""
        if not self.size:
            return 0.0
        images = gram_matrix(self.model, list(self.astar_images), graph=False)
        return float(np.max(np.abs(self.gram_graph - self.gram_ambient - images)))

    def recompute_defect(self) -> float:
        """max deviation of the cached Grams from freshly computed ones"""
        if not self.size:
            return 0.0
        graph = gram_matrix(self.model, self.generators, graph=True)
        ambient = gram_matrix(self.model, self.generators, graph=False)
        return float(max(np.max(np.abs(graph - self.gram_graph)), np.max(np.abs(ambient - self.gram_ambient))))

    def describe(self) -> str:
        if not self.generators:
            return "{0}"
        shown = [self.model.describe(g) for g in self.generators[:4]]
        more = f", ... ({self.size} generators)" if self.size > 4 else ""
        return "span{" + ", ".join(shown) + more + "}"


def same_model(a: HilbertModel, b: HilbertModel) -> bool:
    return a is b or (type(a) is type(b) and a.parameters() == b.parameters())


def _require_same_model(m1: SpanFamily, m2: SpanFamily) -> None:
    if not same_model(m1.model, m2.model):
        raise ModelMismatchError(
            f"Span families live over different models: {m1.model.parameters()} vs {m2.model.parameters()}"
        )


# ===== Projections and distances =====


class GraphProjection(NamedTuple):
    """Best graph-norm approximation of f from M"""

    coefficients: np.ndarray
    distance: float


def graph_project(family: SpanFamily, f: Any) -> GraphProjection:
    """
    Graph-orthogonal projection of f onto M.

    Args:
        family: The span family M
        f: Vector in D(A*)

    Returns:
        GraphProjection with minimal-norm coefficients c and
        distance = ||f - sum c_i phi_i||_{+1}

    Raises:
        DomainViolationError: If f is not in D(A*)
    """
    model = family.model
    if not model.in_dom_Astar(f):
        raise DomainViolationError(f"{model.describe(f)} is not in D(A*)")
    norm_sq = model.graph_inner(f, f).real
    if not family.size:
        return GraphProjection(np.zeros(0, dtype=complex), float(np.sqrt(max(0.0, norm_sq))))
    v = gram_matrix(model, family.generators, [f], graph=True)[:, 0]
    w = family.frame.weights
    y = w.conj().T @ v
    coefficients = w @ y
    dist_sq = norm_sq - float(np.vdot(y, y).real)
    return GraphProjection(coefficients, float(np.sqrt(max(0.0, dist_sq))))


def gap_metric(m1: SpanFamily, m2: SpanFamily) -> float:
    """
    Kato gap ||P(Gamma_M1) - P(Gamma_M2)|| between the lifted graphs.

    Raises:
        ModelMismatchError: If the families live over different models
    """
    _require_same_model(m1, m2)
    k1, k2 = m1.size, m2.size
    if not k1 and not k2:
        return 0.0
    cross = gram_matrix(m1.model, m1.generators, m2.generators, graph=True) if k1 and k2 else np.zeros((k1, k2))
    joint = np.block([[m1.gram_graph, cross], [cross.conj().T, m2.gram_graph]])
    # unit-norm generators; the spans and hence the projections are unchanged
    diag = np.sqrt(np.maximum(np.real(np.diag(joint)), 0.0))
    diag[diag == 0] = 1.0
    joint = joint / np.outer(diag, diag)
    rank_tol = max(m1.rank_tol, m2.rank_tol)
    return projection_difference_norm(joint, list(range(k1)), list(range(k1, k1 + k2)), rank_tol)


def restriction_gap(m1: SpanFamily, m2: SpanFamily) -> float:
    """
    ||P(Gamma(C_M1)) - P(Gamma(C_M2))||.

    Gamma(C_M) is the orthogonal complement of Gamma_M inside Gamma(A*), so the two
    projection differences coincide.
    """
    return gap_metric(m1, m2)


def normalized_graph_distance(model: HilbertModel, u: Any, v: Any) -> float:
    """min over |w| = 1 of || u/||u|| - w v/||v|| ||_{+1}"""
    nu, nv = model.graph_norm(u), model.graph_norm(v)
    if nu == 0 or nv == 0:
        raise ValueError("Normalized distance needs two nonzero vectors")
    overlap = min(1.0, abs(model.graph_inner(u, v)) / (nu * nv))
    return float(np.sqrt(max(0.0, 2.0 - 2.0 * overlap)))


# ===== Well-definedness condition =====


class ConditionResult(NamedTuple):
    """Outcome of the ker(A*) / D(A) intersection test; coefficients come from normalize_coefficients"""

    ok: bool
    witness: Any = None
    coefficients: np.ndarray | None = None
    violated: str | None = None


def normalize_coefficients(c: np.ndarray) -> np.ndarray:
    """
    Scale c so its largest-magnitude entry is exactly 1.

    Witnesses are reported in this normalization, not at unit graph norm. Entries below
    COEFF_CHOP_TOL after scaling are set to 0, so a generator that only enters through
    round-off does not reach the witness.
    """
    c = np.asarray(c, dtype=complex)
    k = int(np.argmax(np.abs(c)))
    c = c / c[k]
    c[np.abs(c) <= COEFF_CHOP_TOL] = 0
    return c


def condition_precloscon(family: SpanFamily) -> ConditionResult:
    """
    Decide ker(A*) & M = {0} and {A*phi : phi in M} & D(A) = {0}.

    The first part is a joint rank test against the model's kernel basis; the second
    solves the model's linear obstruction system for A* images. A failing family comes
    with the violating combination as witness.
    """
    model = family.model
    if not family.size or not family.rank:
        return ConditionResult(True)
    w = family.frame.weights

    kernel = model.kernel_Astar_basis()
    if kernel:
        r = family.rank
        cross = w.conj().T @ gram_matrix(model, family.generators, kernel, graph=True)
        joint = np.block([[np.eye(r), cross], [cross.conj().T, gram_matrix(model, kernel, graph=True)]])
        values, vectors = hermitian_eig(joint)
        if values[-1] <= family.rank_tol * values[0]:
            c = normalize_coefficients(w @ vectors[:r, -1])
            logger.debug(f"Kernel intersection found, eigenvalue {values[-1]:.3e}")
            return ConditionResult(False, family.vector(c), c, "kernel")

    o = model.obstruction(list(family.astar_images)) @ w
    scale = max(1.0, float(np.max(np.abs(o)))) if o.size else 1.0
    null = null_directions(o, OBSTRUCTION_TOL * scale)
    if null.shape[1]:
        c = normalize_coefficients(w @ null[:, 0])
        logger.debug(f"A* image in D(A) found ({null.shape[1]} directions)")
        return ConditionResult(False, family.vector(c), c, "domain")
    return ConditionResult(True)
