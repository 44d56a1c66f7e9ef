"""
Extensions A_M and restrictions C_M of a closed operator.

A_M acts on D(A) + {A*phi : phi in M} by f + A*phi -> Af - phi; C_M is A*
restricted to the graph-orthogonal complement of M. Under the well-definedness
condition the two are adjoint to each other.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, NamedTuple

import numpy as np
import scipy.linalg

from ..models import HilbertModel
from ..storage.models import ConditionViolationError, DomainViolationError
from .geometry import (
    SpanFamily,
    condition_precloscon,
    gram_matrix,
    graph_project,
)
from .utils import LcgStream, parallel_map

logger = logging.getLogger(__name__)

MEMBERSHIP_TOL = 1e-9
DECOMPOSE_TOL = 1e-9
RECOVERY_TOL = 1e-8
DEFAULT_SAMPLES = 32
DEFAULT_SEED = 20240607


# ===== Operators =====


@dataclass(frozen=True, eq=False)
class ExtensionOperator:
    """A_M; construction enforces the well-definedness condition on M."""

    family: SpanFamily

    def __post_init__(self):
        result = condition_precloscon(self.family)
        if not result.ok:
            raise ConditionViolationError(
                f"{self.family.describe()} violates the {result.violated} condition; "
                f"witness {self.model.describe(result.witness)}"
            )

    @property
    def model(self) -> HilbertModel:
        return self.family.model


@dataclass(frozen=True, eq=False)
class RestrictionOperator:
    """C_M = A* on {f in D(A*) : <phi, f>_{+1} = 0 for all phi in M}; no condition on M."""

    family: SpanFamily

    @property
    def model(self) -> HilbertModel:
        return self.family.model


class Decomposition(NamedTuple):
    """h = f + A*(sum c_i phi_i) with f in D(A)"""

    f: Any
    coefficients: np.ndarray


class Membership(NamedTuple):
    member: bool
    residuals: np.ndarray
    threshold: float

    @property
    def max_residual(self) -> float:
        return float(np.max(np.abs(self.residuals))) if self.residuals.size else 0.0


class DualityResult(NamedTuple):
    max_residual: float
    residuals: list[float]


class DensityResult(NamedTuple):
    dense: bool
    witness: Any = None
    embedding: Any = None
    coefficients: np.ndarray | None = None
    max_orthogonality: float = 0.0
    embedding_norm: float = 0.0


# ===== Extension side =====


def extension_apply(E: ExtensionOperator, f: Any, c: Sequence[complex]) -> Any:
    """
    A_M(f + A*phi) = Af - phi with phi = sum c_i phi_i.

    Raises:
        DomainViolationError: If f is not in D(A)
        ValueError: If c does not match the number of generators
    """
    if len(c) != E.family.size:
        raise ValueError(f"Expected {E.family.size} coefficients, got {len(c)}")
    af = E.model.apply_A(f)
    if not E.family.size:
        return af
    return E.model.sub(af, E.family.vector(c))


def extension_input(E: ExtensionOperator, f: Any, c: Sequence[complex]) -> Any:
    """The D(A_M) vector f + A*(sum c_i phi_i)."""
    if not E.family.size:
        return f
    return E.model.add(f, E.family.astar_vector(c))


def extension_decompose(E: ExtensionOperator, h: Any) -> Decomposition | None:
    """
    Split h into f + A*phi with f in D(A) and phi in M.

    Solves the model's obstruction system for the coefficients, then verifies the
    remainder. Returns None when h is not in D(A_M).
    """
    model, family = E.model, E.family
    if not family.size:
        return Decomposition(h, np.zeros(0, dtype=complex)) if model.in_dom_A(h) else None

    o = model.obstruction([*family.astar_images, h])
    o_images, o_h = o[:, :-1], o[:, -1]
    if o.shape[0]:
        c, *_ = scipy.linalg.lstsq(o_images, o_h)
        mismatch = float(np.max(np.abs(o_images @ c - o_h)))
        if mismatch > DECOMPOSE_TOL * (1.0 + float(np.max(np.abs(o_h)))):
            logger.debug(f"Obstruction system inconsistent (mismatch {mismatch:.3e})")
            return None
    else:
        c = np.zeros(family.size, dtype=complex)
    c = np.asarray(c, dtype=complex)
    f = model.sub(h, family.astar_vector(c))
    if not model.in_dom_A(f):
        return None
    return Decomposition(f, c)


def graph_decomposition_residual(E: ExtensionOperator, f: Any, c: Sequence[complex]) -> float:
    """|<f, A*phi> + <Af, -phi>|: graph orthogonality of the two direct summands."""
    model, family = E.model, E.family
    if not family.size:
        return 0.0
    phi = family.vector(c)
    return abs(model.inner(f, family.astar_vector(c)) - model.inner(model.apply_A(f), phi))


# ===== Restriction side =====


def restriction_membership(R: RestrictionOperator, f: Any) -> Membership:
    """
    f in D(C_M): every <phi_i, f>_{+1} vanishes within 1e-9 (1 + ||f||_{+1}).

    Raises:
        DomainViolationError: If f is not in D(A*)
    """
    model, family = R.model, R.family
    if not model.in_dom_Astar(f):
        raise DomainViolationError(f"{model.describe(f)} is not in D(A*)")
    threshold = MEMBERSHIP_TOL * (1.0 + model.graph_norm(f))
    if not family.size:
        return Membership(True, np.zeros(0, dtype=complex), threshold)
    residuals = gram_matrix(model, family.generators, [f], graph=True)[:, 0]
    return Membership(bool(np.max(np.abs(residuals)) <= threshold), residuals, threshold)


def restriction_project_into_domain(R: RestrictionOperator, g: Any) -> Any:
    """g minus its graph projection onto M, an element of D(C_M)."""
    if not R.family.size:
        if not R.model.in_dom_Astar(g):
            raise DomainViolationError(f"{R.model.describe(g)} is not in D(A*)")
        return g
    projection = graph_project(R.family, g)
    return R.model.sub(g, R.family.vector(projection.coefficients))


def restriction_apply(R: RestrictionOperator, f: Any) -> Any:
    """
    C_M f = A* f.

    Raises:
        DomainViolationError: If f is not in D(C_M)
    """
    membership = restriction_membership(R, f)
    if not membership.member:
        raise DomainViolationError(f"Not in D(C_M): residual {membership.max_residual:.3e}")
    return R.model.apply_Astar(f)


# ===== Sampling =====


def random_probe(model: HilbertModel, probes: list[Any], rng: LcgStream) -> Any:
    """Random complex combination of two probes; stays in D(A)."""
    i = rng.choice(len(probes))
    j = rng.choice(len(probes))
    return model.linear_combination([probes[i], probes[j]], [rng.complex(), rng.complex()])


def domain_samples(R: RestrictionOperator, n_samples: int, seed: int) -> list[Any]:
    """Deterministic D(C_M) samples built from the model's probe dictionary."""
    probes = R.model.probe_vectors()
    rng = LcgStream(seed)
    return [restriction_project_into_domain(R, random_probe(R.model, probes, rng)) for _ in range(n_samples)]


# ===== Checks =====


def adjoint_duality_check(
    family: SpanFamily,
    n_samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> DualityResult:
    """
    max |<g, A_M u> - <C_M g, u>| over samples u in D(A_M), g in D(C_M).

    Each residual is divided by (1 + ||g||_{+1})(1 + ||u|| + ||A_M u||).

    Raises:
        ConditionViolationError: If M fails the well-definedness condition
    """
    E = ExtensionOperator(family)
    R = RestrictionOperator(family)
    model = family.model
    probes = model.probe_vectors()
    rng = LcgStream(seed)
    draws = []
    for _ in range(n_samples):
        f = random_probe(model, probes, rng)
        c = rng.coefficients(family.size)
        g_raw = random_probe(model, probes, rng)
        draws.append((f, c, g_raw))

    def residual(draw) -> float:
        f, c, g_raw = draw
        u = extension_input(E, f, c)
        a_u = extension_apply(E, f, c)
        g = restriction_project_into_domain(R, g_raw)
        c_g = model.apply_Astar(g)
        defect = abs(model.inner(g, a_u) - model.inner(c_g, u))
        scale = (1.0 + model.graph_norm(g)) * (1.0 + model.norm(u) + model.norm(a_u))
        return defect / scale

    residuals = parallel_map(residual, draws, workers)
    worst = max(residuals, default=0.0)
    logger.info(f"Duality check on {family.describe()}: max residual {worst:.3e} over {n_samples} samples")
    return DualityResult(worst, residuals)


def density_decision(
    family: SpanFamily,
    n_samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> DensityResult:
    """
    Decide whether C_M is densely defined.

    For finite-dimensional M this is the well-definedness condition. A violating phi
    gives the witness w = (1 + AA*)phi, which is nonzero and orthogonal to every
    D(C_M) sample.
    """
    condition = condition_precloscon(family)
    if condition.ok:
        return DensityResult(True)

    model = family.model
    phi = condition.witness
    w = model.add(phi, model.apply_A(model.apply_Astar(phi)))
    R = RestrictionOperator(family)
    worst = 0.0
    for g in domain_samples(R, n_samples, seed):
        worst = max(worst, abs(model.inner(w, g)) / (1.0 + model.graph_norm(g)))
    logger.info(f"{family.describe()} is not dense; witness orthogonality {worst:.3e}")
    return DensityResult(False, phi, w, condition.coefficients, worst, model.norm(w))


def recover_parameter(E: ExtensionOperator, workers: int = 1) -> SpanFamily:
    """
    Reconstruct M from A_M alone.

    D(A_M*) is cut out of D(A*) by the functionals v -> <A_M u, v> - <u, A* v> for
    u in D(A_M); the recovered parameter is its graph-orthogonal complement inside the
    span V of generators and probes.
    """
    model, family = E.model, E.family
    probes = model.probe_vectors()
    span = [*family.generators, *probes]
    frame = SpanFamily.build(model, span, family.rank_tol, workers).frame

    # u = A* phi_i has A_M u = -phi_i; u = f in D(A) gives A_M u = A f
    pairs = [(family.astar_images[i], model.scale(family.generators[i], -1.0)) for i in range(family.size)]
    pairs += [(f, model.apply_A(f)) for f in probes]
    cells = [(i, j) for i in range(len(pairs)) for j in range(len(span))]

    def functional(ij) -> complex:
        u, a_u = pairs[ij[0]]
        v = span[ij[1]]
        return model.inner(a_u, v) - model.inner(u, model.apply_Astar(v))

    values = parallel_map(functional, cells, workers)
    lmat = np.zeros((len(pairs), len(span)), dtype=complex)
    for (i, j), value in zip(cells, values, strict=True):
        lmat[i, j] = value

    ly = lmat @ frame.weights
    if not ly.size:
        return SpanFamily.empty(model, family.rank_tol)
    _, s, vh = scipy.linalg.svd(ly, full_matrices=False)
    keep = s > RECOVERY_TOL * max(1.0, float(s[0]) if s.size else 0.0)
    y = vh[keep].conj().T
    coefficients = frame.weights @ y
    recovered = [model.linear_combination(span, list(coefficients[:, k])) for k in range(coefficients.shape[1])]
    logger.debug(f"Recovered parameter of dimension {len(recovered)} from {len(span)} vectors")
    return SpanFamily.build(model, recovered, family.rank_tol, workers)
