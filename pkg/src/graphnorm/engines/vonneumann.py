"""
Self-adjoint extensions of a rank-one symmetric restriction.

For self-adjoint S and phi in D(S) with S phi not in D(S), C_phi is S on the
graph-orthogonal complement of phi. Its defect spaces are spanned by (S +- i)phi
and its self-adjoint extensions C_{phi,theta} form a circle, theta in (-pi, pi].
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Any, NamedTuple

import numpy as np
import scipy.linalg

from ..models import HilbertModel
from ..storage.models import (
    ConditionViolationError,
    DomainViolationError,
    UnsupportedOperationError,
)
from .extension import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DECOMPOSE_TOL,
    RestrictionOperator,
    domain_samples,
    restriction_membership,
)
from .geometry import SpanFamily
from .utils import LcgStream

logger = logging.getLogger(__name__)

ROUND_TRIP_EPS = 1e-8


# ===== Configuration =====


@dataclass(frozen=True)
class ExtensionParameter:
    """Phase theta in (-pi, pi]; theta = pi gives back S itself."""

    theta: float

    def __post_init__(self):
        if not (-math.pi < self.theta <= math.pi):
            raise UnsupportedOperationError(f"theta must lie in (-pi, pi], got {self.theta!r}")

    @property
    def is_trivial(self) -> bool:
        return self.theta == math.pi

    @property
    def phase(self) -> complex:
        """e^{i theta}, exactly -1 at pi."""
        return -1.0 + 0j if self.is_trivial else cmath.exp(1j * self.theta)

    @property
    def resolvent_coefficient(self) -> complex:
        """(1 + e^{i theta}) / (2i)"""
        if self.is_trivial:
            return 0j
        return (1.0 + self.phase) / 2j


@dataclass(frozen=True, eq=False)
class RankOneRestrictionConfig:
    """
    S with a normalized phi: ||(S + i)phi|| = ||(S - i)phi|| = 1.

    Use build() to validate and normalize a raw phi.
    """

    model: HilbertModel
    phi: Any
    s_phi: Any
    normalization: float

    @classmethod
    def build(cls, model: HilbertModel, phi: Any) -> "RankOneRestrictionConfig":
        """
        Raises:
            UnsupportedOperationError: If the model is not self-adjoint
            DomainViolationError: If phi is zero or not in D(S)
            ConditionViolationError: If S phi lies in D(S)
        """
        if not model.self_adjoint:
            raise UnsupportedOperationError(f"Model {model.id} is not self-adjoint")
        if model.is_zero(phi):
            raise DomainViolationError("phi must be nonzero")
        if not model.in_dom_A(phi):
            raise DomainViolationError(f"{model.describe(phi)} is not in D(S)")
        s_phi = model.apply_A(phi)
        if model.in_dom_A(s_phi):
            raise ConditionViolationError(f"S phi = {model.describe(s_phi)} lies in D(S); C_phi would not be dense")
        # ||(S +- i)phi||^2 = ||phi||^2 + ||S phi||^2 for symmetric S
        norm = math.sqrt(model.inner(phi, phi).real + model.inner(s_phi, s_phi).real)
        logger.debug(f"Normalizing phi = {model.describe(phi)} by {norm:.12g}")
        return cls(model, model.scale(phi, 1.0 / norm), model.scale(s_phi, 1.0 / norm), norm)

    @property
    def n_plus(self) -> Any:
        """(S + i)phi"""
        return self.model.linear_combination([self.s_phi, self.phi], [1.0, 1j])

    @property
    def n_minus(self) -> Any:
        """(S - i)phi"""
        return self.model.linear_combination([self.s_phi, self.phi], [1.0, -1j])

    def restriction(self) -> RestrictionOperator:
        """C_phi as C_M with M = span{phi}."""
        return RestrictionOperator(SpanFamily.build(self.model, [self.phi]))

    def domain_vector(self, theta: ExtensionParameter) -> Any:
        """(S + i)phi + e^{i theta}(S - i)phi"""
        return self.model.linear_combination([self.n_plus, self.n_minus], [1.0, theta.phase])


class DefectVectors(NamedTuple):
    n_plus: Any
    n_minus: Any
    residual_plus: float
    residual_minus: float
    norm_plus: float
    norm_minus: float


class RoundTrip(NamedTuple):
    residual: float
    lam: complex | None = None
    membership_residual: float = 0.0
    diagnostics: str = ""


# ===== Operations =====


def adjoint_apply(cfg: RankOneRestrictionConfig, f: Any, lam: complex) -> Any:
    """C_phi*(f + lam S phi) = S f - lam phi for f in D(S)."""
    model = cfg.model
    return model.linear_combination([model.apply_A(f), cfg.phi], [1.0, -lam])


def defect_vectors(cfg: RankOneRestrictionConfig) -> DefectVectors:
    """
    (S + i)phi and (S - i)phi with the kernel identities C_phi* n_+- = +-i n_+-.

    n_+- is written as (+-i phi) + 1 * S phi and pushed through the C_phi* action.
    """
    model = cfg.model
    n_plus, n_minus = cfg.n_plus, cfg.n_minus
    image_plus = adjoint_apply(cfg, model.scale(cfg.phi, 1j), 1.0)
    image_minus = adjoint_apply(cfg, model.scale(cfg.phi, -1j), 1.0)
    residual_plus = model.norm(model.linear_combination([image_plus, n_plus], [1.0, -1j]))
    residual_minus = model.norm(model.linear_combination([image_minus, n_minus], [1.0, 1j]))
    return DefectVectors(
        n_plus, n_minus, residual_plus, residual_minus, model.norm(n_plus), model.norm(n_minus)
    )


def extension_apply_theta(
    cfg: RankOneRestrictionConfig,
    theta: ExtensionParameter,
    f: Any,
    lam: complex,
) -> Any:
    """
    C_{phi,theta}(f + lam((S+i)phi + e^{i theta}(S-i)phi)) = Sf + i lam((S+i)phi - e^{i theta}(S-i)phi).

    Raises:
        DomainViolationError: If f is not in D(C_phi)
    """
    model = cfg.model
    membership = restriction_membership(cfg.restriction(), f)
    if not membership.member:
        raise DomainViolationError(f"Not in D(C_phi): residual {membership.max_residual:.3e}")
    return model.linear_combination(
        [model.apply_A(f), cfg.n_plus, cfg.n_minus],
        [1.0, 1j * lam, -1j * lam * theta.phase],
    )


def rank_one_resolvent(cfg: RankOneRestrictionConfig, theta: ExtensionParameter, psi: Any) -> Any:
    """(C_{phi,theta} + i)^-1 psi = (S + i)^-1 psi + (1 + e^{i theta})/(2i) <(S+i)phi, psi> (S-i)phi"""
    model = cfg.model
    base = model.resolvent_at(1, psi)
    coefficient = theta.resolvent_coefficient
    if coefficient == 0:
        return base
    weight = coefficient * model.inner(cfg.n_plus, psi)
    return model.linear_combination([base, cfg.n_minus], [1.0, weight])


def decompose_theta(cfg: RankOneRestrictionConfig, theta: ExtensionParameter, r: Any) -> tuple[Any, complex] | None:
    """
    Split r into f + lam w with w = (S+i)phi + e^{i theta}(S-i)phi and f in D(S).

    Away from theta = pi, lam is fixed by the D(S) obstruction; at pi, w = 2i phi lies
    in D(S) and lam comes from graph orthogonality to phi.
    """
    model = cfg.model
    w = cfg.domain_vector(theta)
    if theta.is_trivial:
        if not model.in_dom_A(r):
            return None
        lam = model.graph_inner(cfg.phi, r) / model.graph_inner(cfg.phi, w)
    else:
        o = model.obstruction([w, r])
        if o.shape[0]:
            sol, *_ = scipy.linalg.lstsq(o[:, :1], o[:, 1])
            lam = complex(sol[0])
            mismatch = float(np.max(np.abs(o[:, 0] * lam - o[:, 1])))
            if mismatch > DECOMPOSE_TOL * (1.0 + float(np.max(np.abs(o[:, 1])))):
                return None
        else:
            lam = 0j
    f = model.linear_combination([r, w], [1.0, -lam])
    if not model.in_dom_A(f):
        return None
    return f, complex(lam)


def verify_resolvent_round_trip(
    cfg: RankOneRestrictionConfig,
    theta: ExtensionParameter,
    psi: Any,
    eps: float = ROUND_TRIP_EPS,
) -> RoundTrip:
    """
    ||(C_{phi,theta} + i) r - psi|| for r = rank_one_resolvent(psi).

    A decomposition failure is reported as an infinite residual with diagnostics.
    """
    model = cfg.model
    r = rank_one_resolvent(cfg, theta, psi)
    parts = decompose_theta(cfg, theta, r)
    if parts is None:
        logger.warning(f"Resolvent image for theta={theta.theta:g} is outside D(S) + span{{w}}")
        return RoundTrip(math.inf, diagnostics="resolvent image is not in D(S) + span{w}")
    f, lam = parts
    membership = restriction_membership(cfg.restriction(), f)
    if not membership.member:
        return RoundTrip(
            math.inf,
            lam,
            membership.max_residual,
            f"D(C_phi) part fails membership (residual {membership.max_residual:.3e})",
        )
    image = extension_apply_theta(cfg, theta, f, lam)
    result = model.linear_combination([image, r, psi], [1.0, 1j, -1.0])
    residual = model.norm(result)
    if residual > eps:
        logger.warning(f"Round trip residual {residual:.3e} above {eps:g} at theta={theta.theta:g}")
    return RoundTrip(residual, lam, membership.max_residual)


def symmetric_pairing_check(
    cfg: RankOneRestrictionConfig,
    theta: ExtensionParameter | None = None,
    n_samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> float:
    """
    max |<u, T v> - <T u, v>| over sample pairs, scaled by (1 + ||u|| + ||Tu||)(1 + ||v|| + ||Tv||).

    T is C_phi when theta is None, otherwise C_{phi,theta} on samples f + lam w.
    """
    model = cfg.model
    samples = domain_samples(cfg.restriction(), n_samples + 1, seed)
    if theta is None:
        pairs = [(f, model.apply_A(f)) for f in samples]
    else:
        rng = LcgStream(seed ^ 0x5DEECE66D)
        w = cfg.domain_vector(theta)
        pairs = []
        for f in samples:
            lam = rng.complex()
            pairs.append((model.linear_combination([f, w], [1.0, lam]), extension_apply_theta(cfg, theta, f, lam)))

    worst = 0.0
    for (u, tu), (v, tv) in zip(pairs, pairs[1:], strict=False):
        defect = abs(model.inner(u, tv) - model.inner(tu, v))
        scale = (1.0 + model.norm(u) + model.norm(tu)) * (1.0 + model.norm(v) + model.norm(tv))
        worst = max(worst, defect / scale)
    return worst
