"""
MomentumLine: A = i d/dx on H1(R), self-adjoint, vectors are PiecewiseExpPoly.
"""

import logging
from collections.abc import Sequence
from typing import Any

import numpy as np

from ..functions import (
    PiecewiseExpPoly,
    anticausal_exp_integral,
    causal_exp_integral,
    derivative,
    evaluate,
    in_h1,
    inner_product,
    interval_indicator,
    is_l2,
    jump_vector,
    kernel_node,
    kernel_phi,
    linear_combination,
    merged_breakpoints,
    point_eval,
    scale,
    zero,
)
from ..storage.models import ModelKind, NotSquareIntegrableError
from .base import HilbertModel
from .registry import ModelRegistry

logger = logging.getLogger(__name__)

# centres of the translated-kernel probes
PROBE_CENTRES = (-2.0, -1.0, -0.5, 0.0, 0.3, 0.5, 1.0, 1.7, 3.0)


class MomentumLine(HilbertModel):
    """
    The momentum operator on the real line.

    Graph inner products are the exact integrals <f, g> + <f', g'>; the reproducing
    kernel phi_lam(x) = exp(-|x - lam|)/2 satisfies <phi_lam, f>_{+1} = f(lam).
    """

    id = "momentum"
    kind = ModelKind.MOMENTUM
    self_adjoint = True

    def zero(self) -> PiecewiseExpPoly:
        return zero()

    def linear_combination(self, vectors: Sequence[PiecewiseExpPoly], coeffs: Sequence[complex]) -> PiecewiseExpPoly:
        if not vectors:
            return zero()
        return linear_combination(list(vectors), list(coeffs))

    def is_zero(self, f: PiecewiseExpPoly) -> bool:
        return f.is_zero

    def in_dom_A(self, f: PiecewiseExpPoly) -> bool:
        return in_h1(f)

    def in_dom_Astar(self, f: PiecewiseExpPoly) -> bool:
        return in_h1(f)

    def _apply_A(self, f: PiecewiseExpPoly) -> PiecewiseExpPoly:
        return scale(derivative(f), 1j)

    def _apply_Astar(self, f: PiecewiseExpPoly) -> PiecewiseExpPoly:
        return scale(derivative(f), 1j)

    def inner(self, f: PiecewiseExpPoly, g: PiecewiseExpPoly) -> complex:
        return inner_product(f, g)

    def graph_inner(self, f: PiecewiseExpPoly, g: PiecewiseExpPoly) -> complex:
        # <if', ig'> = <f', g'>, so the factor i is never formed
        self.apply_Astar(f)
        self.apply_Astar(g)
        return inner_product(f, g) + inner_product(derivative(f), derivative(g))

    def gram_fast_path(self, left: Sequence[Any], right: Sequence[Any], graph: bool) -> np.ndarray | None:
        left_nodes = _kernel_nodes(left)
        right_nodes = _kernel_nodes(right)
        if left_nodes is not None and right_nodes is not None:
            lam_l, c_l = left_nodes
            lam_r, c_r = right_nodes
            d = np.abs(lam_l[:, None] - lam_r[None, :])
            base = 0.5 * np.exp(-d) if graph else 0.25 * (1.0 + d) * np.exp(-d)
            logger.debug(f"Closed-form kernel Gram block {d.shape} (graph={graph})")
            return np.conj(c_l)[:, None] * base * c_r[None, :]
        if not graph:
            return None
        # reproducing identity: <c phi_lam, g>_{+1} = conj(c) g(lam)
        if left_nodes is not None and all(in_h1(g) for g in right):
            lam_l, c_l = left_nodes
            cols = [np.conj(c_l) * evaluate(g, lam_l) for g in right]
            return np.stack(cols, axis=1) if cols else np.zeros((len(left), 0), dtype=complex)
        if right_nodes is not None and all(in_h1(f) for f in left):
            lam_r, c_r = right_nodes
            rows = [c_r * np.conj(evaluate(f, lam_r)) for f in left]
            return np.stack(rows, axis=0) if rows else np.zeros((0, len(right)), dtype=complex)
        return None

    def kernel_Astar_basis(self) -> list[PiecewiseExpPoly]:
        # i f' = 0 forces f constant, and no nonzero constant is square integrable
        return []

    def solve_one_plus_AAstar(self, f: PiecewiseExpPoly) -> PiecewiseExpPoly:
        """Convolution with exp(-|x - y|)/2, the Green's function of 1 - d^2/dx^2."""
        if not is_l2(f):
            raise NotSquareIntegrableError("(1 + AA*)^-1 needs an L2 argument")
        left = causal_exp_integral(f, 1.0)
        right = anticausal_exp_integral(f, 1.0)
        return linear_combination([left, right], [0.5, 0.5])

    def _resolvent(self, sign: int, f: PiecewiseExpPoly) -> PiecewiseExpPoly:
        if not is_l2(f):
            raise NotSquareIntegrableError("Resolvents need an L2 argument")
        if sign == 1:
            # i g' + i g = f  =>  g = -i int_{-inf}^x e^{-(x-y)} f(y) dy
            return scale(causal_exp_integral(f, 1.0), -1j)
        # i g' - i g = f  =>  g = i int_x^inf e^{-(y-x)} f(y) dy
        return scale(anticausal_exp_integral(f, 1.0), 1j)

    def obstruction(self, vectors: Sequence[PiecewiseExpPoly]) -> np.ndarray:
        # in H, D(A) = H1 is decided by continuity: one row per breakpoint
        locations = merged_breakpoints(list(vectors))
        o = np.zeros((len(locations), len(vectors)), dtype=complex)
        for i, v in enumerate(vectors):
            o[:, i] = jump_vector(v, locations)
        return o

    def point_representative(self, location: float) -> PiecewiseExpPoly:
        return kernel_phi(location)

    def point_value(self, f: PiecewiseExpPoly, location: float) -> complex:
        return point_eval(f, location)

    def interval_representative(self, a: float, b: float, c: complex) -> PiecewiseExpPoly:
        """Representative of f -> c * int_a^b f, i.e. (1 + AA*)^-1 of conj(c) * indicator[a, b]."""
        return self.solve_one_plus_AAstar(interval_indicator(a, b, complex(c).conjugate()))

    def probe_vectors(self) -> list[PiecewiseExpPoly]:
        chi = interval_indicator(0.0, 1.0)
        probes = [kernel_phi(t) for t in PROBE_CENTRES]
        probes.append(self.resolvent_at(1, chi))
        probes.append(self.solve_one_plus_AAstar(chi))
        return probes

    def describe(self, f: PiecewiseExpPoly) -> str:
        node = kernel_node(f)
        if node is not None:
            lam, c = node
            return f"{_fmt(c)}*phi_{lam:g}"
        if f.is_zero:
            return "0"
        bps = ", ".join(f"{b:g}" for b in f.breakpoints[:6])
        more = ", ..." if len(f.breakpoints) > 6 else ""
        return f"pwexp[{bps}{more}]"

    def vector_to_dict(self, f: PiecewiseExpPoly) -> dict[str, Any]:
        return f.to_dict()

    def vector_from_dict(self, data: dict[str, Any]) -> PiecewiseExpPoly:
        return PiecewiseExpPoly.from_dict(data)


def _kernel_nodes(vectors: Sequence[Any]) -> tuple[np.ndarray, np.ndarray] | None:
    lams, coeffs = [], []
    for v in vectors:
        node = kernel_node(v)
        if node is None:
            return None
        lams.append(node[0])
        coeffs.append(node[1])
    return np.asarray(lams, dtype=float), np.asarray(coeffs, dtype=complex)


def _fmt(c: complex) -> str:
    c = complex(c)
    if c == 1:
        return "1"
    return f"{c.real:g}" if c.imag == 0 else f"({c.real:g}{c.imag:+g}j)"


ModelRegistry.register(MomentumLine)
