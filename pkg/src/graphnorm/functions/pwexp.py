"""
Exact algebra of piecewise exponential-polynomial functions on the real line.

A function is a list of breakpoints b_1 < ... < b_m and one piece per interval
(-inf, b_1], [b_1, b_2], ..., [b_m, inf). Each piece is a finite sum of terms
coeff * x**power * exp(rate * x). Integrals use closed-form antiderivatives, never quadrature.
"""

import bisect
import cmath
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any, NamedTuple

import numpy as np

from ..storage.models import DomainViolationError, NotSquareIntegrableError, decode_value, encode_value

RATE_DECIMALS = 12
ZERO_RATE = 1e-14
TERM_DROP_TOL = 1e-14
BREAKPOINT_TOL = 1e-13
JUMP_TOL = 1e-12


class Term(NamedTuple):
    """coeff * x**power * exp(rate * x)"""

    coeff: complex
    power: int
    rate: complex


class JumpReport(NamedTuple):
    """Discontinuities of a function: right limit minus left limit at each location"""

    locations: tuple[float, ...]
    jump_values: tuple[complex, ...]

    @property
    def is_empty(self) -> bool:
        return not self.locations

    def max_jump(self) -> float:
        return max((abs(v) for v in self.jump_values), default=0.0)


@dataclass(frozen=True)
class PiecewiseExpPoly:
    """
    Immutable piecewise exponential-polynomial function in canonical form.

    Use the constructors in this module (kernel_phi, interval_indicator, ...) or
    from_pieces(); the raw constructor does not canonicalize.
    """

    breakpoints: tuple[float, ...] = ()
    pieces: tuple[tuple[Term, ...], ...] = ((),)

    def __post_init__(self):
        if len(self.pieces) != len(self.breakpoints) + 1:
            raise ValueError(
                f"{len(self.breakpoints)} breakpoints need {len(self.breakpoints) + 1} pieces, "
                f"got {len(self.pieces)}"
            )
        for left, right in zip(self.breakpoints, self.breakpoints[1:], strict=False):
            if not right > left:
                raise ValueError(f"Breakpoints must be strictly increasing: {self.breakpoints}")

    # ----- arithmetic sugar -----

    def __call__(self, x: float) -> complex:
        return point_eval(self, x)

    def __add__(self, other: "PiecewiseExpPoly") -> "PiecewiseExpPoly":
        return add(self, other)

    def __sub__(self, other: "PiecewiseExpPoly") -> "PiecewiseExpPoly":
        return add(self, scale(other, -1.0))

    def __neg__(self) -> "PiecewiseExpPoly":
        return scale(self, -1.0)

    def __mul__(self, c: complex) -> "PiecewiseExpPoly":
        return scale(self, c)

    __rmul__ = __mul__

    # ----- structure -----

    @property
    def is_zero(self) -> bool:
        return all(not piece for piece in self.pieces)

    def piece_index(self, x: float) -> int:
        """Index of the piece used for evaluation at x (right piece at a breakpoint)."""
        return bisect.bisect_right(self.breakpoints, x)

    def interval(self, k: int) -> tuple[float, float]:
        lo = self.breakpoints[k - 1] if k > 0 else -math.inf
        hi = self.breakpoints[k] if k < len(self.breakpoints) else math.inf
        return lo, hi

    def to_dict(self) -> dict[str, Any]:
        return {
            "breakpoints": list(self.breakpoints),
            "pieces": [
                [
                    {"coeff": encode_value(complex(t.coeff)), "power": t.power, "rate": encode_value(complex(t.rate))}
                    for t in piece
                ]
                for piece in self.pieces
            ],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "PiecewiseExpPoly":
        pieces = tuple(
            tuple(
                Term(complex(decode_value(t["coeff"])), int(t["power"]), complex(decode_value(t["rate"])))
                for t in piece
            )
            for piece in data["pieces"]
        )
        return cls(tuple(float(b) for b in data["breakpoints"]), pieces)


# ===== Canonical form =====


def _rate_key(rate: complex) -> tuple[float, float]:
    re = 0.0 if abs(rate.real) < ZERO_RATE else round(rate.real, RATE_DECIMALS) + 0.0
    im = 0.0 if abs(rate.imag) < ZERO_RATE else round(rate.imag, RATE_DECIMALS) + 0.0
    return re, im


def _is_zero_rate(rate: complex) -> bool:
    return abs(rate) < ZERO_RATE


def _sample_points(lo: float, hi: float) -> tuple[float, ...]:
    if math.isinf(lo) and math.isinf(hi):
        return (-1.0, 0.0, 1.0)
    if math.isinf(lo):
        return (hi - 1.0, hi)
    if math.isinf(hi):
        return (lo, lo + 1.0)
    return (lo, 0.5 * (lo + hi), hi)


def _log_magnitude(term: Term, points: tuple[float, ...]) -> float:
    # log of max |term(x)| over the sample points; -inf for a vanishing term
    if term.coeff == 0:
        return -math.inf
    best = -math.inf
    for x in points:
        if x == 0 and term.power > 0:
            continue
        log_x = term.power * math.log(abs(x)) if term.power else 0.0
        best = max(best, log_x + term.rate.real * x)
    return math.log(abs(term.coeff)) + best


class _PieceAccumulator:
    """Collects terms for one interval, merging equal (power, rate) keys."""

    __slots__ = ("terms",)

    def __init__(self):
        self.terms: dict[tuple[int, tuple[float, float]], list] = {}

    def add(self, coeff: complex, power: int, rate: complex) -> None:
        if coeff == 0:
            return
        key = (power, _rate_key(rate))
        slot = self.terms.get(key)
        if slot is None:
            self.terms[key] = [complex(coeff), power, complex(rate)]
        else:
            slot[0] += coeff

    def extend(self, terms: Iterable[Term], factor: complex = 1.0) -> None:
        for t in terms:
            self.add(t.coeff * factor, t.power, t.rate)

    def as_terms(self) -> list[Term]:
        return [Term(c, p, r) for c, p, r in self.terms.values()]


def _finish(breakpoints: Sequence[float], accumulators: Sequence[_PieceAccumulator]) -> PiecewiseExpPoly:
    """Drop negligible terms, sort, coalesce identical neighbouring pieces."""
    raw = [acc.as_terms() for acc in accumulators]
    magnitudes = []
    bounds = [-math.inf, *breakpoints, math.inf]
    log_max = -math.inf
    for k, terms in enumerate(raw):
        points = _sample_points(bounds[k], bounds[k + 1])
        mags = [_log_magnitude(t, points) for t in terms]
        magnitudes.append(mags)
        if mags:
            log_max = max(log_max, max(mags))

    threshold = math.log(TERM_DROP_TOL) + log_max
    cleaned: list[tuple[Term, ...]] = []
    for terms, mags in zip(raw, magnitudes, strict=True):
        kept = [t for t, m in zip(terms, mags, strict=True) if m > threshold and t.coeff != 0]
        kept.sort(key=lambda t: (t.power, _rate_key(t.rate)))
        cleaned.append(tuple(kept))

    out_bps: list[float] = []
    out_pieces: list[tuple[Term, ...]] = [cleaned[0]]
    for bp, piece in zip(breakpoints, cleaned[1:], strict=True):
        if _same_piece(out_pieces[-1], piece):
            continue
        out_bps.append(float(bp))
        out_pieces.append(piece)
    return PiecewiseExpPoly(tuple(out_bps), tuple(out_pieces))


def _same_piece(a: tuple[Term, ...], b: tuple[Term, ...]) -> bool:
    if len(a) != len(b):
        return False
    for s, t in zip(a, b, strict=True):
        if s.power != t.power or _rate_key(s.rate) != _rate_key(t.rate):
            return False
        if abs(s.coeff - t.coeff) > TERM_DROP_TOL * max(abs(s.coeff), abs(t.coeff)):
            return False
    return True


def from_pieces(
    breakpoints: Sequence[float], pieces: Sequence[Iterable[tuple[complex, int, complex]]]
) -> PiecewiseExpPoly:
    """
    Build a canonical function from raw (coeff, power, rate) triples per interval.

    Args:
        breakpoints: Strictly increasing breakpoints
        pieces: len(breakpoints) + 1 iterables of (coeff, power, rate)

    Returns:
        Canonical PiecewiseExpPoly
    """
    bps = [float(b) for b in breakpoints]
    if len(pieces) != len(bps) + 1:
        raise ValueError(f"{len(bps)} breakpoints need {len(bps) + 1} pieces, got {len(pieces)}")
    if any(not b > a for a, b in zip(bps, bps[1:], strict=False)):
        raise ValueError(f"Breakpoints must be strictly increasing: {bps}")
    accs = []
    for piece in pieces:
        acc = _PieceAccumulator()
        for coeff, power, rate in piece:
            if power < 0:
                raise ValueError(f"Powers must be nonnegative, got {power}")
            acc.add(complex(coeff), int(power), complex(rate))
        accs.append(acc)
    return _finish(bps, accs)


def zero() -> PiecewiseExpPoly:
    return PiecewiseExpPoly()


# ===== Merging =====


def _merged_breakpoints(*fs: PiecewiseExpPoly) -> list[float]:
    merged = sorted({b for f in fs for b in f.breakpoints})
    out: list[float] = []
    for b in merged:
        if out and b - out[-1] <= BREAKPOINT_TOL:
            continue
        out.append(b)
    return out


def merged_breakpoints(fs: Sequence[PiecewiseExpPoly]) -> list[float]:
    """Union of the breakpoint sets of fs, deduplicated within the breakpoint tolerance."""
    return _merged_breakpoints(*fs)


def _representatives(bps: Sequence[float]) -> list[float]:
    if not bps:
        return [0.0]
    reps = [bps[0] - 1.0]
    reps.extend(0.5 * (a + b) for a, b in zip(bps, bps[1:], strict=False))
    reps.append(bps[-1] + 1.0)
    return reps


def _combine(fs: Sequence[PiecewiseExpPoly], factors: Sequence[complex]) -> PiecewiseExpPoly:
    bps = _merged_breakpoints(*fs)
    accs = []
    for x in _representatives(bps):
        acc = _PieceAccumulator()
        for f, c in zip(fs, factors, strict=True):
            if c != 0:
                acc.extend(f.pieces[f.piece_index(x)], c)
        accs.append(acc)
    return _finish(bps, accs)


# ===== Algebra =====


def add(f: PiecewiseExpPoly, g: PiecewiseExpPoly) -> PiecewiseExpPoly:
    """Pointwise sum; breakpoints are the merged breakpoint sets."""
    return _combine((f, g), (1.0, 1.0))


def linear_combination(fs: Sequence[PiecewiseExpPoly], coeffs: Sequence[complex]) -> PiecewiseExpPoly:
    """Sum of coeffs[i] * fs[i] in a single merge pass."""
    if len(fs) != len(coeffs):
        raise ValueError("fs and coeffs must have the same length")
    if not fs:
        return zero()
    return _combine(fs, [complex(c) for c in coeffs])


def scale(f: PiecewiseExpPoly, c: complex) -> PiecewiseExpPoly:
    if c == 0:
        return zero()
    pieces = tuple(tuple(Term(t.coeff * c, t.power, t.rate) for t in piece) for piece in f.pieces)
    return PiecewiseExpPoly(f.breakpoints, pieces)


def conjugate(f: PiecewiseExpPoly) -> PiecewiseExpPoly:
    pieces = tuple(
        tuple(Term(t.coeff.conjugate(), t.power, t.rate.conjugate()) for t in piece) for piece in f.pieces
    )
    return PiecewiseExpPoly(f.breakpoints, pieces)


def multiply(f: PiecewiseExpPoly, g: PiecewiseExpPoly) -> PiecewiseExpPoly:
    """Pointwise product."""
    bps = _merged_breakpoints(f, g)
    accs = []
    for x in _representatives(bps):
        acc = _PieceAccumulator()
        for s in f.pieces[f.piece_index(x)]:
            for t in g.pieces[g.piece_index(x)]:
                acc.add(s.coeff * t.coeff, s.power + t.power, s.rate + t.rate)
        accs.append(acc)
    return _finish(bps, accs)


def translate(f: PiecewiseExpPoly, t: float) -> PiecewiseExpPoly:
    """x -> f(x - t)."""
    accs = []
    for piece in f.pieces:
        acc = _PieceAccumulator()
        for term in piece:
            shift = term.coeff * cmath.exp(-term.rate * t)
            for k in range(term.power + 1):
                acc.add(shift * math.comb(term.power, k) * (-t) ** (term.power - k), k, term.rate)
        accs.append(acc)
    return _finish([b + t for b in f.breakpoints], accs)


def reflect(f: PiecewiseExpPoly) -> PiecewiseExpPoly:
    """x -> f(-x)."""
    accs = []
    for piece in reversed(f.pieces):
        acc = _PieceAccumulator()
        for term in piece:
            acc.add(term.coeff * (-1) ** term.power, term.power, -term.rate)
        accs.append(acc)
    return _finish([-b for b in reversed(f.breakpoints)], accs)


# ===== Evaluation =====


def _eval_terms(terms: Iterable[Term], x: float) -> complex:
    total = 0j
    for t in terms:
        total += t.coeff * x**t.power * cmath.exp(t.rate * x)
    return total


def point_eval(f: PiecewiseExpPoly, x: float) -> complex:
    """Value at x; at a breakpoint the piece to the right is used."""
    return _eval_terms(f.pieces[f.piece_index(x)], x)


def evaluate(f: PiecewiseExpPoly, xs) -> np.ndarray:
    """Vectorized point_eval."""
    xs = np.asarray(xs, dtype=float)
    out = np.zeros(xs.shape, dtype=complex)
    idx = np.searchsorted(np.asarray(f.breakpoints, dtype=float), xs, side="right")
    for k, piece in enumerate(f.pieces):
        mask = idx == k
        if not piece or not np.any(mask):
            continue
        x = xs[mask]
        val = np.zeros(x.shape, dtype=complex)
        for t in piece:
            val += t.coeff * x**t.power * np.exp(t.rate * x)
        out[mask] = val
    return out


def one_sided_limits(f: PiecewiseExpPoly, k: int) -> tuple[complex, complex]:
    """(left limit, right limit) at breakpoint k."""
    b = f.breakpoints[k]
    return _eval_terms(f.pieces[k], b), _eval_terms(f.pieces[k + 1], b)


def jumps(f: PiecewiseExpPoly) -> JumpReport:
    """Discontinuities of f itself."""
    locations, values = [], []
    for k, b in enumerate(f.breakpoints):
        left, right = one_sided_limits(f, k)
        jump = right - left
        if abs(jump) > JUMP_TOL * max(1.0, abs(left), abs(right)):
            locations.append(b)
            values.append(jump)
    return JumpReport(tuple(locations), tuple(values))


def jump_vector(f: PiecewiseExpPoly, locations: Sequence[float]) -> np.ndarray:
    """Raw jump (right minus left limit) of f at each given location, zero away from its breakpoints."""
    out = np.zeros(len(locations), dtype=complex)
    for i, x in enumerate(locations):
        k = bisect.bisect_left(f.breakpoints, x - BREAKPOINT_TOL)
        if k < len(f.breakpoints) and abs(f.breakpoints[k] - x) <= BREAKPOINT_TOL:
            left, right = one_sided_limits(f, k)
            out[i] = right - left
    return out


def differentiate(f: PiecewiseExpPoly) -> tuple[PiecewiseExpPoly, JumpReport]:
    """
    Classical derivative on each open piece.

    Distributional parts are not folded into the result; they are reported as the
    jumps of f itself.

    Returns:
        Tuple of (derivative, jumps of f)
    """
    accs = []
    for piece in f.pieces:
        acc = _PieceAccumulator()
        for t in piece:
            if t.power > 0:
                acc.add(t.coeff * t.power, t.power - 1, t.rate)
            if not _is_zero_rate(t.rate):
                acc.add(t.coeff * t.rate, t.power, t.rate)
        accs.append(acc)
    return _finish(list(f.breakpoints), accs), jumps(f)


def derivative(f: PiecewiseExpPoly) -> PiecewiseExpPoly:
    return differentiate(f)[0]


# ===== Membership =====


def is_l2(f: PiecewiseExpPoly) -> bool:
    """L2 flag: decaying exponentials on both unbounded pieces."""
    if len(f.pieces) == 1:
        return not f.pieces[0]
    left_ok = all(t.rate.real > ZERO_RATE for t in f.pieces[0])
    right_ok = all(t.rate.real < -ZERO_RATE for t in f.pieces[-1])
    return left_ok and right_ok


def in_h1(f: PiecewiseExpPoly) -> bool:
    """Sobolev H1: continuous with f and f' square integrable."""
    if not is_l2(f):
        return False
    df, jump_report = differentiate(f)
    return jump_report.is_empty and is_l2(df)


def in_h2(f: PiecewiseExpPoly) -> bool:
    """Sobolev H2: f and f' both in H1."""
    return in_h1(f) and in_h1(derivative(f))


# ===== Integration =====


def _antiderivative_terms(power: int, rate: complex) -> list[Term]:
    """Terms of an antiderivative of x**power * exp(rate x)."""
    if _is_zero_rate(rate):
        return [Term(1.0 / (power + 1), power + 1, 0j)]
    terms = []
    falling = 1.0
    for k in range(power + 1):
        terms.append(Term((-1) ** k * falling / rate ** (k + 1), power - k, rate))
        falling *= power - k
    return terms


def _antiderivative_at(term: Term, x: float) -> complex:
    if math.isinf(x):
        if term.coeff == 0:
            return 0j
        decays = term.rate.real < -ZERO_RATE if x > 0 else term.rate.real > ZERO_RATE
        if not decays:
            raise DomainViolationError(f"Integral of {term} diverges at {x}")
        return 0j
    return term.coeff * _eval_terms(_antiderivative_terms(term.power, term.rate), x)


def integrate(f: PiecewiseExpPoly, a: float = -math.inf, b: float = math.inf) -> complex:
    """
    Exact integral of f over [a, b] (bounds may be infinite).

    Raises:
        DomainViolationError: If the integral diverges
    """
    if a > b:
        return -integrate(f, b, a)
    total = 0j
    for k, piece in enumerate(f.pieces):
        lo, hi = f.interval(k)
        lo, hi = max(lo, a), min(hi, b)
        if not hi > lo:
            continue
        for t in piece:
            total += _antiderivative_at(t, hi) - _antiderivative_at(t, lo)
    return total


def inner_product(f: PiecewiseExpPoly, g: PiecewiseExpPoly) -> complex:
    """
    L2 inner product, antilinear in the first slot.

    Raises:
        NotSquareIntegrableError: If either operand fails the L2 flag
    """
    if not is_l2(f) or not is_l2(g):
        raise NotSquareIntegrableError("inner_product needs two L2 functions")
    return integrate(multiply(conjugate(f), g))


def l2_norm_sq(f: PiecewiseExpPoly) -> float:
    return float(inner_product(f, f).real)


# ===== Convolutions =====


def causal_exp_integral(f: PiecewiseExpPoly, decay: complex = 1.0) -> PiecewiseExpPoly:
    """
    x -> integral over (-inf, x] of exp(-decay (x - y)) f(y) dy, in closed form.

    Args:
        f: Integrand
        decay: Kernel decay rate with positive real part

    Raises:
        NotSquareIntegrableError: If the integral diverges at -inf
    """
    decay = complex(decay)
    if decay.real <= 0:
        raise ValueError(f"decay must have positive real part, got {decay}")
    bounds = [-math.inf, *f.breakpoints]
    running = 0j
    accs = []
    for k, piece in enumerate(f.pieces):
        lo = bounds[k]
        hi = f.breakpoints[k] if k < len(f.breakpoints) else math.inf
        antiderivative: list[Term] = []
        for t in piece:
            shifted = t.rate + decay
            if k == 0 and not shifted.real > ZERO_RATE:
                raise NotSquareIntegrableError("Causal integral diverges at -inf")
            antiderivative.extend(
                Term(t.coeff * h.coeff, h.power, h.rate) for h in _antiderivative_terms(t.power, shifted)
            )
        acc = _PieceAccumulator()
        at_lo = 0j if math.isinf(lo) else _eval_terms(antiderivative, lo)
        acc.add(running - at_lo, 0, -decay)
        for h in antiderivative:
            acc.add(h.coeff, h.power, h.rate - decay)
        accs.append(acc)
        if not math.isinf(hi):
            running += _eval_terms(antiderivative, hi) - at_lo
    return _finish(list(f.breakpoints), accs)


def anticausal_exp_integral(f: PiecewiseExpPoly, decay: complex = 1.0) -> PiecewiseExpPoly:
    """x -> integral over [x, inf) of exp(-decay (y - x)) f(y) dy, in closed form."""
    return reflect(causal_exp_integral(reflect(f), decay))


# ===== Named functions =====


def kernel_phi(lam: float) -> PiecewiseExpPoly:
    """phi_lam(x) = exp(-|x - lam|) / 2."""
    lam = float(lam)
    return PiecewiseExpPoly(
        (lam,),
        (
            (Term(0.5 * math.exp(-lam), 0, 1.0 + 0j),),
            (Term(0.5 * math.exp(lam), 0, -1.0 + 0j),),
        ),
    )


def interval_indicator(a: float, b: float, c: complex = 1.0) -> PiecewiseExpPoly:
    """c * indicator of [a, b]."""
    if not b > a:
        raise ValueError(f"Empty interval [{a}, {b}]")
    return from_pieces([a, b], [[], [(c, 0, 0j)], []])


def kernel_combination(nodes: Sequence[float], coeffs: Sequence[complex]) -> PiecewiseExpPoly:
    """
    Sum of coeffs[j] * phi_{nodes[j]} built directly with one piece per gap.

    Args:
        nodes: Kernel centres (duplicates are merged)
        coeffs: Matching coefficients

    Returns:
        Canonical PiecewiseExpPoly with one breakpoint per distinct node
    """
    if len(nodes) != len(coeffs):
        raise ValueError("nodes and coeffs must have the same length")
    if len(nodes) == 0:
        return zero()
    centres, inverse = np.unique(np.asarray(nodes, dtype=float), return_inverse=True)
    weights = np.zeros(len(centres), dtype=complex)
    np.add.at(weights, inverse, np.asarray(coeffs, dtype=complex))
    # left of x: 0.5 c_j e^{lam_j} e^{-x}; right of x: 0.5 c_j e^{-lam_j} e^{x}
    decaying = np.concatenate(([0j], np.cumsum(0.5 * weights * np.exp(centres))))
    growing = np.concatenate((np.cumsum((0.5 * weights * np.exp(-centres))[::-1])[::-1], [0j]))
    accs = []
    for a, g in zip(decaying, growing, strict=True):
        acc = _PieceAccumulator()
        acc.add(complex(g), 0, 1.0 + 0j)
        acc.add(complex(a), 0, -1.0 + 0j)
        accs.append(acc)
    return _finish(centres.tolist(), accs)


def psi_n(n: int) -> PiecewiseExpPoly:
    """Riemann kernel sum psi_n = sum_{j<n} phi_{j/n}."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return kernel_combination([j / n for j in range(n)], [1.0] * n)


def psi_infinity() -> PiecewiseExpPoly:
    """sqrt(e) * (phi_0' - phi_1' + indicator[0, 1]); the H2 function with psi - psi'' = sqrt(e) chi."""
    d0 = derivative(kernel_phi(0.0))
    d1 = derivative(kernel_phi(1.0))
    return scale(linear_combination([d0, d1, interval_indicator(0.0, 1.0)], [1.0, -1.0, 1.0]), math.sqrt(math.e))


# ===== Diagnostics =====


def max_coefficient_gap(f: PiecewiseExpPoly, g: PiecewiseExpPoly) -> float:
    """Largest term magnitude of f - g before any term is dropped."""
    bps = _merged_breakpoints(f, g)
    bounds = [-math.inf, *bps, math.inf]
    worst = -math.inf
    for k, x in enumerate(_representatives(bps)):
        acc = _PieceAccumulator()
        acc.extend(f.pieces[f.piece_index(x)], 1.0)
        acc.extend(g.pieces[g.piece_index(x)], -1.0)
        points = _sample_points(bounds[k], bounds[k + 1])
        for t in acc.as_terms():
            worst = max(worst, _log_magnitude(t, points))
    return math.exp(worst) if worst > -math.inf else 0.0


def kernel_node(f: PiecewiseExpPoly) -> tuple[float, complex] | None:
    """Recognize f = c * phi_lam; returns (lam, c) or None."""
    if len(f.breakpoints) != 1:
        return None
    left, right = f.pieces
    if len(left) != 1 or len(right) != 1:
        return None
    (l,), (r,) = left, right
    if l.power or r.power or _rate_key(l.rate) != (1.0, 0.0) or _rate_key(r.rate) != (-1.0, 0.0):
        return None
    lam = f.breakpoints[0]
    left_value = l.coeff * math.exp(lam)
    right_value = r.coeff * math.exp(-lam)
    if abs(left_value - right_value) > JUMP_TOL * max(abs(left_value), abs(right_value)):
        return None
    return lam, 2.0 * right_value
