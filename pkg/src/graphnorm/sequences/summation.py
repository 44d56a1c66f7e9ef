"""
Certified inner products of SeqVectors.

The explicit part is summed exactly-rounded with math.fsum; everything beyond the
truncation index N is either summed in closed form (Hurwitz zeta) or bounded.
"""

import logging
import math
from typing import NamedTuple

import numpy as np
import scipy.special

from ..storage.models import NotSquareIntegrableError, SeriesBoundError
from .seqvec import CHUNK, SeqVector, Tail

logger = logging.getLogger(__name__)

UNIT = 2.0**-52
# relative accuracy credited to scipy.special.zeta
ZETA_REL_ERR = 1e-14
# relative error of one computed term conj(f_n) * g_n (powers, products, rational weights)
TERM_REL_ERR = 16 * UNIT
MIN_TRUNCATION = 16
DEFAULT_EPS = 1e-10
DEFAULT_MAX_INDEX = 4_000_000


class CertifiedValue(NamedTuple):
    """A sum together with a rigorous bound on its error"""

    value: complex
    error_bound: float
    truncation_index: int


class _PairTail(NamedTuple):
    """Product conj(a_n) * b_n of two tails, summed over n >= N."""

    coeff: complex
    sigma: float
    ratio: complex
    num: np.ndarray
    den: np.ndarray

    @property
    def trivial_weight(self) -> bool:
        return len(self.num) == 1 and len(self.den) == 1

    @property
    def degree(self) -> int:
        return len(self.num) - len(self.den)


def _pair(a: Tail, b: Tail) -> _PairTail:
    num = np.polynomial.polynomial.polymul(np.conj(a.num), np.asarray(b.num, dtype=complex))
    den = np.polynomial.polynomial.polymul(np.conj(a.den), np.asarray(b.den, dtype=complex))
    return _PairTail(
        coeff=complex(a.coeff).conjugate() * b.coeff,
        sigma=a.power + b.power,
        ratio=complex(a.ratio).conjugate() * b.ratio,
        num=np.atleast_1d(num),
        den=np.atleast_1d(den),
    )


def _is_one(z: complex) -> bool:
    return abs(z - 1) <= 1e-15


def _is_minus_one(z: complex) -> bool:
    return abs(z + 1) <= 1e-15


def _weight_bound(p: _PairTail, n: int) -> float:
    """K with |num(m)/den(m)| <= K m**degree for every m >= n, or inf."""
    lead = abs(p.den[-1])
    lower = sum(abs(c) for c in p.den[:-1]) / n
    if lead - lower <= 0:
        return math.inf
    return sum(abs(c) for c in p.num) / (lead - lower)


def _remainder(p: _PairTail, n: int) -> tuple[complex, float]:
    """
    Closed-form value and error bound of sum_{m >= n} of one tail product.

    Returns:
        Tuple of (value credited to the sum, bound on |true - value|)
    """
    c = abs(p.coeff)
    if abs(p.ratio) < 1 - 1e-15:
        k = 1.0 if p.trivial_weight else _weight_bound(p, n)
        growth = max(0.0, p.degree - p.sigma)
        q = abs(p.ratio) * ((n + 1) / n) ** growth
        if q >= 1 or math.isinf(k):
            return 0j, math.inf
        head = c * k * n ** (p.degree - p.sigma) * abs(p.ratio) ** n
        return 0j, head / (1 - q)

    s = p.sigma - p.degree
    if s <= 1:
        return 0j, math.inf

    if p.trivial_weight:
        w = complex(p.num[0] / p.den[0])
        if _is_one(p.ratio):
            value = p.coeff * w * float(scipy.special.zeta(s, n))
            return value, ZETA_REL_ERR * abs(value)
        if _is_minus_one(p.ratio):
            # sum_{m >= n} (-1)^m m^-s through two Hurwitz zetas of half-integers
            alt = (-1) ** n * 2.0**-s * (float(scipy.special.zeta(s, n / 2)) - float(scipy.special.zeta(s, (n + 1) / 2)))
            value = p.coeff * w * alt
            return value, ZETA_REL_ERR * (abs(p.coeff * w) * 2.0**-s * 2 * float(scipy.special.zeta(s, n / 2)))
        # partial sums of rho^m are bounded by 2/|1-rho|; m^-s decreases
        return 0j, c * abs(w) * 2.0 / abs(1 - p.ratio) * n**-s

    if _is_one(p.ratio):
        # w(m) - w_inf m^d = R(m) / (den(m) m^a) with deg R < deg num + a
        d = p.degree
        a, b = max(0, -d), max(0, d)
        w_inf = complex(p.num[-1] / p.den[-1])
        lifted_num = np.concatenate([np.zeros(a, dtype=complex), p.num])
        lifted_den = np.concatenate([np.zeros(b, dtype=complex), w_inf * p.den])
        rem = np.polynomial.polynomial.polysub(lifted_num, lifted_den)
        rem = np.atleast_1d(rem)
        top = abs(rem[len(lifted_num) - 1]) if len(rem) >= len(lifted_num) else 0.0
        rem = rem[: len(lifted_num) - 1]
        lead = abs(p.den[-1])
        lower = sum(abs(x) for x in p.den[:-1]) / n
        if lead - lower <= 0:
            return 0j, math.inf
        k_rem = sum(abs(x) for x in rem) / (lead - lower)
        value = p.coeff * w_inf * float(scipy.special.zeta(s, n))
        bound = (
            c * k_rem * float(scipy.special.zeta(s + 1, n))
            + c * top / (lead - lower) * float(scipy.special.zeta(s, n))
            + ZETA_REL_ERR * abs(value)
        )
        return value, bound

    k = _weight_bound(p, n)
    if math.isinf(k):
        return 0j, math.inf
    return 0j, c * k * float(scipy.special.zeta(s, n))


def _explicit_sum(f: SeqVector, g: SeqVector, stop: int) -> tuple[complex, float]:
    """fsum of conj(f_n) g_n for 1 <= n < stop, with its rounding bound."""
    re_parts: list[float] = []
    im_parts: list[float] = []
    abs_total = 0.0
    for lo in range(1, stop, CHUNK):
        ns = np.arange(lo, min(stop, lo + CHUNK), dtype=np.int64)
        terms = np.conj(f.coordinates(ns)) * g.coordinates(ns)
        re_parts.append(math.fsum(terms.real))
        im_parts.append(math.fsum(terms.imag))
        abs_total += float(np.sum(np.abs(terms)))
    value = complex(math.fsum(re_parts), math.fsum(im_parts))
    return value, TERM_REL_ERR * abs_total + 2 * UNIT * abs(value)


def seq_inner_product(
    f: SeqVector,
    g: SeqVector,
    eps: float = DEFAULT_EPS,
    max_index: int = DEFAULT_MAX_INDEX,
) -> CertifiedValue:
    """
    Certified <f, g> = sum conj(f_n) g_n.

    Args:
        f: Left vector (conjugated)
        g: Right vector
        eps: Target bound on the absolute error
        max_index: Largest truncation index tried before giving up

    Returns:
        CertifiedValue with error_bound <= eps

    Raises:
        NotSquareIntegrableError: If either vector fails the l2 invariant
        SeriesBoundError: If eps cannot be reached below max_index
    """
    if not f.is_ell2 or not g.is_ell2:
        raise NotSquareIntegrableError("seq_inner_product needs two l2 vectors")

    pairs = [_pair(a, b) for a in f.tails for b in g.tails]
    if not pairs:
        # one side is finitely supported: the sum is finite
        stop = min(v.end for v in (f, g) if v.is_finite)
        value, rounding = _explicit_sum(f, g, stop)
        return CertifiedValue(value, rounding, stop)

    start = max(f.end, g.end)
    n = max(start, MIN_TRUNCATION)
    budget = 0.5 * eps
    while True:
        remainders = [_remainder(p, n) for p in pairs]
        tail_bound = sum(b for _, b in remainders)
        if tail_bound <= budget or n >= max_index:
            break
        n = min(max_index, 2 * n)

    if tail_bound > budget:
        logger.warning(f"Certified sum stalled at N={n} with tail bound {tail_bound:.3e}")
        raise SeriesBoundError(
            f"Cannot reach eps={eps:g} before index {max_index} (bound {tail_bound:.3e})",
            achieved_bound=tail_bound,
            last_index=n,
        )

    head, rounding = _explicit_sum(f, g, n)
    value = head + sum((v for v, _ in remainders), 0j)
    bound = tail_bound + rounding
    if bound > eps:
        raise SeriesBoundError(
            f"Rounding bound {rounding:.3e} exceeds eps={eps:g}", achieved_bound=bound, last_index=n
        )
    logger.debug(f"Certified sum: N={n}, bound={bound:.3e}")
    return CertifiedValue(value, bound, n)


def seq_norm_sq(f: SeqVector, eps: float = DEFAULT_EPS, max_index: int = DEFAULT_MAX_INDEX) -> CertifiedValue:
    result = seq_inner_product(f, f, eps, max_index)
    return CertifiedValue(complex(result.value.real, 0.0), result.error_bound, result.truncation_index)
