"""
Square-summable sequences with a finite part and symbolic tails.

A tail is coeff * w(n) * n**(-power) * ratio**n for n >= start, where the weight
w = num / den is a rational function (both 1 for plain power-law tails). Plain tails
stay plain under polynomial symbols; dividing by a symbol (resolvents, (1 + AA*)^-1)
produces rational weights that are still evaluated and summed with certified bounds.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any, NamedTuple

import numpy as np
from numpy.polynomial import polynomial as P

from ..storage.models import (
    DomainViolationError,
    UnsupportedOperationError,
    decode_value,
    encode_value,
)
from .symbol import DiagonalSymbol, poly_eval, poly_mul, trim_poly

KEY_DECIMALS = 12
UNIT_RATIO_TOL = 1e-15
CANCEL_TOL = 1e-14
ELL2_MARGIN = 1e-12
REMAINDER_TOL = 1e-12
CHUNK = 1 << 20


def _round_complex(z: complex) -> tuple[float, float]:
    return round(z.real, KEY_DECIMALS) + 0.0, round(z.imag, KEY_DECIMALS) + 0.0


def _poly_degree(coeffs: tuple[complex, ...]) -> int:
    return len(coeffs) - 1


class Tail(NamedTuple):
    """coeff * num(n)/den(n) * n**(-power) * ratio**n for n >= start"""

    coeff: complex
    power: float
    ratio: complex = 1 + 0j
    start: int = 1
    num: tuple[complex, ...] = (1 + 0j,)
    den: tuple[complex, ...] = (1 + 0j,)

    @property
    def is_plain(self) -> bool:
        return self.num == (1 + 0j,) and self.den == (1 + 0j,)

    @property
    def weight_degree(self) -> int:
        return _poly_degree(self.num) - _poly_degree(self.den)

    @property
    def effective_power(self) -> float:
        """Decay exponent of |tail(n)| up to the geometric factor."""
        return self.power - self.weight_degree

    @property
    def is_geometric(self) -> bool:
        return abs(self.ratio) < 1 - UNIT_RATIO_TOL

    @property
    def is_ell2(self) -> bool:
        return self.is_geometric or 2 * self.effective_power > 1 + ELL2_MARGIN

    def key(self) -> tuple:
        return (
            round(self.power, KEY_DECIMALS) + 0.0,
            _round_complex(self.ratio),
            tuple(_round_complex(c) for c in self.num),
            tuple(_round_complex(c) for c in self.den),
        )

    def values(self, n: np.ndarray) -> np.ndarray:
        """Tail values at integer indices n (the start is not applied)."""
        n = np.asarray(n, dtype=float)
        ratio = complex(self.ratio)
        if ratio.imag == 0:
            # real ratios keep exact signs for large n
            geometric = np.power(ratio.real, n)
        else:
            geometric = np.power(abs(ratio), n) * np.exp(1j * np.angle(ratio) * n)
        out = self.coeff * np.power(n, -self.power) * geometric
        if not self.is_plain:
            out = out * poly_eval(self.num, n) / poly_eval(self.den, n)
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "coeff": encode_value(complex(self.coeff)),
            "power": self.power,
            "ratio": encode_value(complex(self.ratio)),
            "start": self.start,
            "num": [encode_value(complex(c)) for c in self.num],
            "den": [encode_value(complex(c)) for c in self.den],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Tail":
        return cls(
            coeff=complex(decode_value(data["coeff"])),
            power=float(data["power"]),
            ratio=complex(decode_value(data.get("ratio", 1.0))),
            start=int(data.get("start", 1)),
            num=tuple(complex(decode_value(c)) for c in data.get("num", [1.0])),
            den=tuple(complex(decode_value(c)) for c in data.get("den", [1.0])),
        )


def _normalize_weight(tail: Tail) -> list[Tail]:
    """Monic denominator, exact polynomial division when possible, plain expansion of polynomial weights."""
    num, den = trim_poly(tail.num), trim_poly(tail.den)
    lead = den[-1]
    if lead == 0:
        raise DomainViolationError("Tail weight has a zero denominator")
    num = tuple(c / lead for c in num)
    den = tuple(c / lead for c in den)
    if len(den) > 1:
        quotient, remainder = P.polydiv(np.asarray(num, dtype=complex), np.asarray(den, dtype=complex))
        scale = max(abs(c) for c in num) or 1.0
        if np.max(np.abs(remainder)) <= REMAINDER_TOL * scale:
            num, den = trim_poly(quotient), (1 + 0j,)
    if den != (1 + 0j,):
        return [tail._replace(num=num, den=den)]
    # polynomial weight: one plain power-law tail per monomial
    out = []
    for k, c in enumerate(num):
        if c != 0:
            out.append(Tail(tail.coeff * c, tail.power - k, tail.ratio, tail.start))
    return out


@dataclass(frozen=True)
class SeqVector:
    """
    Immutable l2 sequence (indices >= 1): finite part plus tails.

    Canonical form: every tail shares one start index, finite indices lie below it,
    and tails with equal (power, ratio, weight) are merged.
    """

    finite: tuple[tuple[int, complex], ...] = ()
    tails: tuple[Tail, ...] = ()

    # ----- construction -----

    @classmethod
    def from_parts(cls, finite: Mapping[int, complex] | None = None, tails: Iterable[Tail] = ()) -> "SeqVector":
        return _canonical(
            [(int(k), complex(v)) for k, v in (finite or {}).items()],
            list(tails),
        )

    @classmethod
    def zero(cls) -> "SeqVector":
        return cls()

    @classmethod
    def basis(cls, k: int, c: complex = 1.0) -> "SeqVector":
        """c * e_k"""
        if k < 1:
            raise ValueError(f"Indices start at 1, got {k}")
        return cls.from_parts({k: c})

    @classmethod
    def power_tail(cls, c: complex, s: float, start: int = 1) -> "SeqVector":
        """c * n**(-s) for n >= start"""
        return cls.from_parts(tails=[Tail(complex(c), float(s), 1 + 0j, int(start))])

    @classmethod
    def geometric_tail(cls, c: complex, ratio: complex, s: float = 0.0, start: int = 1) -> "SeqVector":
        """c * n**(-s) * ratio**n for n >= start"""
        if abs(ratio) > 1 + UNIT_RATIO_TOL:
            raise ValueError(f"|ratio| must be at most 1, got {abs(ratio)}")
        return cls.from_parts(tails=[Tail(complex(c), float(s), complex(ratio), int(start))])

    # ----- structure -----

    @property
    def finite_part(self) -> dict[int, complex]:
        return dict(self.finite)

    @property
    def tail_start(self) -> int | None:
        return self.tails[0].start if self.tails else None

    @property
    def end(self) -> int:
        """First index from which only tails contribute."""
        if self.tails:
            return self.tails[0].start
        return (self.finite[-1][0] + 1) if self.finite else 1

    @property
    def is_zero(self) -> bool:
        return not self.finite and not self.tails

    @property
    def is_finite(self) -> bool:
        return not self.tails

    @property
    def is_ell2(self) -> bool:
        return all(t.is_ell2 for t in self.tails)

    def coordinate(self, n: int) -> complex:
        return complex(self.coordinates(np.array([n]))[0])

    def coordinates(self, ns) -> np.ndarray:
        ns = np.asarray(ns, dtype=np.int64)
        out = np.zeros(ns.shape, dtype=complex)
        if self.finite:
            size = self.finite[-1][0] + 1
            dense = np.zeros(size, dtype=complex)
            for k, v in self.finite:
                dense[k] = v
            mask = (ns >= 1) & (ns < size)
            out[mask] = dense[ns[mask]]
        if self.tails:
            mask = ns >= self.tails[0].start
            if np.any(mask):
                sub = ns[mask]
                acc = np.zeros(sub.shape, dtype=complex)
                for t in self.tails:
                    acc += t.values(sub)
                out[mask] += acc
        return out

    # ----- arithmetic -----

    def __add__(self, other: "SeqVector") -> "SeqVector":
        return add(self, other)

    def __sub__(self, other: "SeqVector") -> "SeqVector":
        return add(self, other.scale(-1.0))

    def __neg__(self) -> "SeqVector":
        return self.scale(-1.0)

    def __mul__(self, c: complex) -> "SeqVector":
        return self.scale(c)

    __rmul__ = __mul__

    def scale(self, c: complex) -> "SeqVector":
        c = complex(c)
        if c == 0:
            return SeqVector()
        return SeqVector(
            tuple((k, v * c) for k, v in self.finite),
            tuple(t._replace(coeff=t.coeff * c) for t in self.tails),
        )

    def apply_symbol(self, sym: DiagonalSymbol) -> "SeqVector":
        """Coordinatewise multiplication by a_n (formal; the result may leave l2)."""
        finite = {k: v * complex(sym(k)) for k, v in self.finite}
        tails = []
        for t in self.tails:
            if t.is_plain:
                for k, c in enumerate(sym.coefficients):
                    if c != 0:
                        tails.append(Tail(t.coeff * c, t.power - k, t.ratio, t.start))
            else:
                tails.append(t._replace(num=poly_mul(t.num, sym.coefficients)))
        return SeqVector.from_parts(finite, tails)

    def divide_symbol(self, sym: DiagonalSymbol) -> "SeqVector":
        """
        Coordinatewise division by a_n.

        Raises:
            DomainViolationError: If a_n vanishes on the support
        """
        finite = {}
        for k, v in self.finite:
            a = complex(sym(k))
            if a == 0:
                raise DomainViolationError(f"Symbol vanishes at index {k}")
            finite[k] = v / a
        if self.tails:
            start = self.tails[0].start
            bad = [k for k in sym.integer_roots() if k >= start]
            if bad or (sym.degree == 0 and sym.coefficients[0] == 0):
                raise DomainViolationError(f"Symbol vanishes on the tail range at {bad or 'every index'}")
        tails = [t._replace(den=poly_mul(t.den, sym.coefficients)) for t in self.tails]
        return SeqVector.from_parts(finite, tails)

    # ----- serialization -----

    def to_dict(self) -> dict[str, Any]:
        return {
            "finite": [[k, encode_value(complex(v))] for k, v in self.finite],
            "tails": [t.to_dict() for t in self.tails],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SeqVector":
        return cls(
            tuple((int(k), complex(decode_value(v))) for k, v in data.get("finite", [])),
            tuple(Tail.from_dict(t) for t in data.get("tails", [])),
        )

    def describe(self) -> str:
        parts = [f"{_fmt(v)}*e_{k}" for k, v in self.finite[:4]]
        if len(self.finite) > 4:
            parts.append(f"...({len(self.finite)} coords)")
        for t in self.tails:
            ratio = "" if t.ratio == 1 else f"*({_fmt(t.ratio)})^n"
            weight = "" if t.is_plain else "*w(n)"
            parts.append(f"{_fmt(t.coeff)}*n^{-t.power:g}{ratio}{weight}[n>={t.start}]")
        return " + ".join(parts) if parts else "0"


def _fmt(z: complex) -> str:
    z = complex(z)
    return f"{z.real:g}" if z.imag == 0 else f"({z.real:g}{z.imag:+g}j)"


def _canonical(finite: list[tuple[int, complex]], tails: list[Tail]) -> SeqVector:
    expanded: list[Tail] = []
    for t in tails:
        if t.coeff == 0:
            continue
        if t.start < 1:
            raise ValueError(f"Tail start must be at least 1, got {t.start}")
        if abs(t.ratio) > 1 + UNIT_RATIO_TOL:
            raise ValueError(f"|ratio| must be at most 1, got {abs(t.ratio)}")
        expanded.extend(_normalize_weight(t))

    coords: dict[int, complex] = {}
    scales: dict[int, float] = {}

    def put(k: int, v: complex) -> None:
        if k < 1:
            raise ValueError(f"Indices start at 1, got {k}")
        coords[k] = coords.get(k, 0j) + v
        scales[k] = scales.get(k, 0.0) + abs(v)

    for k, v in finite:
        put(k, v)

    merged: list[Tail] = []
    if expanded:
        start = max(t.start for t in expanded)
        if coords:
            start = max(start, max(coords) + 1)
        for t in expanded:
            if t.start < start:
                ns = np.arange(t.start, start)
                for k, v in zip(ns.tolist(), t.values(ns).tolist(), strict=True):
                    put(k, v)
        groups: dict[tuple, list] = {}
        order: list[tuple] = []
        for t in expanded:
            key = t.key()
            if key not in groups:
                groups[key] = [t._replace(start=start), 0j, 0.0]
                order.append(key)
            groups[key][1] += t.coeff
            groups[key][2] += abs(t.coeff)
        # negligible against the largest input coefficient of the whole combination
        magnitude = max([parts for _, _, parts in groups.values()] + [abs(v) for _, v in finite])
        for key in order:
            proto, total, parts = groups[key]
            if abs(total) > CANCEL_TOL * max(parts, magnitude):
                merged.append(proto._replace(coeff=total))
        merged.sort(key=lambda t: t.key())

    kept = tuple(
        (k, coords[k]) for k in sorted(coords) if coords[k] != 0 and abs(coords[k]) > CANCEL_TOL * scales[k]
    )
    return SeqVector(kept, tuple(merged))


def add(f: SeqVector, g: SeqVector) -> SeqVector:
    return _canonical(list(f.finite) + list(g.finite), list(f.tails) + list(g.tails))


def linear_combination(vectors: Iterable[SeqVector], coeffs: Iterable[complex]) -> SeqVector:
    finite: list[tuple[int, complex]] = []
    tails: list[Tail] = []
    for v, c in zip(vectors, coeffs, strict=True):
        c = complex(c)
        if c == 0:
            continue
        finite.extend((k, x * c) for k, x in v.finite)
        tails.extend(t._replace(coeff=t.coeff * c) for t in v.tails)
    return _canonical(finite, tails)


def apply_diag(sym: DiagonalSymbol, f: SeqVector) -> SeqVector:
    """Formal application of the diagonal operator with symbol a_n."""
    return f.apply_symbol(sym)


def in_domain(sym: DiagonalSymbol, f: SeqVector) -> bool:
    """True iff a_n f_n is square summable, decided on tail exponents and ratios."""
    return apply_diag(sym, f).is_ell2


def non_ell2_tails(f: SeqVector) -> list[Tail]:
    return [t for t in f.tails if not t.is_ell2]


def resolvent_diag(sym: DiagonalSymbol, sign: int, f: SeqVector) -> SeqVector:
    """
    (S + sign*i)^-1 f with coordinates f_n / (a_n + sign*i).

    The result carries rational tail weights, so coordinates stay exact and norms
    remain certifiable.

    Raises:
        UnsupportedOperationError: If the symbol is not real or sign is not +-1
    """
    if sign not in (1, -1):
        raise UnsupportedOperationError(f"Resolvents are available at +-i only, got sign {sign}")
    if not sym.is_real:
        raise UnsupportedOperationError("Resolvent at +-i needs a real symbol")
    return f.divide_symbol(sym.shifted(sign * 1j))


def solve_one_plus_aastar(sym: DiagonalSymbol, f: SeqVector) -> SeqVector:
    """g with g_n = f_n / (1 + |a_n|^2)."""
    return f.divide_symbol(sym.one_plus_abs_sq())
