"""
Literal grammar for CLI arguments.

Vectors are sums of terms joined by '+', each term an optional coefficient followed by
'*' and an atom:

    momentum:  kernel:LAM   psi_inf   psi:N   chi:A,B   zero
    diag:      e:K   tail:C,S[,START]   geom:C,R[,S]   zero

Functionals are point:LAM, interval-integral:A,B[,C], rep:<vector> or h:<vector>.
"""

import math
import re
from typing import Any

from ..engines import MinusOneFunctional
from ..functions import interval_indicator, kernel_phi, psi_infinity, psi_n
from ..models import HilbertModel
from ..sequences import DiagonalSymbol, SeqVector
from ..storage.models import LiteralSyntaxError, ModelKind

CONSTANTS = {
    "pi": math.pi,
    "-pi": -math.pi,
    "e": math.e,
    "sqrt(e)": math.sqrt(math.e),
    "-sqrt(e)": -math.sqrt(math.e),
}

_TERM_SPLIT = re.compile(
    r"\+(?=\s*(?:(?:\([^()]*\)|[-\w.]+(?:\(\w+\))?)\s*\*\s*)?"
    r"(?:kernel|psi_inf|psi|chi|zero|e|tail|geom)\b)"
)
_MONOMIAL = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?j?)?"
    r"\s*\*?\s*(?P<var>n(?:\s*\^\s*(?P<pow>\d+))?)?\s*"
)


# ===== Numbers =====


def parse_real(text: str) -> float:
    """Float, or one of the named constants pi, e, sqrt(e)."""
    token = text.strip().lower()
    if token in CONSTANTS:
        return CONSTANTS[token]
    try:
        return float(token)
    except ValueError as e:
        raise LiteralSyntaxError(f"Not a real number: {text!r}") from e


def parse_complex(text: str) -> complex:
    token = text.strip().lower().replace(" ", "")
    if token in CONSTANTS:
        return complex(CONSTANTS[token])
    try:
        return complex(token)
    except ValueError as e:
        raise LiteralSyntaxError(f"Not a complex number: {text!r}") from e


def parse_int_list(text: str, minimum: int | None = None) -> list[int]:
    """Comma-separated integers, e.g. '10,100,1000'."""
    values = []
    for token in _split_list(text):
        try:
            value = int(token)
        except ValueError as e:
            raise LiteralSyntaxError(f"Not an integer: {token!r}") from e
        if minimum is not None and value < minimum:
            raise LiteralSyntaxError(f"Values must be at least {minimum}, got {value}")
        values.append(value)
    return values


def parse_theta_list(text: str) -> list[float]:
    """
    Comma-separated phases in (-pi, pi]; 'pi', '-pi/2', '2*pi/3' are accepted.

    Raises:
        LiteralSyntaxError: On malformed tokens or values outside (-pi, pi]
    """
    thetas = []
    for token in _split_list(text):
        theta = _parse_theta(token.replace(" ", "").lower())
        if not (-math.pi < theta <= math.pi):
            raise LiteralSyntaxError(f"theta must lie in (-pi, pi], got {token!r}")
        thetas.append(theta)
    return thetas


def _parse_theta(token: str) -> float:
    if "pi" not in token:
        return parse_real(token)
    head, _, divisor = token.partition("/")
    factor = head.replace("pi", "").rstrip("*")
    if factor in ("", "+"):
        value = math.pi
    elif factor == "-":
        value = -math.pi
    else:
        value = parse_real(factor) * math.pi
    if divisor:
        value /= parse_real(divisor)
    return value


def _split_list(text: str) -> list[str]:
    tokens = [t.strip() for t in text.split(",")]
    if not text.strip() or any(not t for t in tokens):
        raise LiteralSyntaxError(f"Malformed list: {text!r}")
    return tokens


# ===== Symbols =====


def parse_symbol(text: str) -> DiagonalSymbol:
    """
    Polynomial in n such as 'n', 'n^2+1', '2*n - 0.5', '1j*n'.

    Raises:
        LiteralSyntaxError: If the text is not a polynomial in n
    """
    coefficients: dict[int, complex] = {}
    pos = 0
    source = text.strip()
    if not source:
        raise LiteralSyntaxError("Empty symbol")
    while pos < len(source):
        match = _MONOMIAL.match(source, pos)
        if match is None or match.end() == pos or not (match["coef"] or match["var"]):
            raise LiteralSyntaxError(f"Cannot parse symbol {text!r} at position {pos}")
        if pos and not match["sign"]:
            raise LiteralSyntaxError(f"Missing operator in symbol {text!r} at position {pos}")
        coef = complex(match["coef"]) if match["coef"] else 1.0 + 0j
        if match["sign"] == "-":
            coef = -coef
        power = (int(match["pow"]) if match["pow"] else 1) if match["var"] else 0
        coefficients[power] = coefficients.get(power, 0j) + coef
        pos = match.end()
    degree = max(coefficients)
    return DiagonalSymbol(tuple(coefficients.get(k, 0j) for k in range(degree + 1)))


# ===== Vectors =====


def parse_vector(model: HilbertModel, text: str) -> Any:
    """
    Vector literal for the given model.

    Raises:
        LiteralSyntaxError: On malformed text or atoms of another model
    """
    if not text or not text.strip():
        raise LiteralSyntaxError("Empty vector literal")
    vectors, coeffs = [], []
    for term in _TERM_SPLIT.split(text):
        coeff, atom = _split_coefficient(term.strip())
        vectors.append(_parse_atom(model, atom))
        coeffs.append(coeff)
    return model.linear_combination(vectors, coeffs)


def _split_coefficient(term: str) -> tuple[complex, str]:
    head, star, atom = term.partition("*")
    if not star:
        return 1.0 + 0j, term
    return parse_complex(head), atom.strip()


def _parse_atom(model: HilbertModel, atom: str) -> Any:
    name, _, args = atom.partition(":")
    name = name.strip().lower()
    params = [a.strip() for a in args.split(",")] if args.strip() else []
    if name == "zero" and not params:
        return model.zero()
    try:
        if model.kind == ModelKind.MOMENTUM:
            return _momentum_atom(name, params)
        return _diag_atom(name, params)
    except (ValueError, TypeError) as e:
        raise LiteralSyntaxError(f"Invalid vector atom {atom!r}: {e}") from e


def _momentum_atom(name: str, params: list[str]) -> Any:
    if name == "kernel" and len(params) == 1:
        return kernel_phi(parse_real(params[0]))
    if name == "psi_inf" and not params:
        return psi_infinity()
    if name == "psi" and len(params) == 1:
        return psi_n(int(params[0]))
    if name == "chi" and len(params) == 2:
        return interval_indicator(parse_real(params[0]), parse_real(params[1]))
    raise LiteralSyntaxError(f"Unknown momentum vector atom {name!r} with {len(params)} arguments")


def _diag_atom(name: str, params: list[str]) -> Any:
    if name == "e" and len(params) == 1:
        return SeqVector.basis(int(params[0]))
    if name == "tail" and len(params) in (2, 3):
        start = int(params[2]) if len(params) == 3 else 1
        return SeqVector.power_tail(parse_complex(params[0]), parse_real(params[1]), start)
    if name == "geom" and len(params) in (2, 3):
        s = parse_real(params[2]) if len(params) == 3 else 0.0
        return SeqVector.geometric_tail(parse_complex(params[0]), parse_complex(params[1]), s)
    raise LiteralSyntaxError(f"Unknown diag vector atom {name!r} with {len(params)} arguments")


def parse_vector_list(model: HilbertModel, text: str) -> list[Any]:
    """Generators separated by ';', e.g. 'kernel:0; kernel:5'. An empty string gives no generators."""
    if not text.strip() or text.strip() == "{}":
        return []
    return [parse_vector(model, part) for part in text.split(";")]


# ===== Functionals =====


def parse_functional(model: HilbertModel, text: str) -> MinusOneFunctional:
    """
    One H_{-1} functional literal.

    Raises:
        LiteralSyntaxError: On malformed text
    """
    kind, sep, rest = text.strip().partition(":")
    if not sep:
        raise LiteralSyntaxError(f"Functional literal needs a 'kind:' prefix: {text!r}")
    kind = kind.strip().lower()
    if kind == "point":
        return MinusOneFunctional.point(model, parse_real(rest))
    if kind == "interval-integral":
        params = _split_list(rest)
        if len(params) not in (2, 3):
            raise LiteralSyntaxError(f"interval-integral takes a,b[,c]: {text!r}")
        c = parse_complex(params[2]) if len(params) == 3 else 1.0
        return MinusOneFunctional.interval_integral(model, parse_real(params[0]), parse_real(params[1]), c)
    if kind == "rep":
        return MinusOneFunctional(model, parse_vector(model, rest), text.strip())
    if kind == "h":
        return MinusOneFunctional.from_h_vector(model, parse_vector(model, rest), text.strip())
    raise LiteralSyntaxError(f"Unknown functional kind {kind!r}")


def parse_functional_list(model: HilbertModel, text: str) -> list[MinusOneFunctional]:
    """Functionals separated by ';'."""
    if not text.strip() or text.strip() == "{}":
        return []
    return [parse_functional(model, part) for part in text.split(";")]
