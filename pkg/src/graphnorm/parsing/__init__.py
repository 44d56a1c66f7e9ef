"""CLI literal grammar: vectors, symbols, functionals and parameter lists."""

from .literals import (
    parse_complex,
    parse_functional,
    parse_functional_list,
    parse_int_list,
    parse_real,
    parse_symbol,
    parse_theta_list,
    parse_vector,
    parse_vector_list,
)

__all__ = [
    "parse_complex",
    "parse_functional",
    "parse_functional_list",
    "parse_int_list",
    "parse_real",
    "parse_symbol",
    "parse_theta_list",
    "parse_vector",
    "parse_vector_list",
]
