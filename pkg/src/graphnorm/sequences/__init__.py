"""
Square-summable sequences with symbolic tails: the vector class of the diagonal model.
"""

from .seqvec import (
    SeqVector,
    Tail,
    add,
    apply_diag,
    in_domain,
    linear_combination,
    non_ell2_tails,
    resolvent_diag,
    solve_one_plus_aastar,
)
from .summation import CertifiedValue, seq_inner_product, seq_norm_sq
from .symbol import DiagonalSymbol

__all__ = [
    "CertifiedValue",
    "DiagonalSymbol",
    "SeqVector",
    "Tail",
    "add",
    "apply_diag",
    "in_domain",
    "linear_combination",
    "non_ell2_tails",
    "resolvent_diag",
    "seq_inner_product",
    "seq_norm_sq",
    "solve_one_plus_aastar",
]
