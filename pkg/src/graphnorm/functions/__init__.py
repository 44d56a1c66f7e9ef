"""
Piecewise exponential-polynomial functions: the vector class of the momentum model.
"""

from .pwexp import (
    JumpReport,
    PiecewiseExpPoly,
    Term,
    add,
    anticausal_exp_integral,
    causal_exp_integral,
    conjugate,
    derivative,
    differentiate,
    evaluate,
    from_pieces,
    in_h1,
    in_h2,
    inner_product,
    integrate,
    interval_indicator,
    is_l2,
    jump_vector,
    jumps,
    kernel_combination,
    kernel_node,
    kernel_phi,
    l2_norm_sq,
    linear_combination,
    max_coefficient_gap,
    merged_breakpoints,
    multiply,
    point_eval,
    psi_infinity,
    psi_n,
    reflect,
    scale,
    translate,
    zero,
)

__all__ = [
    "JumpReport",
    "PiecewiseExpPoly",
    "Term",
    "add",
    "anticausal_exp_integral",
    "causal_exp_integral",
    "conjugate",
    "derivative",
    "differentiate",
    "evaluate",
    "from_pieces",
    "in_h1",
    "in_h2",
    "inner_product",
    "integrate",
    "interval_indicator",
    "is_l2",
    "jump_vector",
    "jumps",
    "kernel_combination",
    "kernel_node",
    "kernel_phi",
    "l2_norm_sq",
    "linear_combination",
    "max_coefficient_gap",
    "merged_breakpoints",
    "multiply",
    "point_eval",
    "psi_infinity",
    "psi_n",
    "reflect",
    "scale",
    "translate",
    "zero",
]
