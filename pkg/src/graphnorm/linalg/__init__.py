"""
Dense Hermitian linear algebra for Gram matrices.
"""

from .dense import (
    DEFAULT_RANK_TOL,
    FrameCoefficients,
    as_hermitian,
    hermitian_eig,
    null_directions,
    orthonormalize_from_gram,
    projection_difference_norm,
    psd_pseudo_inverse,
)

__all__ = [
    "DEFAULT_RANK_TOL",
    "FrameCoefficients",
    "as_hermitian",
    "hermitian_eig",
    "null_directions",
    "orthonormalize_from_gram",
    "projection_difference_norm",
    "psd_pseudo_inverse",
]
