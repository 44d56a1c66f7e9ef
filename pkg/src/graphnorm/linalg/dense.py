"""
Small dense complex linear algebra for Gram matrices.
Eigen-based orthonormalization, PSD pseudo-inverses and projection-difference norms.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..storage.models import IndexRangeError, NotGramMatrixError, NotHermitianError

logger = logging.getLogger(__name__)

DEFAULT_RANK_TOL = 1e-10
HERMITIAN_TOL = 1e-12
NEGATIVE_EIGENVALUE_TOL = 1e-10


@dataclass(frozen=True)
class FrameCoefficients:
    """
    Weights W turning a spanning family into an orthonormal frame.

    Column k of W holds the coefficients of the k-th orthonormal direction in terms
    of the original vectors, so W^H G W = I for the Gram matrix G it was built from.
    """

    weights: np.ndarray
    eigenvalues: np.ndarray
    dropped: int

    @property
    def n_vectors(self) -> int:
        return self.weights.shape[0]

    @property
    def n_directions(self) -> int:
        return self.weights.shape[1]

    @property
    def rank(self) -> int:
        return self.n_directions


def as_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """
    Validate a square matrix against the Hermitian invariant.

    Args:
        m: Square array-like
        tol: Absolute tolerance on |m[i,j] - conj(m[j,i])|

    Returns:
        The symmetrized complex matrix (m + m^H) / 2

    Raises:
        NotHermitianError: If m is not square or not Hermitian within tol
    """
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotHermitianError(f"Expected a square matrix, got shape {a.shape}")
    if a.size:
        defect = float(np.max(np.abs(a - a.conj().T)))
        if defect > tol:
            raise NotHermitianError(f"Matrix is not Hermitian: max |m - m^H| = {defect:.3e}")
    return 0.5 * (a + a.conj().T)


def hermitian_eig(m) -> tuple[np.ndarray, np.ndarray]:
    """
    Eigendecomposition of a Hermitian matrix, eigenvalues in descending order.

    Args:
        m: Hermitian matrix

    Returns:
        Tuple of (eigenvalues descending, unitary eigenvector matrix)

    Raises:
        NotHermitianError: If m violates the Hermitian invariant
    """
    a = as_hermitian(m)
    if a.shape[0] == 0:
        return np.zeros(0), np.zeros((0, 0), dtype=complex)
    values, vectors = scipy.linalg.eigh(a)
    return values[::-1].copy(), vectors[:, ::-1].copy()


def orthonormalize_from_gram(g, rank_tol: float = DEFAULT_RANK_TOL) -> FrameCoefficients:
    """
    Orthonormal frame for the span of a family given only its Gram matrix.

    Directions with eigenvalue <= rank_tol * (largest eigenvalue) are dropped, so the
    rank decision is global rather than dependent on the order of the vectors.

    Args:
        g: Gram matrix of the family (positive semidefinite)
        rank_tol: Relative numerical-rank tolerance

    Returns:
        FrameCoefficients with n_directions equal to the numerical rank

    Raises:
        NotGramMatrixError: If g has an eigenvalue below -1e-10 * ||g||
    """
    values, vectors = hermitian_eig(g)
    n = len(values)
    if n == 0:
        return FrameCoefficients(np.zeros((0, 0), dtype=complex), np.zeros(0), 0)

    scale = float(np.max(np.abs(values)))
    if values[-1] < -NEGATIVE_EIGENVALUE_TOL * scale:
        raise NotGramMatrixError(
            f"Not a Gram matrix: eigenvalue {values[-1]:.3e} below -1e-10 * {scale:.3e}"
        )

    top = values[0]
    keep = values > rank_tol * top if top > 0 else np.zeros(n, dtype=bool)
    kept = values[keep]
    weights = vectors[:, keep] / np.sqrt(kept)
    dropped = n - int(np.count_nonzero(keep))
    if dropped:
        logger.debug(f"Gram rank {n - dropped} of {n} (rank_tol={rank_tol:g})")
    return FrameCoefficients(weights, kept, dropped)


def psd_pseudo_inverse(g, rank_tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Rank-tolerant pseudo-inverse of a Gram matrix, G+ = W W^H."""
    frame = orthonormalize_from_gram(g, rank_tol)
    return frame.weights @ frame.weights.conj().T


def null_directions(a, atol: float) -> np.ndarray:
    """
    Orthonormal basis of the approximate null space of a (possibly empty) matrix.

    Singular values at or below atol count as zero. Unlike a relative cutoff this keeps
    an all-round-off matrix rank deficient.

    Args:
        a: Matrix of shape (rows, cols); rows may be zero
        atol: Absolute singular-value threshold

    Returns:
        Matrix with cols rows whose columns span the null space
    """
    a = np.asarray(a, dtype=complex)
    cols = a.shape[1]
    if a.shape[0] == 0 or cols == 0:
        return np.eye(cols, dtype=complex)
    _, s, vh = scipy.linalg.svd(a, full_matrices=True)
    rank = int(np.count_nonzero(s > atol))
    return vh[rank:].conj().T


def projection_difference_norm(
    g_joint,
    idx_u: Sequence[int],
    idx_v: Sequence[int],
    rank_tol: float = DEFAULT_RANK_TOL,
) -> float:
    """
    Spectral norm ||P_U - P_V|| of two subspaces given by spanning families.

    Both projections are written in an orthonormal frame of the joint span; the
    difference vanishes on the orthogonal complement of that span, so the result is exact.

    Args:
        g_joint: Gram matrix of the concatenated spanning families
        idx_u: Indices (into g_joint) of the vectors spanning U
        idx_v: Indices of the vectors spanning V
        rank_tol: Relative numerical-rank tolerance

    Returns:
        ||P_U - P_V|| clamped to [0, 1]

    Raises:
        IndexRangeError: If an index is outside g_joint
    """
    g = as_hermitian(g_joint)
    n = g.shape[0]
    iu = _validate_indices(idx_u, n, "U")
    iv = _validate_indices(idx_v, n, "V")
    if not iu and not iv:
        return 0.0

    frame = orthonormalize_from_gram(g, rank_tol)
    if frame.rank == 0:
        return 0.0
    # coordinates of every spanning vector in the joint orthonormal frame
    coords = frame.weights.conj().T @ g

    p_u = _coordinate_projection(coords, g, iu, rank_tol)
    p_v = _coordinate_projection(coords, g, iv, rank_tol)
    diff = p_u - p_v
    diff = 0.5 * (diff + diff.conj().T)
    value = float(np.max(np.abs(scipy.linalg.eigvalsh(diff))))
    return min(1.0, max(0.0, value))


def _coordinate_projection(coords: np.ndarray, g: np.ndarray, idx: list[int], rank_tol: float):
    r = coords.shape[0]
    if not idx:
        return np.zeros((r, r), dtype=complex)
    sub = orthonormalize_from_gram(g[np.ix_(idx, idx)], rank_tol)
    q = coords[:, idx] @ sub.weights
    return q @ q.conj().T


def _validate_indices(idx: Sequence[int], n: int, name: str) -> list[int]:
    out = [int(i) for i in idx]
    bad = [i for i in out if i < 0 or i >= n]
    if bad:
        raise IndexRangeError(f"Index set {name} has entries outside [0, {n}): {bad}")
    return out
