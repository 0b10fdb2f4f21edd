"""Dense complex linear-algebra primitives used throughout the package.

All matrices are numpy arrays with dtype complex128. Routines are
deterministic: eigenvector phases are normalised and pivoted constructions
break near-ties by lowest index, so equal inputs yield bitwise-equal outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    DimensionMismatchError,
    DomainError,
    NotHermitianError,
    NotIsometryError,
    NotSquareError,
    SingularMatrixError,
)

# Relative window within which competing pivot norms count as tied.
_PIVOT_TIE_REL = 1e-12


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds shared by all operations.

    ``rank_tol`` is the relative cutoff below which singular values and
    eigenvalues count as zero; ``residual_tol`` bounds acceptable
    verification residuals in Frobenius norm.
    """

    rank_tol: float = 1e-10
    residual_tol: float = 1e-9

    def __post_init__(self) -> None:
        if not 0.0 < self.rank_tol < 1.0:
            raise ValueError("rank_tol must lie in (0, 1)")
        if not 0.0 < self.residual_tol < 1.0:
            raise ValueError("residual_tol must lie in (0, 1)")


DEFAULT_TOL = Tolerance()


def _as_matrix(a) -> np.ndarray:
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise DimensionMismatchError(f"expected a matrix, got ndim={arr.ndim}")
    return arr


def _require_square(arr: np.ndarray) -> None:
    if arr.shape[0] != arr.shape[1]:
        raise NotSquareError(f"expected a square matrix, got shape {arr.shape}")


@dataclass(frozen=True, eq=False)
class HermEig:
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` are real and ascending. ``eigenvectors`` holds the
    corresponding columns of a unitary matrix, each scaled so that its
    largest-magnitude entry is real and positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    fixed = np.array(vectors, dtype=np.complex128)
    for k in range(fixed.shape[1]):
        col = fixed[:, k]
        i = int(np.argmax(np.abs(col)))
        mag = abs(col[i])
        if mag > 0.0:
            fixed[:, k] = col * (col[i].conjugate() / mag)
    return fixed


def herm_eig(a, *, tol: Tolerance = DEFAULT_TOL) -> HermEig:
    """Deterministic eigendecomposition of a Hermitian matrix.

    The anti-Hermitian part must stay below ``residual_tol`` relative to the
    matrix norm; such asymmetry is symmetrised away before decomposing,
    anything larger raises :class:`NotHermitianError`.
    """
    arr = _as_matrix(a)
    _require_square(arr)
    if not np.all(np.isfinite(arr)):
        raise DomainError("matrix has non-finite entries")
    asym = float(np.linalg.norm(arr - arr.conj().T))
    if asym > tol.residual_tol * float(np.linalg.norm(arr)):
        raise NotHermitianError(f"matrix is not Hermitian: asymmetry {asym:.3e}")
    sym = (arr + arr.conj().T) / 2.0
    values, vectors = np.linalg.eigh(sym)
    return HermEig(values, _fix_phases(vectors))


def matrix_fn(a, fn: Callable, *, domain: Callable | None = None,
              tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Apply a real scalar function to a Hermitian matrix spectrally.

    Parameters
    ----------
    a : array_like
        Hermitian matrix.
    fn : callable
        Real function applied to the (real) eigenvalues; may be vectorised.
    domain : callable, optional
        Predicate on the eigenvalue array returning a boolean mask of valid
        entries. Any invalid eigenvalue raises :class:`DomainError`.

    Returns the Hermitian matrix with the same eigenvectors and mapped
    eigenvalues.
    """
    eig = herm_eig(a, tol=tol)
    lam = eig.eigenvalues
    if domain is not None:
        ok = np.asarray(domain(lam), dtype=bool)
        if not ok.all():
            bad = lam[~ok]
            raise DomainError(
                f"eigenvalues outside the function domain: {bad.tolist()}")
    with np.errstate(all="ignore"):
        vals = np.asarray(fn(lam), dtype=np.float64)
        if vals.shape != lam.shape:
            vals = np.array([float(fn(x)) for x in lam], dtype=np.float64)
    if not np.all(np.isfinite(vals)):
        raise DomainError("scalar function produced non-finite values")
    v = eig.eigenvectors
    out = (v * vals) @ v.conj().T
    return (out + out.conj().T) / 2.0


def _spectral_scale(lam: np.ndarray) -> float:
    return float(np.max(np.abs(lam), initial=0.0))


def matrix_exp(a, *, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Hermitian matrix exponential."""
    return matrix_fn(a, np.exp, tol=tol)


def matrix_log(a, *, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Hermitian matrix logarithm; rejects eigenvalues at or below the rank cutoff."""

    def dom(lam: np.ndarray) -> np.ndarray:
        return lam > tol.rank_tol * _spectral_scale(lam)

    return matrix_fn(a, np.log, domain=dom, tol=tol)


def matrix_sqrt(a, *, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Square root of a positive semidefinite Hermitian matrix.

    Eigenvalues below ``-rank_tol`` (relative) raise; rounding-level
    negatives are clamped to zero.
    """

    def dom(lam: np.ndarray) -> np.ndarray:
        return lam >= -tol.rank_tol * _spectral_scale(lam)

    return matrix_fn(a, lambda lam: np.sqrt(np.maximum(lam, 0.0)),
                     domain=dom, tol=tol)


def matrix_inv_sqrt(a, *, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Inverse square root of a positive definite Hermitian matrix."""

    def dom(lam: np.ndarray) -> np.ndarray:
        return lam > tol.rank_tol * _spectral_scale(lam)

    return matrix_fn(a, lambda lam: 1.0 / np.sqrt(lam), domain=dom, tol=tol)


def rank_of(a, *, tol: Tolerance = DEFAULT_TOL) -> int:
    """Numerical rank: singular values above ``rank_tol`` relative to the largest."""
    s = np.linalg.svd(_as_matrix(a), compute_uv=False)
    if s.size == 0 or s[0] <= 0.0:
        return 0
    return int(np.sum(s > tol.rank_tol * s[0]))


def psd_range_basis(a, *, tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal eigenbasis of the range of a positive semidefinite matrix.

    Returns ``(basis, eigenvalues)`` with eigenvalues above the rank cutoff
    sorted descending and ``basis`` the matching phase-fixed eigenvectors.
    """
    eig = herm_eig(a, tol=tol)
    lam = eig.eigenvalues
    scale = _spectral_scale(lam)
    if lam.size and lam[0] < -tol.rank_tol * scale:
        raise DomainError(f"matrix is not positive semidefinite: min eigenvalue {lam[0]:.3e}")
    mask = lam > tol.rank_tol * scale
    idx = np.where(mask)[0][::-1]
    return eig.eigenvectors[:, idx], lam[idx]


def _pivot_pick(norms: np.ndarray) -> int:
    # Near-ties (relative window) resolve to the lowest index so that the
    # pivot order survives last-ulp rounding differences.
    best = float(norms.max())
    return int(np.argmax(norms >= best * (1.0 - _PIVOT_TIE_REL)))


def orthonormal_complement(b, ambient_dim: int | None = None, *,
                           tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Deterministic orthonormal basis of the orthogonal complement of range(b).

    ``b`` must have orthonormal columns. Columns of the identity are
    orthogonalised against the current basis, picking at each step the one
    with the largest residual norm (near-ties go to the lowest index).
    """
    arr = _as_matrix(b)
    d, k = arr.shape
    if ambient_dim is None:
        ambient_dim = d
    if ambient_dim != d:
        raise DimensionMismatchError(
            f"ambient dimension {ambient_dim} does not match {d} rows")
    if k > d:
        raise NotIsometryError(f"{k} columns cannot be orthonormal in dimension {d}")
    gram = arr.conj().T @ arr
    if float(np.linalg.norm(gram - np.eye(k))) > tol.residual_tol:
        raise NotIsometryError("columns are not orthonormal within tolerance")
    q = arr
    cols: list[np.ndarray] = []
    for _ in range(d - k):
        resid = np.eye(d, dtype=np.complex128) - q @ q.conj().T
        pick = _pivot_pick(np.linalg.norm(resid, axis=0))
        v = resid[:, pick]
        v = v - q @ (q.conj().T @ v)  # second pass for numerical orthogonality
        v = v / np.linalg.norm(v)
        cols.append(v)
        q = np.hstack([q, v[:, None]])
    if not cols:
        return np.zeros((d, 0), dtype=np.complex128)
    return np.column_stack(cols)


def polar_decompose(a, *, tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Left polar decomposition ``a = p @ u`` of an invertible square matrix.

    ``p`` is Hermitian positive definite, ``u`` unitary. Raises
    :class:`SingularMatrixError` when the smallest singular value falls at or
    below the rank cutoff.
    """
    arr = _as_matrix(a)
    _require_square(arr)
    u, s, vh = np.linalg.svd(arr)
    if s.size == 0 or s[-1] <= tol.rank_tol * s[0]:
        raise SingularMatrixError("matrix is numerically singular")
    p = (u * s) @ u.conj().T
    p = (p + p.conj().T) / 2.0
    return p, u @ vh


def is_unitary(a, *, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when ``a`` is square with ``a† a = I`` within ``residual_tol``."""
    arr = _as_matrix(a)
    if arr.shape[0] != arr.shape[1]:
        return False
    n = arr.shape[0]
    return float(np.linalg.norm(arr.conj().T @ arr - np.eye(n))) <= tol.residual_tol
