"""Finite frames over C^n and their canonical objects.

A frame is an ordered, spanning family of vectors; individual members may be
zero. Vectors live in the columns of the synthesis matrix. Inner products are
linear in the first argument, so analysis coefficients are ``synthesis† f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatchError, NotAFrameError, NotParsevalError
from .linalg import (
    DEFAULT_TOL,
    HermEig,
    Tolerance,
    herm_eig,
    matrix_inv_sqrt,
    matrix_log,
    rank_of,
)


class FrameBounds(NamedTuple):
    lower: float
    upper: float


class Frame:
    """Ordered spanning family of vectors in C^dim.

    Parameters
    ----------
    vectors : array_like
        Sequence of ``count`` vectors of length ``dim`` (rows).
    tol : Tolerance
        Thresholds used for validation and for derived quantities.

    Instances are immutable; the frame operator, its eigendecomposition and
    the canonical factorization are computed lazily and cached.
    """

    def __init__(self, vectors, *, tol: Tolerance = DEFAULT_TOL):
        arr = np.asarray(vectors, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
            raise NotAFrameError("expected a non-empty 2-d array of frame vectors")
        if not np.all(np.isfinite(arr)):
            raise NotAFrameError("frame vectors must be finite")
        count, dim = arr.shape
        if count < dim:
            raise NotAFrameError(f"{count} vectors cannot span C^{dim}")
        synthesis = arr.T.copy()
        rank = rank_of(synthesis, tol=tol)
        if rank < dim:
            raise NotAFrameError(
                f"vectors span a subspace of dimension {rank} < {dim}")
        synthesis.flags.writeable = False
        self._synthesis = synthesis
        self._dim = dim
        self._count = count
        self._rank = rank
        self._tol = tol
        self._operator: np.ndarray | None = None
        self._eig: HermEig | None = None
        self._factorization: CanonicalFactorization | None = None
        self._canonical_dual: Frame | None = None

    @classmethod
    def from_synthesis(cls, matrix, *, tol: Tolerance = DEFAULT_TOL) -> "Frame":
        """Build a frame from an ``(dim, count)`` synthesis matrix (columns = vectors)."""
        arr = np.asarray(matrix, dtype=np.complex128)
        if arr.ndim != 2:
            raise NotAFrameError("synthesis matrix must be 2-d")
        return cls(arr.T, tol=tol)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def count(self) -> int:
        return self._count

    @property
    def tol(self) -> Tolerance:
        return self._tol

    @property
    def synthesis(self) -> np.ndarray:
        """Read-only ``(dim, count)`` matrix whose columns are the frame vectors."""
        return self._synthesis

    @property
    def vectors(self) -> np.ndarray:
        """Read-only ``(count, dim)`` view, one vector per row."""
        return self._synthesis.T

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self._dim}, count={self._count})"

    def frame_operator(self) -> np.ndarray:
        """Sum of the rank-one operators of the members: ``synthesis @ synthesis†``."""
        if self._operator is None:
            op = self._synthesis @ self._synthesis.conj().T
            op = (op + op.conj().T) / 2.0
            op.flags.writeable = False
            self._operator = op
        return self._operator

    def _operator_eig(self) -> HermEig:
        if self._eig is None:
            self._eig = herm_eig(self.frame_operator(), tol=self._tol)
        return self._eig

    def frame_bounds(self) -> FrameBounds:
        """Optimal frame bounds: the extreme eigenvalues of the frame operator."""
        lam = self._operator_eig().eigenvalues
        return FrameBounds(float(lam[0]), float(lam[-1]))

    def frame_potential(self) -> float:
        """Sum of squared magnitudes of all pairwise inner products."""
        gram = self._synthesis.conj().T @ self._synthesis
        return float(np.sum(np.abs(gram) ** 2))

    def excess(self) -> int:
        """Number of members beyond the rank of the synthesis matrix."""
        return self._count - self._rank

    def is_parseval(self, tol: Tolerance | None = None) -> bool:
        tol = tol or self._tol
        s = self.frame_operator()
        return float(np.linalg.norm(s - np.eye(self._dim))) <= tol.residual_tol

    def is_tight(self, tol: Tolerance | None = None) -> bool:
        tol = tol or self._tol
        bounds = self.frame_bounds()
        return bounds.upper - bounds.lower <= tol.residual_tol * max(1.0, bounds.upper)

    def analysis(self, f) -> np.ndarray:
        """Coefficients ``<f, phi_j>`` for a vector ``f`` in C^dim."""
        vec = np.asarray(f, dtype=np.complex128)
        if vec.shape != (self._dim,):
            raise DimensionMismatchError(
                f"expected a vector of length {self._dim}, got shape {vec.shape}")
        return self._synthesis.conj().T @ vec

    def synthesize(self, coeffs) -> np.ndarray:
        """Linear combination ``sum_j c_j phi_j`` for coefficients in C^count."""
        c = np.asarray(coeffs, dtype=np.complex128)
        if c.shape != (self._count,):
            raise DimensionMismatchError(
                f"expected {self._count} coefficients, got shape {c.shape}")
        return self._synthesis @ c

    def canonical_factorization(self) -> "CanonicalFactorization":
        """Split into a positive factor and a Parseval frame.

        Returns the Hermitian logarithm ``q`` of the frame operator together
        with the Parseval frame ``inv_sqrt(S) @ synthesis``; the original
        vectors are recovered as ``exp(q/2)`` applied to the Parseval part.
        """
        if self._factorization is None:
            s = self.frame_operator()
            q = matrix_log(s, tol=self._tol)
            part = ParsevalFrame.from_synthesis(
                matrix_inv_sqrt(s, tol=self._tol) @ self._synthesis, tol=self._tol)
            self._factorization = CanonicalFactorization(q=q, parseval_part=part)
        return self._factorization

    def canonical_dual(self) -> "Frame":
        """The dual with vectors ``S^{-1} phi_j``, built from the factorization."""
        if self._canonical_dual is None:
            cf = self.canonical_factorization()
            r = matrix_inv_sqrt(self.frame_operator(), tol=self._tol)
            self._canonical_dual = Frame.from_synthesis(
                r @ cf.parseval_part.synthesis, tol=self._tol)
        return self._canonical_dual


class ParsevalFrame(Frame):
    """Frame whose frame operator is the identity within ``residual_tol``."""

    def __init__(self, vectors, *, tol: Tolerance = DEFAULT_TOL):
        super().__init__(vectors, tol=tol)
        s = self.frame_operator()
        defect = float(np.linalg.norm(s - np.eye(self.dim)))
        if defect > tol.residual_tol:
            raise NotParsevalError(
                f"frame operator deviates from identity by {defect:.3e}")


@dataclass(frozen=True, eq=False)
class CanonicalFactorization:
    """Positive-operator / Parseval splitting of a frame.

    ``q`` is the Hermitian logarithm of the frame operator; ``parseval_part``
    the Parseval frame left after removing the positive factor ``exp(q/2)``.
    """

    q: np.ndarray
    parseval_part: ParsevalFrame


def as_parseval(frame: Frame, *, tol: Tolerance = DEFAULT_TOL) -> ParsevalFrame:
    """Re-validate ``frame`` as Parseval, raising NotParsevalError otherwise."""
    if isinstance(frame, ParsevalFrame):
        return frame
    return ParsevalFrame(frame.vectors, tol=tol)


def dual_residual(frame: Frame, dual: Frame) -> float:
    """Frobenius distance of ``sum_j phi_j psi_j†`` from the identity."""
    if frame.dim != dual.dim or frame.count != dual.count:
        raise DimensionMismatchError(
            f"frame {frame.dim}x{frame.count} vs candidate {dual.dim}x{dual.count}")
    resid = frame.synthesis @ dual.synthesis.conj().T - np.eye(frame.dim)
    return float(np.linalg.norm(resid))


def verify_dual(frame: Frame, dual: Frame, *, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when ``dual`` reconstructs every vector through ``frame`` within tolerance."""
    return dual_residual(frame, dual) <= tol.residual_tol
