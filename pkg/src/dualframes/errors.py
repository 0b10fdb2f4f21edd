"""Exception hierarchy for the dualframes package."""

from __future__ import annotations


class DualFramesError(Exception):
    """Base class for every error raised by this package."""


class NotSquareError(DualFramesError):
    """A square matrix was required."""


class NotHermitianError(DualFramesError):
    """Matrix asymmetry exceeds the allowed tolerance."""


class DomainError(DualFramesError):
    """An eigenvalue lies outside the domain of the requested scalar function."""


class NotIsometryError(DualFramesError):
    """Columns of the given matrix are not orthonormal."""


class SingularMatrixError(DualFramesError):
    """Matrix is singular (or numerically so) where invertibility is required."""


class DimensionMismatchError(DualFramesError):
    """Shapes of the operands are incompatible."""


class NotAFrameError(DualFramesError):
    """The vectors do not form a frame (wrong shape, non-finite, or not spanning)."""


class NotParsevalError(DualFramesError):
    """The frame operator is not the identity within tolerance."""


class ExcessNotOneError(DualFramesError):
    """Operation requires a frame with excess exactly one."""


class ExcessTooSmallError(DualFramesError):
    """The auxiliary dimension cannot accommodate the defect rank."""


class BlockMismatchError(DualFramesError):
    """A block of the supplied unitary does not match the required contraction."""


class BadEpsilonError(DualFramesError):
    """The scalar parameter must lie in (0, 1]."""


class NotUnitVectorError(DualFramesError):
    """A unit-norm vector was required."""


class InadmissibleParamsError(DualFramesError):
    """Dual-frame parameters violate an admissibility condition."""


class NonCommutingError(DualFramesError):
    """The operator does not commute with the frame operator."""


class NotDualError(DualFramesError):
    """The candidate does not reconstruct the frame within tolerance."""


class NotRankOneDifferenceError(DualFramesError):
    """Difference from the source frame is not rank-one along the complement."""


class UnknownFixtureError(DualFramesError):
    """No fixture with the requested name exists."""


class DocumentError(DualFramesError):
    """A JSON document does not conform to the expected schema."""
