"""Finite frames over C^n: analysis, orthonormal dilations, and the full
parametrized family of dual frames."""

from .duals import (
    AdmissibleQ,
    DilationUnitary,
    ExcessOneParams,
    admit_q,
    bessel_sequence_dual,
    default_dilation_unitary,
    dual_of_parseval,
    excess_one_contraction,
    excess_one_dual,
    excess_one_unitary,
    general_dual,
    general_dual_selfadjoint,
    is_admissible_parseval,
    is_admissible_q,
    near_riesz_dual,
    polar_form,
    recover_excess_one_params,
    tight_dual,
    tight_dual_exists,
)
from .errors import (
    BadEpsilonError,
    BlockMismatchError,
    DimensionMismatchError,
    DocumentError,
    DomainError,
    DualFramesError,
    ExcessNotOneError,
    ExcessTooSmallError,
    InadmissibleParamsError,
    NonCommutingError,
    NotAFrameError,
    NotDualError,
    NotHermitianError,
    NotIsometryError,
    NotParsevalError,
    NotRankOneDifferenceError,
    NotSquareError,
    NotUnitVectorError,
    SingularMatrixError,
    UnknownFixtureError,
)
from .fixtures import (
    SicPovm,
    bloch_map,
    casazza_christensen_block,
    casazza_christensen_union,
    mercedes,
    random_frame,
    sic_povm_qubit,
)
from .frames import (
    CanonicalFactorization,
    Frame,
    FrameBounds,
    ParsevalFrame,
    as_parseval,
    dual_residual,
    verify_dual,
)
from .linalg import (
    DEFAULT_TOL,
    HermEig,
    Tolerance,
    herm_eig,
    is_unitary,
    matrix_exp,
    matrix_fn,
    matrix_inv_sqrt,
    matrix_log,
    matrix_sqrt,
    orthonormal_complement,
    polar_decompose,
    psd_range_basis,
    rank_of,
)
from .naimark import (
    Dilation,
    NearRieszDilation,
    check_appendix_lemmas,
    dilate,
    near_riesz_dilate,
    riesz_subset,
)

__version__ = "0.1.0"
