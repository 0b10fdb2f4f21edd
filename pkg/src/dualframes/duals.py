"""Constructors for the full family of dual frames.

Every dual of a Parseval frame is the sum of the frame itself and a
perturbation routed through the dilation complement; the perturbation is
selected by a nonnegative parameter operator ``q`` together with a unitary
extension ``w`` of the contraction ``exp(-q/2)``. Non-Parseval frames reduce
to this picture through their canonical factorization. Excess-one frames
admit closed forms, and near-Riesz splits give duals with exact zero members.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadEpsilonError,
    BlockMismatchError,
    DimensionMismatchError,
    ExcessNotOneError,
    ExcessTooSmallError,
    InadmissibleParamsError,
    NonCommutingError,
    NotDualError,
    NotRankOneDifferenceError,
    NotUnitVectorError,
)
from .frames import Frame, ParsevalFrame, as_parseval, verify_dual
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    herm_eig,
    is_unitary,
    matrix_exp,
    matrix_inv_sqrt,
    matrix_log,
    matrix_sqrt,
)
from .naimark import dilate, near_riesz_dilate


@dataclass(frozen=True, eq=False)
class AdmissibleQ:
    """Validated parameter operator: Hermitian, nonnegative, with
    rank(I - exp(-q)) small enough for the target frame."""

    q: np.ndarray
    rank_defect: int


@dataclass(frozen=True, eq=False)
class DilationUnitary:
    """Unitary on C^(dim+aux) whose top-left block is a prescribed contraction."""

    w: np.ndarray
    dim: int
    aux: int

    @property
    def w11(self) -> np.ndarray:
        return self.w[:self.dim, :self.dim]

    @property
    def w12(self) -> np.ndarray:
        return self.w[:self.dim, self.dim:]

    @property
    def w21(self) -> np.ndarray:
        return self.w[self.dim:, :self.dim]

    @property
    def w22(self) -> np.ndarray:
        return self.w[self.dim:, self.dim:]


@dataclass(frozen=True, eq=False)
class ExcessOneParams:
    """Closed-form dual family parameters for excess-one frames.

    ``epsilon`` in (0, 1] scales the perturbation (1 gives the canonical
    dual), ``u`` is a unit direction, ``theta`` a redundant phase absorbed
    into ``u``; ``theta_tilde`` only affects the associated unitary, not the
    dual itself.
    """

    epsilon: float
    u: np.ndarray
    theta: float = 0.0
    theta_tilde: float = 0.0


def _check_epsilon(value) -> float:
    eps = float(value)
    if not 0.0 < eps <= 1.0:
        raise BadEpsilonError(f"epsilon must lie in (0, 1], got {value!r}")
    return eps


def _check_unit_vector(u, *, tol: Tolerance) -> np.ndarray:
    vec = np.asarray(u, dtype=np.complex128)
    if vec.ndim != 1 or vec.size == 0:
        raise NotUnitVectorError(f"expected a nonempty vector, got shape {vec.shape}")
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > tol.residual_tol:
        raise NotUnitVectorError(f"vector has norm {norm!r}, expected 1")
    return vec


def _q_spectral(q, *, tol: Tolerance):
    """Eigendata of a nonnegative parameter operator plus its defect split.

    Returns ``(eig, defect, idx)`` where ``defect`` holds the eigenvalues of
    I - exp(-q) in the eigenbasis order and ``idx`` selects the ones above
    the cutoff, largest first. The defect spectrum lives in [0, 1), so the
    cutoff is absolute.
    """
    arr = np.asarray(q, dtype=np.complex128)
    eig = herm_eig(arr, tol=tol)
    lam = eig.eigenvalues
    scale = float(np.max(np.abs(lam), initial=0.0))
    if lam.size and lam[0] < -tol.rank_tol * max(1.0, scale):
        raise InadmissibleParamsError(
            f"nonnegativity fails: smallest eigenvalue {lam[0]:.3e}")
    defect = 1.0 - np.exp(-lam)
    idx = np.where(defect > tol.rank_tol)[0][::-1]
    return eig, defect, idx


def admit_q(q, excess: int, *, tol: Tolerance = DEFAULT_TOL) -> AdmissibleQ:
    """Validate a parameter operator against a frame's excess.

    Raises :class:`InadmissibleParamsError` naming the violated condition
    (nonnegativity or the rank bound); Hermitian failures raise
    :class:`NotHermitianError`.
    """
    arr = np.asarray(q, dtype=np.complex128)
    _, _, idx = _q_spectral(arr, tol=tol)
    r = len(idx)
    if r > excess:
        raise InadmissibleParamsError(
            f"rank bound fails: rank(I - exp(-q)) = {r} exceeds excess {excess}")
    return AdmissibleQ(q=arr, rank_defect=r)


def is_admissible_q(f: Frame, q, *, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when ``q`` is nonnegative and its defect rank fits the excess of ``f``."""
    try:
        admit_q(q, f.excess(), tol=tol)
    except InadmissibleParamsError:
        return False
    return True


def default_dilation_unitary(q, aux_dim: int, *,
                             tol: Tolerance = DEFAULT_TOL) -> DilationUnitary:
    """Canonical unitary extension of the contraction exp(-q/2).

    The defect range of I - exp(-q) is embedded as the leading auxiliary
    coordinates, where the extension acts as the standard 2x2 corner
    construction; the remaining auxiliary coordinates carry the identity.
    """
    arr = np.asarray(q, dtype=np.complex128)
    eig, defect, idx = _q_spectral(arr, tol=tol)
    r = len(idx)
    if aux_dim < r:
        raise ExcessTooSmallError(
            f"auxiliary dimension {aux_dim} cannot hold defect rank {r}")
    n = arr.shape[0]
    lam, v = eig.eigenvalues, eig.eigenvectors
    contraction = (v * np.exp(-lam / 2.0)) @ v.conj().T
    contraction = (contraction + contraction.conj().T) / 2.0
    w = np.zeros((n + aux_dim, n + aux_dim), dtype=np.complex128)
    w[:n, :n] = contraction
    if r:
        vr = v[:, idx]
        root = vr * np.sqrt(defect[idx])
        w[:n, n:n + r] = root
        w[n:n + r, :n] = root.conj().T
        w[n:n + r, n:n + r] = -(vr.conj().T @ contraction @ vr)
    if aux_dim > r:
        w[n + r:, n + r:] = np.eye(aux_dim - r)
    w.flags.writeable = False
    return DilationUnitary(w=w, dim=n, aux=aux_dim)


def _coerce_unitary(w, q, aux_dim: int, *, tol: Tolerance) -> DilationUnitary:
    """Validate a caller-supplied extension against the contraction exp(-q/2)."""
    arr = w.w if isinstance(w, DilationUnitary) else np.asarray(w, dtype=np.complex128)
    qarr = np.asarray(q, dtype=np.complex128)
    n = qarr.shape[0]
    if arr.shape != (n + aux_dim, n + aux_dim):
        raise DimensionMismatchError(
            f"expected a {n + aux_dim}x{n + aux_dim} unitary, got {arr.shape}")
    if not is_unitary(arr, tol=tol):
        raise InadmissibleParamsError("supplied extension is not unitary within tolerance")
    expected = matrix_exp(-0.5 * qarr, tol=tol)
    gap = float(np.linalg.norm(arr[:n, :n] - expected))
    if gap > tol.residual_tol * max(1.0, float(np.linalg.norm(expected))):
        raise BlockMismatchError(
            f"top-left block deviates from exp(-q/2) by {gap:.3e}")
    return DilationUnitary(w=arr, dim=n, aux=aux_dim)


def dual_of_parseval(f: Frame, q, w=None, *, tol: Tolerance = DEFAULT_TOL) -> Frame:
    """Dual of a Parseval frame selected by (q, w).

    psi_j = e_j + exp(q/2) W12 etilde_j, with etilde_j the dilation tails.
    ``w`` defaults to the canonical extension; any unitary whose top-left
    block matches exp(-q/2) is accepted.
    """
    pf = as_parseval(f, tol=tol)
    m = pf.excess()
    qarr = np.asarray(q, dtype=np.complex128)
    admit_q(qarr, m, tol=tol)
    dil = dilate(pf, tol=tol)
    du = (default_dilation_unitary(qarr, m, tol=tol) if w is None
          else _coerce_unitary(w, qarr, m, tol=tol))
    grow = matrix_exp(0.5 * qarr, tol=tol)
    syn = pf.synthesis + (grow @ du.w12) @ dil.complement.T
    return Frame.from_synthesis(syn, tol=tol)


def excess_one_contraction(epsilon, u, *, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Rank-one contraction I + (eps - 1) u u*; maps u to eps u."""
    eps = _check_epsilon(epsilon)
    vec = _check_unit_vector(u, tol=tol)
    return np.eye(vec.size) + (eps - 1.0) * np.outer(vec, vec.conj())


def excess_one_unitary(epsilon, u, theta: float = 0.0, theta_tilde: float = 0.0, *,
                       tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """One-row unitary extension of the rank-one contraction.

    (K+1)x(K+1); the added column carries sqrt(1-eps^2) e^(i theta) u, the
    added row sqrt(1-eps^2) e^(i theta_tilde) conj(u), and the corner
    -eps e^(i(theta+theta_tilde)).
    """
    eps = _check_epsilon(epsilon)
    vec = _check_unit_vector(u, tol=tol)
    k = vec.size
    s = np.sqrt(1.0 - eps * eps)
    w = np.zeros((k + 1, k + 1), dtype=np.complex128)
    w[:k, :k] = excess_one_contraction(eps, vec, tol=tol)
    w[:k, k] = s * np.exp(1j * theta) * vec
    w[k, :k] = s * np.exp(1j * theta_tilde) * vec.conj()
    w[k, k] = -eps * np.exp(1j * (theta + theta_tilde))
    return w


def excess_one_dual(f: Frame, params: ExcessOneParams, *,
                    tol: Tolerance = DEFAULT_TOL) -> Frame:
    """Closed-form dual of an excess-one Parseval frame.

    psi_j = e_j + (sqrt(1-eps^2)/eps) e^(i theta) u etilde_j with the scalar
    complement etilde from the dilation. eps = 1 returns the frame itself
    (the canonical dual). The phase is absorbed into ``u`` first, so equal
    parameters modulo that redundancy give identical outputs.
    """
    pf = as_parseval(f, tol=tol)
    if pf.excess() != 1:
        raise ExcessNotOneError(f"excess is {pf.excess()}, need exactly 1")
    eps = _check_epsilon(params.epsilon)
    vec = _check_unit_vector(params.u, tol=tol)
    if vec.size != pf.dim:
        raise DimensionMismatchError(
            f"direction lives in C^{vec.size}, frame in C^{pf.dim}")
    dil = dilate(pf, tol=tol)
    u_eff = np.exp(1j * params.theta) * vec
    coeff = np.sqrt(1.0 - eps * eps) / eps
    syn = pf.synthesis + np.outer(coeff * u_eff, dil.complement[:, 0])
    return Frame.from_synthesis(syn, tol=tol)


def near_riesz_dual(f: Frame, q, w=None, *, tol: Tolerance = DEFAULT_TOL) -> Frame:
    """Dual built over the structured dilation of a Parseval frame.

    Same (q, w) selection as :func:`dual_of_parseval` but routed through the
    near-Riesz tails. Passing q equal to the negated subfamily logarithm
    (q = -q0 of the dilation) with the default extension dispatches to the
    simplest alternate dual: exact zero vectors off the spanning subset and
    the biorthogonal family on it.
    """
    pf = as_parseval(f, tol=tol)
    nr = near_riesz_dilate(pf, tol=tol)
    qarr = np.asarray(q, dtype=np.complex128)
    if w is None and qarr.shape == nr.q0.shape and np.array_equal(qarr, -nr.q0):
        syn = np.zeros((pf.dim, pf.count), dtype=np.complex128)
        j0 = list(nr.j0)
        syn[:, j0] = matrix_exp(-nr.q0, tol=tol) @ pf.synthesis[:, j0]
        return Frame.from_synthesis(syn, tol=tol)
    m = pf.excess()
    admit_q(qarr, m, tol=tol)
    du = (default_dilation_unitary(qarr, m, tol=tol) if w is None
          else _coerce_unitary(w, qarr, m, tol=tol))
    grow = matrix_exp(0.5 * qarr, tol=tol)
    syn = pf.synthesis + (grow @ du.w12) @ nr.onb[pf.dim:, :]
    return Frame.from_synthesis(syn, tol=tol)


def _general_dual_impl(f: Frame, q, w, tol: Tolerance):
    """Shared core of the general-frame constructors.

    Works in the weighted inner product where the parameter is Hermitian:
    the conjugated operator qt = S^(-1/2) q S^(1/2) must be Hermitian
    nonnegative, and the dual is S^(-1/2) e_j + R W12 etilde_j over the
    dilation of the canonical Parseval part, with R = S^(-1/2) exp(qt/2).
    Returns (dual, R).
    """
    qarr = np.asarray(q, dtype=np.complex128)
    n = f.dim
    if qarr.shape != (n, n):
        raise DimensionMismatchError(f"expected a {n}x{n} parameter, got {qarr.shape}")
    if w is None and not np.any(qarr):
        # exp(0) is exactly the identity, so the family collapses to the
        # canonical dual; return it bitwise.
        return f.canonical_dual(), matrix_inv_sqrt(f.frame_operator(), tol=tol)
    cf = f.canonical_factorization()
    s = f.frame_operator()
    s_isqrt = matrix_inv_sqrt(s, tol=tol)
    s_sqrt = matrix_sqrt(s, tol=tol)
    qt = s_isqrt @ qarr @ s_sqrt
    asym = float(np.linalg.norm(qt - qt.conj().T))
    if asym > tol.residual_tol * max(1.0, float(np.linalg.norm(qt))):
        raise InadmissibleParamsError(
            "nonnegativity fails: parameter is not self-adjoint in the weighted inner product")
    qt = (qt + qt.conj().T) / 2.0
    m = f.excess()
    admit_q(qt, m, tol=tol)
    pf = cf.parseval_part
    dil = dilate(pf, tol=tol)
    du = (default_dilation_unitary(qt, m, tol=tol) if w is None
          else _coerce_unitary(w, qt, m, tol=tol))
    r_op = s_isqrt @ matrix_exp(0.5 * qt, tol=tol)
    syn = s_isqrt @ pf.synthesis + (r_op @ du.w12) @ dil.complement.T
    return Frame.from_synthesis(syn, tol=tol), r_op


def general_dual(f: Frame, q, w=None, *, tol: Tolerance = DEFAULT_TOL) -> Frame:
    """Dual of an arbitrary frame selected by (q, w).

    ``q`` need not be Hermitian; it must be self-adjoint and nonnegative in
    the inner product weighted by the inverse frame operator, with the usual
    rank bound. q = 0 returns the canonical dual bitwise. A supplied ``w``
    must extend the conjugated contraction.
    """
    return _general_dual_impl(f, q, w, tol)[0]


def general_dual_selfadjoint(f: Frame, q, *, tol: Tolerance = DEFAULT_TOL) -> Frame:
    """General dual for Hermitian ``q`` commuting with the frame-operator log.

    Identical output to :func:`general_dual` with the default extension; the
    commuting case keeps the positive factor of the dual equal to
    exp((q - q_frame)/2) with trivial unitary part.
    """
    qarr = np.asarray(q, dtype=np.complex128)
    herm_eig(qarr, tol=tol)
    qphi = f.canonical_factorization().q
    comm = qarr @ qphi - qphi @ qarr
    bound = tol.residual_tol * max(
        1.0, float(np.linalg.norm(qarr)) * float(np.linalg.norm(qphi)))
    if float(np.linalg.norm(comm)) > bound:
        raise NonCommutingError(
            "parameter does not commute with the frame-operator logarithm")
    return general_dual(f, qarr, tol=tol)


def polar_form(f: Frame, q, w=None, *, tol: Tolerance = DEFAULT_TOL):
    """Positive-operator / Parseval splitting of a general dual.

    Returns ``(q_psi, pf)`` with exp(q_psi/2) the positive polar factor of
    the dual's synthesis route and ``pf`` the dual's canonical Parseval
    part; exp(q_psi/2) applied to ``pf`` reproduces the dual.
    """
    dual, r_op = _general_dual_impl(f, q, w, tol)
    gram = r_op @ r_op.conj().T
    q_psi = matrix_log((gram + gram.conj().T) / 2.0, tol=tol)
    return q_psi, dual.canonical_factorization().parseval_part


def tight_dual(f: Frame, bound, *, tol: Tolerance = DEFAULT_TOL) -> Frame:
    """Construct the tight dual with frame bounds (bound, bound).

    The parameter is q_frame + ln(bound) I; raises
    :class:`InadmissibleParamsError` naming the violated condition when no
    such dual exists.
    """
    a = float(bound)
    if a <= 0.0:
        raise ValueError("tight bound must be positive")
    qphi = f.canonical_factorization().q
    qarr = qphi + np.log(a) * np.eye(f.dim)
    _, _, idx = _q_spectral(qarr, tol=tol)
    if len(idx) > f.excess():
        raise InadmissibleParamsError(
            f"rank bound fails: rank(I - exp(-q)) = {len(idx)} exceeds excess {f.excess()}")
    return general_dual_selfadjoint(f, qarr, tol=tol)


def tight_dual_exists(f: Frame, bound, *, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when the tight dual at this bound exists and verifies.

    Checks both admissibility conditions, then actually constructs the dual
    and confirms tightness and duality within tolerance.
    """
    try:
        dual = tight_dual(f, bound, tol=tol)
    except InadmissibleParamsError:
        return False
    a = float(bound)
    lo, hi = dual.frame_bounds()
    scale = max(1.0, abs(a))
    if abs(lo - a) > tol.residual_tol * scale or abs(hi - a) > tol.residual_tol * scale:
        return False
    return verify_dual(f, dual, tol=tol)


def bessel_sequence_dual(f: Frame, h, *, tol: Tolerance = DEFAULT_TOL) -> Frame:
    """Classical perturbation dual from an arbitrary vector family.

    psi_j = S^(-1) phi_j + h_j - sum_i <S^(-1) phi_j, phi_i> h_i. Built from
    a plain linear solve, independent of the dilation machinery, so it
    serves as a cross-check oracle for the parametrized constructors.
    """
    harr = np.asarray(h, dtype=np.complex128)
    if harr.shape != (f.count, f.dim):
        raise DimensionMismatchError(
            f"expected {f.count} vectors of length {f.dim}, got shape {harr.shape}")
    syn = f.synthesis
    canon = np.linalg.solve(f.frame_operator(), syn)
    cross = syn.conj().T @ canon
    psi = canon + harr.T @ (np.eye(f.count) - cross)
    return Frame.from_synthesis(psi, tol=tol)


def recover_excess_one_params(f: Frame, g: Frame, *,
                              tol: Tolerance = DEFAULT_TOL) -> ExcessOneParams:
    """Invert the excess-one family: parameters reproducing a given dual.

    The difference from the source must be carried by the scalar complement;
    its direction fixes ``u`` (phase normalised into it, theta = 0) and its
    length fixes ``epsilon``. A vanishing difference returns the canonical
    parameters (epsilon = 1).
    """
    pf = as_parseval(f, tol=tol)
    if pf.excess() != 1:
        raise ExcessNotOneError(f"excess is {pf.excess()}, need exactly 1")
    if not verify_dual(pf, g, tol=tol):
        raise NotDualError("candidate does not reconstruct the frame within tolerance")
    dil = dilate(pf, tol=tol)
    scal = dil.complement[:, 0]
    diff = g.synthesis - pf.synthesis
    direction = diff @ np.conj(scal)
    fit = diff - np.outer(direction, scal)
    if float(np.linalg.norm(fit)) > tol.residual_tol * max(1.0, float(np.linalg.norm(diff))):
        raise NotRankOneDifferenceError("difference is not carried by the complement")
    t = float(np.linalg.norm(direction))
    if t <= tol.rank_tol:
        u = np.zeros(pf.dim, dtype=np.complex128)
        u[0] = 1.0
        return ExcessOneParams(epsilon=1.0, u=u)
    return ExcessOneParams(epsilon=float(1.0 / np.sqrt(1.0 + t * t)), u=direction / t)


def is_admissible_parseval(f: Frame, g: Frame, *, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when the Parseval frame ``g`` arises from ``f`` by an admissible
    extension: equal excess and strongly positive compression g_syn f_syn*."""
    pf = as_parseval(f, tol=tol)
    pg = as_parseval(g, tol=tol)
    if pf.dim != pg.dim or pf.count != pg.count:
        raise DimensionMismatchError(
            f"{pf.dim}x{pf.count} vs {pg.dim}x{pg.count}")
    if pf.excess() != pg.excess():
        return False
    t = pg.synthesis @ pf.synthesis.conj().T
    if float(np.linalg.norm(t - t.conj().T)) > tol.residual_tol * max(
            1.0, float(np.linalg.norm(t))):
        return False
    lam = herm_eig((t + t.conj().T) / 2.0, tol=tol).eigenvalues
    return bool(lam[0] > tol.rank_tol)
