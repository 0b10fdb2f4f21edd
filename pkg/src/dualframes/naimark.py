"""Dilation of Parseval frames to orthonormal bases.

A Parseval frame on C^n with m members extends to an orthonormal basis of
C^m by appending to each vector a complementary tail in C^(m-n). The plain
construction completes the analysis isometry; the structured variant splits
the index set into a spanning (Riesz) part and the remainder, producing a
basis adapted to that split.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .frames import Frame, ParsevalFrame, as_parseval
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    _pivot_pick,
    herm_eig,
    matrix_exp,
    matrix_log,
    orthonormal_complement,
    psd_range_basis,
)


@dataclass(frozen=True, eq=False)
class Dilation:
    """Orthonormal extension of a Parseval frame.

    ``complement`` holds the appended tails, one per row, so row j is the
    C^(m-n) part of basis vector j; ``onb`` is the m-by-m unitary whose j-th
    column stacks the source vector over its tail.
    """

    source: ParsevalFrame
    complement: np.ndarray
    onb: np.ndarray


def dilate(f: Frame, *, tol: Tolerance = DEFAULT_TOL) -> Dilation:
    """Complete a Parseval frame to an orthonormal basis of C^count.

    The analysis isometry (conjugate transpose of the synthesis matrix) is
    extended to a unitary by deterministic pivoted completion, so equal
    inputs give bitwise-equal dilations.
    """
    pf = as_parseval(f, tol=tol)
    syn = pf.synthesis
    theta = syn.conj().T
    c = orthonormal_complement(theta, tol=tol)
    complement = np.conj(c)
    onb = np.vstack([syn, complement.T])
    complement.flags.writeable = False
    onb.flags.writeable = False
    return Dilation(source=pf, complement=complement, onb=onb)


def riesz_subset(f: Frame, *, tol: Tolerance = DEFAULT_TOL) -> list[int]:
    """Indices of a spanning linearly-independent subfamily, size dim.

    Greedy pivoted elimination on the synthesis columns: each step takes the
    column with the largest residual norm, near-ties resolving to the lowest
    index. Deterministic; the frame invariant guarantees completion.
    """
    resid = np.array(f.synthesis)
    chosen: list[int] = []
    for _ in range(f.dim):
        pick = _pivot_pick(np.linalg.norm(resid, axis=0))
        v = resid[:, pick] / np.linalg.norm(resid[:, pick])
        resid = resid - np.outer(v, v.conj() @ resid)
        chosen.append(int(pick))
    return sorted(chosen)


@dataclass(frozen=True, eq=False)
class NearRieszDilation:
    """Structured dilation over the split C^n + M1 + M2.

    ``j0`` indexes a spanning subfamily, ``j1`` the rest. ``q0`` is the
    (negative semidefinite) logarithm of the frame operator of the ``j0``
    part; M1 is the range of I - exp(q0), spanned by the columns of
    ``m1_basis``; ``complement2`` holds the M2 tails of the ``j1`` columns,
    one per row. ``onb`` is the assembled unitary with rows blocked as
    [C^n | M1 | M2] and columns in original index order.
    """

    source: ParsevalFrame
    j0: tuple[int, ...]
    j1: tuple[int, ...]
    q0: np.ndarray
    m1_basis: np.ndarray
    m2_dim: int
    complement2: np.ndarray
    onb: np.ndarray


def near_riesz_dilate(f: Frame, *, tol: Tolerance = DEFAULT_TOL) -> NearRieszDilation:
    """Dilation adapted to a spanning subfamily.

    Columns indexed by ``j0`` get tails ``(exp(-q0) - I)^(1/2) e_j`` inside
    M1 and zero in M2 (exact zeros); columns indexed by ``j1`` get
    ``-(exp(-q0) - I)^(-1/2) e_j`` in M1, the inverse taken spectrally on M1
    only, plus an M2 tail obtained by dilating the Parseval family those
    partial columns form in their span.
    """
    pf = as_parseval(f, tol=tol)
    n, m = pf.dim, pf.count
    j0 = tuple(riesz_subset(pf, tol=tol))
    j1 = tuple(j for j in range(m) if j not in set(j0))
    syn = pf.synthesis
    e0 = syn[:, list(j0)]
    s0 = e0 @ e0.conj().T
    s0 = (s0 + s0.conj().T) / 2.0
    q0 = matrix_log(s0, tol=tol)
    eig = herm_eig(s0, tol=tol)
    lam = eig.eigenvalues
    v = eig.eigenvectors

    # One spectral split drives everything: defect = eigenvalues of I - exp(q0),
    # already descending since lam ascends, with an absolute cutoff (the
    # defect spectrum lives in [0, 1)).
    defect = 1.0 - lam
    idx = np.where(defect > tol.rank_tol)[0]
    m1_basis = v[:, idx]
    d1 = len(idx)

    g_vals = np.sqrt(np.maximum(defect, 0.0) / lam)
    g = (v * g_vals) @ v.conj().T
    h_vals = np.zeros_like(lam)
    h_vals[idx] = 1.0 / g_vals[idx]
    h = (v * h_vals) @ v.conj().T

    e1 = syn[:, list(j1)]
    tails0 = m1_basis.conj().T @ (g @ e0)
    tails1 = -(m1_basis.conj().T @ (h @ e1))

    if j1:
        p_cols = np.vstack([e1, tails1])
        if d1 == 0:
            # All partial columns are zero; the second complement is a full ONB.
            complement2 = np.eye(len(j1), dtype=np.complex128)
        else:
            sp = p_cols @ p_cols.conj().T
            basis_l1, _ = psd_range_basis(sp, tol=tol)
            p_coords = basis_l1.conj().T @ p_cols
            sub = dilate(ParsevalFrame.from_synthesis(p_coords, tol=tol), tol=tol)
            complement2 = sub.complement
    else:
        complement2 = np.zeros((0, 0), dtype=np.complex128)
    m2 = complement2.shape[1]

    onb = np.zeros((n + d1 + m2, m), dtype=np.complex128)
    onb[:n, list(j0)] = e0
    onb[n:n + d1, list(j0)] = tails0
    if j1:
        onb[:n, list(j1)] = e1
        onb[n:n + d1, list(j1)] = tails1
        onb[n + d1:, list(j1)] = complement2.T
    for arr in (q0, m1_basis, complement2, onb):
        arr.flags.writeable = False
    return NearRieszDilation(source=pf, j0=j0, j1=j1, q0=q0, m1_basis=m1_basis,
                             m2_dim=m2, complement2=complement2, onb=onb)


def check_appendix_lemmas(d: NearRieszDilation, *, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Structural checks on a near-Riesz dilation.

    Verifies that (a) the frame operator of the non-spanning subfamily
    equals I - exp(q0), so its range is M1, (b) the partial columns over
    C^n + M1 form a Parseval frame of their span (their frame operator is a
    projection), and (c) the spanning-part basis columns are orthonormal
    and orthogonal to every partial column.
    """
    pf = d.source
    n = pf.dim
    d1 = d.m1_basis.shape[1]
    syn = pf.synthesis
    e1 = syn[:, list(d.j1)]
    s1 = e1 @ e1.conj().T
    dmat = np.eye(n) - matrix_exp(d.q0, tol=tol)
    if float(np.linalg.norm(s1 - dmat)) > tol.residual_tol * max(1.0, float(np.linalg.norm(dmat))):
        return False
    if d.m2_dim != len(d.j1) - d1:
        return False
    u0 = d.onb[:, list(d.j0)]
    if float(np.linalg.norm(u0.conj().T @ u0 - np.eye(n))) > tol.residual_tol:
        return False
    if d.j1:
        p = d.onb[:n + d1, list(d.j1)]
        sp = p @ p.conj().T
        if float(np.linalg.norm(sp @ sp - sp)) > tol.residual_tol:
            return False
        cross = p.conj().T @ u0[:n + d1, :]
        if float(np.linalg.norm(cross)) > tol.residual_tol:
            return False
    return True
