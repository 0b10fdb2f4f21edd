"""Reference frames and reproducible random generators.

Golden fixtures used across the test suite: the Mercedes frame, the qubit
SIC-POVM with its Bloch-sphere image, finite redundant blocks on C^K, and a
seeded complex-Gaussian frame generator (numpy PCG64 via default_rng, so the
same seed always yields the same frame).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import NotUnitVectorError
from .frames import Frame, ParsevalFrame
from .linalg import DEFAULT_TOL, Tolerance, matrix_inv_sqrt, rank_of


def mercedes() -> ParsevalFrame:
    """Three equiangular vectors in C^2 forming a Parseval frame of excess 1."""
    s = np.sqrt(2.0 / 3.0)
    vecs = s * np.array([
        [1.0, 0.0],
        [-0.5, np.sqrt(3.0) / 2.0],
        [-0.5, -np.sqrt(3.0) / 2.0],
    ])
    return ParsevalFrame(vecs)


class SicPovm(NamedTuple):
    qubit: Frame
    bloch: Frame


def sic_povm_qubit() -> SicPovm:
    """Qubit SIC-POVM: four unit vectors in C^2 plus their Bloch images in R^3.

    The C^2 family has constant pairwise overlap |<e_i,e_j>|^2 = 1/3; the
    Bloch family is a 4/3-tight frame of excess 1 (a regular tetrahedron).
    """
    a = 1.0 / np.sqrt(3.0)
    b = np.sqrt(2.0 / 3.0)
    w = np.exp(2j * np.pi / 3.0)
    qubit = Frame(np.array([
        [1.0, 0.0],
        [a, b],
        [a, b * w],
        [a, b * np.conj(w)],
    ], dtype=np.complex128))
    r2, r6 = np.sqrt(2.0), np.sqrt(6.0)
    bloch = Frame(np.array([
        [0.0, 0.0, 1.0],
        [2.0 * r2 / 3.0, 0.0, -1.0 / 3.0],
        [-r2 / 3.0, r6 / 3.0, -1.0 / 3.0],
        [-r2 / 3.0, -r6 / 3.0, -1.0 / 3.0],
    ]))
    return SicPovm(qubit=qubit, bloch=bloch)


def bloch_map(e, *, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Bloch coordinates (x, y, z) of a unit vector in C^2.

    Solves the Pauli expansion of the rank-one projector onto ``e``:
    x = 2 Re(e1 conj(e2)), y = 2 Im(e2 conj(e1)), z = |e1|^2 - |e2|^2.
    """
    vec = np.asarray(e, dtype=np.complex128)
    if vec.shape != (2,):
        raise NotUnitVectorError(f"expected a vector in C^2, got shape {vec.shape}")
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > tol.residual_tol:
        raise NotUnitVectorError(f"vector has norm {norm!r}, expected 1")
    x = 2.0 * float(np.real(vec[0] * np.conj(vec[1])))
    y = 2.0 * float(np.imag(vec[1] * np.conj(vec[0])))
    z = float(abs(vec[0]) ** 2 - abs(vec[1]) ** 2)
    return np.array([x, y, z])


def casazza_christensen_block(k: int) -> ParsevalFrame:
    """Finite redundant block: K+1 vectors in C^K, Parseval, excess 1.

    The first K vectors are the standard basis recentred by the mean, the
    last is the normalised all-ones direction. K = 1 yields a zero vector,
    which is a legitimate frame member.
    """
    if k < 1:
        raise ValueError("block size must be at least 1")
    vecs = np.full((k + 1, k), -1.0 / k)
    vecs[np.arange(k), np.arange(k)] += 1.0
    vecs[k, :] = 1.0 / np.sqrt(k)
    return ParsevalFrame(vecs)


def casazza_christensen_union(max_block: int) -> ParsevalFrame:
    """Block-diagonal union of the blocks K = 1..max_block (still Parseval)."""
    if max_block < 1:
        raise ValueError("need at least one block")
    blocks = [casazza_christensen_block(k) for k in range(1, max_block + 1)]
    dim = sum(b.dim for b in blocks)
    count = sum(b.count for b in blocks)
    vecs = np.zeros((count, dim), dtype=np.complex128)
    row = col = 0
    for b in blocks:
        vecs[row:row + b.count, col:col + b.dim] = b.vectors
        row += b.count
        col += b.dim
    return ParsevalFrame(vecs)


def random_frame(dim: int, count: int, seed: int, *, parseval: bool = False,
                 tol: Tolerance = DEFAULT_TOL) -> Frame:
    """Seeded complex-Gaussian frame; optionally normalised to Parseval.

    Entries are (N(0,1) + i N(0,1))/sqrt(2) from numpy's default_rng (PCG64).
    Rank-deficient draws are discarded and redrawn, so the result is always
    a frame; with ``parseval`` the synthesis matrix is whitened by the
    inverse square root of the frame operator.
    """
    if count < dim:
        raise ValueError(f"{count} vectors cannot span C^{dim}")
    rng = np.random.default_rng(seed)
    while True:
        vecs = (rng.standard_normal((count, dim))
                + 1j * rng.standard_normal((count, dim))) / np.sqrt(2.0)
        if rank_of(vecs.T, tol=tol) == dim:
            break
    frame = Frame(vecs, tol=tol)
    if not parseval:
        return frame
    syn = matrix_inv_sqrt(frame.frame_operator(), tol=tol) @ frame.synthesis
    return ParsevalFrame.from_synthesis(syn, tol=tol)
