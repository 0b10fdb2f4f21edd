"""Shared randomized constructions for the test modules."""

import numpy as np

from dualframes import herm_eig


def rand_complex(rng, *shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def rand_unit(rng, n):
    v = rand_complex(rng, n)
    return v / np.linalg.norm(v)


def rand_hermitian(rng, n):
    a = rand_complex(rng, n, n)
    return (a + a.conj().T) / 2.0


def rand_unitary(rng, n):
    q, r = np.linalg.qr(rand_complex(rng, n, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rand_psd_lowrank(rng, n, rank, lo=0.2, hi=1.5):
    """Hermitian nonnegative matrix with exactly ``rank`` positive eigenvalues."""
    vals = np.zeros(n)
    if rank:
        vals[:rank] = rng.uniform(lo, hi, size=rank)
    u = rand_unitary(rng, n)
    m = (u * vals) @ u.conj().T
    return (m + m.conj().T) / 2.0


def rand_commuting_admissible(rng, frame):
    """Nonnegative parameter sharing the frame-operator eigenbasis, with
    defect rank at most the excess."""
    eig = herm_eig(frame.frame_operator())
    n = frame.dim
    r = int(rng.integers(0, min(n, frame.excess()) + 1))
    vals = np.zeros(n)
    if r:
        pos = rng.choice(n, size=r, replace=False)
        vals[pos] = rng.uniform(0.2, 1.5, size=r)
    v = eig.eigenvectors
    q = (v * vals) @ v.conj().T
    return (q + q.conj().T) / 2.0
