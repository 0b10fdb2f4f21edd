import numpy as np
import pytest

from dualframes import (
    Frame,
    NotParsevalError,
    ParsevalFrame,
    check_appendix_lemmas,
    dilate,
    herm_eig,
    is_unitary,
    matrix_exp,
    mercedes,
    near_riesz_dilate,
    random_frame,
    riesz_subset,
)
from helpers import rand_unitary


def test_dilate_structure():
    for seed in range(10):
        rng = np.random.default_rng(500 + seed)
        n = int(rng.integers(1, 6))
        m = int(rng.integers(n, n + 5))
        pf = random_frame(n, m, 600 + seed, parseval=True)
        dil = dilate(pf)
        assert dil.onb.shape == (m, m)
        assert is_unitary(dil.onb)
        # truncation recovers the source bitwise
        assert np.array_equal(dil.onb[:n, :], pf.synthesis)
        assert dil.complement.shape == (m, pf.excess())
        # appended components form a Parseval family for the auxiliary space
        tails = dil.complement.T
        gram = tails @ tails.conj().T
        assert np.linalg.norm(gram - np.eye(pf.excess())) <= 1e-10


def test_dilate_deterministic():
    pf = random_frame(3, 7, 77, parseval=True)
    d1 = dilate(pf)
    d2 = dilate(ParsevalFrame(pf.vectors.copy()))
    assert np.array_equal(d1.onb, d2.onb)
    assert np.array_equal(d1.complement, d2.complement)


def test_dilate_complement_gram_is_canonical():
    # any valid complement differs by a unitary on the auxiliary space,
    # so the member Gram matrix is construction independent
    rng = np.random.default_rng(78)
    pf = random_frame(3, 7, 79, parseval=True)
    dil = dilate(pf)
    c = dil.complement
    alt = c @ rand_unitary(rng, c.shape[1]).T
    onb_alt = np.vstack([pf.synthesis, alt.T])
    assert is_unitary(onb_alt)
    assert np.linalg.norm(c @ c.conj().T - alt @ alt.conj().T) <= 1e-12


def test_dilate_rejects_non_parseval():
    with pytest.raises(NotParsevalError):
        dilate(random_frame(2, 4, 80))


def test_dilate_onb_input():
    pf = ParsevalFrame(np.eye(3))
    dil = dilate(pf)
    assert dil.complement.shape == (3, 0)
    assert np.array_equal(dil.onb, pf.synthesis)


def test_riesz_subset_goldens():
    assert riesz_subset(mercedes()) == [0, 1]
    diag = Frame(np.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))
    assert riesz_subset(diag) == [0, 2]
    # zero vector is skipped
    degenerate = Frame(np.array([[0.0], [1.0]]))
    assert riesz_subset(degenerate) == [1]


def test_riesz_subset_spans():
    for seed in range(15):
        fr = random_frame(3 + seed % 3, 8, 700 + seed)
        idx = riesz_subset(fr)
        assert len(idx) == fr.dim
        assert sorted(idx) == idx
        sub = fr.synthesis[:, idx]
        assert np.linalg.matrix_rank(sub) == fr.dim


def test_near_riesz_mercedes_goldens():
    nr = near_riesz_dilate(mercedes())
    assert nr.j0 == (0, 1)
    assert nr.j1 == (2,)
    assert nr.m2_dim == 0
    lam = np.sort(np.exp(herm_eig(nr.q0).eigenvalues))
    assert np.allclose(lam, [1.0 / 3.0, 1.0], atol=1e-10)
    e3 = mercedes().vectors[2]
    target = np.outer(e3, e3.conj())
    gap = np.eye(2) - matrix_exp(nr.q0)
    assert np.max(np.abs(gap - target)) <= 1e-10


def test_near_riesz_structure():
    for seed in range(12):
        rng = np.random.default_rng(800 + seed)
        n = int(rng.integers(2, 6))
        m = n + int(rng.integers(0, 4))
        pf = random_frame(n, m, 900 + seed, parseval=True)
        nr = near_riesz_dilate(pf)
        assert nr.onb.shape == (m, m)
        assert is_unitary(nr.onb)
        assert np.array_equal(nr.onb[:n, :], pf.synthesis)
        assert sorted(nr.j0 + nr.j1) == list(range(m))
        d1 = nr.m1_basis.shape[1]
        assert d1 + nr.m2_dim == pf.excess()
        # members over the spanning subset have no second-level component
        if nr.m2_dim:
            block = nr.onb[n + d1:, list(nr.j0)]
            assert not np.any(block)
        assert check_appendix_lemmas(nr)


def test_near_riesz_onb_input():
    nr = near_riesz_dilate(ParsevalFrame(np.eye(4)))
    assert nr.j1 == ()
    assert nr.m1_basis.shape[1] == 0
    assert nr.m2_dim == 0
    assert np.array_equal(nr.onb, np.eye(4).astype(complex))
