"""Acceptance criteria: exact golden values plus randomized properties at
fixed tolerances. Each test prints a single pass/fail line."""

import numpy as np

from dualframes import (
    ExcessOneParams,
    ParsevalFrame,
    Tolerance,
    bessel_sequence_dual,
    bloch_map,
    casazza_christensen_block,
    check_appendix_lemmas,
    default_dilation_unitary,
    dilate,
    dual_residual,
    excess_one_dual,
    excess_one_unitary,
    general_dual,
    herm_eig,
    is_unitary,
    matrix_exp,
    mercedes,
    near_riesz_dilate,
    near_riesz_dual,
    polar_form,
    random_frame,
    recover_excess_one_params,
    sic_povm_qubit,
    tight_dual,
    tight_dual_exists,
    verify_dual,
)
from helpers import rand_psd_lowrank, rand_commuting_admissible, rand_unit


def _check(failures, cond, msg):
    if not cond:
        failures.append(msg)


def _report(num, label, failures):
    tag = "PASS" if not failures else "FAIL"
    detail = "" if not failures else " -- " + "; ".join(failures)
    print(f"[{tag}] acceptance {num:02d}: {label}{detail}")
    assert not failures, f"acceptance {num:02d} {label}{detail}"


def test_acceptance_01_mercedes_goldens():
    failures = []
    mc = mercedes()
    _check(failures, np.linalg.norm(mc.frame_operator() - np.eye(2)) <= 1e-10,
           "frame operator is not the identity")
    _check(failures, abs(mc.frame_potential() - 2.0) <= 1e-10, "potential != 2")
    _check(failures, mc.excess() == 1, "excess != 1")
    c = dilate(mc).complement[:, 0]
    phase = c[0] / abs(c[0])
    target = phase * np.full(3, 1.0 / np.sqrt(3.0))
    _check(failures, np.linalg.norm(c - target) <= 1e-10,
           "complement is not 1/sqrt(3) up to a global phase")
    _report(1, "mercedes golden suite", failures)


def test_acceptance_02_excess_one_family_grid():
    failures = []
    mc = mercedes()
    angles = (0.0, np.pi / 3.0, 3.0 * np.pi / 4.0)
    for eps in (0.25, 0.5, 0.75, 1.0):
        fp_want = 1.0 + 1.0 / eps ** 4
        hi_want = 1.0 / eps ** 2
        for alpha in angles:
            for beta in angles:
                u = np.array([np.cos(alpha), np.sin(alpha) * np.exp(1j * beta)])
                for theta in angles:
                    g = excess_one_dual(
                        mc, ExcessOneParams(epsilon=eps, u=u, theta=theta))
                    tag = f"eps={eps} a={alpha:.2f} b={beta:.2f} t={theta:.2f}"
                    _check(failures, dual_residual(mc, g) <= 1e-9,
                           f"residual too large at {tag}")
                    _check(failures,
                           abs(g.frame_potential() - fp_want) <= 1e-8 * fp_want,
                           f"potential off at {tag}")
                    lo, hi = g.frame_bounds()
                    _check(failures, abs(lo - 1.0) <= 1e-8
                           and abs(hi - hi_want) <= 1e-8 * hi_want,
                           f"bounds off at {tag}")
    _report(2, "excess-one dual family grid", failures)


def test_acceptance_03_oracle_recovery():
    failures = []
    mc = mercedes()
    rng = np.random.default_rng(2026)
    for k in range(50):
        w = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        h = np.tile(w / np.sqrt(3.0), (3, 1))
        g = bessel_sequence_dual(mc, h)
        rec = recover_excess_one_params(mc, g)
        again = excess_one_dual(mc, rec)
        _check(failures,
               np.linalg.norm(again.synthesis - g.synthesis) <= 1e-9,
               f"trial {k} not reproduced")
    _report(3, "oracle duals recovered by the excess-one family", failures)


def test_acceptance_04_potential_identity():
    failures = []
    rng = np.random.default_rng(404)
    for k in range(100):
        n = int(rng.integers(1, 7))
        m = int(rng.integers(n, 11))
        fr = random_frame(n, m, 40000 + k)
        lam = herm_eig(fr.frame_operator()).eigenvalues
        spectral = float(np.sum(lam ** 2))
        _check(failures,
               abs(fr.frame_potential() - spectral) <= 1e-8 * spectral,
               f"trial {k} (n={n}, m={m}) mismatch")
    _report(4, "potential double sum equals spectral sum", failures)


def test_acceptance_05_dilation():
    failures = []
    rng = np.random.default_rng(505)
    for k in range(50):
        n = int(rng.integers(1, 6))
        m = int(rng.integers(n, n + 5))
        pf = random_frame(n, m, 50000 + k, parseval=True)
        dil = dilate(pf)
        gram = dil.onb.conj().T @ dil.onb
        _check(failures, np.linalg.norm(gram - np.eye(m)) <= 1e-10,
               f"trial {k} onb not unitary")
        _check(failures, dil.complement.shape[1] == pf.excess(),
               f"trial {k} auxiliary dimension != excess")
        _check(failures, np.array_equal(dil.onb[:n, :], pf.synthesis),
               f"trial {k} truncation not exact")
    _report(5, "orthonormal dilation of Parseval frames", failures)


def test_acceptance_06_near_riesz():
    failures = []
    nr = near_riesz_dilate(mercedes())
    lam = np.sort(np.exp(herm_eig(nr.q0).eigenvalues))
    _check(failures, abs(lam[0] - 1.0 / 3.0) <= 1e-10 and abs(lam[1] - 1.0) <= 1e-10,
           "subfamily spectrum is not {1/3, 1}")
    e3 = mercedes().vectors[2]
    gap = np.eye(2) - matrix_exp(nr.q0) - np.outer(e3, e3.conj())
    _check(failures, np.max(np.abs(gap)) <= 1e-10,
           "identity minus subfamily operator is not the third projector")
    _check(failures, nr.m2_dim == 0, "second level is not empty")
    rng = np.random.default_rng(606)
    for k in range(25):
        n = int(rng.integers(1, 6))
        m = n + int(rng.integers(0, 4))
        pf = random_frame(n, m, 60000 + k, parseval=True)
        _check(failures, check_appendix_lemmas(near_riesz_dilate(pf)),
               f"trial {k} structural checks failed")
    _report(6, "near-riesz dilation structure", failures)


def test_acceptance_07_unitary_extensions():
    failures = []
    strict = Tolerance(rank_tol=1e-10, residual_tol=1e-10)
    rng = np.random.default_rng(707)
    for k in range(100):
        n = int(rng.integers(1, 6))
        r = int(rng.integers(0, n + 1))
        aux = r + int(rng.integers(0, 3))
        q = rand_psd_lowrank(rng, n, r)
        du = default_dilation_unitary(q, aux)
        _check(failures, is_unitary(du.w, tol=strict),
               f"trial {k} default extension not unitary at 1e-10")
        d = np.eye(n) - matrix_exp(-q)
        _check(failures,
               np.linalg.norm(du.w21.conj().T @ du.w21 - d) <= 1e-9,
               f"trial {k} lower-block identity off")
        eps = float(rng.uniform(0.05, 1.0))
        u = rand_unit(rng, n)
        w = excess_one_unitary(eps, u, float(rng.uniform(0, 2 * np.pi)),
                               float(rng.uniform(0, 2 * np.pi)))
        _check(failures, is_unitary(w, tol=strict),
               f"trial {k} excess-one extension not unitary at 1e-10")
        q1 = np.log(1.0 / eps ** 2) * np.outer(u, u.conj())
        d1 = np.eye(n) - matrix_exp(-q1)
        row = w[n:, :n]
        _check(failures, np.linalg.norm(row.conj().T @ row - d1) <= 1e-9,
               f"trial {k} excess-one lower-block identity off")
    _report(7, "unitary extension block identities", failures)


def test_acceptance_08_general_duals():
    failures = []
    rng = np.random.default_rng(808)
    for k in range(25):
        n = int(rng.integers(2, 5))
        m = n + int(rng.integers(1, 4))
        fr = random_frame(n, m, 80000 + k)
        q = rand_commuting_admissible(rng, fr)
        g = general_dual(fr, q)
        _check(failures, dual_residual(fr, g) <= 1e-9,
               f"trial {k} dual residual too large")
        zero = general_dual(fr, np.zeros((n, n)))
        _check(failures,
               np.array_equal(zero.synthesis, fr.canonical_dual().synthesis),
               f"trial {k} zero parameter is not exactly canonical")
        qpsi, part = polar_form(fr, q)
        rebuilt = matrix_exp(0.5 * qpsi) @ part.synthesis
        _check(failures, np.linalg.norm(rebuilt - g.synthesis) <= 1e-9,
               f"trial {k} polar form does not reconstruct")
    _report(8, "general-frame duals", failures)


def test_acceptance_09_tight_duals():
    failures = []
    _check(failures, not tight_dual_exists(mercedes(), 2.0),
           "mercedes admits a 2-tight dual")
    pf = random_frame(2, 5, 909, parseval=True)
    _check(failures, tight_dual_exists(pf, 2.0), "2-tight dual missing")
    td = tight_dual(pf, 2.0)
    lo, hi = td.frame_bounds()
    _check(failures, abs(lo - 2.0) <= 2e-8 and abs(hi - 2.0) <= 2e-8,
           "2-tight dual bounds off")
    _check(failures, tight_dual_exists(pf, 1.0), "1-tight dual missing")
    q1 = pf.canonical_factorization().q + np.log(1.0) * np.eye(2)
    _check(failures, np.linalg.norm(q1) <= 1e-12,
           "1-tight parameter is not zero")
    td1 = tight_dual(pf, 1.0)
    _check(failures,
           np.linalg.norm(td1.synthesis - pf.canonical_dual().synthesis) <= 1e-12,
           "1-tight dual is not the canonical dual")
    _report(9, "tight duals", failures)


def test_acceptance_10_sic_povm():
    failures = []
    sic = sic_povm_qubit()
    v = sic.qubit.vectors
    for i in range(4):
        for j in range(i + 1, 4):
            ov = abs(np.sum(v[i] * np.conj(v[j]))) ** 2
            _check(failures, abs(ov - 1.0 / 3.0) <= 1e-12,
                   f"overlap ({i},{j}) != 1/3")
    lo, hi = sic.bloch.frame_bounds()
    _check(failures, abs(hi - lo) <= 1e-10 * (4.0 / 3.0)
           and abs(hi - 4.0 / 3.0) <= 1e-10 * (4.0 / 3.0),
           "direction frame is not 4/3-tight")
    for i in range(4):
        _check(failures,
               np.max(np.abs(bloch_map(v[i]) - sic.bloch.vectors[i])) <= 1e-12,
               f"direction map misses vector {i}")
    scale = np.sqrt(3.0) / 2.0
    pf = ParsevalFrame.from_synthesis(scale * sic.bloch.synthesis)
    u = np.array([1.0, 1.0, 1.0]) / np.sqrt(3.0)
    for eps in (0.3, 0.6, 1.0):
        for theta in (0.0, np.pi / 3.0, 3.0 * np.pi / 4.0):
            g = excess_one_dual(pf, ExcessOneParams(epsilon=eps, u=u, theta=theta))
            scaled = scale * g.synthesis
            resid = np.linalg.norm(sic.bloch.synthesis @ scaled.conj().T - np.eye(3))
            _check(failures, resid <= 1e-9,
                   f"scaled dual fails at eps={eps} theta={theta:.2f}")
    _report(10, "sic-povm fixtures and scaled duals", failures)


def test_acceptance_11_cc_blocks():
    failures = []
    rng = np.random.default_rng(1111)
    for k in range(1, 17):
        pf = casazza_christensen_block(k)
        _check(failures,
               np.linalg.norm(pf.frame_operator() - np.eye(k)) <= 1e-10,
               f"K={k} not Parseval")
        c = dilate(pf).complement[:, 0]
        target = np.zeros(k + 1)
        target[:k] = 1.0 / np.sqrt(k)
        pivot = c[int(np.argmax(np.abs(c)))]
        phase = pivot / abs(pivot)
        _check(failures, np.linalg.norm(c - phase * target) <= 1e-9,
               f"K={k} complement does not match 1/sqrt(K) pattern")
        for eps in (0.5, 1.0):
            u = rand_unit(rng, k)
            g = excess_one_dual(pf, ExcessOneParams(epsilon=eps, u=u))
            _check(failures, dual_residual(pf, g) <= 1e-9,
                   f"K={k} eps={eps} dual fails")
            _check(failures,
                   np.linalg.norm(g.vectors[k] - pf.vectors[k]) <= 1e-10,
                   f"K={k} eps={eps} final member changed")
    _report(11, "casazza-christensen blocks", failures)


def test_acceptance_12_simplest_alternate_dual():
    failures = []
    cases = [("mercedes", mercedes())]
    rng = np.random.default_rng(1212)
    for k in range(10):
        n = int(rng.integers(2, 7))
        cases.append((f"random {k}", random_frame(n, n + 1, 120000 + k,
                                                  parseval=True)))
    for label, pf in cases:
        nr = near_riesz_dilate(pf)
        g = near_riesz_dual(pf, -nr.q0)
        j0, j1 = list(nr.j0), list(nr.j1)
        _check(failures, not np.any(g.synthesis[:, j1]),
               f"{label}: dropped members are not exactly zero")
        cross = g.synthesis[:, j0].conj().T @ pf.synthesis[:, j0]
        _check(failures,
               np.linalg.norm(cross - np.eye(pf.dim)) <= 1e-9,
               f"{label}: biorthogonality fails")
        _check(failures, verify_dual(pf, g), f"{label}: not a dual")
    _report(12, "simplest alternate dual", failures)
