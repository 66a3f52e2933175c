import math

import numpy as np
import pytest
import scipy.linalg

from curvedq.torus import (
    TorusProblem,
    assemble,
    jacobi_eigh,
    magic_alpha,
    overlap_analytic,
    solve_spectrum,
    table_states,
    torus_operator,
    weak_form_matrices,
)


def test_problem_validation():
    with pytest.raises(ValueError):
        TorusProblem(2.0, 0, "laplacian")
    with pytest.raises(ValueError):
        TorusProblem(0.5, 0, "dirac")
    with pytest.raises(ValueError):
        TorusProblem(0.5, 0, "laplacian", n_max=24, n_quad=32)
    assert TorusProblem(0.5, -3, "laplacian").nu == 3


def test_weight_function():
    _, u = torus_operator(0.25, 0, "laplacian")
    assert u(0.0) == 1.25
    assert u(math.pi) == 0.75


def test_magic_radius_kills_laplacian_potential():
    w, _ = torus_operator(0.5, 1, "laplacian")
    theta = np.linspace(0.0, 2.0 * math.pi, 40)
    assert np.max(np.abs(w(theta))) == 0.0


def test_hermitian_magic_radius_leaves_constant_quarter():
    alpha = 1.0 / math.sqrt(5.0)
    w, _ = torus_operator(alpha, 1, "hermitian")
    theta = np.linspace(0.0, 2.0 * math.pi, 40)
    assert np.max(np.abs(w(theta) - 0.25)) <= 1e-15


def test_small_alpha_hermitian_potential_vanishes():
    w, _ = torus_operator(1e-9, 0, "hermitian")
    theta = np.linspace(0.0, 2.0 * math.pi, 20)
    assert np.max(np.abs(w(theta))) <= 1e-8


def test_overlap_entries_alpha_one_third():
    s = overlap_analytic(1.0 / 3.0, "even", 4)
    assert s[0, 0] == pytest.approx(2.0 * math.pi, rel=1e-15)
    assert s[0, 1] == pytest.approx(math.pi / 3.0, rel=1e-15)
    assert s[1, 1] == pytest.approx(math.pi, rel=1e-15)
    assert s[1, 2] == pytest.approx(math.pi / 6.0, rel=1e-15)
    assert s[0, 2] == 0.0


def test_quadrature_overlap_matches_analytic():
    for alpha in (1.0 / 3.0, 0.5, 2.0 / 3.0):
        problem = TorusProblem(alpha, 0, "laplacian")
        for parity in ("even", "odd"):
            _, s = assemble(problem, parity)
            ref = overlap_analytic(alpha, parity, problem.n_max)
            assert np.max(np.abs(s - ref)) <= 1e-13 * 2.0 * math.pi


def test_vanishing_potential_zeroes_constant_row():
    problem = TorusProblem(0.5, 1, "laplacian")
    h, _ = assemble(problem, "even")
    assert np.max(np.abs(h[0, :])) == 0.0
    assert np.max(np.abs(h[:, 0])) == 0.0


def test_jacobi_against_scipy_oracle():
    rng = np.random.default_rng(12)
    for n in (3, 8, 17, 25):
        m = rng.normal(size=(n, n))
        a = 0.5 * (m + m.T)
        vals, vecs = jacobi_eigh(a)
        ref_vals, _ = np.linalg.eigh(a)
        assert np.max(np.abs(vals - ref_vals)) <= 1e-11 * max(1.0, np.max(np.abs(ref_vals)))
        recon = vecs @ np.diag(vals) @ vecs.T
        assert np.max(np.abs(recon - a)) <= 1e-11
        assert np.max(np.abs(vecs.T @ vecs - np.eye(n))) <= 1e-12


def test_jacobi_reaches_offdiagonal_target():
    rng = np.random.default_rng(13)
    m = rng.normal(size=(29, 29)) * 100.0
    a = 0.5 * (m + m.T)
    vals, vecs = jacobi_eigh(a, tol=1e-12)
    d = vecs.T @ a @ vecs
    off = math.sqrt(float(np.sum(np.triu(d, 1) ** 2) * 2.0))
    assert off <= 1e-9  # reconstruction roundoff dominates; diagonalization itself hit 1e-12


def test_lowest_state_alpha_one_third_laplacian():
    result = solve_spectrum(TorusProblem(1.0 / 3.0, 0, "laplacian"))
    ground = result.entries[0]
    assert ground.beta == pytest.approx(-0.2834, abs=5e-3)
    assert ground.parity == "even"
    assert ground.coeffs[0] == pytest.approx(0.4082, abs=0.01)
    assert ground.coeffs[1] == pytest.approx(-0.0776, abs=0.01)


def test_magic_state_is_exactly_constant():
    result = solve_spectrum(TorusProblem(0.5, 1, "laplacian"))
    ground = result.entries[0]
    assert abs(ground.beta) <= 1e-12
    unit = ground.coeffs / np.linalg.norm(ground.coeffs)
    ref = np.zeros_like(unit)
    ref[0] = 1.0
    assert np.max(np.abs(unit - ref)) <= 1e-10
    assert ground.coeffs[0] == pytest.approx(1.0 / math.sqrt(2.0 * math.pi), rel=1e-12)


def test_hermitian_zero_mode_matches_inverse_sqrt_weight():
    for alpha in (0.2, 1.0 / 3.0, 0.5):
        problem = TorusProblem(alpha, 0, "hermitian")
        result = solve_spectrum(problem)
        ground = result.entries[0]
        assert abs(ground.beta) <= 1e-9
        # independent quadrature oracle for the normalized expansion of u^(-1/2)
        theta = np.arange(4096) * 2.0 * math.pi / 4096
        u = 1.0 + alpha * np.cos(theta)
        psi = u**-0.5
        psi /= math.sqrt(float(np.sum(psi * psi * u)) * 2.0 * math.pi / 4096)
        ref = [float(np.sum(psi)) / 4096]
        ref += [float(np.sum(psi * np.cos(n * theta))) * 2.0 / 4096 for n in range(1, problem.n_max + 1)]
        ref = np.array(ref)
        assert np.max(np.abs(ground.coeffs - ref)) <= 1e-6


def test_hermitian_nu0_spectrum_is_free_ring_for_any_alpha():
    # psi = u^(-1/2) v maps the problem onto -v'' = beta v, so beta = n^2 exactly
    for alpha in (0.3, 2.0 / 3.0):
        result = solve_spectrum(TorusProblem(alpha, 0, "hermitian"))
        betas = [e.beta for e in result.entries[:5]]
        assert betas == pytest.approx([0.0, 1.0, 1.0, 4.0, 4.0], abs=1e-9)


def test_second_excited_hermitian_state_alpha_two_thirds():
    # odd member of the beta = 1 pair: psi proportional to u^(-1/2) sin(theta)
    result = solve_spectrum(TorusProblem(2.0 / 3.0, 0, "hermitian"))
    odd = [e for e in result.entries if e.parity == "odd"][0]
    assert odd.beta == pytest.approx(1.0, abs=1e-9)
    theta = np.arange(4096) * 2.0 * math.pi / 4096
    u = 1.0 + (2.0 / 3.0) * np.cos(theta)
    psi = np.sin(theta) * u**-0.5
    psi /= math.sqrt(float(np.sum(psi * psi * u)) * 2.0 * math.pi / 4096)
    ref = np.array([float(np.sum(psi * np.sin(n * theta))) * 2.0 / 4096 for n in range(1, 25)])
    assert np.max(np.abs(odd.coeffs - ref)) <= 1e-8
    assert odd.coeffs[0] == pytest.approx(0.5888, abs=0.01)
    # the sin(2 theta) coefficient is negative relative to the leading one
    assert -0.13 < odd.coeffs[1] < -0.09


def test_normalization_and_ordering_invariants():
    problem = TorusProblem(0.4, 1, "hermitian")
    result = solve_spectrum(problem)
    betas = [e.beta for e in result.entries]
    assert betas == sorted(betas)
    for entry in result.entries:
        s = overlap_analytic(problem.alpha, entry.parity, problem.n_max)
        norm = float(entry.coeffs @ s @ entry.coeffs)
        assert norm == pytest.approx(1.0, abs=1e-10)
        top = entry.coeffs[np.argmax(np.abs(entry.coeffs))]
        assert top > 0.0


def test_magic_alpha_values():
    for nu in range(1, 6):
        assert magic_alpha(nu, "laplacian") == 1.0 / (2.0 * nu)
        assert magic_alpha(nu, "hermitian") == 1.0 / math.sqrt(1.0 + 4.0 * nu * nu)
    assert magic_alpha(1, "laplacian") == 0.5
    assert magic_alpha(1, "hermitian") == pytest.approx(0.44721, abs=1e-5)
    assert magic_alpha(2, "laplacian") == 0.25
    with pytest.raises(ValueError):
        magic_alpha(0, "laplacian")


def test_parity_blocks_match_full_basis_solve():
    # independent route: one combined cos+sin basis, solved by scipy's
    # generalized eigensolver
    alpha, nu, form, n_max, n_quad = 0.45, 1, "laplacian", 16, 96
    w, u = torus_operator(alpha, nu, form)
    theta = np.arange(n_quad) * 2.0 * math.pi / n_quad
    wq = 2.0 * math.pi / n_quad
    rows = [np.ones_like(theta)] + [np.cos(m * theta) for m in range(1, n_max + 1)]
    rows += [np.sin(m * theta) for m in range(1, n_max + 1)]
    drows = [np.zeros_like(theta)] + [-m * np.sin(m * theta) for m in range(1, n_max + 1)]
    drows += [m * np.cos(m * theta) for m in range(1, n_max + 1)]
    phi = np.vstack(rows)
    dphi = np.vstack(drows)
    uu = u(theta)
    ww = w(theta)
    h = (dphi * (uu * wq)) @ dphi.T + (phi * (ww * uu * wq)) @ phi.T
    s = (phi * (uu * wq)) @ phi.T
    full = np.sort(scipy.linalg.eigh(0.5 * (h + h.T), 0.5 * (s + s.T), eigvals_only=True))
    merged = [e.beta for e in solve_spectrum(TorusProblem(alpha, nu, form, n_max, n_quad)).entries]
    assert np.max(np.abs(np.array(merged) - full)) <= 1e-10 * max(1.0, abs(full[-1]))


def test_flat_limit_spectra():
    herm = solve_spectrum(TorusProblem(1e-4, 0, "hermitian"))
    assert [e.beta for e in herm.entries[:5]] == pytest.approx([0, 1, 1, 4, 4], abs=1e-3)
    lap = solve_spectrum(TorusProblem(1e-4, 0, "laplacian"))
    assert [e.beta for e in lap.entries[:5]] == pytest.approx(
        [-0.25, 0.75, 0.75, 3.75, 3.75], abs=1e-3
    )


def test_convergence_in_basis_size():
    for alpha, nu, form in ((1.0 / 3.0, 0, "laplacian"), (2.0 / 3.0, 2, "hermitian")):
        coarse = solve_spectrum(TorusProblem(alpha, nu, form, 16, 128))
        fine = solve_spectrum(TorusProblem(alpha, nu, form, 20, 128))
        for i in range(3):
            assert abs(coarse.entries[i].beta - fine.entries[i].beta) <= 1e-8


TABLE_BETAS = {
    (1.0 / 3.0, "laplacian"): [(-0.2834, 0), (-0.1528, 1), (0.1968, 2)],
    (1.0 / 3.0, "hermitian"): [(0.0, 0), (0.1267, 1), (0.4735, 2)],
    (0.5, "laplacian"): [(-0.3511, 0), (0.0, 1), (0.6288, 2)],
    (0.5, "hermitian"): [(0.0, 0), (0.3192, 1), (0.9212, 2)],
    (2.0 / 3.0, "laplacian"): [(-0.5947, 0), (0.2024, 1), (0.4377, 0)],
    (2.0 / 3.0, "hermitian"): [(0.0, 0), (0.5397, 1), (1.0, 0)],
}


def test_table_states_reproduce_reference_spectra():
    for (alpha, form), rows in TABLE_BETAS.items():
        states = table_states(alpha, form)
        assert len(states) == 3
        for state, (beta_ref, nu_ref) in zip(states, rows):
            assert state.beta == pytest.approx(beta_ref, abs=5e-3)
            assert state.nu == nu_ref


def test_degenerate_pair_listed_odd_first():
    states = table_states(2.0 / 3.0, "hermitian")
    assert states[2].parity == "odd"
    assert states[2].basis == "sin"


def test_weak_form_matrices_symmetry():
    w, u = torus_operator(0.37, 2, "hermitian")
    h, s = weak_form_matrices(w, u, "odd", 12, 64)
    assert np.array_equal(h, h.T)
    assert np.array_equal(s, s.T)
