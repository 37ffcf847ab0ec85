# -*- coding: utf-8 -*-
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from grassmanniana import (GrassPoint, Representation, Window, act_gr, adjoint_basis, check_gr0k,
                           degree_dimensions, embed, fiber_dim, hs_form_pullback,
                           is_rotation_fixed, loop_act_gr, loop_form, loop_form_coefficients,
                           multiply_z, projector_distance, random_grass_point, rep_degree,
                           rewindow, rotation_weight, rotation_weight_phase_fit, tau_hat,
                           weight_energy_table)
from lacos import act, coweight_loop, dtau, identity_loop, multiply, sample_loop, sample_tangent, tau, trim
from nucleo_lie import (Coweight, DimensionError, DomainError, WindowError, coweights_in_ball,
                        derive_seed, random_unitary)

seeds = st.integers(min_value=0, max_value=2 ** 32)
ADJ = Representation.ADJOINT
FUND = Representation.FUNDAMENTAL


def small_loop(seed, n=2):
    return trim(sample_loop(seed, n, 2, 1))


def loop_window(gamma, rep):
    return Window.symmetric(rep_degree(gamma, rep), fiber_dim(rep, gamma.n))


def test_adjoint_basis_is_orthonormal():
    basis = adjoint_basis(3)
    assert basis.shape == (8, 3, 3)
    gram = np.einsum('aij,bij->ab', basis.conj(), basis)
    np.testing.assert_allclose(gram, np.eye(8), atol=1e-14)
    np.testing.assert_allclose(np.einsum('aii->a', basis), 0, atol=1e-14)


def test_window_validation():
    with pytest.raises(WindowError):
        Window(0, 2, 2)
    w = Window.symmetric(2, 3)
    assert (w.lo, w.hi, w.size) == (-2, 2, 12)
    assert list(w.row_degrees()[:4]) == [-2, -2, -2, -1]


def test_identity_embedding_is_positive_half():
    window = Window.symmetric(2, 2)
    W = embed(identity_loop(2), FUND, window)
    assert W.dim == 4
    expected = np.diag((window.row_degrees() >= 0).astype(float))
    np.testing.assert_allclose(W.projector(), expected, atol=1e-12)
    assert degree_dimensions(W) == {-2: 0, -1: 0, 0: 2, 1: 2}


def test_embed_requires_large_window():
    gamma = coweight_loop(Coweight((2, -2)))
    with pytest.raises(WindowError):
        embed(gamma, FUND, Window.symmetric(1, 2))
    with pytest.raises(DimensionError):
        embed(gamma, FUND, Window.symmetric(2, 3))


def test_identity_passes_gr0k():
    W = embed(identity_loop(2), ADJ, Window.symmetric(1, 3))
    report = check_gr0k(W)
    assert report.passed
    assert report.max_residual() <= 1e-12


@given(seeds)
def test_embedded_loops_pass_gr0k(seed):
    gamma = small_loop(seed)
    W = embed(gamma, ADJ, loop_window(gamma, ADJ))
    report = check_gr0k(W)
    assert report.passed, report
    assert report.max_residual() <= 1e-8


def test_gr0k_on_asymmetric_window():
    gamma = coweight_loop(Coweight((1, -1)))
    report = check_gr0k(embed(gamma, ADJ, Window(-3, 2, 3)))
    assert report.passed, report
    symmetric = check_gr0k(embed(gamma, ADJ, Window.symmetric(3, 3)))
    assert report.perp_residual == pytest.approx(symmetric.perp_residual, abs=1e-12)


@given(seeds)
def test_sampled_loops_pass_gr0k_on_wider_lower_window(seed):
    gamma = small_loop(seed)
    window = loop_window(gamma, ADJ)
    W = embed(gamma, ADJ, Window(window.lo - 1, window.hi, window.d))
    assert check_gr0k(W).max_residual() <= 1e-8


@given(seeds)
def test_random_subspaces_fail_gr0k(seed):
    window = Window.symmetric(2, 3)
    W = random_grass_point(seed, window, 6, ADJ, 2)
    report = check_gr0k(W)
    assert not report.passed
    assert report.max_residual() > 1e-3


def test_adjoint_conditions_need_adjoint_rep():
    W = embed(identity_loop(2), FUND, Window.symmetric(1, 2))
    assert check_gr0k(W, conditions=('containment',)).passed
    with pytest.raises(DomainError):
        check_gr0k(W)


@given(seeds, st.sampled_from(list(Representation)))
def test_action_equivariance(seed, rep):
    gamma = small_loop(seed)
    window = loop_window(gamma, rep)
    k = random_unitary(derive_seed(seed, 1), 2)
    s = float(np.random.default_rng(seed).uniform(0, 2 * np.pi))
    lhs = act_gr(s, k, embed(gamma, rep, window))
    rhs = embed(act(s, k, gamma), rep, window)
    assert projector_distance(lhs, rhs) <= 1e-8


@given(seeds, st.sampled_from(list(Representation)))
def test_tau_hat_equivariance(seed, rep):
    gamma = small_loop(seed)
    window = loop_window(gamma, rep)
    W = embed(gamma, rep, window)
    assert projector_distance(tau_hat(W), embed(tau(gamma), rep, window)) <= 1e-8
    np.testing.assert_array_equal(tau_hat(tau_hat(W)).basis, W.basis)


def test_trivial_actions_on_identity():
    window = Window.symmetric(2, 3)
    W = embed(identity_loop(2), ADJ, window)
    assert projector_distance(act_gr(1.1, np.eye(2), W), W) <= 1e-12
    assert projector_distance(tau_hat(W), W) <= 1e-12
    lam_w = embed(coweight_loop(Coweight((1, -1))), ADJ, window)
    assert projector_distance(act_gr(0.9, np.eye(2), lam_w), lam_w) <= 1e-10


def test_act_gr_rejects_non_unitary():
    W = embed(identity_loop(2), FUND, Window.symmetric(1, 2))
    with pytest.raises(DomainError):
        act_gr(0.0, 2.0 * np.eye(2), W)


@given(seeds)
def test_loop_action_composition(seed):
    g1, g2 = small_loop((seed, 0)), small_loop((seed, 1))
    product = multiply(g2, g1)
    window = loop_window(product, FUND)
    lhs = loop_act_gr(g2, embed(g1, FUND, window))
    assert projector_distance(lhs, embed(product, FUND, window)) <= 1e-8


def test_embed_injective_on_sample():
    loops = [sample_loop((17, i), 2, 2, 1) for i in range(25)]
    window = Window.symmetric(2, 2)
    points = [embed(g, FUND, window) for g in loops]
    for i in range(len(loops)):
        for j in range(i + 1, len(loops)):
            same = np.allclose(loops[i].padded(2), loops[j].padded(2), atol=1e-9)
            if not same:
                assert projector_distance(points[i], points[j]) > 1e-6


@given(seeds)
def test_z_commutes_with_tau_hat(seed):
    gamma = small_loop(seed)
    W = embed(gamma, ADJ, loop_window(gamma, ADJ))
    assert projector_distance(tau_hat(multiply_z(W)), multiply_z(tau_hat(W))) <= 1e-12


def test_rewindow_only_enlarges():
    W = embed(identity_loop(2), FUND, Window.symmetric(1, 2))
    wider = rewindow(W, -2, 3)
    assert wider.dim == W.dim + 2 * 2
    with pytest.raises(WindowError):
        rewindow(W, 0, 1)


def test_loop_form_reference_value(e12_pair):
    X, Y = e12_pair
    assert loop_form(X, Y) == pytest.approx(-2.0, abs=1e-12)
    assert loop_form_coefficients(X, Y) == pytest.approx(-2.0, abs=1e-12)
    assert loop_form(X, X) == pytest.approx(0.0, abs=1e-14)
    assert loop_form(Y, X) == pytest.approx(2.0, abs=1e-12)


def test_pullback_reference_value(e12_pair):
    X, Y = e12_pair
    window = Window.symmetric(1, 2)
    assert abs(hs_form_pullback(X, Y, window) - loop_form(X, Y)) <= 1e-12
    wider = Window.symmetric(4, 2)
    assert abs(hs_form_pullback(X, Y, wider) - hs_form_pullback(X, Y, window)) <= 1e-14
    with pytest.raises(WindowError):
        hs_form_pullback(sample_tangent(1, 2, 3), Y, window)


def test_symplectic_embedding_identity():
    for i in range(100):
        n = 2 + i % 2
        X = sample_tangent((i, 0), n, 1 + i % 3)
        Y = sample_tangent((i, 1), n, 1 + (i // 3) % 3)
        value = loop_form(X, Y)
        scale = max(1.0, abs(value))
        assert abs(value - loop_form_coefficients(X, Y)) <= 1e-10 * scale
        window = Window.symmetric(max(X.m, Y.m), n)
        assert abs(value - hs_form_pullback(X, Y, window)) <= 1e-10 * scale


@given(seeds)
def test_tau_is_anti_symplectic(seed):
    X, Y = sample_tangent((seed, 0), 3, 2), sample_tangent((seed, 1), 3, 3)
    value = loop_form(X, Y)
    assert abs(loop_form(dtau(X), dtau(Y)) + value) <= 1e-10 * max(1.0, abs(value))


def test_rotation_weight_examples():
    window = Window.symmetric(1, 2)
    reference = embed(identity_loop(2), FUND, window)
    assert rotation_weight(reference, reference) == 0
    W = embed(coweight_loop(Coweight((1, -1))), FUND, window)
    assert rotation_weight(W, reference) == -1
    assert rotation_weight_phase_fit(W, reference) == -1


@pytest.mark.parametrize("n, rep", [(2, FUND), (2, ADJ), (3, FUND)])
def test_rotation_weight_matches_phase_fit(n, rep):
    half = 3 if rep is FUND else 6
    window = Window.symmetric(half, fiber_dim(rep, n))
    reference = embed(identity_loop(n), rep, window)
    for lam in coweights_in_ball(n, 3):
        W = embed(coweight_loop(lam), rep, window)
        assert rotation_weight(W, reference) == rotation_weight_phase_fit(W, reference)


def test_z_shift_weight():
    window = Window.symmetric(2, 2)
    for lam in coweights_in_ball(2, 2):
        W = embed(coweight_loop(lam), FUND, window)
        shifted = rotation_weight(multiply_z(W), rewindow(W, window.lo, window.hi + 1))
        assert shifted == W.dim - window.d * window.hi
    eye = np.eye(window.size)
    W = GrassPoint(window, eye[:, [0, 3, 5]], FUND, 2)
    assert rotation_weight(multiply_z(W), rewindow(W, window.lo, window.hi + 1)) == 3 - 4


def test_rotation_weight_rejects_non_fixed():
    window = Window.symmetric(1, 2)
    W = random_grass_point(3, window, 2)
    assert not is_rotation_fixed(W)
    with pytest.raises(DomainError):
        rotation_weight(W, embed(identity_loop(2), FUND, window))


def test_weight_invariant_under_diagonal_k():
    window = Window.symmetric(2, 2)
    reference = embed(identity_loop(2), FUND, window)
    k = np.diag(np.exp([0.4j, -0.4j]))
    for lam in coweights_in_ball(2, 2):
        W = embed(coweight_loop(lam), FUND, window)
        assert rotation_weight(act_gr(0.0, k, W), act_gr(0.0, k, reference)) == rotation_weight(W, reference)


def test_weight_energy_table():
    rows = weight_energy_table(2, 1, FUND)
    assert [r['coweight'] for r in rows] == [[-1, 1], [0, 0], [1, -1]]
    assert [r['weight'] for r in rows] == [-1, 0, -1]
    assert [r['energy'] for r in rows] == [1.0, 0.0, 1.0]


def test_grass_point_dump():
    W = embed(identity_loop(2), FUND, Window.symmetric(1, 2))
    data = W.to_dict()
    assert data['window'] == {'lo': -1, 'hi': 1, 'd': 2}
    assert len(data['basis']) == 4 and len(data['basis'][0]) == 2
    assert len(data['basis'][0][0]) == 2
