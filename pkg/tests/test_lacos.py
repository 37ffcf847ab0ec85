# -*- coding: utf-8 -*-
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lacos import (LoopPoly, TangentPoly, act, coefficients_equal, coweight_loop, dtau,
                   filtration_degree, identity_loop, inverse, is_tau_fixed, log_derivative,
                   multiply, read_loops_jsonl, sample_loop, sample_tangent, tau, trim,
                   write_loops_jsonl)
from nucleo_lie import Coweight, DimensionError, DomainError, derive_seed, random_unitary

seeds = st.integers(min_value=0, max_value=2 ** 32)


def _angle(seed):
    return float(np.random.default_rng(seed).uniform(0, 2 * np.pi))


def test_identity_and_coweight_loops():
    ident = identity_loop(3)
    assert ident.m == 0
    np.testing.assert_allclose(ident.eval(1.234), np.eye(3))

    lam = Coweight((1, -1))
    gamma = coweight_loop(lam)
    assert gamma.m == 1
    np.testing.assert_allclose(gamma.eval(0.5), np.diag([np.exp(0.5j), np.exp(-0.5j)]))
    assert is_tau_fixed(gamma)


def test_loop_validation():
    with pytest.raises(DomainError):
        LoopPoly(2.0 * np.eye(2)[None])
    coeffs = np.zeros((3, 2, 2), dtype=complex)
    coeffs[1] = np.eye(2)
    coeffs[2] = 0.5 * np.eye(2)
    coeffs[0] = -0.5 * np.eye(2)
    with pytest.raises(DomainError):
        LoopPoly(coeffs)
    with pytest.raises(DimensionError):
        LoopPoly(np.zeros((2, 2, 2)))


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionError):
        multiply(identity_loop(2), identity_loop(3))


@given(seeds)
def test_inverse_gives_identity(seed):
    gamma = sample_loop(seed, 2, 3, 2)
    product = multiply(gamma, inverse(gamma))
    np.testing.assert_allclose(product.coeffs, identity_loop(2).padded(product.m), atol=1e-9)


def test_log_derivative_of_homomorphism_is_constant():
    lam = Coweight((2, -1, -1))
    L = log_derivative(coweight_loop(lam))
    expected = np.zeros_like(L.coeffs)
    expected[L.m] = lam.algebra_element()
    np.testing.assert_allclose(L.coeffs, expected, atol=1e-12)


@given(seeds, st.integers(min_value=2, max_value=3))
def test_action_round_trip(seed, n):
    gamma = sample_loop(seed, n, 2, 1)
    k = random_unitary((seed, 9), n)
    s = _angle(seed)
    back = act(-s, k.conj().T, act(s, k, gamma))
    np.testing.assert_allclose(back.coeffs, gamma.coeffs, atol=1e-9)


@given(seeds)
def test_tau_intertwines_action(seed):
    gamma = sample_loop(seed, 3, 2, 1)
    k = random_unitary((seed, 9), 3)
    s = _angle(seed)
    lhs = tau(act(s, k, gamma))
    rhs = act(-s, k.conj(), tau(gamma))
    np.testing.assert_allclose(lhs.coeffs, rhs.coeffs, atol=1e-9)


@given(seeds)
def test_tau_is_a_group_automorphism(seed):
    a = sample_loop(seed, 3, 2, 2)
    b = sample_loop(derive_seed(seed, 1), 3, 2, 2)
    np.testing.assert_allclose(tau(multiply(a, b)).coeffs, multiply(tau(a), tau(b)).coeffs, atol=1e-10)
    np.testing.assert_array_equal(tau(tau(a)).coeffs, a.coeffs)


@given(seeds)
def test_action_group_law(seed):
    gamma = sample_loop(seed, 2, 3, 2)
    eye = np.eye(2)
    s1, s2 = _angle(seed), _angle(seed + 1)
    np.testing.assert_allclose(act(s1, eye, act(s2, eye, gamma)).coeffs,
                               act(s1 + s2, eye, gamma).coeffs, atol=1e-9)
    k1, k2 = random_unitary((seed, 1), 2), random_unitary((seed, 2), 2)
    np.testing.assert_allclose(act(0.0, k1, act(0.0, k2, gamma)).coeffs,
                               act(0.0, k1 @ k2, gamma).coeffs, atol=1e-9)


def test_act_rejects_bad_conjugator():
    gamma = coweight_loop(Coweight((1, -1)))
    with pytest.raises(DomainError):
        act(0.1, 2.0 * np.eye(2), gamma)
    with pytest.raises(DimensionError):
        act(0.1, np.eye(3), gamma)


def test_act_at_zero_is_conjugation():
    gamma = sample_loop(11, 2, 2, 2)
    k = random_unitary(3, 2)
    acted = act(0.0, k, gamma)
    theta = 0.7
    np.testing.assert_allclose(acted.eval(theta), k @ gamma.eval(theta) @ k.conj().T, atol=1e-12)


def test_sampler_is_deterministic_and_based():
    a = sample_loop((7, 0, 3), 3, 3, 2)
    b = sample_loop((7, 0, 3), 3, 3, 2)
    assert coefficients_equal(a, b)
    assert a.based_residual() <= 1e-10
    assert a.unitarity_residual() <= 1e-9


@given(seeds)
def test_real_locus_samples_are_tau_fixed(seed):
    gamma = sample_loop(seed, 3, 2, 2, real_locus=True)
    assert is_tau_fixed(gamma)
    assert coefficients_equal(tau(gamma), gamma)


def test_tangent_reality_constraint():
    X = sample_tangent(5, 3, 2)
    assert X.reality_residual() <= 1e-12
    assert dtau(X).reality_residual() <= 1e-12
    bad = np.array(X.coeffs)
    bad[0] = bad[0] + 1.0
    with pytest.raises(DomainError):
        TangentPoly(bad)


def test_filtration_and_trim():
    gamma = multiply(coweight_loop(Coweight((1, -1))), coweight_loop(Coweight((-1, 1))))
    assert gamma.m == 2
    assert filtration_degree(gamma) == 0
    trimmed = trim(gamma)
    assert trimmed.m == 0
    np.testing.assert_allclose(trimmed.coeffs[0], np.eye(2))
    assert filtration_degree(coweight_loop(Coweight((2, 0, -2)))) == 2


def test_jsonl_round_trip(tmp_path):
    loops = [sample_loop((3, i), 2, 2, 2) for i in range(4)]
    path = tmp_path / 'loops.jsonl'
    assert write_loops_jsonl(loops, path) == 4
    text = path.read_bytes()
    assert text.count(b'\n') == 4 and b'\r' not in text
    back = read_loops_jsonl(path)
    assert all(coefficients_equal(a, b) for a, b in zip(loops, back))
