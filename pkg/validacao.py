#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo de Validação
Suítes de invariantes com identificadores estáveis

Cada suíte devolve (passou, resíduo máximo, casos, detalhe), no estilo
(ok, mensagem) das restantes validações. A semente de cada suíte deriva da
semente principal e do identificador, pelo que as suítes são reprodutíveis
de forma independente.
"""

import itertools
import logging
import zlib
from dataclasses import asdict, dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from configuracao import ExperimentConfig
from geometria_convexa import (build_hull, contains, directed_distance, hausdorff, hull2d,
                               hull3d, lp_member)
from grassmanniana import (GrassPoint, Representation, Window, act_gr, check_gr0k, embed,
                           fiber_dim, hs_form_pullback, loop_act_gr, loop_form,
                           loop_form_coefficients, multiply_z, projector_distance,
                           random_grass_point, rep_degree, rewindow, rotation_weight,
                           rotation_weight_phase_fit, tau_hat)
from lacos import (LoopPoly, act, coefficients_equal, coweight_loop, dtau, identity_loop,
                   inverse, log_derivative, multiply, sample_loop, sample_tangent, tangent_from_pairs,
                   tau, trim)
from momento import coweight_delta, coweight_loop_moment, coweight_moment, delta, moment
from nucleo_lie import (Coweight, LabError, Seed, coweights_in_ball, derive_seed, dominance_leq,
                        dominant_coweights, dominant_project, inner, make_rng, random_coweight,
                        random_unitary, weyl_orbit)

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, float, int, str]


@dataclass
class SuiteResult:
    """Resultado de uma suíte de invariantes"""
    identifier: str
    description: str
    passed: bool
    max_residual: float
    cases: int
    detail: str = ''

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Suite:
    identifier: str
    description: str
    func: Callable[[ExperimentConfig, Seed], Outcome]

    @property
    def group(self) -> str:
        return self.identifier.split('.', 1)[0]


SUITES: Dict[str, Suite] = {}


def suite(identifier: str, description: str):
    """Regista uma suíte no catálogo"""
    def register(func):
        SUITES[identifier] = Suite(identifier, description, func)
        return func
    return register


def _outcome(residual: float, tol: float, cases: int, detail: str = '') -> Outcome:
    return residual <= tol, float(residual), cases, detail


def _random_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def _random_skew(rng: np.random.Generator, n: int) -> np.ndarray:
    a = _random_matrix(rng, n)
    x = a - a.conj().T
    return x - np.trace(x) / n * np.eye(n)


def _case_loop(seed: Seed, index: int, n: int, max_depth: int, max_norm: int,
               real_locus: bool = False) -> Tuple[int, LoopPoly]:
    depth = int(make_rng(derive_seed(seed, index, 0)).integers(1, max_depth + 1))
    return depth, sample_loop(derive_seed(seed, index, 1), n, depth, max_norm, real_locus)


def _case_unitary(seed: Seed, index: int, n: int) -> np.ndarray:
    return random_unitary(derive_seed(seed, index, 2), n)


def _case_angle(seed: Seed, index: int) -> float:
    return float(make_rng(derive_seed(seed, index, 3)).uniform(0.0, 2.0 * np.pi))


def _rel(diff: float, scale: float) -> float:
    return diff / max(1.0, scale)


# ---------------------------------------------------------------------------
# liecore
# ---------------------------------------------------------------------------

@suite('liecore.inner_conjugate_symmetry', 'inner(X,Y) = conj(inner(Y,X))')
def _inner_conjugate_symmetry(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(seed)
    worst = 0.0
    for _ in range(config.cases):
        x, y = _random_matrix(rng, config.n), _random_matrix(rng, config.n)
        worst = max(worst, abs(inner(x, y) - inner(y, x).conjugate()))
    return _outcome(worst, config.tol('algebra'), config.cases)


@suite('liecore.inner_ad_invariance', 'inner(kXk⁻¹, kYk⁻¹) = inner(X,Y)')
def _inner_ad_invariance(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(derive_seed(seed, 0))
    worst = 0.0
    for i in range(config.cases):
        k = _case_unitary(seed, i, config.n)
        x, y = _random_skew(rng, config.n), _random_skew(rng, config.n)
        kx, ky = k @ x @ k.conj().T, k @ y @ k.conj().T
        scale = float(np.linalg.norm(x) * np.linalg.norm(y))
        worst = max(worst, _rel(abs(inner(kx, ky) - inner(x, y)), scale))
    return _outcome(worst, config.tol('algebra'), config.cases)


@suite('liecore.dominant_roundtrip', 'dominant_project(u·i·diag(v)·u⁻¹) recupera v')
def _dominant_roundtrip(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(derive_seed(seed, 0))
    worst = 0.0
    for i in range(config.cases):
        v = np.sort(rng.standard_normal(config.n))[::-1]
        v = v - v.mean()
        u = _case_unitary(seed, i, config.n)
        p = u @ (1j * np.diag(v)) @ u.conj().T
        p = 0.5 * (p - p.conj().T)
        got, conjugator = dominant_project(p)
        rebuilt = conjugator @ (1j * np.diag(got.v)) @ conjugator.conj().T
        worst = max(worst, float(np.max(np.abs(got.v - v))), float(np.linalg.norm(rebuilt - p)))
    return _outcome(worst, config.tol('equivariance'), config.cases)


@suite('liecore.dominance_partial_order', 'ordem de dominância: reflexiva, antissimétrica, transitiva')
def _dominance_partial_order(config: ExperimentConfig, seed: Seed) -> Outcome:
    lattice = dominant_coweights(3, 3)
    leq = {(a, b): dominance_leq(a, b) for a in lattice for b in lattice}
    violations = sum(1 for a in lattice if not leq[a, a])
    violations += sum(1 for a, b in itertools.product(lattice, repeat=2)
                      if a != b and leq[a, b] and leq[b, a])
    violations += sum(1 for a, b, c in itertools.product(lattice, repeat=3)
                      if leq[a, b] and leq[b, c] and not leq[a, c])
    return _outcome(violations, 0, len(lattice), f"{len(lattice)} copesos dominantes de SU(3)")


@suite('liecore.weyl_unique_dominant', 'cada órbita de Weyl tem exatamente um elemento dominante')
def _weyl_unique_dominant(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(seed)
    failures = 0
    for i in range(config.cases):
        v = rng.standard_normal(config.n)
        if i % 2:
            v = np.round(v)  # valores repetidos
        dominant = [w for w in weyl_orbit(v) if all(a >= b for a, b in zip(w, w[1:]))]
        failures += len(dominant) != 1
    return _outcome(failures, 0, config.cases)


@suite('liecore.haar_samplers', 'amostras de SU(n) e SO(n) unitárias com determinante 1')
def _haar_samplers(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    eye = np.eye(config.n)
    for i in range(config.cases):
        for real_form in (False, True):
            k = random_unitary(derive_seed(seed, i, int(real_form)), config.n, real_form)
            worst = max(worst, float(np.linalg.norm(k.conj().T @ k - eye)),
                        abs(np.linalg.det(k) - 1.0))
            if real_form:
                worst = max(worst, float(np.max(np.abs(k.imag))))
    return _outcome(worst, config.tol('unitarity'), config.cases)


@suite('liecore.haar_mean', 'média de 10³ amostras de Haar de SU(3): |entradas| <= 0.05')
def _haar_mean(config: ExperimentConfig, seed: Seed) -> Outcome:
    count = 1000
    mean = sum(random_unitary(derive_seed(seed, i), 3) for i in range(count)) / count
    return _outcome(float(np.max(np.abs(mean))), 0.05, count)


# ---------------------------------------------------------------------------
# loops
# ---------------------------------------------------------------------------

@suite('loops.group_closure', 'produto, inverso e ação preservam laços baseados e unitários')
def _group_closure(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        _, g1 = _case_loop(seed, 2 * i, config.n, config.depth, config.max_coweight_norm)
        _, g2 = _case_loop(seed, 2 * i + 1, config.n, config.depth, config.max_coweight_norm)
        k = _case_unitary(seed, i, config.n)
        results = [multiply(g1, g2), inverse(g1), act(_case_angle(seed, i), k, g1)]
        for gamma in results:
            worst = max(worst, gamma.based_residual(), gamma.unitarity_residual())
        unit = multiply(g1, inverse(g1))
        worst = max(worst, float(np.max(np.abs(unit.coeffs - identity_loop(config.n).padded(unit.m)))))
    return _outcome(worst, config.tol('unitarity'), config.cases)


@suite('loops.action_inverse', 'act(−s, k⁻¹, act(s, k, γ)) = γ')
def _action_inverse(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        _, gamma = _case_loop(seed, i, config.n, config.depth, config.max_coweight_norm)
        k = _case_unitary(seed, i, config.n)
        s = _case_angle(seed, i)
        back = act(-s, k.conj().T, act(s, k, gamma))
        worst = max(worst, float(np.max(np.abs(back.coeffs - gamma.coeffs))))
    return _outcome(worst, config.tol('unitarity'), config.cases)


@suite('loops.tau_automorphism', 'τ(γ₁γ₂) = τ(γ₁)τ(γ₂) e τ involutiva')
def _tau_automorphism(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        _, g1 = _case_loop(seed, 2 * i, config.n, config.depth, config.max_coweight_norm)
        _, g2 = _case_loop(seed, 2 * i + 1, config.n, config.depth, config.max_coweight_norm)
        lhs = tau(multiply(g1, g2))
        rhs = multiply(tau(g1), tau(g2))
        worst = max(worst, float(np.max(np.abs(lhs.coeffs - rhs.coeffs))),
                    float(np.max(np.abs(tau(tau(g1)).coeffs - g1.coeffs))))
    return _outcome(worst, config.tol('based'), config.cases)


@suite('loops.action_group_law', 'act(s₁,I,act(s₂,I,γ)) = act(s₁+s₂,I,γ) e act(0,k₁,act(0,k₂,γ)) = act(0,k₁k₂,γ)')
def _action_group_law(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    eye = np.eye(config.n)
    for i in range(config.cases):
        _, gamma = _case_loop(seed, i, config.n, config.depth, config.max_coweight_norm)
        s1, s2 = _case_angle(seed, 2 * i), _case_angle(seed, 2 * i + 1)
        k1, k2 = _case_unitary(seed, 2 * i, config.n), _case_unitary(seed, 2 * i + 1, config.n)
        rotations = act(s1, eye, act(s2, eye, gamma)).coeffs - act(s1 + s2, eye, gamma).coeffs
        conjugations = act(0.0, k1, act(0.0, k2, gamma)).coeffs - act(0.0, k1 @ k2, gamma).coeffs
        worst = max(worst, float(np.max(np.abs(rotations))), float(np.max(np.abs(conjugations))))
    return _outcome(worst, config.tol('unitarity'), config.cases)


@suite('loops.tau_action', 'τ(act(s,k,γ)) = act(−s, conj(k), τγ)')
def _tau_action(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        _, gamma = _case_loop(seed, i, config.n, config.depth, config.max_coweight_norm)
        k = _case_unitary(seed, i, config.n)
        s = _case_angle(seed, i)
        lhs = tau(act(s, k, gamma))
        rhs = act(-s, k.conj(), tau(gamma))
        worst = max(worst, float(np.max(np.abs(lhs.coeffs - rhs.coeffs))))
    return _outcome(worst, config.tol('unitarity'), config.cases)


@suite('loops.dtau_reality', 'dτ preserva A_{−k} = −A_k†')
def _dtau_reality(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        X = sample_tangent(derive_seed(seed, i), config.n, 1 + i % 3)
        worst = max(worst, dtau(X).reality_residual())
    return _outcome(worst, config.tol('based'), config.cases)


@suite('loops.coweight_log_derivative', 'γ⁻¹γ\' de um homomorfismo é a constante Λ')
def _coweight_log_derivative(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    lattice = coweights_in_ball(config.n, 2)
    for lam in lattice:
        L = log_derivative(coweight_loop(lam))
        expected = np.zeros_like(L.coeffs)
        expected[L.m] = lam.algebra_element()
        worst = max(worst, float(np.max(np.abs(L.coeffs - expected))))
    return _outcome(worst, config.tol('moment'), len(lattice))


@suite('loops.real_locus_sampler', 'amostras do lugar real são τ-fixas')
def _real_locus_sampler(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        _, gamma = _case_loop(seed, i, config.n, config.depth, config.max_coweight_norm, real_locus=True)
        worst = max(worst, float(np.max(np.abs(gamma.coeffs.imag), initial=0.0)),
                    float(np.max(np.abs(tau(gamma).coeffs - gamma.coeffs))))
    return _outcome(worst, config.tol('based'), config.cases)


# ---------------------------------------------------------------------------
# moment
# ---------------------------------------------------------------------------

@suite('moment.closed_form', 'μ(λ) = (½‖λ‖², Λ) nos copesos |entradas| <= 4 de SU(2) e SU(3)')
def _closed_form(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    cases = 0
    for n in (2, 3):
        for lam in coweights_in_ball(n, 4):
            got = coweight_loop_moment(lam)
            expected = coweight_moment(lam)
            diff = max(abs(got.energy - expected.energy), float(np.linalg.norm(got.p - expected.p)))
            worst = max(worst, _rel(diff, expected.energy))
            cases += 1
    return _outcome(worst, config.tol('closed_form'), cases)


@suite('moment.energy_bound', 'E >= ½‖p‖², igualdade nos homomorfismos, lacuna = ½Σ_{k≠0}‖L_k‖²')
def _energy_bound(config: ExperimentConfig, seed: Seed) -> Outcome:
    negative = equality = parseval = 0.0
    homomorphisms = 0
    for i in range(config.cases):
        depth, gamma = _case_loop(seed, i, config.n, config.depth, config.max_coweight_norm)
        value = moment(gamma)
        gap = value.energy_gap()
        negative = max(negative, -gap)
        if depth == 1:
            homomorphisms += 1
            equality = max(equality, gap)
        L = log_derivative(gamma)
        norms = np.sum(np.abs(L.coeffs) ** 2, axis=(1, 2))
        off_constant = 0.5 * float(norms.sum() - norms[L.m])
        parseval = max(parseval, _rel(abs(gap - off_constant), value.energy))
    passed = (negative <= config.tol('energy_bound') and equality <= 1e-6
              and parseval <= config.tol('moment'))
    detail = f"{homomorphisms} homomorfismos; igualdade {equality:.3e}; Parseval {parseval:.3e}"
    return passed, max(negative, equality, parseval), config.cases, detail


@suite('moment.rotation_covariance', 'μ(act(s,I,γ)): mesma energia, p conjugado por γ(s)')
def _rotation_covariance(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    eye = np.eye(config.n)
    for i in range(config.cases):
        _, gamma = _case_loop(seed, i, config.n, config.depth, config.max_coweight_norm)
        s = _case_angle(seed, i)
        before, after = moment(gamma), moment(act(s, eye, gamma))
        g = gamma.eval(s)
        worst = max(worst, _rel(abs(after.energy - before.energy), before.energy),
                    _rel(float(np.linalg.norm(after.p - g @ before.p @ g.conj().T)),
                         float(np.linalg.norm(before.p))))
    return _outcome(worst, config.tol('equivariance'), config.cases)


@suite('moment.k_equivariance', 'p(act(0,k,γ)) = k p k⁻¹')
def _k_equivariance(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        _, gamma = _case_loop(seed, i, config.n, config.depth, config.max_coweight_norm)
        k = _case_unitary(seed, i, config.n)
        before, after = moment(gamma), moment(act(0.0, k, gamma))
        worst = max(worst, _rel(float(np.linalg.norm(after.p - k @ before.p @ k.conj().T)),
                                float(np.linalg.norm(before.p))))
    return _outcome(worst, config.tol('equivariance'), config.cases)


@suite('moment.tau_compatibility', 'E(τγ) = E(γ), p(τγ) = pᵀ, Δ(τγ) = Δ(γ)')
def _tau_compatibility(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        _, gamma = _case_loop(seed, i, config.n, config.depth, config.max_coweight_norm)
        before, after = moment(gamma), moment(tau(gamma))
        d0, d1 = delta(gamma), delta(tau(gamma))
        worst = max(worst, _rel(abs(after.energy - before.energy), before.energy),
                    float(np.linalg.norm(after.p - before.p.T)),
                    float(np.max(np.abs(d0.v.v - d1.v.v))))
    return _outcome(worst, config.tol('equivariance'), config.cases)


@suite('moment.commuting_product', 'μ(λ₁·λ₂) = μ(λ₁+λ₂) para copesos diagonais')
def _commuting_product(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        lam1 = random_coweight(derive_seed(seed, i, 0), config.n, 2)
        lam2 = random_coweight(derive_seed(seed, i, 1), config.n, 2)
        got = moment(multiply(coweight_loop(lam1), coweight_loop(lam2)))
        expected = coweight_moment(lam1 + lam2)
        diff = max(abs(got.energy - expected.energy), float(np.linalg.norm(got.p - expected.p)))
        worst = max(worst, _rel(diff, expected.energy))
    return _outcome(worst, config.tol('closed_form'), config.cases)


@suite('moment.delta_invariance', 'Δ(act(s,k,γ)) = Δ(γ)')
def _delta_invariance(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        _, gamma = _case_loop(seed, i, config.n, config.depth, config.max_coweight_norm)
        before = delta(gamma)
        after = delta(act(_case_angle(seed, i), _case_unitary(seed, i, config.n), gamma))
        worst = max(worst, _rel(abs(after.energy - before.energy), before.energy),
                    float(np.max(np.abs(after.v.v - before.v.v))))
    return _outcome(worst, config.tol('equivariance'), config.cases)


@suite('moment.coweight_delta_examples', 'Δ(λ) = (½‖λ‖², λ dominante), incluindo λ antidominante')
def _coweight_delta_examples(config: ExperimentConfig, seed: Seed) -> Outcome:
    examples = [((-1, 1), 1.0, (1.0, -1.0)), ((1, -1), 1.0, (1.0, -1.0)),
                ((0, 0), 0.0, (0.0, 0.0)), ((-2, 1, 1), 3.0, (1.0, 1.0, -2.0))]
    worst = 0.0
    for entries, energy, v in examples:
        lam = Coweight(entries)
        for point in (coweight_delta(lam), delta(coweight_loop(lam))):
            worst = max(worst, abs(point.energy - energy), float(np.max(np.abs(point.v.v - v))))
    return _outcome(worst, config.tol('closed_form'), 2 * len(examples))


# ---------------------------------------------------------------------------
# grassmann
# ---------------------------------------------------------------------------

def _small_loop(seed: Seed, index: int, n: int = 2) -> LoopPoly:
    """Laço de SU(n) de profundidade <= 2 e copesos de norma <= 1, aparado"""
    _, gamma = _case_loop(seed, index, n, 2, 1)
    return trim(gamma)


def _loop_window(gamma: LoopPoly, rep: Representation) -> Window:
    return Window.symmetric(rep_degree(gamma, rep), fiber_dim(rep, gamma.n))


@suite('grassmann.gr0k_embeddings', 'φ(γ) satisfaz as condições de Gr₀^𝔨 (adjunta de SU(2))')
def _gr0k_embeddings(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        gamma = _small_loop(seed, i)
        W = embed(gamma, Representation.ADJOINT, _loop_window(gamma, Representation.ADJOINT))
        worst = max(worst, check_gr0k(W, tol=config.tol('grassmann')).max_residual())
        V = embed(gamma, Representation.FUNDAMENTAL, _loop_window(gamma, Representation.FUNDAMENTAL))
        worst = max(worst, check_gr0k(V, conditions=('containment',)).max_residual())
    return _outcome(worst, config.tol('grassmann'), config.cases)


@suite('grassmann.gr0k_rejects_random', 'subespaços aleatórios falham Gr₀^𝔨 (resíduo > 1e-3)')
def _gr0k_rejects_random(config: ExperimentConfig, seed: Seed) -> Outcome:
    window = Window.symmetric(2, fiber_dim(Representation.ADJOINT, 2))
    smallest = np.inf
    for i in range(config.cases):
        W = random_grass_point(derive_seed(seed, i), window, window.d * window.hi,
                               Representation.ADJOINT, 2)
        smallest = min(smallest, check_gr0k(W).max_residual())
    return smallest > 1e-3, float(smallest), config.cases, "menor resíduo de rejeição"


@suite('grassmann.equivariance', 'act_gr(s,k,φ(γ)) = φ(act(s,k,γ))')
def _grassmann_equivariance(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        gamma = _small_loop(seed, i)
        k = _case_unitary(seed, i, 2)
        s = _case_angle(seed, i)
        for rep in Representation:
            window = _loop_window(gamma, rep)
            lhs = act_gr(s, k, embed(gamma, rep, window))
            rhs = embed(act(s, k, gamma), rep, window)
            worst = max(worst, projector_distance(lhs, rhs))
    return _outcome(worst, config.tol('grassmann'), config.cases)


@suite('grassmann.tau_equivariance', 'τ̂∘φ = φ∘τ e τ̂ involutiva')
def _tau_equivariance(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        gamma = _small_loop(seed, i)
        for rep in Representation:
            window = _loop_window(gamma, rep)
            W = embed(gamma, rep, window)
            worst = max(worst, projector_distance(tau_hat(W), embed(tau(gamma), rep, window)),
                        float(np.max(np.abs(tau_hat(tau_hat(W)).basis - W.basis))))
    return _outcome(worst, config.tol('grassmann'), config.cases)


@suite('grassmann.z_tau_commute', 'z·τ̂W = τ̂(z·W)')
def _z_tau_commute(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        gamma = _small_loop(seed, i)
        W = embed(gamma, Representation.ADJOINT, _loop_window(gamma, Representation.ADJOINT))
        worst = max(worst, projector_distance(tau_hat(multiply_z(W)), multiply_z(tau_hat(W))))
    return _outcome(worst, 1e-12, config.cases)


@suite('grassmann.action_composition', 'ρ(γ₂)·φ(γ₁) = φ(γ₂γ₁)')
def _action_composition(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        g1, g2 = _small_loop(seed, 2 * i), _small_loop(seed, 2 * i + 1)
        product = multiply(g2, g1)
        for rep in Representation:
            window = _loop_window(product, rep)
            lhs = loop_act_gr(g2, embed(g1, rep, window))
            rhs = embed(product, rep, window)
            worst = max(worst, projector_distance(lhs, rhs))
    return _outcome(worst, config.tol('grassmann'), config.cases)


@suite('grassmann.embed_injective', 'φ injetiva numa amostra de laços')
def _embed_injective(config: ExperimentConfig, seed: Seed) -> Outcome:
    count = min(config.cases, 40)
    loops = [_case_loop(seed, i, 2, 2, 1)[1] for i in range(count)]
    window = Window.symmetric(2, 2)
    points = [embed(gamma, Representation.FUNDAMENTAL, window) for gamma in loops]
    collisions = 0
    closest = np.inf
    for a, b in itertools.combinations(range(count), 2):
        if coefficients_equal(loops[a], loops[b], tol=1e-9):
            continue
        distance = projector_distance(points[a], points[b])
        closest = min(closest, distance)
        collisions += distance <= 1e-6
    return collisions == 0, float(collisions), count, f"menor distância {closest:.3e}"


@suite('grassmann.orthonormality', 'bases ortonormadas após cada operação')
def _orthonormality(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        gamma = _small_loop(seed, i)
        other = _small_loop(seed, config.cases + i)
        window = _loop_window(multiply(other, gamma), Representation.FUNDAMENTAL)
        W = embed(gamma, Representation.FUNDAMENTAL, window)
        results = [W, act_gr(_case_angle(seed, i), _case_unitary(seed, i, 2), W), tau_hat(W),
                   multiply_z(W), loop_act_gr(other, W),
                   rewindow(W, window.lo - 1, window.hi + 1)]
        for V in results:
            worst = max(worst, float(np.linalg.norm(V.basis.conj().T @ V.basis - np.eye(V.dim))))
    return _outcome(worst, 1e-10, config.cases)


@suite('grassmann.symplectic_pullback', 'φ*ω_HS = ω_ΩK e quadratura = fórmula dos coeficientes')
def _symplectic_pullback(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        n = 2 + i % 2
        X = sample_tangent(derive_seed(seed, i, 0), n, 1 + i % 3)
        Y = sample_tangent(derive_seed(seed, i, 1), n, 1 + (i // 3) % 3)
        window = Window.symmetric(max(X.m, Y.m), n)
        value = loop_form(X, Y)
        worst = max(worst, _rel(abs(value - hs_form_pullback(X, Y, window)), abs(value)),
                    _rel(abs(value - loop_form_coefficients(X, Y)), abs(value)))
    e12 = np.zeros((2, 2), dtype=complex)
    e12[0, 1] = 1.0
    X = tangent_from_pairs(2, {1: e12})
    Y = tangent_from_pairs(2, {1: 1j * e12})
    reference = loop_form(X, Y)
    worst = max(worst, abs(reference + 2.0), abs(reference - hs_form_pullback(X, Y, Window.symmetric(1, 2))))
    return _outcome(worst, config.tol('symplectic'), config.cases + 1)


@suite('grassmann.symplectic_tau', 'ω(dτX, dτY) = −ω(X,Y)')
def _symplectic_tau(config: ExperimentConfig, seed: Seed) -> Outcome:
    worst = 0.0
    for i in range(config.cases):
        X = sample_tangent(derive_seed(seed, i, 0), config.n, 1 + i % 3)
        Y = sample_tangent(derive_seed(seed, i, 1), config.n, 2)
        value = loop_form(X, Y)
        worst = max(worst, _rel(abs(loop_form(dtau(X), dtau(Y)) + value), abs(value)))
    return _outcome(worst, config.tol('symplectic'), config.cases)


ROTATION_CASES = ((2, Representation.FUNDAMENTAL), (2, Representation.ADJOINT),
                  (3, Representation.FUNDAMENTAL))


@suite('grassmann.rotation_weight_oracle', 'peso por graus = ajuste de fase (copesos |entradas| <= 3)')
def _rotation_weight_oracle(config: ExperimentConfig, seed: Seed) -> Outcome:
    bound = 3
    mismatches = cases = 0
    for n, rep in ROTATION_CASES:
        half = bound if rep is Representation.FUNDAMENTAL else 2 * bound
        window = Window.symmetric(half, fiber_dim(rep, n))
        reference = embed(identity_loop(n), rep, window)
        for lam in coweights_in_ball(n, bound):
            W = embed(coweight_loop(lam), rep, window)
            mismatches += rotation_weight(W, reference) != rotation_weight_phase_fit(W, reference)
            cases += 1
    return _outcome(mismatches, config.tol('weight'), cases)


@suite('grassmann.z_weight_shift', 'peso de z·W relativo a W = dim(W) − d·hi')
def _z_weight_shift(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(seed)
    window = Window.symmetric(2, 2)
    subspaces = [embed(coweight_loop(lam), Representation.FUNDAMENTAL, window)
                 for lam in coweights_in_ball(2, 2)]
    eye = np.eye(window.size)
    for _ in range(config.cases):
        size = int(rng.integers(1, window.size + 1))
        columns = np.sort(rng.choice(window.size, size=size, replace=False))
        subspaces.append(GrassPoint(window, eye[:, columns], Representation.FUNDAMENTAL, 2))
    mismatches = 0
    for W in subspaces:
        shifted = multiply_z(W)
        baseline = rewindow(W, window.lo, window.hi + 1)
        mismatches += rotation_weight(shifted, baseline) != W.dim - window.d * window.hi
    return _outcome(mismatches, config.tol('weight'), len(subspaces))


@suite('grassmann.det_action_trivial', 'o peso não muda sob k diagonal de SU(n)')
def _det_action_trivial(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(seed)
    mismatches = cases = 0
    for n, rep in ROTATION_CASES[:2]:
        window = Window.symmetric(2 if rep is Representation.FUNDAMENTAL else 4, fiber_dim(rep, n))
        reference = embed(identity_loop(n), rep, window)
        for lam in coweights_in_ball(n, 2):
            phases = rng.uniform(0, 2 * np.pi, n)
            phases[-1] = -phases[:-1].sum()
            k = np.diag(np.exp(1j * phases))
            W = embed(coweight_loop(lam), rep, window)
            moved = rotation_weight(act_gr(0.0, k, W), act_gr(0.0, k, reference))
            mismatches += moved != rotation_weight(W, reference)
            cases += 1
    return _outcome(mismatches, config.tol('weight'), cases)


# ---------------------------------------------------------------------------
# hullgeom
# ---------------------------------------------------------------------------

UNIT_SQUARE = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


@suite('hullgeom.square_examples', 'quadrado, pontos colineares, vértices, centróide e faceta deslocada')
def _square_examples(config: ExperimentConfig, seed: Seed) -> Outcome:
    failures = 0
    h = hull2d(np.vstack([UNIT_SQUARE, [[0.5, 0.5]]]))
    failures += len(h.extremes) != 4
    failures += not all(contains(h, e, 0.0) for e in h.extremes)
    failures += not contains(h, h.centroid(), 0.0)
    tol = 0.01
    failures += contains(h, [1.0 + 2 * tol, 0.5], tol)
    line = hull2d([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [0.5, 0.5]])
    failures += len(line.extremes) != 2
    return _outcome(failures, 0, 5)


@suite('hullgeom.disk_extremes', 'extremos de pontos num disco estão perto do bordo')
def _disk_extremes(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(seed)
    radius = np.sqrt(rng.uniform(0, 1, 1000))
    angle = rng.uniform(0, 2 * np.pi, 1000)
    points = np.column_stack([radius * np.cos(angle), radius * np.sin(angle)])
    h = hull2d(points)
    ratio = float(np.linalg.norm(h.extremes, axis=1).min() / radius.max())
    return ratio >= 0.9, ratio, 1000, "menor raio relativo dos extremos"


@suite('hullgeom.membership_monotone', 'contains(h,x,t₁) implica contains(h,x,t₂) para t₂ >= t₁')
def _membership_monotone(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(seed)
    violations = 0
    h = build_hull(rng.standard_normal((30, 2)))
    for _ in range(config.cases):
        x = 2.0 * rng.standard_normal(2)
        t1 = float(rng.uniform(0, 0.5))
        t2 = t1 + float(rng.uniform(0, 0.5))
        violations += contains(h, x, t1) and not contains(h, x, t2)
    return _outcome(violations, 0, config.cases)


@suite('hullgeom.union_contains', 'hull(A) está contido em hull(A ∪ B)')
def _union_contains(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(seed)
    worst = 0.0
    for i in range(config.cases):
        dim = 2 + i % 2
        a, b = rng.standard_normal((20, dim)), rng.standard_normal((20, dim)) + 1.0
        worst = max(worst, directed_distance(build_hull(a), build_hull(np.vstack([a, b]))))
    return _outcome(worst, config.tol('midpoint'), config.cases)


@suite('hullgeom.midpoint_closure', 'pontos médios de extremos pertencem ao invólucro')
def _midpoint_closure(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(seed)
    failures = cases = 0
    for i in range(max(1, config.cases // 5)):
        h = build_hull(rng.standard_normal((25, 2 + i % 2)))
        for a, b in itertools.combinations(h.extremes, 2):
            failures += not contains(h, 0.5 * (a + b), config.tol('midpoint'))
            cases += 1
    return _outcome(failures, 0, cases)


@suite('hullgeom.hausdorff_examples', 'Hausdorff: própria, translação, escala 2× e simetria')
def _hausdorff_examples(config: ExperimentConfig, seed: Seed) -> Outcome:
    square = hull2d(UNIT_SQUARE)
    shift = 0.25
    shifted = hull2d(UNIT_SQUARE + [shift, 0.0])
    scaled = hull2d(2.0 * UNIT_SQUARE)
    brute = max(max(square.distance(e) for e in scaled.extremes),
                max(scaled.distance(e) for e in square.extremes))
    residuals = [
        hausdorff(square, square),
        abs(hausdorff(square, shifted) - shift),
        abs(hausdorff(square, scaled) - np.sqrt(2.0)),
        abs(hausdorff(square, scaled) - brute),
        abs(hausdorff(square, scaled) - hausdorff(scaled, square)),
    ]
    return _outcome(max(residuals), config.tol('midpoint'), len(residuals))


@suite('hullgeom.cube_3d', 'cubo em ℝ³: 8 extremos, faceta deslocada, distância exata')
def _cube_3d(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(seed)
    corners = np.array(list(itertools.product((0.0, 1.0), repeat=3)))
    h = hull3d(np.vstack([corners, rng.uniform(0.1, 0.9, (20, 3))]))
    tol = 0.01
    outside = [1.0 + 2 * tol, 0.5, 0.5]
    residuals = [
        float(len(h.extremes) != 8),
        float(contains(h, outside, tol)),
        abs(h.distance(outside) - 2 * tol),
        h.distance(h.centroid()),
    ]
    return _outcome(max(residuals), config.tol('midpoint'), len(residuals))


@suite('hullgeom.lp_agreement', 'pertença por PL concorda com a distância exata')
def _lp_agreement(config: ExperimentConfig, seed: Seed) -> Outcome:
    rng = make_rng(seed)
    disagreements = 0
    for i in range(config.cases):
        dim = 2 + i % 2
        h = build_hull(rng.standard_normal((15, dim)))
        x = 1.5 * rng.standard_normal(dim)
        distance = h.distance(x)
        if distance == 0.0 or distance > 1e-6:
            disagreements += lp_member(h, x) != (distance == 0.0)
    return _outcome(disagreements, 0, config.cases)


# ---------------------------------------------------------------------------
# Execução
# ---------------------------------------------------------------------------

class ValidadorInvariantes:
    """Executa as suítes do catálogo com a configuração indicada"""

    def __init__(self, config: ExperimentConfig):
        self.config = config
        self.suites = SUITES

    def suite_seed(self, identifier: str) -> Tuple[int, ...]:
        return derive_seed(self.config.seed, zlib.crc32(identifier.encode('utf-8')))

    def run_suite(self, identifier: str) -> SuiteResult:
        if identifier not in self.suites:
            raise KeyError(f"Suíte desconhecida: {identifier}")
        entry = self.suites[identifier]
        try:
            passed, residual, cases, detail = entry.func(self.config, self.suite_seed(identifier))
        except LabError as e:
            logger.error(f"❌ {identifier}: {e}")
            return SuiteResult(identifier, entry.description, False, float('inf'), 0, str(e))
        result = SuiteResult(identifier, entry.description, bool(passed), residual, cases, detail)
        logger.info(f"{'✅' if result.passed else '❌'} {identifier}: resíduo {residual:.3e} ({cases} casos)")
        return result

    def run_suites(self, groups: Optional[Sequence[str]] = None) -> List[SuiteResult]:
        selected = [s for s in self.suites.values() if groups is None or s.group in groups]
        return [self.run_suite(s.identifier) for s in selected]

    def run_all(self) -> List[SuiteResult]:
        return self.run_suites()

    def run_grassmann(self) -> List[SuiteResult]:
        return self.run_suites(('grassmann',))

    @staticmethod
    def format_report(results: Sequence[SuiteResult]) -> str:
        """Relatório textual: uma linha por suíte e um resumo"""
        lines = []
        for r in results:
            mark = 'PASS' if r.passed else 'FAIL'
            line = f"{mark}  {r.identifier:<40} max_residual={r.max_residual:.3e}  cases={r.cases}"
            if r.detail:
                line += f"  ({r.detail})"
            lines.append(line)
        failed = sum(1 for r in results if not r.passed)
        lines.append(f"{len(results) - failed}/{len(results)} suites passed")
        return '\n'.join(lines) + '\n'
