#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo do Modelo Grassmanniano
Versão 1.0 - Laboratório de Laços

Modelo de janela finita de Gr₀(H^𝔨):
- Janela de graus lo <= k < hi; W é guardado pelo quociente W / z^hi·H₊
- Mergulho φ(γ) = γ·H₊ nas representações fundamental e adjunta
- Condições de Gr₀^𝔨 (zW ⊆ W, zW = W̄^⊥, involutividade pelo colchete)
- Ações de S¹×K, involução τ̂, formas simpléticas ω_ΩK e ω_HS
- Peso de rotação do fibrado determinante

Base da janela: ε_i z^k ordenada por (k crescente, i crescente).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg as la

from lacos import LoopPoly, TangentPoly, TrigPoly, coweight_loop, identity_loop, sample_angles
from momento import coweight_moment
from nucleo_lie import (DimensionError, DomainError, Seed, WindowError,
                        coweights_in_ball, is_unitary, make_rng)

logger = logging.getLogger(__name__)

ORTHONORMAL_TOL = 1e-10
GR0K_TOL = 1e-8
RANK_TOL = 1e-8


class Representation(Enum):
    """Representações suportadas de SU(n)"""
    FUNDAMENTAL = "fundamental"
    ADJOINT = "adjoint"


def fiber_dim(rep: Representation, n: int) -> int:
    return n if rep is Representation.FUNDAMENTAL else n * n - 1


def adjoint_basis(n: int) -> np.ndarray:
    """Base real ortonormada de sl(n) para a forma traço: E_ij (i≠j) e diagonais"""
    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                e = np.zeros((n, n))
                e[i, j] = 1.0
                basis.append(e)
    for k in range(1, n):
        h = np.zeros((n, n))
        h[np.arange(k), np.arange(k)] = 1.0
        h[k, k] = -k
        basis.append(h / np.sqrt(k * (k + 1)))
    return np.array(basis, dtype=complex).reshape(-1, n, n)


def _adjoint_coords(mats: np.ndarray, basis: np.ndarray) -> np.ndarray:
    return np.einsum('bij,...ij->...b', basis.conj(), mats)


def _adjoint_matrices(coords: np.ndarray, basis: np.ndarray) -> np.ndarray:
    return np.einsum('...b,bij->...ij', coords, basis)


def rep_matrix(k: np.ndarray, rep: Representation) -> np.ndarray:
    """ρ(k) na base da fibra"""
    k = np.asarray(k, dtype=complex)
    if rep is Representation.FUNDAMENTAL:
        return k
    basis = adjoint_basis(k.shape[0])
    images = np.einsum('ij,ajk,lk->ail', k, basis, k.conj())
    return _adjoint_coords(images, basis).T


def rep_coefficients(gamma: LoopPoly, rep: Representation) -> Tuple[np.ndarray, np.ndarray]:
    """Coeficientes de Fourier de ρ(γ(z)): (graus, R) com R[q] de forma d×d"""
    if rep is Representation.FUNDAMENTAL:
        return gamma.degrees(), np.array(gamma.coeffs)

    n, m = gamma.n, gamma.m
    basis = adjoint_basis(n)
    size = 2 * m + 1
    inv_coeffs = gamma.coeffs[::-1].conj().transpose(0, 2, 1)
    left = np.einsum('kij,ajl->kail', gamma.coeffs, basis)
    products = np.zeros((2 * size - 1, basis.shape[0], n, n), dtype=complex)
    for i in range(size):
        products[i:i + size] += np.einsum('aij,ljm->laim', left[i], inv_coeffs)
    coords = np.einsum('bij,qaij->qba', basis.conj(), products)
    return np.arange(-2 * m, 2 * m + 1), coords


def rep_degree(gamma: LoopPoly, rep: Representation) -> int:
    return gamma.m if rep is Representation.FUNDAMENTAL else 2 * gamma.m


@dataclass(frozen=True)
class Window:
    """Janela de graus lo <= k < hi com fibra de dimensão d"""
    lo: int
    hi: int
    d: int

    def __post_init__(self):
        if not (self.lo < 0 <= self.hi):
            raise WindowError(f"Janela inválida: lo={self.lo}, hi={self.hi}")
        if self.d < 1:
            raise WindowError("Dimensão da fibra deve ser >= 1")

    @classmethod
    def symmetric(cls, half: int, d: int) -> 'Window':
        return cls(-max(half, 1), max(half, 1), d)

    @property
    def depth(self) -> int:
        return self.hi - self.lo

    @property
    def size(self) -> int:
        return self.d * self.depth

    def row_degrees(self) -> np.ndarray:
        return np.repeat(np.arange(self.lo, self.hi), self.d)

    def block(self, k: int) -> slice:
        start = (k - self.lo) * self.d
        return slice(start, start + self.d)

    def to_dict(self) -> dict:
        return {'lo': self.lo, 'hi': self.hi, 'd': self.d}


@dataclass(frozen=True, eq=False)
class GrassPoint:
    """Subespaço W da janela, guardado por uma base ortonormada"""
    window: Window
    basis: np.ndarray
    rep: Representation = Representation.FUNDAMENTAL
    n: int = 2

    def __post_init__(self):
        basis = np.array(self.basis, dtype=complex)
        if basis.ndim != 2 or basis.shape[0] != self.window.size:
            raise DimensionError(f"Base com forma {basis.shape} para janela de tamanho {self.window.size}")
        if fiber_dim(self.rep, self.n) != self.window.d:
            raise DimensionError(f"Janela com d={self.window.d} para {self.rep.value} de SU({self.n})")
        drift = float(np.linalg.norm(basis.conj().T @ basis - np.eye(basis.shape[1])))
        if drift > ORTHONORMAL_TOL:
            raise DomainError(f"Base não ortonormada (desvio {drift:.3e})")
        basis.setflags(write=False)
        object.__setattr__(self, 'basis', basis)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.conj().T

    def blocks(self) -> np.ndarray:
        """Base por graus: forma (hi-lo, d, dim)"""
        return self.basis.reshape(self.window.depth, self.window.d, self.dim)

    def with_basis(self, basis: np.ndarray, window: Optional[Window] = None) -> 'GrassPoint':
        return GrassPoint(window or self.window, basis, self.rep, self.n)

    def to_dict(self) -> dict:
        return {
            'window': self.window.to_dict(),
            'rep': self.rep.value,
            'n': self.n,
            'basis': [[[float(z.real), float(z.imag)] for z in row] for row in self.basis],
        }


def projector_distance(a: GrassPoint, b: GrassPoint) -> float:
    """Distância de Frobenius entre projetores ortogonais"""
    if a.window != b.window:
        raise DimensionError("Subespaços em janelas diferentes")
    return float(np.linalg.norm(a.projector() - b.projector()))


def _orthonormal_basis(generators: np.ndarray, rank: int) -> np.ndarray:
    u, s, _ = la.svd(generators, full_matrices=False)
    if rank > s.shape[0] or (rank > 0 and s[rank - 1] < RANK_TOL):
        raise DomainError(f"Geradores com posto inferior a {rank}")
    if rank < s.shape[0] and s[rank] > 1e-6:
        logger.warning(f"Geradores com posto superior ao esperado ({rank}); σ={s[rank]:.3e}")
    return u[:, :rank]


def _apply_laurent(degrees: np.ndarray, coeffs: np.ndarray, blocks: np.ndarray,
                   src_degrees: Sequence[int], window: Window) -> Tuple[np.ndarray, float]:
    """Aplica Σ_q R_q z^q a vetores por graus e trunca módulo z^hi·H₊.

    Devolve a matriz na janela e a norma da massa abaixo de lo.
    """
    out = np.zeros((window.depth, window.d, blocks.shape[-1]), dtype=complex)
    below = 0.0
    for q, rq in zip(degrees, coeffs):
        for idx, k in enumerate(src_degrees):
            deg = int(k + q)
            if deg >= window.hi:
                continue
            contrib = rq @ blocks[idx]
            if deg < window.lo:
                below += float(np.linalg.norm(contrib)) ** 2
                continue
            out[deg - window.lo] += contrib
    return out.reshape(window.size, -1), float(np.sqrt(below))


def embed(gamma: LoopPoly, rep: Representation, window: Window) -> GrassPoint:
    """φ(γ) = ρ(γ)·H₊ no modelo de janela (dimensão virtual zero: dim = d·hi)"""
    d = fiber_dim(rep, gamma.n)
    if window.d != d:
        raise DimensionError(f"Janela com d={window.d}; {rep.value} de SU({gamma.n}) tem d={d}")
    degree = rep_degree(gamma, rep)
    if window.hi < degree or -window.lo < degree:
        raise WindowError(f"Janela [{window.lo}, {window.hi}) não cobre o grau {degree}")

    degrees, coeffs = rep_coefficients(gamma, rep)
    src_degrees = list(range(window.hi + degree))
    eye = np.eye(d, dtype=complex)
    blocks = np.zeros((len(src_degrees), d, d * len(src_degrees)), dtype=complex)
    for j in src_degrees:
        blocks[j, :, j * d:(j + 1) * d] = eye
    generators, below = _apply_laurent(degrees, coeffs, blocks, src_degrees, window)
    if below > 1e-10:
        raise WindowError("Imagem sai da janela por baixo")
    basis = _orthonormal_basis(generators, d * window.hi)
    return GrassPoint(window, basis, rep, gamma.n)


def loop_act_gr(gamma: LoopPoly, W: GrassPoint) -> GrassPoint:
    """ρ(γ)·W; o resultado deve conter z^hi·H₊ (janela dimensionada para o produto)"""
    if gamma.n != W.n:
        raise DimensionError("Laço e subespaço de tamanhos diferentes")
    window = W.window
    degree = rep_degree(gamma, W.rep)
    degrees, coeffs = rep_coefficients(gamma, W.rep)

    src_degrees = list(range(window.lo, window.hi + degree))
    tail = len(src_degrees) - window.depth
    blocks = np.zeros((len(src_degrees), window.d, W.dim + window.d * tail), dtype=complex)
    blocks[:window.depth, :, :W.dim] = W.blocks()
    eye = np.eye(window.d, dtype=complex)
    for t in range(tail):
        col = W.dim + t * window.d
        blocks[window.depth + t, :, col:col + window.d] = eye
    generators, below = _apply_laurent(degrees, coeffs, blocks, src_degrees, window)
    if below > 1e-10:
        raise WindowError("ρ(γ)·W sai da janela por baixo")
    return W.with_basis(_orthonormal_basis(generators, W.dim))


def random_grass_point(seed: Seed, window: Window, dim: int,
                       rep: Representation = Representation.FUNDAMENTAL, n: int = 2) -> GrassPoint:
    """Subespaço aleatório (genericamente fora da imagem de φ)"""
    rng = make_rng(seed)
    g = rng.standard_normal((window.size, dim)) + 1j * rng.standard_normal((window.size, dim))
    q, _ = la.qr(g, mode='economic')
    return GrassPoint(window, q, rep, n)


# ---------------------------------------------------------------------------
# Condições de Gr₀^𝔨
# ---------------------------------------------------------------------------

@dataclass
class Gr0kReport:
    """Resultado das três condições de Gr₀^𝔨 com resíduos"""
    containment_ok: bool
    containment_residual: float
    perp_ok: Optional[bool] = None
    perp_residual: Optional[float] = None
    bracket_ok: Optional[bool] = None
    bracket_residual: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(ok is not False for ok in (self.containment_ok, self.perp_ok, self.bracket_ok))

    def max_residual(self) -> float:
        values = [self.containment_residual, self.perp_residual, self.bracket_residual]
        return max(v for v in values if v is not None)


GR0K_CONDITIONS = ('containment', 'perp', 'bracket')


def _shift_up(W: GrassPoint) -> np.ndarray:
    """z·W truncado módulo z^hi·H₊"""
    shifted = np.zeros_like(W.basis)
    shifted[W.window.d:] = W.basis[:-W.window.d]
    return shifted


def _containment_residual(W: GrassPoint) -> float:
    zq = _shift_up(W)
    return float(np.linalg.norm(zq - W.basis @ (W.basis.conj().T @ zq)))


def _fiber_conjugation(n: int) -> np.ndarray:
    """Matriz J da estrutura real X ↦ −X† em coordenadas: c ↦ −J·conj(c)"""
    basis = adjoint_basis(n)
    return -_adjoint_coords(basis.conj().transpose(0, 2, 1), basis).T


def _perp_residual(W: GrassPoint) -> float:
    window = W.window
    if window.lo != -window.hi:
        half = max(-window.lo, window.hi)
        W = rewindow(W, -half, half)
        window = W.window
    # Espaço V de graus [lo+1, hi]: z·W tem as mesmas coordenadas que W
    conj_map = _fiber_conjugation(W.n)
    conj_blocks = np.einsum('ba,kar->kbr', conj_map, W.blocks().conj())[::-1]
    conj_basis = conj_blocks.reshape(window.size, W.dim)
    total = W.projector() + conj_basis @ conj_basis.conj().T
    return float(np.linalg.norm(total - np.eye(window.size)))


def _bracket_residual(W: GrassPoint) -> float:
    window = W.window
    basis = adjoint_basis(W.n)
    depth = window.depth
    laurent = _adjoint_matrices(W.blocks().transpose(2, 0, 1), basis)  # (r, D, n, n)
    products = np.einsum('akij,bljm->abklim', laurent, laurent)
    commutators = products - products.transpose(1, 0, 3, 2, 4, 5)
    r = W.dim
    n = W.n
    summed = np.zeros((r, r, 2 * depth - 1, n, n), dtype=complex)
    for k in range(depth):
        summed[:, :, k:k + depth] += commutators[:, :, k]
    start = -window.lo  # índice do grau lo
    below = np.linalg.norm(summed[:, :, :start].reshape(r, r, -1), axis=2)
    inside = _adjoint_coords(summed[:, :, start:start + depth], basis).reshape(r, r, -1)
    projected = inside - np.einsum('ij,abj->abi', W.projector(), inside)
    residual = np.linalg.norm(projected, axis=2) + below
    return float(residual.max(initial=0.0))


def check_gr0k(W: GrassPoint, conditions: Sequence[str] = GR0K_CONDITIONS,
               tol: float = GR0K_TOL) -> Gr0kReport:
    """Verifica as condições de Gr₀^𝔨; (2) e (3) só na representação adjunta"""
    unknown = set(conditions) - set(GR0K_CONDITIONS)
    if unknown:
        raise DomainError(f"Condições desconhecidas: {sorted(unknown)}")
    needs_adjoint = {'perp', 'bracket'} & set(conditions)
    if needs_adjoint and W.rep is not Representation.ADJOINT:
        raise DomainError(f"Condições {sorted(needs_adjoint)} requerem a representação adjunta")

    containment = _containment_residual(W)
    report = Gr0kReport(containment_ok=containment <= tol, containment_residual=containment)
    if 'perp' in conditions:
        report.perp_residual = _perp_residual(W)
        report.perp_ok = report.perp_residual <= tol
    if 'bracket' in conditions:
        report.bracket_residual = _bracket_residual(W)
        report.bracket_ok = report.bracket_residual <= tol
    logger.debug(f"Gr₀^𝔨: {report}")
    return report


# ---------------------------------------------------------------------------
# Ações e involução
# ---------------------------------------------------------------------------

def act_gr(s: float, k: np.ndarray, W: GrassPoint) -> GrassPoint:
    """(s,k)·W: f(z) ↦ ρ(k) f(e^{is} z)"""
    k = np.asarray(k, dtype=complex)
    if k.shape != (W.n, W.n):
        raise DimensionError(f"k com forma {k.shape} para SU({W.n})")
    if not is_unitary(k):
        raise DomainError("k não é unitário")
    rk = rep_matrix(k, W.rep)
    phases = np.exp(1j * np.arange(W.window.lo, W.window.hi) * s)
    blocks = np.einsum('ba,kar->kbr', rk, W.blocks()) * phases[:, None, None]
    return W.with_basis(blocks.reshape(W.window.size, W.dim))


def tau_hat(W: GrassPoint) -> GrassPoint:
    """τ̂W = {σ̂(f(z̄))}: conjugação das coordenadas, graus inalterados"""
    return W.with_basis(W.basis.conj())


def multiply_z(W: GrassPoint) -> GrassPoint:
    """z·W exato, na janela (lo, hi+1)"""
    window = Window(W.window.lo, W.window.hi + 1, W.window.d)
    basis = np.zeros((window.size, W.dim), dtype=complex)
    basis[W.window.d:] = W.basis
    return W.with_basis(basis, window)


def rewindow(W: GrassPoint, lo: int, hi: int) -> GrassPoint:
    """Mesmo subespaço numa janela maior (a cauda z^hi·H₊ passa a explícita)"""
    if lo > W.window.lo or hi < W.window.hi:
        raise WindowError("rewindow só alarga a janela")
    window = Window(lo, hi, W.window.d)
    extra = window.d * (hi - W.window.hi)
    basis = np.zeros((window.size, W.dim + extra), dtype=complex)
    offset = (W.window.lo - lo) * window.d
    basis[offset:offset + W.window.size, :W.dim] = W.basis
    basis[offset + W.window.size:, W.dim:] = np.eye(extra)
    return W.with_basis(basis, window)


# ---------------------------------------------------------------------------
# Formas simpléticas
# ---------------------------------------------------------------------------

def _as_tangent(X: TrigPoly) -> TangentPoly:
    return X if isinstance(X, TangentPoly) else TangentPoly(X.coeffs)


def loop_form_coefficients(X: TrigPoly, Y: TrigPoly) -> float:
    """i Σ_k k tr(A_k† B_k)"""
    m = max(X.m, Y.m)
    a, b = X.padded(m), Y.padded(m)
    traces = np.einsum('kij,kij->k', a.conj(), b)
    return float((1j * np.sum(np.arange(-m, m + 1) * traces)).real)


def loop_form(X: TrigPoly, Y: TrigPoly) -> float:
    """ω(X,Y) = (1/2π)∫⟨X, Y'⟩ dθ por quadratura; confirmado pela fórmula dos coeficientes"""
    X, Y = _as_tangent(X), _as_tangent(Y)
    if X.n != Y.n:
        raise DimensionError("Tangentes de tamanhos diferentes")
    count = 4 * max(X.m, Y.m) + 3
    thetas = sample_angles(count)
    integrand = np.einsum('tij,tij->t', X.eval_many(thetas).conj(), Y.derivative_many(thetas))
    value = complex(integrand.mean())
    coefficient_value = loop_form_coefficients(X, Y)
    if abs(value.real - coefficient_value) > 1e-10 * max(1.0, abs(coefficient_value)):
        logger.warning(f"⚠️ ω por quadratura {value.real:.17g} != coeficientes {coefficient_value:.17g}")
    if abs(value.imag) > 1e-10 * max(1.0, abs(value.real)):
        logger.warning(f"⚠️ ω com parte imaginária {value.imag:.3e}")
    return value.real


def pullback_operator(X: TrigPoly, window: Window) -> np.ndarray:
    """Matriz de pr₋ ∘ L_X: (graus 0..hi-1) → (graus lo..-1)"""
    d = window.d
    out = np.zeros((d * (-window.lo), d * window.hi), dtype=complex)
    for j in range(window.hi):
        for r in range(-X.m, -j):
            row = (j + r - window.lo) * d
            out[row:row + d, j * d:(j + 1) * d] = X.coeff(r)
    return out


def hs_form_pullback(X: TrigPoly, Y: TrigPoly, window: Window) -> float:
    """φ*ω_HS(X,Y) = −i tr(F_X†F_Y − F_Y†F_X) com F_X = pr₋ ∘ L_X"""
    X, Y = _as_tangent(X), _as_tangent(Y)
    if X.n != Y.n or window.d != X.n:
        raise DimensionError("Janela e tangentes com dimensões incompatíveis")
    degree = max(X.m, Y.m)
    if window.hi < degree or -window.lo < degree:
        raise WindowError(f"Janela [{window.lo}, {window.hi}) pequena para grau {degree}")
    fx = pullback_operator(X, window)
    fy = pullback_operator(Y, window)
    value = -1j * (np.vdot(fx, fy) - np.vdot(fy, fx))
    return float(value.real)


# ---------------------------------------------------------------------------
# Peso de rotação no fibrado determinante
# ---------------------------------------------------------------------------

def rotation_residual(W: GrassPoint) -> float:
    """Massa do projetor fora dos blocos diagonais de grau"""
    degrees = W.window.row_degrees()
    off = degrees[:, None] != degrees[None, :]
    return float(np.linalg.norm(W.projector()[off]))


def is_rotation_fixed(W: GrassPoint, tol: float = 1e-9) -> bool:
    return rotation_residual(W) <= tol


def degree_dimensions(W: GrassPoint) -> Dict[int, int]:
    """dim W_k para um subespaço graduado"""
    if not is_rotation_fixed(W):
        raise DomainError(f"Subespaço não fixo pela rotação (resíduo {rotation_residual(W):.3e})")
    p = W.projector()
    dims = {}
    for k in range(W.window.lo, W.window.hi):
        block = W.window.block(k)
        trace = float(np.trace(p[block, block]).real)
        rounded = int(round(trace))
        if abs(trace - rounded) > 1e-6:
            raise DomainError(f"Traço de bloco não inteiro no grau {k}: {trace}")
        dims[k] = rounded
    return dims


def degree_sum(W: GrassPoint) -> int:
    return sum(k * dim for k, dim in degree_dimensions(W).items())


def _check_comparable(W: GrassPoint, reference: GrassPoint) -> None:
    if W.window != reference.window or W.rep is not reference.rep or W.n != reference.n:
        raise DimensionError("Subespaços não comparáveis (janela/representação diferentes)")


def rotation_weight(W: GrassPoint, reference: GrassPoint) -> int:
    """Peso ℂ× na reta determinante, relativo a um subespaço de referência"""
    _check_comparable(W, reference)
    return degree_sum(W) - degree_sum(reference)


def phase_fit_degree_sum(W: GrassPoint, angles: Sequence[float] = (0.37, 1.3, 2.9)) -> int:
    """Oráculo: ajusta o inteiro w com det(Q† D_s Q) = e^{iws}"""
    if not is_rotation_fixed(W):
        raise DomainError("Subespaço não fixo pela rotação")
    degrees = np.arange(W.window.lo, W.window.hi)

    def det_at(s: float) -> complex:
        phases = np.repeat(np.exp(1j * degrees * s), W.window.d)
        return complex(np.linalg.det(W.basis.conj().T @ (phases[:, None] * W.basis)))

    s0 = 1.0 / (1.0 + float(np.abs(W.window.row_degrees()).sum()))
    weight = int(round(np.angle(det_at(s0)) / s0))
    for s in angles:
        if abs(det_at(s) - np.exp(1j * weight * s)) > 1e-8:
            raise DomainError(f"Ajuste de fase inconsistente em s={s}")
    return weight


def rotation_weight_phase_fit(W: GrassPoint, reference: GrassPoint) -> int:
    _check_comparable(W, reference)
    return phase_fit_degree_sum(W) - phase_fit_degree_sum(reference)


def weight_energy_table(n: int, bound: int, rep: Representation) -> List[dict]:
    """Peso de rotação de φ(λ) ao lado de E(λ) (experiência, sem asserção)"""
    rows = []
    for lam in coweights_in_ball(n, bound):
        half = bound if rep is Representation.FUNDAMENTAL else 2 * bound
        window = Window.symmetric(max(half, 1), fiber_dim(rep, n))
        W = embed(coweight_loop(lam), rep, window)
        reference = embed(identity_loop(n), rep, window)
        rows.append({
            'coweight': list(lam.entries),
            'energy': coweight_moment(lam).energy,
            'weight': rotation_weight(W, reference),
        })
    return rows
