#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo de Laços Algébricos
Versão 1.0 - Laboratório de Laços

Laços baseados em SU(n) como polinómios de Fourier matriciais
γ(θ) = Σ_{k=-m}^{m} A_k e^{ikθ}, com:
- Aritmética de grupo (produto pontual e inverso)
- Derivada logarítmica γ⁻¹γ'
- Ação de S¹×K (rotação do laço e conjugação)
- Involução τ (conjugação entrada a entrada dos coeficientes)
- Amostradores de laços genéricos e do lugar real
- Serialização em JSON por linhas
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Union

import numpy as np

from nucleo_lie import (Coweight, DimensionError, DomainError, Seed, derive_seed,
                        is_unitary, make_rng, random_coweight, random_unitary)

logger = logging.getLogger(__name__)

BASED_TOL = 1e-10
UNITARY_TOL = 1e-9
DET_TOL = 1e-8
REALITY_TOL = 1e-10


def sample_angles(count: int) -> np.ndarray:
    """Nós equiespaçados θ_j = 2πj/N"""
    return 2.0 * np.pi * np.arange(count) / count


@dataclass(frozen=True, eq=False)
class TrigPoly:
    """Polinómio trigonométrico matricial; coeffs[k + m] = A_k"""
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=complex)
        if coeffs.ndim != 3 or coeffs.shape[1] != coeffs.shape[2] or coeffs.shape[0] % 2 != 1:
            raise DimensionError(f"Coeficientes com forma inválida: {coeffs.shape}")
        if not np.all(np.isfinite(coeffs)):
            raise DomainError("Coeficientes não finitos")
        coeffs.setflags(write=False)
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def n(self) -> int:
        return self.coeffs.shape[1]

    @property
    def m(self) -> int:
        return (self.coeffs.shape[0] - 1) // 2

    def degrees(self) -> np.ndarray:
        return np.arange(-self.m, self.m + 1)

    def coeff(self, k: int) -> np.ndarray:
        if abs(k) > self.m:
            return np.zeros((self.n, self.n), dtype=complex)
        return self.coeffs[k + self.m]

    def padded(self, m: int) -> np.ndarray:
        """Coeficientes estendidos com zeros até ao grau m"""
        if m < self.m:
            raise DimensionError("Não é possível reduzir o grau com padded")
        out = np.zeros((2 * m + 1, self.n, self.n), dtype=complex)
        out[m - self.m:m + self.m + 1] = self.coeffs
        return out

    def eval_many(self, thetas: np.ndarray) -> np.ndarray:
        phases = np.exp(1j * np.outer(np.asarray(thetas, dtype=float), self.degrees()))
        return np.einsum('tk,kij->tij', phases, self.coeffs)

    def eval(self, theta: float) -> np.ndarray:
        return self.eval_many(np.array([theta]))[0]

    def derivative_coeffs(self) -> np.ndarray:
        return 1j * self.degrees()[:, None, None] * self.coeffs

    def derivative_many(self, thetas: np.ndarray) -> np.ndarray:
        phases = np.exp(1j * np.outer(np.asarray(thetas, dtype=float), self.degrees()))
        return np.einsum('tk,kij->tij', phases, self.derivative_coeffs())

    def to_record(self) -> dict:
        return {
            'n': self.n,
            'm': self.m,
            'coeffs': [[int(k), self.coeff(k).real.tolist(), self.coeff(k).imag.tolist()]
                       for k in self.degrees()],
        }

    @staticmethod
    def coeffs_from_record(record: dict) -> np.ndarray:
        n, m = int(record['n']), int(record['m'])
        coeffs = np.zeros((2 * m + 1, n, n), dtype=complex)
        for k, re, im in record['coeffs']:
            coeffs[int(k) + m] = np.array(re, dtype=float) + 1j * np.array(im, dtype=float)
        return coeffs


class LoopPoly(TrigPoly):
    """Laço algébrico baseado: γ(1) = I, unitário e de determinante 1 no círculo"""

    def __init__(self, coeffs: np.ndarray, check: bool = True):
        super().__init__(coeffs)
        if check:
            self.validate()

    def based_residual(self) -> float:
        return float(np.linalg.norm(self.coeffs.sum(axis=0) - np.eye(self.n)))

    def unitarity_residual(self) -> float:
        values = self.eval_many(sample_angles(4 * self.m + 3))
        gram = np.einsum('tji,tjk->tik', values.conj(), values)
        return float(np.max(np.linalg.norm(gram - np.eye(self.n), axis=(1, 2))))

    def det_residual(self) -> float:
        values = self.eval_many(sample_angles(4 * self.m + 3))
        return float(np.max(np.abs(np.linalg.det(values) - 1.0)))

    def validate(self) -> None:
        based = self.based_residual()
        if based > BASED_TOL:
            raise DomainError(f"Laço não baseado: ‖Σ A_k − I‖ = {based:.3e}")
        unitary = self.unitarity_residual()
        if unitary > UNITARY_TOL:
            raise DomainError(f"Laço não unitário no círculo: resíduo {unitary:.3e}")
        det = self.det_residual()
        if det > DET_TOL:
            raise DomainError(f"Laço fora de SU(n): |det − 1| = {det:.3e}")

    @classmethod
    def from_record(cls, record: dict) -> 'LoopPoly':
        return cls(cls.coeffs_from_record(record))


class TangentPoly(TrigPoly):
    """Vetor tangente em T_e Ω_alg SU(n): A_{-k} = −A_k†, Σ_k A_k = 0"""

    def __init__(self, coeffs: np.ndarray, check: bool = True):
        super().__init__(coeffs)
        if check:
            self.validate()

    def reality_residual(self) -> float:
        reflected = self.coeffs[::-1].conj().transpose(0, 2, 1)
        return float(np.linalg.norm(self.coeffs + reflected))

    def validate(self) -> None:
        reality = self.reality_residual()
        if reality > REALITY_TOL:
            raise DomainError(f"Restrição de realidade violada: ‖A_-k + A_k†‖ = {reality:.3e}")
        based = float(np.linalg.norm(self.coeffs.sum(axis=0)))
        if based > REALITY_TOL:
            raise DomainError(f"Tangente não baseada: ‖Σ A_k‖ = {based:.3e}")


# ---------------------------------------------------------------------------
# Laços especiais
# ---------------------------------------------------------------------------

def identity_loop(n: int) -> LoopPoly:
    return LoopPoly(np.eye(n, dtype=complex)[None, :, :])


def coweight_loop(lam: Coweight) -> LoopPoly:
    """Homomorfismo θ ↦ exp(θΛ) = diag(e^{iλ_jθ})"""
    m = lam.norm
    coeffs = np.zeros((2 * m + 1, lam.n, lam.n), dtype=complex)
    for j, e in enumerate(lam.entries):
        coeffs[e + m, j, j] = 1.0
    return LoopPoly(coeffs)


# ---------------------------------------------------------------------------
# Operações de grupo
# ---------------------------------------------------------------------------

def _cauchy_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ma = (a.shape[0] - 1) // 2
    mb = (b.shape[0] - 1) // 2
    out = np.zeros((2 * (ma + mb) + 1, a.shape[1], b.shape[2]), dtype=complex)
    for i in range(a.shape[0]):
        out[i:i + b.shape[0]] += a[i] @ b
    return out


def multiply(gamma1: LoopPoly, gamma2: LoopPoly) -> LoopPoly:
    """Produto pontual; grau m1 + m2"""
    if gamma1.n != gamma2.n:
        raise DimensionError(f"Laços de tamanhos {gamma1.n} e {gamma2.n}")
    return LoopPoly(_cauchy_product(gamma1.coeffs, gamma2.coeffs))


def inverse(gamma: LoopPoly) -> LoopPoly:
    """γ⁻¹ tem coeficientes (A_{-k})† porque γ é unitário no círculo"""
    residual = gamma.unitarity_residual()
    if residual > UNITARY_TOL:
        raise DomainError(f"Inverso requer laço unitário (resíduo {residual:.3e})")
    return LoopPoly(gamma.coeffs[::-1].conj().transpose(0, 2, 1))


def log_derivative(gamma: LoopPoly) -> TrigPoly:
    """Coeficientes de γ⁻¹γ' (grau <= 2m) por inversão discreta de Fourier em 4m+3 nós"""
    m = gamma.m
    count = 4 * m + 3
    thetas = sample_angles(count)
    values = gamma.eval_many(thetas)
    derivs = gamma.derivative_many(thetas)
    integrand = np.einsum('tji,tjk->tik', values.conj(), derivs)
    spectrum = np.fft.fft(integrand, axis=0) / count
    degrees = np.arange(-2 * m, 2 * m + 1)
    return TrigPoly(spectrum[degrees % count])


def act(s: float, k: np.ndarray, gamma: LoopPoly) -> LoopPoly:
    """[(s,k)·γ](θ) = k γ(θ+s) γ(s)⁻¹ k⁻¹"""
    k = np.asarray(k, dtype=complex)
    if k.shape != (gamma.n, gamma.n):
        raise DimensionError(f"k com forma {k.shape} para laço de tamanho {gamma.n}")
    if not is_unitary(k):
        raise DomainError("k não é unitário")
    rotated = gamma.coeffs * np.exp(1j * gamma.degrees() * s)[:, None, None]
    correction = gamma.eval(s).conj().T @ k.conj().T
    return LoopPoly(k @ rotated @ correction)


def conjugate(k: np.ndarray, gamma: LoopPoly) -> LoopPoly:
    """Conjugação pontual k γ k⁻¹"""
    return act(0.0, k, gamma)


def tau(gamma: LoopPoly) -> LoopPoly:
    """(τγ)(z) = σ(γ(z̄)), σ = conjugação entrada a entrada"""
    return LoopPoly(gamma.coeffs.conj())


def dtau(X: TangentPoly) -> TangentPoly:
    """Diferencial de τ: A_k ↦ conj(A_k)"""
    return TangentPoly(X.coeffs.conj())


def is_tau_fixed(gamma: LoopPoly, tol: float = 1e-12) -> bool:
    return float(np.max(np.abs(gamma.coeffs.imag), initial=0.0)) <= tol


def trim(gamma: LoopPoly, tol: float = 1e-14) -> LoopPoly:
    """Remove coeficientes exteriores nulos (até tol)"""
    m = filtration_degree(gamma, tol)
    return LoopPoly(gamma.coeffs[gamma.m - m:gamma.m + m + 1], check=False)


def filtration_degree(gamma: TrigPoly, tol: float = 1e-14) -> int:
    """Menor m com γ ∈ Ω_alg,m"""
    norms = np.linalg.norm(gamma.coeffs, axis=(1, 2))
    for m in range(gamma.m, 0, -1):
        if max(norms[gamma.m + m], norms[gamma.m - m]) > tol:
            return m
    return 0


def coefficients_equal(a: TrigPoly, b: TrigPoly, tol: float = 0.0) -> bool:
    if a.n != b.n:
        return False
    m = max(a.m, b.m)
    return bool(np.max(np.abs(a.padded(m) - b.padded(m))) <= tol)


# ---------------------------------------------------------------------------
# Amostradores
# ---------------------------------------------------------------------------

def sample_loop(seed: Seed, n: int, depth: int, max_coweight_norm: int,
                real_locus: bool = False) -> LoopPoly:
    """Produto Π_j k_j λ_j k_j⁻¹ de homomorfismos conjugados.

    Os copesos vêm de sub-sementes independentes de real_locus, de modo que
    amostras com a mesma semente usam os mesmos λ_j nos dois regimes.
    """
    if depth < 1:
        raise DomainError("depth deve ser >= 1")
    result = identity_loop(n)
    for j in range(depth):
        lam = random_coweight(derive_seed(seed, j, 0), n, max_coweight_norm)
        k = random_unitary(derive_seed(seed, j, 1), n, real_form=real_locus)
        if real_locus:
            k = k.real.astype(complex)
        factor = conjugate(k, coweight_loop(lam))
        if real_locus:
            factor = LoopPoly(factor.coeffs.real.astype(complex))
        result = multiply(result, factor)
    return result


def sample_tangent(seed: Seed, n: int, m: int) -> TangentPoly:
    """Tangente aleatória de grau m com traço nulo"""
    rng = make_rng(seed)
    coeffs = np.zeros((2 * m + 1, n, n), dtype=complex)
    for k in range(1, m + 1):
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        a -= np.trace(a) / n * np.eye(n)
        coeffs[m + k] = a
        coeffs[m - k] = -a.conj().T
    coeffs[m] = -coeffs.sum(axis=0)
    return TangentPoly(coeffs)


def tangent_from_pairs(n: int, pairs: dict) -> TangentPoly:
    """Tangente a partir de {k>0: A_k}; A_{-k} e A_0 ficam forçados"""
    m = max(pairs) if pairs else 0
    coeffs = np.zeros((2 * m + 1, n, n), dtype=complex)
    for k, a in pairs.items():
        if k <= 0:
            raise DomainError("Só graus positivos em tangent_from_pairs")
        a = np.asarray(a, dtype=complex)
        coeffs[m + k] = a
        coeffs[m - k] = -a.conj().T
    coeffs[m] = -coeffs.sum(axis=0)
    return TangentPoly(coeffs)


# ---------------------------------------------------------------------------
# Serialização
# ---------------------------------------------------------------------------

def write_loops_jsonl(loops: Iterable[TrigPoly], path: Union[str, Path]) -> int:
    path = Path(path)
    count = 0
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        for gamma in loops:
            f.write(json.dumps(gamma.to_record()) + '\n')
            count += 1
    logger.info(f"💾 {count} laços escritos em {path}")
    return count


def read_loops_jsonl(path: Union[str, Path], check: bool = True) -> List[LoopPoly]:
    loops = []
    with open(path, 'r', encoding='utf-8') as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise DomainError(f"Linha {line_no} inválida: {e}") from e
            loops.append(LoopPoly(TrigPoly.coeffs_from_record(record), check=check))
    return loops
