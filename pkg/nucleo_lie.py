#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Núcleo de Álgebra de Lie para SU(n)
Versão 1.0 - Laboratório de Laços

Este módulo fornece o substrato matricial usado pelos restantes módulos:
- Produto interno (forma traço) em su(n)
- Projeção para a câmara de Weyl positiva
- Órbitas de Weyl e reticulado de copesos com a ordem de dominância
- Amostragem de Haar em SU(n) e SO(n) com sementes explícitas
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np
import scipy.linalg as la
from scipy.stats import ortho_group, unitary_group

logger = logging.getLogger(__name__)

# Escala da forma traço; a forma de Killing em su(n) é 2n vezes a forma traço
INNER_SCALE = 1.0

SKEW_TOL = 1e-10
Seed = Union[int, Sequence[int], np.random.SeedSequence]


class LabError(ValueError):
    """Erro base do laboratório"""


class DimensionError(LabError):
    """Formas incompatíveis"""


class DomainError(LabError):
    """Entrada fora do domínio matemático da operação"""


class WindowError(LabError):
    """Janela da Grassmanniana insuficiente"""


# ---------------------------------------------------------------------------
# Sementes
# ---------------------------------------------------------------------------

def seed_sequence(seed: Seed) -> np.random.SeedSequence:
    """Converte uma semente (inteiro, tuplo ou SeedSequence) numa SeedSequence"""
    if isinstance(seed, np.random.SeedSequence):
        return seed
    if isinstance(seed, (int, np.integer)):
        return np.random.SeedSequence(int(seed))
    return np.random.SeedSequence([int(s) for s in seed])


def derive_seed(seed: Seed, *keys: int) -> Tuple[int, ...]:
    """Semente derivada por contador: (semente, chave1, chave2, ...)"""
    if isinstance(seed, np.random.SeedSequence):
        base = tuple(int(x) for x in np.atleast_1d(seed.entropy))
    elif isinstance(seed, (int, np.integer)):
        base = (int(seed),)
    else:
        base = tuple(int(s) for s in seed)
    return base + tuple(int(k) for k in keys)


def make_rng(seed: Seed) -> np.random.Generator:
    return np.random.default_rng(seed_sequence(seed))


# ---------------------------------------------------------------------------
# Tipos
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Coweight:
    """Copeso de SU(n): vetor inteiro de soma nula"""
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, 'entries', entries)
        if len(entries) < 1:
            raise DimensionError("Copeso vazio")
        if sum(entries) != 0:
            raise DomainError(f"Copeso {entries} não tem soma nula")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def norm(self) -> int:
        """Maior entrada em módulo (grau do laço associado)"""
        return max(abs(e) for e in self.entries)

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.entries, self.entries[1:]))

    def dominant(self) -> 'Coweight':
        return Coweight(tuple(sorted(self.entries, reverse=True)))

    def algebra_element(self) -> np.ndarray:
        """Λ = i·diag(entradas) ∈ 𝔱"""
        return 1j * np.diag(np.array(self.entries, dtype=float))

    def norm_sq(self) -> float:
        return float(INNER_SCALE * sum(e * e for e in self.entries))

    def __add__(self, other: 'Coweight') -> 'Coweight':
        if other.n != self.n:
            raise DimensionError("Copesos de tamanhos diferentes")
        return Coweight(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> 'Coweight':
        return Coweight(tuple(-e for e in self.entries))


@dataclass(frozen=True, eq=False)
class DeltaCoords:
    """Ponto da câmara de Weyl positiva: vetor real decrescente de soma nula"""
    v: np.ndarray

    def __post_init__(self):
        v = np.array(self.v, dtype=float).reshape(-1)
        if not np.all(np.isfinite(v)):
            raise DomainError("Coordenadas não finitas")
        if np.any(np.diff(v) > 1e-12):
            raise DomainError(f"Coordenadas não decrescentes: {v}")
        if abs(v.sum()) > 1e-9:
            raise DomainError(f"Coordenadas com soma {v.sum():.3e} != 0")
        v.setflags(write=False)
        object.__setattr__(self, 'v', v)

    @property
    def n(self) -> int:
        return self.v.shape[0]


# ---------------------------------------------------------------------------
# Operações
# ---------------------------------------------------------------------------

def _check_square(X: np.ndarray, name: str = "matriz") -> None:
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise DimensionError(f"{name} não é quadrada: forma {X.shape}")


def inner(X: np.ndarray, Y: np.ndarray) -> complex:
    """Produto interno invariante tr(X†Y), escalado por INNER_SCALE"""
    X = np.asarray(X)
    Y = np.asarray(Y)
    _check_square(X, "X")
    if X.shape != Y.shape:
        raise DimensionError(f"Formas diferentes: {X.shape} vs {Y.shape}")
    return complex(INNER_SCALE * np.vdot(X, Y))


def norm_sq(X: np.ndarray) -> float:
    return inner(X, X).real


def killing_scale(n: int) -> float:
    """Fator entre a forma de Killing de su(n) e a forma traço usada aqui"""
    return 2.0 * n / INNER_SCALE


def skew_residual(p: np.ndarray) -> float:
    return float(np.linalg.norm(p + p.conj().T))


def dominant_project(p: np.ndarray, tol: float = SKEW_TOL) -> Tuple[DeltaCoords, np.ndarray]:
    """Representante dominante da órbita coadjunta de p.

    Devolve as partes imaginárias dos valores próprios em ordem decrescente e
    um unitário u com u·i·diag(v)·u⁻¹ = p.
    """
    p = np.asarray(p, dtype=complex)
    _check_square(p, "p")
    if skew_residual(p) > tol:
        raise DomainError(f"Matriz não anti-hermitiana (resíduo {skew_residual(p):.3e})")
    if abs(np.trace(p)) > tol:
        raise DomainError(f"Traço não nulo: {abs(np.trace(p)):.3e}")

    hermitian = -1j * p
    hermitian = 0.5 * (hermitian + hermitian.conj().T)
    w, U = la.eigh(hermitian)
    order = np.argsort(-w, kind='stable')
    v = w[order]
    u = U[:, order]

    # Fixar a fase de cada coluna: maior entrada real positiva
    for col in range(u.shape[1]):
        idx = int(np.argmax(np.abs(u[:, col])))
        phase = u[idx, col] / abs(u[idx, col])
        u[:, col] = u[:, col] / phase

    v = v - v.mean()
    return DeltaCoords(v), u


def weyl_orbit(v: Union[DeltaCoords, Sequence[float]]) -> List[Tuple[float, ...]]:
    """Órbita de Weyl (permutações distintas), ordenada lexicograficamente"""
    values = v.v if isinstance(v, DeltaCoords) else np.asarray(v, dtype=float)
    orbit = set(itertools.permutations(float(x) for x in values))
    return sorted(orbit)


def dominance_leq(eta: Coweight, lam: Coweight) -> bool:
    """Ordem de dominância η ≤ λ entre copesos dominantes (somas parciais)"""
    if eta.n != lam.n:
        raise DimensionError("Copesos de tamanhos diferentes")
    if not eta.is_dominant() or not lam.is_dominant():
        raise DomainError("dominance_leq requer copesos dominantes")
    diff = np.array(lam.entries) - np.array(eta.entries)
    return bool(np.all(np.cumsum(diff)[:-1] >= 0))


def random_unitary(seed: Seed, n: int, real_form: bool = False) -> np.ndarray:
    """Elemento de Haar de SU(n) (ou de SO(n) com real_form)"""
    if n < 1:
        raise DomainError("n deve ser >= 1")
    if n == 1:
        return np.eye(1, dtype=complex)
    rng = make_rng(seed)
    if real_form:
        q = ortho_group.rvs(n, random_state=rng)
        if np.linalg.det(q) < 0:
            q[:, 0] = -q[:, 0]
        return q.astype(complex)

    # unitary_group usa QR de matrizes gaussianas com correção de fase
    u = unitary_group.rvs(n, random_state=rng)
    det = np.linalg.det(u)
    return u / det ** (1.0 / n)


def is_unitary(k: np.ndarray, tol: float = 1e-10) -> bool:
    k = np.asarray(k)
    if k.ndim != 2 or k.shape[0] != k.shape[1]:
        return False
    return float(np.linalg.norm(k.conj().T @ k - np.eye(k.shape[0]))) <= tol


# ---------------------------------------------------------------------------
# Reticulado de copesos
# ---------------------------------------------------------------------------

def coweights_in_ball(n: int, bound: int) -> List[Coweight]:
    """Todos os copesos de SU(n) com |entradas| <= bound"""
    if n < 1 or bound < 0:
        raise DomainError("n >= 1 e bound >= 0 são necessários")
    result = []
    for head in itertools.product(range(-bound, bound + 1), repeat=n - 1):
        last = -sum(head)
        if abs(last) <= bound:
            result.append(Coweight(tuple(head) + (last,)))
    return result


def dominant_coweights(n: int, bound: int) -> List[Coweight]:
    return [c for c in coweights_in_ball(n, bound) if c.is_dominant()]


def bruhat_interval(lam: Coweight) -> List[Coweight]:
    """Copesos dominantes η <= λ (células no fecho da célula de λ)"""
    lam = lam.dominant()
    return [eta for eta in dominant_coweights(lam.n, lam.norm) if dominance_leq(eta, lam)]


def random_coweight(seed: Seed, n: int, max_norm: int) -> Coweight:
    """Copeso uniforme na bola |entradas| <= max_norm"""
    ball = coweights_in_ball(n, max_norm)
    rng = make_rng(seed)
    return ball[int(rng.integers(len(ball)))]
