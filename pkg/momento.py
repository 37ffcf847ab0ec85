#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo da Aplicação Momento
Versão 1.0 - Laboratório de Laços

Avaliação da aplicação momento de S¹×K em laços algébricos:
    E(γ) = (1/4π) ∫ ‖γ⁻¹γ'‖² dθ,    p(γ) = (1/2π) ∫ γ⁻¹γ' dθ
com quadratura equiespaçada exata (8m+3 nós), a restrição ao toro, o
representante Δ na câmara positiva e as formas fechadas nos copesos.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from lacos import LoopPoly, coweight_loop, sample_angles
from nucleo_lie import (INNER_SCALE, Coweight, DeltaCoords, DomainError, bruhat_interval,
                        dominant_project, inner, weyl_orbit)

logger = logging.getLogger(__name__)

MOMENT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class MomentValue:
    """μ(γ) = (energia, p) com p anti-hermitiana de traço nulo"""
    energy: float
    p: np.ndarray

    def __post_init__(self):
        p = np.array(self.p, dtype=complex)
        p.setflags(write=False)
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'energy', float(self.energy))
        if self.energy < -MOMENT_TOL:
            raise DomainError(f"Energia negativa: {self.energy}")
        if np.linalg.norm(p + p.conj().T) > MOMENT_TOL:
            raise DomainError("p não é anti-hermitiana")
        if abs(np.trace(p)) > MOMENT_TOL:
            raise DomainError("p com traço não nulo")

    def torus(self) -> np.ndarray:
        """Projeção ortogonal de p em 𝔱 (partes imaginárias da diagonal)"""
        return np.diag(self.p).imag.copy()

    def energy_gap(self) -> float:
        """E − ½⟨p,p⟩ (não negativo pela desigualdade de Jensen)"""
        return self.energy - 0.5 * inner(self.p, self.p).real


@dataclass(frozen=True, eq=False)
class DeltaPoint:
    """Ponto de Δ: (energia, v) com v na câmara positiva"""
    energy: float
    v: DeltaCoords

    @property
    def n(self) -> int:
        return self.v.n

    def as_row(self) -> List[float]:
        return [float(self.energy)] + [float(x) for x in self.v.v]

    def coords(self) -> np.ndarray:
        """Coordenadas (E, v_1, ..., v_{n-1}); v_n é redundante"""
        return np.array(self.as_row()[:-1])


def _moment_integrand(gamma: LoopPoly) -> np.ndarray:
    count = 8 * gamma.m + 3
    thetas = sample_angles(count)
    values = gamma.eval_many(thetas)
    derivs = gamma.derivative_many(thetas)
    # γ⁻¹ = γ† no círculo
    return np.einsum('tji,tjk->tik', values.conj(), derivs)


def moment(gamma: LoopPoly) -> MomentValue:
    """Aplicação momento por quadratura equiespaçada com 8m+3 nós"""
    integrand = _moment_integrand(gamma)
    norms = INNER_SCALE * np.sum(np.abs(integrand) ** 2, axis=(1, 2))
    # (1/4π)∫ = ½ · média nos nós
    energy = 0.5 * float(np.mean(norms))
    p = integrand.mean(axis=0)
    p = 0.5 * (p - p.conj().T)
    return MomentValue(energy, p)


def moment_torus(gamma: LoopPoly) -> Tuple[float, np.ndarray]:
    """μ_T = (id × pr_𝔱) ∘ μ"""
    value = moment(gamma)
    return value.energy, value.torus()


def delta_from_moment(value: MomentValue) -> DeltaPoint:
    v, _ = dominant_project(value.p, tol=MOMENT_TOL)
    return DeltaPoint(value.energy, v)


def delta(gamma: LoopPoly) -> DeltaPoint:
    """Representante de μ(γ) na câmara positiva: (E, espectro dominante de p)"""
    return delta_from_moment(moment(gamma))


def coweight_moment(lam: Coweight) -> MomentValue:
    """Forma fechada nos pontos fixos do toro: (½‖Λ‖², Λ)"""
    big_lambda = lam.algebra_element()
    return MomentValue(0.5 * lam.norm_sq(), big_lambda)


def coweight_delta(lam: Coweight) -> DeltaPoint:
    dom = lam.dominant()
    return DeltaPoint(0.5 * dom.norm_sq(), DeltaCoords(np.array(dom.entries, dtype=float)))


def coweight_loop_moment(lam: Coweight) -> MomentValue:
    return moment(coweight_loop(lam))


def delta_batch(loops: Sequence[LoopPoly], workers: int = 1) -> List[DeltaPoint]:
    """Δ para um lote de laços; a ordem do resultado segue a ordem de entrada"""
    if workers <= 1:
        return [delta(gamma) for gamma in loops]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(delta, loops))


def torus_image_points(point: DeltaPoint) -> List[Tuple[float, ...]]:
    """Pontos (E, w) com w na órbita de Weyl de v.

    A imagem de μ_T é a união dos invólucros convexos destas órbitas.
    """
    return [(point.energy,) + w for w in weyl_orbit(point.v)]


def schubert_vertices(lam: Coweight) -> List[DeltaPoint]:
    """Vértices Δ dos pontos fixos no fecho da célula de Bruhat de λ"""
    return [coweight_delta(eta) for eta in bruhat_interval(lam)]
