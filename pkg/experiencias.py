#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Sondas Estatísticas de Convexidade
Versão 1.0 - Laboratório de Laços

Este módulo amostra pontos de Δ e compara invólucros convexos:
- Convexidade de Δ(ΩK): pontos médios e vértices dos copesos com raio +E
- Comparação entre o espaço completo e o lugar real (τ-fixo)
- Imagens pela aplicação momento do toro nos dois regimes
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from scipy.spatial import cKDTree

from configuracao import ExperimentConfig
from geometria_convexa import (HullModel, build_hull, clip_energy, clip_hull, contains,
                               hausdorff, with_recession)
from lacos import sample_loop
from momento import DeltaPoint, coweight_delta, delta, torus_image_points
from nucleo_lie import DomainError, Seed, derive_seed, dominant_coweights, make_rng

logger = logging.getLogger(__name__)

# Fluxos de sementes independentes a partir da semente principal
STREAM_DELTA = 0
STREAM_MIDPOINTS = 1


def sample_depth(seed: Seed, index: int, depth: int, stream: int = STREAM_DELTA) -> int:
    """Profundidade da amostra index, uniforme em 1..depth"""
    return int(make_rng(derive_seed(seed, stream, index)).integers(1, depth + 1))


def _sample_one(seed: Seed, index: int, n: int, depth: int, max_coweight_norm: int,
                real_locus: bool, stream: int) -> DeltaPoint:
    d = sample_depth(seed, index, depth, stream)
    gamma = sample_loop(derive_seed(seed, stream, index), n, d, max_coweight_norm, real_locus)
    return delta(gamma)


def sample_delta_points(seed: Seed, n: int, samples: int, depth: int, max_coweight_norm: int,
                        real_locus: bool = False, workers: int = 1,
                        stream: int = STREAM_DELTA) -> List[DeltaPoint]:
    """Pontos Δ de laços amostrados; a amostra i depende apenas de (seed, stream, i).

    Com a mesma semente, os regimes completo e real usam os mesmos copesos e
    profundidades, diferindo só nos conjugadores.
    """
    if samples < 1:
        raise DomainError("samples deve ser >= 1")

    def job(index: int) -> DeltaPoint:
        return _sample_one(seed, index, n, depth, max_coweight_norm, real_locus, stream)

    if workers <= 1:
        points = [job(i) for i in range(samples)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(job, range(samples)))
    logger.info(f"📊 {len(points)} pontos Δ amostrados (n={n}, real={real_locus})")
    return points


def delta_coordinates(points: Sequence[DeltaPoint]) -> np.ndarray:
    """Matriz (E, v_1, ..., v_{n-1}) dos pontos"""
    return np.array([p.coords() for p in points], dtype=float)


def _check_hull_dimension(n: int) -> None:
    if n not in (2, 3):
        raise DomainError(f"Invólucros de Δ só para n = 2 ou 3 (recebido {n})")


def coweight_vertex_coords(n: int, bound: int) -> np.ndarray:
    """Vértices (½‖λ‖², λ dominante) com |entradas| <= bound"""
    return np.array([coweight_delta(lam).coords() for lam in dominant_coweights(n, bound)])


def vertex_hull(n: int, bound: int, e_top: float) -> HullModel:
    """Invólucro dos vértices dos copesos prolongado pelo raio +E até e_top"""
    vertices = coweight_vertex_coords(n, bound)
    return build_hull(with_recession(vertices, e_top))


@dataclass
class ConvexityReport:
    """Resultado da sonda de convexidade"""
    n: int
    samples: int
    kept: int
    extremes: int
    midpoints_checked: int
    midpoint_failures: int
    midpoint_density: float
    vertex_failures: int
    vertex_max_distance: float
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class DuistermaatReport:
    """Comparação dos invólucros Δ completo e real"""
    n: int
    samples: int
    distance: float
    doubled_samples: int
    doubled_distance: float
    monotone: bool
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class TorusReport:
    """Comparação das imagens pela aplicação momento do toro"""
    n: int
    samples: int
    full_extremes: int
    real_extremes: int
    distance: float
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)


def vertex_containment(coords: np.ndarray, n: int, bound: int, tol: float) -> tuple:
    """(falhas, distância máxima) dos pontos ao invólucro dos vértices com raio"""
    coords = np.asarray(coords, dtype=float)
    vertices = coweight_vertex_coords(n, bound)
    e_top = max(float(coords[:, 0].max()) if len(coords) else 0.0, float(vertices[:, 0].max())) + 1.0
    hull = vertex_hull(n, bound, e_top)
    distances = np.array([hull.distance(x) for x in coords])
    failures = int(np.sum(distances > tol))
    return failures, float(distances.max()) if len(distances) else 0.0


def energy_hull(coords: np.ndarray, e_cut: float) -> HullModel:
    """Invólucro de todas as amostras cortado por E <= e_cut"""
    return clip_hull(build_hull(coords), e_cut)


def torus_coords(points: Sequence[DeltaPoint]) -> np.ndarray:
    """Geradores (E, w_1, ..., w_{n-1}) da imagem pelo toro: órbitas de Weyl"""
    rows = []
    for point in points:
        rows.extend(row[:-1] for row in torus_image_points(point))
    return np.array(rows, dtype=float)


class SimuladorConvexidade:
    """Sondas estatísticas de Δ(ΩK) para uma configuração do laboratório"""

    def __init__(self, config: ExperimentConfig):
        self.config = config
        self.simulations: Dict[str, Callable[[], object]] = {
            'convexity': self.convexity,
            'duistermaat': self.duistermaat,
            'torus': self.torus,
        }

    def sample(self, real_locus: bool = False, samples: Optional[int] = None) -> List[DeltaPoint]:
        """Pontos Δ da configuração; samples substitui config.samples"""
        config = self.config
        return sample_delta_points(config.seed, config.n, samples or config.samples, config.depth,
                                   config.max_coweight_norm, real_locus=real_locus,
                                   workers=config.workers)

    def convexity(self, points: Optional[Sequence[DeltaPoint]] = None) -> ConvexityReport:
        """Pontos médios das amostras com E <= e_cut e vértices dos copesos"""
        config = self.config
        _check_hull_dimension(config.n)
        if points is None:
            points = self.sample()
        coords = clip_energy(delta_coordinates(points), config.e_cut)
        if len(coords) == 0:
            raise DomainError(f"Nenhuma amostra com E <= {config.e_cut}")
        hull = build_hull(coords)

        tol = config.tol('membership')
        rng = make_rng(derive_seed(config.seed, STREAM_MIDPOINTS))
        pairs = rng.integers(len(coords), size=(config.midpoint_pairs, 2))
        midpoints = 0.5 * (coords[pairs[:, 0]] + coords[pairs[:, 1]])
        midpoint_failures = sum(1 for x in midpoints if not contains(hull, x, tol))
        density = float(cKDTree(coords).query(midpoints)[0].max()) if len(midpoints) else 0.0

        vertex_failures, vertex_max = vertex_containment(coords, config.n, config.vertex_bound,
                                                         config.tol('vertex'))
        passed = midpoint_failures == 0 and vertex_failures == 0
        logger.info(f"{'✅' if passed else '❌'} Convexidade: {len(coords)} pontos, "
                    f"{len(hull.extremes)} extremos, densidade {density:.3e}")
        return ConvexityReport(config.n, len(points), len(coords), len(hull.extremes), len(midpoints),
                               midpoint_failures, density, vertex_failures, vertex_max, passed)

    def _matched_hulls(self, samples: int, transform=delta_coordinates) -> tuple:
        """Invólucros cortados dos regimes completo e real com as mesmas sementes"""
        _check_hull_dimension(self.config.n)
        full = transform(self.sample(False, samples))
        real = transform(self.sample(True, samples))
        e_cut = self.config.e_cut
        return energy_hull(full, e_cut), energy_hull(real, e_cut)

    def duistermaat_distance(self, samples: Optional[int] = None) -> float:
        """Distância de Hausdorff entre os invólucros Δ completo e real"""
        full_hull, real_hull = self._matched_hulls(samples or self.config.samples)
        return hausdorff(full_hull, real_hull)

    def duistermaat(self) -> DuistermaatReport:
        """Δ do lugar real coincide com Δ do espaço completo; a distância não cresce com o dobro da amostra"""
        config = self.config
        distance = self.duistermaat_distance(config.samples)
        doubled = self.duistermaat_distance(2 * config.samples)
        monotone = doubled <= distance + 1e-12
        passed = distance <= config.tol('duistermaat') and monotone
        logger.info(f"{'✅' if passed else '❌'} Duistermaat: d={distance:.6g}, "
                    f"d(2N)={doubled:.6g}")
        return DuistermaatReport(config.n, config.samples, distance, 2 * config.samples,
                                 doubled, monotone, passed)

    def torus(self) -> TorusReport:
        """Imagens μ_T do espaço completo e do lugar real"""
        config = self.config
        full_hull, real_hull = self._matched_hulls(config.samples, torus_coords)
        distance = hausdorff(full_hull, real_hull)
        passed = distance <= config.tol('duistermaat')
        logger.info(f"{'✅' if passed else '❌'} Toro: d={distance:.6g}")
        return TorusReport(config.n, config.samples, len(full_hull.extremes),
                           len(real_hull.extremes), distance, passed)

    def run_simulation(self, name: str):
        """Executa a sonda indicada pelo nome"""
        if name not in self.simulations:
            raise KeyError(f"Sonda desconhecida: {name}")
        logger.info(f"🚀 Sonda {name} (n={self.config.n}, amostras={self.config.samples})")
        return self.simulations[name]()
