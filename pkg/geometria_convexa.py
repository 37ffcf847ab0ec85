#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo de Geometria Convexa
Versão 1.0 - Laboratório de Laços

Invólucros convexos em ℝ² e ℝ³ para sondar a convexidade de Δ:
- Cadeia monótona em 2D (ordem anti-horária), Qhull em 3D
- Pertença por programação linear com tolerância euclidiana
- Distância exata ponto-invólucro e distância de Hausdorff
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, QhullError

from nucleo_lie import DomainError

logger = logging.getLogger(__name__)

DISTINCT_TOL = 1e-12
FEASIBILITY_TOL = 1e-9
INSIDE_EPS = 1e-12


def _cross(o: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    return float((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]))


def _monotone_chain(points: np.ndarray) -> List[int]:
    """Índices dos pontos extremos em ordem anti-horária (pontos já ordenados)"""
    if len(points) <= 2:
        return list(range(len(points)))
    lower: List[int] = []
    for i in range(len(points)):
        while len(lower) >= 2 and _cross(points[lower[-2]], points[lower[-1]], points[i]) <= 0:
            lower.pop()
        lower.append(i)
    upper: List[int] = []
    for i in reversed(range(len(points))):
        while len(upper) >= 2 and _cross(points[upper[-2]], points[upper[-1]], points[i]) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def _segment_distance(y: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    ab = b - a
    length_sq = float(ab @ ab)
    if length_sq == 0.0:
        return float(np.linalg.norm(y - a))
    t = min(1.0, max(0.0, float((y - a) @ ab) / length_sq))
    return float(np.linalg.norm(y - (a + t * ab)))


def _polygon_distance(y: np.ndarray, polygon: np.ndarray) -> float:
    """Distância a um polígono convexo anti-horário (ou segmento/ponto)"""
    k = len(polygon)
    if k == 1:
        return float(np.linalg.norm(y - polygon[0]))
    if k == 2:
        return _segment_distance(y, polygon[0], polygon[1])
    scale = max(1.0, float(np.abs(polygon).max()))
    edges = [(polygon[i], polygon[(i + 1) % k]) for i in range(k)]
    if all(_cross(a, b, y) >= -INSIDE_EPS * scale * scale for a, b in edges):
        return 0.0
    return min(_segment_distance(y, a, b) for a, b in edges)


def _triangle_distance(y: np.ndarray, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    normal = np.cross(b - a, c - a)
    area_sq = float(normal @ normal)
    if area_sq > 0.0:
        height = float((y - a) @ normal) / area_sq
        foot = y - height * normal
        # coordenadas baricêntricas do pé da perpendicular
        wa = float(np.cross(b - foot, c - foot) @ normal) / area_sq
        wb = float(np.cross(c - foot, a - foot) @ normal) / area_sq
        wc = 1.0 - wa - wb
        if min(wa, wb, wc) >= 0.0:
            return float(np.linalg.norm(y - foot))
    return min(_segment_distance(y, a, b), _segment_distance(y, b, c), _segment_distance(y, c, a))


@dataclass(frozen=True, eq=False)
class HullModel:
    """Pontos extremos de uma região convexa de ℝ² ou ℝ³"""
    dim: int
    extremes: np.ndarray
    tol: float = 0.0

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise DomainError(f"Dimensão {self.dim} não suportada (apenas 2 ou 3)")
        extremes = np.array(self.extremes, dtype=float).reshape(-1, self.dim)
        if len(extremes) == 0:
            raise DomainError("Invólucro sem pontos")
        if self.tol < 0:
            raise DomainError("Tolerância negativa")
        extremes.setflags(write=False)
        object.__setattr__(self, 'extremes', extremes)

    @cached_property
    def _frame(self):
        """Redução afim: centro, base ortonormada do span e posto"""
        center = self.extremes.mean(axis=0)
        offsets = self.extremes - center
        scale = max(1.0, float(np.abs(self.extremes).max()))
        _, s, vt = np.linalg.svd(offsets, full_matrices=False)
        rank = int(np.sum(s > DISTINCT_TOL * scale * max(1, len(self.extremes))))
        return center, vt[:rank].T, rank

    @cached_property
    def _reduced(self) -> np.ndarray:
        center, basis, rank = self._frame
        if rank == self.dim == 3:
            return self.extremes
        coords = self.extremes if rank == self.dim else (self.extremes - center) @ basis
        if rank == 2:
            order = np.lexsort((coords[:, 1], coords[:, 0]))
            coords = coords[order]
            return coords[_monotone_chain(coords)]
        return coords

    @cached_property
    def _qhull(self) -> Optional[ConvexHull]:
        if self.dim != 3 or self._frame[2] != 3:
            return None
        try:
            return ConvexHull(self.extremes)
        except QhullError:
            return ConvexHull(self.extremes, qhull_options='QJ')

    def distance(self, x: Sequence[float]) -> float:
        """Distância euclidiana exata de x ao invólucro"""
        x = self._check_point(x)
        center, basis, rank = self._frame
        if rank == self.dim:
            if self.dim == 2:
                return _polygon_distance(x, self._reduced)
            return self._distance_3d(x)
        offset = x - center
        y = offset @ basis
        perp = float(np.linalg.norm(offset - basis @ y)) if rank > 0 else float(np.linalg.norm(offset))
        if rank == 0:
            return perp
        reduced = self._reduced
        if rank == 1:
            t = reduced[:, 0]
            inside = max(0.0, float(t.min() - y[0]), float(y[0] - t.max()))
        else:
            inside = _polygon_distance(y, reduced)
        return float(np.hypot(inside, perp))

    def _distance_3d(self, x: np.ndarray) -> float:
        hull = self._qhull
        scale = max(1.0, float(np.abs(self.extremes).max()))
        if float(np.max(hull.equations[:, :3] @ x + hull.equations[:, 3])) <= INSIDE_EPS * scale:
            return 0.0
        pts = hull.points
        return min(_triangle_distance(x, pts[i], pts[j], pts[k]) for i, j, k in hull.simplices)

    def _check_point(self, x: Sequence[float]) -> np.ndarray:
        x = np.asarray(x, dtype=float).reshape(-1)
        if x.shape[0] != self.dim:
            raise DomainError(f"Ponto de dimensão {x.shape[0]} para invólucro de dimensão {self.dim}")
        return x

    def centroid(self) -> np.ndarray:
        return self.extremes.mean(axis=0)

    def to_dict(self) -> dict:
        return {'dim': self.dim, 'extremes': self.extremes.tolist(), 'tol': self.tol}


def _validated_points(points: Sequence[Sequence[float]], dim: int) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        raise DomainError("Conjunto de pontos vazio")
    pts = pts.reshape(-1, dim)
    if not np.all(np.isfinite(pts)):
        raise DomainError("Pontos com coordenadas não finitas")
    return np.unique(pts, axis=0)


def _prune_extremes(extremes: np.ndarray, dim: int, tol: float) -> np.ndarray:
    """Remove extremos a distância <= DISTINCT_TOL do invólucro dos restantes"""
    keep = list(range(len(extremes)))
    changed = True
    while changed and len(keep) > 1:
        changed = False
        for idx in list(keep):
            others = [i for i in keep if i != idx]
            if HullModel(dim, extremes[others]).distance(extremes[idx]) <= DISTINCT_TOL:
                keep.remove(idx)
                changed = True
                logger.debug(f"Extremo {idx} removido (interior numérico)")
                break
    return extremes[keep]


def hull2d(points: Sequence[Sequence[float]], tol: float = 0.0, verify: bool = True) -> HullModel:
    """Invólucro 2D pela cadeia monótona; extremos em ordem anti-horária"""
    pts = _validated_points(points, 2)
    extremes = pts[_monotone_chain(pts)]
    if verify and len(extremes) > 2:
        extremes = _prune_extremes(extremes, 2, tol)
    return HullModel(2, extremes, tol)


def hull3d(points: Sequence[Sequence[float]], tol: float = 0.0, verify: bool = True) -> HullModel:
    """Invólucro 3D (Qhull); conjuntos degenerados são tratados pelo span afim"""
    pts = _validated_points(points, 3)
    trial = HullModel(3, pts, tol)
    center, basis, rank = trial._frame
    if rank == 3:
        extremes = pts[np.sort(trial._qhull.vertices)]
    elif rank == 2:
        coords = (pts - center) @ basis
        order = np.lexsort((coords[:, 1], coords[:, 0]))
        extremes = pts[order][_monotone_chain(coords[order])]
    elif rank == 1:
        t = (pts - center) @ basis[:, 0]
        extremes = pts[[int(np.argmin(t)), int(np.argmax(t))]]
    else:
        extremes = pts[:1]
    if verify and len(extremes) > 2:
        extremes = _prune_extremes(extremes, 3, tol)
    return HullModel(3, extremes, tol)


def build_hull(points: Sequence[Sequence[float]], tol: float = 0.0, verify: bool = True) -> HullModel:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] == 0:
        raise DomainError("Conjunto de pontos vazio ou mal formado")
    if pts.shape[1] == 2:
        return hull2d(pts, tol, verify)
    if pts.shape[1] == 3:
        return hull3d(pts, tol, verify)
    raise DomainError(f"Dimensão {pts.shape[1]} não suportada")


def lp_member(h: HullModel, x: Sequence[float]) -> bool:
    """Viabilidade de Σλ_i e_i = x, Σλ_i = 1, λ >= 0 (HiGHS)"""
    x = h._check_point(x)
    k = len(h.extremes)
    a_eq = np.vstack([h.extremes.T, np.ones((1, k))])
    b_eq = np.concatenate([x, [1.0]])
    result = linprog(np.zeros(k), A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method='highs',
                     options={'primal_feasibility_tolerance': FEASIBILITY_TOL})
    return result.status == 0


def contains(h: HullModel, x: Sequence[float], tol: Optional[float] = None) -> bool:
    """x está a distância <= tol de conv(extremos)"""
    tol = h.tol if tol is None else tol
    x = h._check_point(x)
    if h.distance(x) <= tol:
        return True
    return lp_member(h, x) if tol == 0.0 else False


def directed_distance(a: HullModel, b: HullModel) -> float:
    """max_{x ∈ conv(a)} dist(x, conv(b)), atingido num vértice de a"""
    if a.dim != b.dim:
        raise DomainError("Invólucros de dimensões diferentes")
    return max(b.distance(e) for e in a.extremes)


def hausdorff(a: HullModel, b: HullModel) -> float:
    return max(directed_distance(a, b), directed_distance(b, a))


def clip_energy(points: np.ndarray, e_cut: float) -> np.ndarray:
    """Interseção com o semi-espaço E <= e_cut (E na primeira coordenada)"""
    points = np.asarray(points, dtype=float)
    return points[points[:, 0] <= e_cut]


def clip_hull(h: HullModel, e_cut: float) -> HullModel:
    """conv(extremos) ∩ {E <= e_cut}.

    Os vértices do corte são os extremos abaixo do plano e as interseções
    do plano E = e_cut com os segmentos que o atravessam.
    """
    below = h.extremes[h.extremes[:, 0] <= e_cut]
    above = h.extremes[h.extremes[:, 0] > e_cut]
    if len(below) == 0:
        raise DomainError(f"Invólucro sem pontos com E <= {e_cut}")
    if len(above) == 0:
        return h
    a, b = below[:, None, :], above[None, :, :]
    t = (e_cut - a[..., 0]) / (b[..., 0] - a[..., 0])
    crossings = a + t[..., None] * (b - a)
    crossings[..., 0] = e_cut
    return build_hull(np.vstack([below, crossings.reshape(-1, h.dim)]), h.tol)


def with_recession(vertices: np.ndarray, e_top: float) -> np.ndarray:
    """Acrescenta a cada vértice o ponto deslocado até E = e_top (raio +E)"""
    vertices = np.asarray(vertices, dtype=float)
    lifted = vertices.copy()
    lifted[:, 0] = np.maximum(lifted[:, 0], e_top)
    return np.vstack([vertices, lifted])
