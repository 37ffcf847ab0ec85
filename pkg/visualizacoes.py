#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo de Visualizações
Dispersão SVG dos pontos Δ de SU(2) com os vértices dos copesos
"""

import logging
from pathlib import Path
from typing import Optional, Sequence, Union

import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import seaborn as sns  # noqa: E402

from momento import DeltaPoint  # noqa: E402
from nucleo_lie import DomainError  # noqa: E402

logger = logging.getLogger(__name__)

# SVG em pontos (72 por polegada): 800×600
DPI = 72
FIGSIZE = (800 / DPI, 600 / DPI)


class VisualizacoesDelta:
    """Gráficos SVG reprodutíveis dos pontos Δ"""

    def __init__(self, hashsalt: str = 'laboratorio-lacos'):
        self.hashsalt = hashsalt
        self._configurar_estilo()

    def _configurar_estilo(self):
        sns.set_theme(style='whitegrid')
        # ids SVG estáveis entre execuções
        plt.rcParams['svg.hashsalt'] = self.hashsalt

    def plot_delta_svg(self, points: Sequence[DeltaPoint], path: Union[str, Path],
                       vertices: Optional[np.ndarray] = None, e_cut: Optional[float] = None,
                       title: str = "Δ(Ω_alg SU(2))") -> Path:
        """Grava uma dispersão 800×600: v₁ na horizontal, E na vertical.

        vertices são linhas (E, v₁) desenhadas com marcadores distintos.
        """
        if not points:
            raise DomainError("Sem pontos para desenhar")
        if points[0].n != 2:
            raise DomainError("O gráfico só suporta SU(2)")
        path = Path(path)
        if path.parent != Path('.'):
            path.parent.mkdir(parents=True, exist_ok=True)

        energy = np.array([p.energy for p in points])
        v1 = np.array([p.v.v[0] for p in points])

        self._configurar_estilo()
        fig, ax = plt.subplots(figsize=FIGSIZE, dpi=DPI)
        try:
            sns.scatterplot(x=v1, y=energy, s=8, alpha=0.5, linewidth=0, ax=ax, label='amostras')
            if vertices is not None and len(vertices):
                self._draw_vertices(ax, np.asarray(vertices, dtype=float), e_cut)
            if e_cut is not None:
                ax.axhline(e_cut, color='gray', linestyle='--', linewidth=1)
            ax.set_xlabel('v₁')
            ax.set_ylabel('E')
            ax.set_title(title)
            ax.legend(loc='upper left')
            fig.savefig(path, format='svg', metadata={'Date': None})
        finally:
            plt.close(fig)
        logger.info(f"📈 Gráfico gravado em {path}")
        return path

    @staticmethod
    def _draw_vertices(ax, vertices: np.ndarray, e_cut: Optional[float]):
        if e_cut is not None:
            vertices = vertices[vertices[:, 0] <= e_cut]
        ax.scatter(vertices[:, 1], vertices[:, 0], marker='D', s=60, color='crimson',
                   edgecolor='black', zorder=3, label='copesos')
