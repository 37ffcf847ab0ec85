#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo de Exportação de Resultados
Versão 1.0 - Laboratório de Laços

Ficheiros de saída deterministas:
- CSV de pontos Δ (energy,v1,...,vn), fim de linha LF, 17 algarismos significativos
- JSON de invólucros, subespaços da Grassmanniana e relatórios de suítes
"""

import json
import logging
import math
from pathlib import Path
from typing import Iterable, List, Sequence, Union

import numpy as np
import pandas as pd

from geometria_convexa import HullModel
from grassmanniana import GrassPoint
from momento import DeltaPoint
from nucleo_lie import DeltaCoords, DomainError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
FLOAT_FORMAT = '%.17g'


def delta_columns(n: int) -> List[str]:
    return ['energy'] + [f'v{i}' for i in range(1, n + 1)]


def delta_frame(points: Sequence[DeltaPoint]) -> pd.DataFrame:
    """DataFrame com uma linha por ponto, pela ordem de amostragem"""
    if not points:
        raise DomainError("Sem pontos para exportar")
    n = points[0].n
    if any(p.n != n for p in points):
        raise DomainError("Pontos Δ de grupos diferentes")
    return pd.DataFrame([p.as_row() for p in points], columns=delta_columns(n))


def _clean(value):
    """Converte valores numpy em tipos JSON; não finitos passam a None"""
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    if isinstance(value, np.ndarray):
        return _clean(value.tolist())
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, (np.bool_,)):
        return bool(value)
    return value


def _prepare(path: PathLike) -> Path:
    path = Path(path)
    if path.parent != Path('.'):
        path.parent.mkdir(parents=True, exist_ok=True)
    return path


class GeradorRelatorios:
    """Escreve os ficheiros de resultados do laboratório"""

    def __init__(self, float_format: str = FLOAT_FORMAT, indent: int = 2):
        self.float_format = float_format
        self.indent = indent

    def export_delta_csv(self, points: Sequence[DeltaPoint], path: PathLike) -> Path:
        path = _prepare(path)
        delta_frame(points).to_csv(path, index=False, float_format=self.float_format,
                                   lineterminator='\n')
        logger.info(f"💾 {len(points)} pontos Δ exportados para {path}")
        return path

    @staticmethod
    def read_delta_csv(path: PathLike) -> List[DeltaPoint]:
        """Lê um CSV produzido por export_delta_csv"""
        df = pd.read_csv(path, float_precision='round_trip')
        if list(df.columns[:1]) != ['energy'] or len(df.columns) < 3:
            raise DomainError(f"Cabeçalho inesperado em {path}: {list(df.columns)}")
        values = df.to_numpy(dtype=float)
        return [DeltaPoint(row[0], DeltaCoords(row[1:])) for row in values]

    def write_json(self, data, path: PathLike) -> Path:
        path = _prepare(path)
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            json.dump(_clean(data), f, indent=self.indent, ensure_ascii=False)
            f.write('\n')
        logger.debug(f"JSON escrito em {path}")
        return path

    def export_hull_json(self, hull: HullModel, path: PathLike) -> Path:
        return self.write_json(hull.to_dict(), path)

    def export_grass_json(self, W: GrassPoint, path: PathLike) -> Path:
        return self.write_json(W.to_dict(), path)

    def export_report_json(self, results: Iterable, path: PathLike, **extra) -> Path:
        """Relatório de suítes: {'suites': [...], 'passed': bool, ...}"""
        rows = [r.to_dict() for r in results]
        data = {'suites': rows, 'passed': all(r['passed'] for r in rows)}
        data.update(extra)
        path = self.write_json(data, path)
        logger.info(f"💾 Relatório de {len(rows)} suítes em {path}")
        return path
