#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo de Configuração das Experiências
Versão 1.0 - Laboratório de Laços

Valores por omissão, ficheiro JSON opcional e substituições da linha de
comandos, por esta ordem de prioridade crescente.
"""

import json
import logging
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Dict, Iterable, Optional, Union

logger = logging.getLogger(__name__)

CONFIG_PATH = Path('config') / 'laboratorio.json'

TOLERANCIAS_PADRAO: Dict[str, float] = {
    'algebra': 1e-12,
    'unitarity': 1e-9,
    'based': 1e-10,
    'moment': 1e-9,
    'closed_form': 1e-12,
    'equivariance': 1e-8,
    'energy_bound': 1e-8,
    'grassmann': 1e-8,
    'symplectic': 1e-10,
    'weight': 0.0,
    'membership': 0.05,
    'vertex': 1e-6,
    'midpoint': 1e-12,
    'duistermaat': 0.1,
}

CONFIG_PADRAO: Dict[str, object] = {
    'n': 2,
    'samples': 1000,
    'depth': 3,
    'max_coweight_norm': 2,
    'e_cut': 6.0,
    'seed': 7,
    'cases': 20,
    'workers': 1,
    'midpoint_pairs': 2000,
    'vertex_bound': 6,
}


class ConfigError(ValueError):
    """Configuração inválida"""


@dataclass
class ExperimentConfig:
    """Parâmetros de uma execução do laboratório"""
    n: int = 2
    samples: int = 1000
    depth: int = 3
    max_coweight_norm: int = 2
    e_cut: float = 6.0
    seed: int = 7
    cases: int = 20
    workers: int = 1
    midpoint_pairs: int = 2000
    vertex_bound: int = 6
    tolerances: Dict[str, float] = field(default_factory=lambda: dict(TOLERANCIAS_PADRAO))

    def validate(self) -> 'ExperimentConfig':
        checks = [
            (2 <= self.n <= 4, f"n deve estar entre 2 e 4 (recebido {self.n})"),
            (self.samples >= 1, "samples deve ser >= 1"),
            (self.depth >= 1, "depth deve ser >= 1"),
            (self.cases >= 1, "cases deve ser >= 1"),
            (self.max_coweight_norm >= 0, "max_coweight_norm deve ser >= 0"),
            (self.e_cut > 0, "e_cut deve ser positivo"),
            (self.workers >= 1, "workers deve ser >= 1"),
            (self.midpoint_pairs >= 0, "midpoint_pairs deve ser >= 0"),
            (self.vertex_bound >= 0, "vertex_bound deve ser >= 0"),
            (0 <= self.seed < 2 ** 64, "seed deve ser um inteiro de 64 bits sem sinal"),
        ]
        for ok, message in checks:
            if not ok:
                raise ConfigError(message)
        for name, value in self.tolerances.items():
            if name not in TOLERANCIAS_PADRAO:
                raise ConfigError(f"Tolerância desconhecida: {name}")
            if value < 0:
                raise ConfigError(f"Tolerância negativa: {name}={value}")
        return self

    def tol(self, name: str) -> float:
        try:
            return self.tolerances[name]
        except KeyError:
            raise ConfigError(f"Tolerância desconhecida: {name}") from None

    def with_overrides(self, **overrides) -> 'ExperimentConfig':
        """Cópia com os campos indicados substituídos (valores None ignorados)"""
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values['tolerances'] = dict(self.tolerances)
        for key, value in overrides.items():
            if value is None:
                continue
            if key not in values:
                raise ConfigError(f"Parâmetro desconhecido: {key}")
            values[key] = value
        return ExperimentConfig(**values)

    def to_dict(self) -> dict:
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data['tolerances'] = dict(self.tolerances)
        return data


def parse_tolerance_overrides(items: Iterable[str]) -> Dict[str, float]:
    """Converte entradas 'nome=valor' num dicionário de tolerâncias"""
    result = {}
    for item in items or ():
        name, sep, raw = item.partition('=')
        name = name.strip()
        if not sep or not name:
            raise ConfigError(f"Tolerância mal formada (esperado nome=valor): {item}")
        if name not in TOLERANCIAS_PADRAO:
            raise ConfigError(f"Tolerância desconhecida: {name}")
        try:
            result[name] = float(raw)
        except ValueError:
            raise ConfigError(f"Valor de tolerância inválido: {item}") from None
    return result


def load_config(path: Optional[Union[str, Path]] = None) -> ExperimentConfig:
    """Carregar configuração: omissões atualizadas pelo ficheiro JSON"""
    config = dict(CONFIG_PADRAO)
    tolerances = dict(TOLERANCIAS_PADRAO)

    config_path = Path(path) if path is not None else CONFIG_PATH
    if config_path.exists():
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                saved = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Erro ao ler configuração {config_path}: {e}") from e
        if not isinstance(saved, dict):
            raise ConfigError(f"Configuração {config_path} não é um objeto JSON")
        saved = dict(saved)
        saved_tolerances = saved.pop('tolerances', {}) or {}
        unknown = set(saved) - set(CONFIG_PADRAO)
        if unknown:
            raise ConfigError(f"Parâmetros desconhecidos em {config_path}: {sorted(unknown)}")
        config.update(saved)
        tolerances.update(saved_tolerances)
        logger.debug(f"Configuração carregada de {config_path}")
    elif path is not None:
        raise ConfigError(f"Ficheiro de configuração não encontrado: {config_path}")

    return ExperimentConfig(tolerances=tolerances, **config).validate()
