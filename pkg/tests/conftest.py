# -*- coding: utf-8 -*-
"""Fixtures partilhadas pelos testes do laboratório"""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from configuracao import ExperimentConfig
from lacos import tangent_from_pairs

settings.register_profile(
    'laboratorio',
    deadline=None,
    max_examples=20,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile('laboratorio')


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def small_config():
    """Configuração leve para testes rápidos"""
    return ExperimentConfig(n=2, samples=200, depth=2, max_coweight_norm=2, e_cut=6.0,
                            seed=7, cases=3, midpoint_pairs=200).validate()


@pytest.fixture
def e12():
    m = np.zeros((2, 2), dtype=complex)
    m[0, 1] = 1.0
    return m


@pytest.fixture
def e12_pair(e12):
    """X com A₁ = E₁₂ e Y com B₁ = i·E₁₂ (ω(X,Y) = −2)"""
    return tangent_from_pairs(2, {1: e12}), tangent_from_pairs(2, {1: 1j * e12})


def random_skew(rng: np.random.Generator, n: int) -> np.ndarray:
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    x = a - a.conj().T
    return x - np.trace(x) / n * np.eye(n)


@pytest.fixture
def skew():
    return random_skew
