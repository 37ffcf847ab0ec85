# -*- coding: utf-8 -*-
import json
from pathlib import Path

import pytest

from configuracao import (CONFIG_PADRAO, TOLERANCIAS_PADRAO, ConfigError, ExperimentConfig,
                          load_config, parse_tolerance_overrides)


def test_defaults_without_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    config = load_config()
    assert config.n == CONFIG_PADRAO['n']
    assert config.seed == 7
    assert config.tolerances == TOLERANCIAS_PADRAO


def test_file_updates_defaults(tmp_path):
    path = tmp_path / 'lab.json'
    path.write_text(json.dumps({'n': 3, 'samples': 50, 'tolerances': {'membership': 0.2}}),
                    encoding='utf-8')
    config = load_config(path)
    assert (config.n, config.samples, config.depth) == (3, 50, CONFIG_PADRAO['depth'])
    assert config.tol('membership') == 0.2
    assert config.tol('vertex') == TOLERANCIAS_PADRAO['vertex']


def test_bundled_config_is_valid():
    config = load_config(Path(__file__).resolve().parent.parent / 'config' / 'laboratorio.json')
    assert config.tol('duistermaat') == 0.1


@pytest.mark.parametrize("content", [
    {'colour': 'blue'},
    {'n': 9},
    {'tolerances': {'unknown': 1.0}},
    {'tolerances': {'vertex': -1.0}},
    [1, 2, 3],
])
def test_invalid_files(tmp_path, content):
    path = tmp_path / 'lab.json'
    path.write_text(json.dumps(content), encoding='utf-8')
    with pytest.raises(ConfigError):
        load_config(path)


def test_broken_json_and_missing_file(tmp_path):
    path = tmp_path / 'lab.json'
    path.write_text('{n: 2', encoding='utf-8')
    with pytest.raises(ConfigError):
        load_config(path)
    with pytest.raises(ConfigError):
        load_config(tmp_path / 'missing.json')


def test_overrides_ignore_none():
    base = ExperimentConfig()
    changed = base.with_overrides(n=3, seed=None, samples=10)
    assert (changed.n, changed.seed, changed.samples) == (3, base.seed, 10)
    changed.tolerances['vertex'] = 1.0
    assert base.tol('vertex') == TOLERANCIAS_PADRAO['vertex']
    with pytest.raises(ConfigError):
        base.with_overrides(colour='blue')


@pytest.mark.parametrize("field, value", [
    ('n', 1), ('n', 5), ('samples', 0), ('depth', 0), ('cases', 0), ('e_cut', 0.0),
    ('workers', 0), ('seed', -1), ('seed', 2 ** 64),
])
def test_validation(field, value):
    with pytest.raises(ConfigError):
        ExperimentConfig(**{field: value}).validate()


def test_tolerance_overrides():
    assert parse_tolerance_overrides(['vertex=1e-3', ' membership = 0.5']) == {
        'vertex': 1e-3, 'membership': 0.5}
    assert parse_tolerance_overrides(None) == {}
    for bad in (['vertex'], ['nope=1'], ['vertex=abc'], ['=1']):
        with pytest.raises(ConfigError):
            parse_tolerance_overrides(bad)
    with pytest.raises(ConfigError):
        ExperimentConfig().tol('nope')


def test_to_dict_round_trip():
    config = ExperimentConfig(n=3, seed=11)
    data = config.to_dict()
    assert data['n'] == 3 and data['tolerances']['weight'] == 0.0
    assert ExperimentConfig(**data).to_dict() == data
