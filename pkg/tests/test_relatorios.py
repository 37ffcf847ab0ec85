# -*- coding: utf-8 -*-
import json

import numpy as np
import pytest

from experiencias import sample_delta_points
from geometria_convexa import hull2d
from grassmanniana import Representation, Window, embed
from lacos import identity_loop
from momento import coweight_delta
from nucleo_lie import Coweight, DomainError
from relatorios import GeradorRelatorios, delta_columns
from validacao import SuiteResult


@pytest.fixture
def gerador():
    return GeradorRelatorios()


def test_columns():
    assert delta_columns(3) == ['energy', 'v1', 'v2', 'v3']


def test_csv_layout(tmp_path, gerador):
    points = [coweight_delta(Coweight((1, -1))), coweight_delta(Coweight((0, 0)))]
    path = gerador.export_delta_csv(points, tmp_path / 'out' / 'delta.csv')
    raw = path.read_bytes()
    assert b'\r' not in raw
    assert raw.decode('utf-8').splitlines() == ['energy,v1,v2', '1,1,-1', '0,0,0']


def test_csv_read_back_is_exact(tmp_path, gerador):
    points = sample_delta_points(2, 3, 15, 2, 2)
    path = gerador.export_delta_csv(points, tmp_path / 'delta.csv')
    back = gerador.read_delta_csv(path)
    assert [p.as_row() for p in back] == [p.as_row() for p in points]


def test_csv_is_reproducible(tmp_path, gerador):
    a = gerador.export_delta_csv(sample_delta_points(4, 2, 20, 2, 2), tmp_path / 'a.csv')
    b = GeradorRelatorios().export_delta_csv(sample_delta_points(4, 2, 20, 2, 2), tmp_path / 'b.csv')
    assert a.read_bytes() == b.read_bytes()


def test_csv_rejects_empty_and_mixed(tmp_path, gerador):
    with pytest.raises(DomainError):
        gerador.export_delta_csv([], tmp_path / 'x.csv')
    mixed = [coweight_delta(Coweight((1, -1))), coweight_delta(Coweight((1, 0, -1)))]
    with pytest.raises(DomainError):
        gerador.export_delta_csv(mixed, tmp_path / 'x.csv')


def test_csv_rejects_foreign_header(tmp_path, gerador):
    path = tmp_path / 'other.csv'
    path.write_text('x,y,z\n1,2,3\n', encoding='utf-8')
    with pytest.raises(DomainError):
        gerador.read_delta_csv(path)


def test_json_cleaning(tmp_path, gerador):
    path = gerador.write_json({'a': np.float64(1.5), 'b': np.arange(3), 'c': float('inf'),
                               'd': np.bool_(True), 'e': (np.int64(2),)}, tmp_path / 'x.json')
    text = path.read_text(encoding='utf-8')
    assert text.endswith('}\n')
    assert json.loads(text) == {'a': 1.5, 'b': [0, 1, 2], 'c': None, 'd': True, 'e': [2]}


def test_hull_and_grass_json(tmp_path, gerador):
    hull = json.loads(gerador.export_hull_json(hull2d([[0, 0], [1, 0], [0, 1]]), tmp_path / 'h.json')
                      .read_text(encoding='utf-8'))
    assert hull['dim'] == 2 and len(hull['extremes']) == 3
    W = embed(identity_loop(2), Representation.FUNDAMENTAL, Window.symmetric(1, 2))
    grass = json.loads(gerador.export_grass_json(W, tmp_path / 'g.json').read_text(encoding='utf-8'))
    assert grass['window'] == {'lo': -1, 'hi': 1, 'd': 2}


def test_report_json(tmp_path, gerador):
    results = [SuiteResult('loops.a', 'x', True, 1e-15, 3), SuiteResult('loops.b', 'y', False, 0.5, 3, 'z')]
    data = json.loads(gerador.export_report_json(results, tmp_path / 'r.json', seed=7)
                      .read_text(encoding='utf-8'))
    assert data['passed'] is False
    assert data['seed'] == 7
    assert [s['identifier'] for s in data['suites']] == ['loops.a', 'loops.b']
