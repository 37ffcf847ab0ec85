# -*- coding: utf-8 -*-
import json

import pytest

from configuracao import ExperimentConfig
from experiencias import SimuladorConvexidade
from main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_sample_is_byte_identical(workdir, capsys):
    args = ['--n', '3', '--samples', '40', '--seed', '11', '--depth', '2']
    assert main(['sample', *args, '--out', 'a.csv']) == EXIT_OK
    assert main(['sample', *args, '--out', 'b.csv', '--workers', '3']) == EXIT_OK
    assert (workdir / 'a.csv').read_bytes() == (workdir / 'b.csv').read_bytes()
    lines = (workdir / 'a.csv').read_text(encoding='utf-8').splitlines()
    assert lines[0] == 'energy,v1,v2,v3' and len(lines) == 41
    assert 'samples=40' in capsys.readouterr().out


def test_real_locus_sample(workdir):
    assert main(['sample', '--samples', '10', '--real-locus', '--out', 'r.csv']) == EXIT_OK
    assert (workdir / 'r.csv').exists()


@pytest.mark.parametrize("argv", [
    ['explode'],
    ['verify', '--tol', 'nope=1'],
    ['verify', '--tol', 'vertex'],
    ['sample', '--n', '5'],
    ['sample', '--samples', '0'],
    ['verify', '--config', 'missing.json'],
    ['plot', '--n', '3'],
])
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


@pytest.mark.parametrize("command", ['convexity', 'duistermaat', 'torus'])
def test_lab_errors_exit_with_failure(command, capsys):
    assert main([command, '--n', '4', '--samples', '5']) == EXIT_FAILURE
    assert 'erro:' in capsys.readouterr().err


def test_help_exits_cleanly(capsys):
    assert main(['--help']) == EXIT_OK
    assert 'grassmann-check' in capsys.readouterr().out


def test_verify_small(workdir, capsys):
    assert main(['verify', '--cases', '2', '--report', 'verify.json']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.rstrip().endswith('suites passed')
    report = json.loads((workdir / 'verify.json').read_text(encoding='utf-8'))
    assert report['passed'] is True
    assert report['config']['cases'] == 2


def test_duistermaat_output_matches_library(capsys):
    main(['duistermaat', '--samples', '100', '--seed', '3'])
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith('hausdorff=')
    expected = SimuladorConvexidade(ExperimentConfig(samples=100, seed=3).validate()).duistermaat_distance()
    assert float(lines[0].split('=', 1)[1]) == expected


def test_vertices_csv(workdir):
    assert main(['vertices', '--n', '2', '--bound', '2', '--out', 'v.csv']) == EXIT_OK
    lines = (workdir / 'v.csv').read_text(encoding='utf-8').splitlines()
    assert lines == ['energy,v1,v2', '0,0,0', '1,1,-1', '4,2,-2']


def test_plot_svg(workdir):
    assert main(['plot', '--samples', '50', '--out', 'delta.svg']) == EXIT_OK
    assert 'viewBox="0 0 800 600"' in (workdir / 'delta.svg').read_text(encoding='utf-8')


def test_grassmann_check(capsys):
    assert main(['grassmann-check', '--cases', '1', '--bound', '1']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'coweight,energy,weight' in out
    assert '(1 -1),1,-1' in out
    assert '(0 0),0,0' in out
