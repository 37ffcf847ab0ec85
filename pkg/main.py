#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Laboratório de Laços - Linha de Comandos
Versão: 1.0
Descrição: Amostragem de laços em SU(n), suítes de invariantes, sondas de
convexidade e verificações do modelo Grassmanniano, com saídas reprodutíveis.

Códigos de saída: 0 sucesso, 1 falha de verificação ou erro do laboratório,
2 erro de utilização ou de configuração.
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from configuracao import ConfigError, ExperimentConfig, load_config, parse_tolerance_overrides
from experiencias import SimuladorConvexidade, coweight_vertex_coords
from grassmanniana import Representation, weight_energy_table
from momento import coweight_delta
from nucleo_lie import LabError, dominant_coweights
from relatorios import GeradorRelatorios
from validacao import ValidadorInvariantes
from visualizacoes import VisualizacoesDelta

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def setup_logging(level: int = logging.INFO) -> None:
    """Ficheiro logs/laboratorio.log e stderr; o stdout fica reservado aos relatórios"""
    os.makedirs('logs', exist_ok=True)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler('logs/laboratorio.log', encoding='utf-8'),
            logging.StreamHandler(sys.stderr),
        ],
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--n', type=int, help='SU(n), 2 <= n <= 4')
    common.add_argument('--seed', type=int, help='semente principal (64 bits)')
    common.add_argument('--samples', type=int, help='número de amostras')
    common.add_argument('--depth', type=int, help='profundidade máxima do amostrador')
    common.add_argument('--max-coweight-norm', dest='max_coweight_norm', type=int)
    common.add_argument('--e-cut', dest='e_cut', type=float, help='corte de energia E <= e_cut')
    common.add_argument('--cases', type=int, help='casos por suíte de invariantes')
    common.add_argument('--workers', type=int, help='threads de trabalho')
    common.add_argument('--config', type=Path, help='ficheiro JSON de configuração')
    common.add_argument('--tol', action='append', default=[], metavar='NOME=VALOR',
                        help='substitui uma tolerância (repetível)')
    common.add_argument('--report', type=Path, help='relatório JSON')
    common.add_argument('--verbose', action='store_true', help='logging DEBUG')

    parser = argparse.ArgumentParser(prog='laboratorio',
                                     description='Laboratório numérico de grupos de laços')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('sample', parents=[common], help='pontos Δ para CSV')
    p.add_argument('--out', type=Path, default=Path('delta_points.csv'))
    p.add_argument('--real-locus', action='store_true', help='amostrar o lugar real τ-fixo')

    sub.add_parser('verify', parents=[common], help='todas as suítes de invariantes')

    sub.add_parser('duistermaat', parents=[common], help='Δ completo contra Δ do lugar real')

    p = sub.add_parser('grassmann-check', parents=[common], help='suítes Gr₀^𝔨 e forma simplética')
    p.add_argument('--bound', type=int, default=2, help='copesos da tabela peso/energia')

    p = sub.add_parser('vertices', parents=[common], help='vértices (½‖λ‖², λ) para CSV')
    p.add_argument('--bound', type=int, help='|entradas| <= bound')
    p.add_argument('--out', type=Path, default=Path('vertices.csv'))

    p = sub.add_parser('plot', parents=[common], help='dispersão SVG de Δ para SU(2)')
    p.add_argument('--out', type=Path, default=Path('delta.svg'))

    sub.add_parser('convexity', parents=[common], help='sonda de convexidade de Δ')

    sub.add_parser('torus', parents=[common], help='imagens μ_T completa e real')
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    config = load_config(args.config)
    config = config.with_overrides(n=args.n, seed=args.seed, samples=args.samples,
                                   depth=args.depth, max_coweight_norm=args.max_coweight_norm,
                                   e_cut=args.e_cut, cases=args.cases, workers=args.workers)
    config.tolerances.update(parse_tolerance_overrides(args.tol))
    return config.validate()


def cmd_sample(args, config: ExperimentConfig) -> int:
    points = SimuladorConvexidade(config).sample(real_locus=args.real_locus)
    GeradorRelatorios().export_delta_csv(points, args.out)
    print(f"samples={len(points)} out={args.out}")
    return EXIT_OK


def _suite_command(results, args, config: ExperimentConfig) -> int:
    print(ValidadorInvariantes.format_report(results), end='')
    if args.report:
        GeradorRelatorios().export_report_json(results, args.report, config=config.to_dict())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILURE


def cmd_verify(args, config: ExperimentConfig) -> int:
    return _suite_command(ValidadorInvariantes(config).run_all(), args, config)


def cmd_grassmann_check(args, config: ExperimentConfig) -> int:
    status = _suite_command(ValidadorInvariantes(config).run_grassmann(), args, config)
    print("coweight,energy,weight")
    for rep in Representation:
        print(f"# {rep.value}")
        for row in weight_energy_table(2, args.bound, rep):
            entries = ' '.join(str(e) for e in row['coweight'])
            print(f"({entries}),{row['energy']:.17g},{row['weight']}")
    return status


def cmd_duistermaat(args, config: ExperimentConfig) -> int:
    report = SimuladorConvexidade(config).run_simulation('duistermaat')
    print(f"hausdorff={report.distance:.17g}")
    print(f"hausdorff_doubled={report.doubled_distance:.17g}")
    print(f"monotone={report.monotone} passed={report.passed}")
    if args.report:
        GeradorRelatorios().write_json(report.to_dict(), args.report)
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_vertices(args, config: ExperimentConfig) -> int:
    bound = config.vertex_bound if args.bound is None else args.bound
    points = [coweight_delta(lam) for lam in dominant_coweights(config.n, bound)]
    GeradorRelatorios().export_delta_csv(points, args.out)
    print(f"vertices={len(points)} out={args.out}")
    return EXIT_OK


def cmd_plot(args, config: ExperimentConfig) -> int:
    if config.n != 2:
        raise ConfigError("plot requer --n 2")
    points = SimuladorConvexidade(config).sample()
    vertices = coweight_vertex_coords(2, config.vertex_bound)
    VisualizacoesDelta().plot_delta_svg(points, args.out, vertices=vertices, e_cut=config.e_cut)
    print(f"plot={args.out}")
    return EXIT_OK


def cmd_convexity(args, config: ExperimentConfig) -> int:
    report = SimuladorConvexidade(config).run_simulation('convexity')
    for key, value in report.to_dict().items():
        print(f"{key}={value}")
    if args.report:
        GeradorRelatorios().write_json(report.to_dict(), args.report)
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_torus(args, config: ExperimentConfig) -> int:
    report = SimuladorConvexidade(config).run_simulation('torus')
    print(f"hausdorff={report.distance:.17g} passed={report.passed}")
    if args.report:
        GeradorRelatorios().write_json(report.to_dict(), args.report)
    return EXIT_OK if report.passed else EXIT_FAILURE


COMMANDS = {
    'sample': cmd_sample,
    'verify': cmd_verify,
    'duistermaat': cmd_duistermaat,
    'grassmann-check': cmd_grassmann_check,
    'vertices': cmd_vertices,
    'plot': cmd_plot,
    'convexity': cmd_convexity,
    'torus': cmd_torus,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    setup_logging(logging.DEBUG if args.verbose else logging.INFO)
    try:
        config = config_from_args(args)
        logger.info(f"🚀 {args.command}: n={config.n}, seed={config.seed}, samples={config.samples}")
        return COMMANDS[args.command](args, config)
    except ConfigError as e:
        logger.error(f"❌ {e}")
        print(f"erro: {e}", file=sys.stderr)
        return EXIT_USAGE
    except LabError as e:
        logger.error(f"❌ {args.command} falhou: {e}")
        print(f"erro: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except Exception as e:
        logger.exception(f"❌ Erro inesperado: {e}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
