import argparse
import logging
import os
import sys

import pandas as pd

from absred.blocks import normalize
from absred.extract import extract_cycle_datum
from absred.omega import omega_from_grid
from absred.two_dim import normalize2
from algebra.field import FieldSpec
from classify.catalog import classified_grids, classify_shape
from classify.cycle import enumerate_cycle_data
from classify.rank_one import enumerate_rank1_data, idempotent_functions
from oracle.compare import GridSet, compare_sets
from oracle.search import brute_force_twisting_maps
from quiver.quiver import Quiver, export_dot, quiver_rrank, rank, rrank, shape_from_arrows
from twisting.grid import check_axioms
from twisting.pair import grid_from_pair
from twisting.product import build_twisted_algebra
from utils import serialize
from utils.config import DEFAULT_SEED, RunConfig
from utils.errors import EXIT_MATH, EXIT_OK, InputError, TwistlabError
from utils.logger import setup_logger

logger = logging.getLogger(__name__)

BUILTIN_SHAPES = "loop, 2cycle, path:N, loops:N"


def _common_flags():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--verbose', action='store_true', help='Enable verbose logging')
    parent.add_argument('--seed', type=int, default=DEFAULT_SEED, help='Seed for every random draw')
    parent.add_argument('--budget', type=int, default=None,
                        help='Search node budget (overrides TWISTLAB_BUDGET)')
    parent.add_argument('--log-dir', type=str, default='logs', help='Directory for run logs')
    parent.add_argument('--output', type=str, default=None, help='Output file (default: stdout)')
    parent.add_argument('--csv', type=str, default=None, help='Also write the summary table as CSV')
    return parent


def parse_args(argv=None):
    common = _common_flags()
    parser = argparse.ArgumentParser(prog='twistlab', description='Twisting maps between K^n and K^m')
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', parents=[common], help='Check the twisting axioms of a grid')
    verify.add_argument('input', help='Grid JSON file')

    build = commands.add_parser('build', parents=[common], help='Twisted algebra of a grid')
    build.add_argument('input', help='Grid JSON file')

    classify = commands.add_parser('classify', parents=[common], help='Classified twisting maps on a shape')
    classify.add_argument('--shape', type=str, default=None, help=f'Quiver JSON file or one of {BUILTIN_SHAPES}')
    classify.add_argument('--all', action='store_true', help='Every rank-one shape on --n vertices')
    classify.add_argument('--n', type=int, default=None, help='Number of vertices with --all')
    classify.add_argument('--m', type=int, required=True, help='Dimension of K^m')
    classify.add_argument('--field', type=str, default='q', help="'q' or 'p:K'")
    classify.add_argument('--sample', type=int, default=1, help='Draws per free family over the rationals')

    enumerate_ = commands.add_parser('enumerate', parents=[common], help='Classification data')
    enumerate_.add_argument('--kind', choices=['idempotent', 'rank1', 'cycle'], required=True)
    enumerate_.add_argument('--m', type=int, required=True, help='Dimension of K^m')
    enumerate_.add_argument('--field', type=str, default='q', help="'q' or 'p:K'")
    enumerate_.add_argument('--shape', type=str, default=None, help=f'Shape for rank1: file or {BUILTIN_SHAPES}')
    enumerate_.add_argument('--roots-identity', action='store_true',
                            help='Force Id at vertices without incoming arrows')

    oracle = commands.add_parser('oracle', parents=[common], help='Brute-force every grid over F_p')
    oracle.add_argument('--n', type=int, required=True)
    oracle.add_argument('--m', type=int, required=True)
    oracle.add_argument('--p', type=int, required=True)
    oracle.add_argument('--no-prune', action='store_true', help='Scan every grid with the full axiom check')
    oracle.add_argument('--compare', type=str, default=None, help='Grid set JSON to compare against')
    oracle.add_argument('--progress', action='store_true', help='Show progress bars')

    normalize_ = commands.add_parser('normalize', parents=[common], help='Normalized matrix of an H_u-orbit')
    normalize_.add_argument('input', help='JSON file with field, X and u')

    extract = commands.add_parser('extract', parents=[common], help='2-cycle data of a 2-vertex grid')
    extract.add_argument('input', help='2-vertex grid JSON file or omega list JSON file')

    export = commands.add_parser('export', parents=[common], help='Export the quiver of a grid')
    export.add_argument('--dot', dest='input', required=True, help='Grid JSON file')

    return parser.parse_args(argv)


def parse_shape(text):
    """
    Read a shape from a quiver JSON file or a builtin name.

    Args:
        text: File path, 'loop', '2cycle', 'path:N' or 'loops:N'

    Returns:
        AdmissibleShape
    """
    if os.path.exists(text):
        return serialize.shape_from_json(serialize.read_document(text))
    name, _, size = text.partition(':')
    if name == 'loop' and not size:
        return shape_from_arrows(1, [])
    if name == '2cycle' and not size:
        return shape_from_arrows(2, [(0, 1), (1, 0)])
    if name in ('path', 'loops'):
        try:
            n = int(size)
        except ValueError:
            raise InputError(f"cannot read vertex count from {text!r}")
        if n < 1:
            raise InputError(f"shape {text!r} needs at least one vertex")
        arrows = [(i, i + 1) for i in range(n - 1)] if name == 'path' else []
        return shape_from_arrows(n, arrows)
    raise InputError(f"unknown shape {text!r}; give a quiver file or one of {BUILTIN_SHAPES}")


def emit_table(df, config):
    logger.info("\n" + (df.to_string(index=False) if len(df) else "(empty)"))
    path = config.options.get('csv')
    if path:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        df.to_csv(path, index=False)
        logger.info(f"Table saved to {path}")


def emit(payload, config):
    serialize.write_document(serialize.document(payload, config.seed), config.output_path)


def _support_quiver(g):
    return Quiver(g.n, tuple(g.support()))


def cmd_verify(config):
    g = serialize.grid_from_json(serialize.read_document(config.input_path))
    report = check_axioms(g)
    quiver = _support_quiver(g)
    emit_table(pd.DataFrame([{'axiom': r.name, 'passed': r.passed, 'witness': r.describe_witness()}
                             for r in report.results]), config)
    emit({
        'report': serialize.axiom_report_to_json(report),
        'quiver': serialize.quiver_to_json(quiver),
        'rank': [rank(quiver, i) for i in range(quiver.n)],
        'rrank': [rrank(quiver, i) for i in range(quiver.n)],
    }, config)
    if not report.passed:
        failure = report.first_failure
        logger.error(f"Grid violates {failure.name} at {failure.describe_witness()}")
        return EXIT_MATH
    logger.info(f"All axioms hold; quiver rrank {quiver_rrank(quiver)}")
    return EXIT_OK


def cmd_build(config):
    g = serialize.grid_from_json(serialize.read_document(config.input_path))
    report = check_axioms(g)
    if not report.passed:
        failure = report.first_failure
        logger.error(f"Grid violates {failure.name} at {failure.describe_witness()}")
        return EXIT_MATH
    emit({'algebra': serialize.twisted_algebra_to_json(build_twisted_algebra(g))}, config)
    return EXIT_OK


def cmd_classify(config):
    field = FieldSpec.parse(config.field_text)
    samples = config.options['sample']
    rng = config.rng()
    if config.options['all']:
        if config.n is None:
            raise InputError("--all needs --n")
        grids = classified_grids(config.n, config.m, field, rng=rng, samples=samples, progress=config.options['verbose'])
        emit_table(pd.DataFrame([{'n': config.n, 'm': config.m, 'field': field.label, 'grids': len(grids)}]), config)
    elif config.options['shape']:
        shape = parse_shape(config.options['shape'])
        grids = GridSet(grid_from_pair(pair) for pair in classify_shape(shape, config.m, field, rng=rng, samples=samples))
        arrows = ' '.join(arrow.label() for arrow in shape.non_loop_arrows()) or '-'
        emit_table(pd.DataFrame([{'shape': arrows, 'm': config.m, 'field': field.label, 'grids': len(grids)}]), config)
    else:
        raise InputError("classify needs --shape or --all --n N")
    emit({'count': len(grids), 'grids': serialize.gridset_to_json(grids)}, config)
    return EXIT_OK


def cmd_enumerate(config):
    field = FieldSpec.parse(config.field_text)
    kind = config.options['kind']
    m = config.m
    if kind == 'idempotent':
        functions = list(idempotent_functions(m))
        payload = {'kind': kind, 'm': m, 'functions': [[v + 1 for v in u] for u in functions]}
        count = len(functions)
    elif kind == 'rank1':
        if not config.options['shape']:
            raise InputError("--kind rank1 needs --shape")
        shape = parse_shape(config.options['shape'])
        data = list(enumerate_rank1_data(shape, m, field, roots_identity=config.options['roots_identity']))
        payload = {'kind': kind, 'm': m, 'data': [serialize.rank_one_datum_to_json(d) for d in data]}
        count = len(data)
    else:
        data = enumerate_cycle_data(m, field)
        if field.is_finite:
            payload = {'kind': kind, 'm': m, 'data': [serialize.cycle_datum_to_json(d) for d in data]}
        else:
            rng = config.rng()
            payload = {
                'kind': kind,
                'm': m,
                'families': [serialize.cycle_family_to_json(family) for family in data],
                'samples': [serialize.cycle_datum_to_json(family.sample(field, rng)) for family in data],
            }
        count = len(data)
    emit_table(pd.DataFrame([{'kind': kind, 'm': m, 'field': field.label, 'count': count}]), config)
    emit(payload, config)
    return EXIT_OK


def cmd_oracle(config):
    options = config.options
    prune = not options['no_prune']
    grids = brute_force_twisting_maps(config.n, config.m, options['p'], prune=prune,
                                      budget=config.budget, progress=options['progress'])
    row = {'n': config.n, 'm': config.m, 'p': options['p'], 'pruned': prune, 'grids': len(grids)}
    payload = {'count': len(grids), 'grids': serialize.gridset_to_json(grids)}
    code = EXIT_OK
    if options['compare']:
        other = serialize.gridset_from_json(serialize.read_document(options['compare']))
        comparison = compare_sets(grids, other)
        row.update({'compared': len(other), 'only_oracle': len(comparison.only_left),
                    'only_file': len(comparison.only_right)})
        payload['comparison'] = {
            **comparison.summary(),
            'only_left_grids': [serialize.grid_to_json(g) for g in comparison.only_left],
            'only_right_grids': [serialize.grid_to_json(g) for g in comparison.only_right],
        }
        code = EXIT_OK if comparison.equal else EXIT_MATH
    emit_table(pd.DataFrame([row]), config)
    emit(payload, config)
    return code


def cmd_normalize(config):
    X, f = serialize.matrix_problem_from_json(serialize.read_document(config.input_path))
    payload = {'normalized': serialize.normalized_to_json(normalize(X, f))}
    if X.nrows == 2:
        payload['canonical'] = serialize.canonical_form_to_json(normalize2(X, f), X.field)
    emit(payload, config)
    return EXIT_OK


def cmd_extract(config):
    doc = serialize.read_document(config.input_path)
    if isinstance(doc, dict) and 'E' in doc:
        g = serialize.grid_from_json(doc)
        if g.n != 2:
            raise InputError(f"extract needs a 2-vertex grid, got n={g.n}")
        ws = [omega_from_grid(g, p) for p in range(g.m)]
    else:
        ws = serialize.omega_list_from_json(doc)
    datum = extract_cycle_datum(ws)
    emit({
        'datum': serialize.cycle_datum_to_json(datum),
        'valid': datum.is_valid(),
        'omegas': [serialize.omega_to_json(w) for w in ws],
    }, config)
    return EXIT_OK if datum.is_valid() else EXIT_MATH


def cmd_export(config):
    g = serialize.grid_from_json(serialize.read_document(config.input_path))
    text = export_dot(_support_quiver(g), name='grid')
    if config.output_path is None:
        sys.stdout.write(text)
    else:
        with open(config.output_path, 'w', encoding='utf-8') as handle:
            handle.write(text)
        logger.info(f"DOT saved to {config.output_path}")
    return EXIT_OK


COMMANDS = {
    'verify': cmd_verify,
    'build': cmd_build,
    'classify': cmd_classify,
    'enumerate': cmd_enumerate,
    'oracle': cmd_oracle,
    'normalize': cmd_normalize,
    'extract': cmd_extract,
    'export': cmd_export,
}


def main(argv=None):
    # Parse command line arguments
    args = parse_args(argv)

    # Setup logging
    log_level = logging.DEBUG if args.verbose else logging.INFO
    setup_logger(log_level, args.log_dir)

    logger.info(f"Starting twistlab {args.command}")
    try:
        config = RunConfig.from_args(args)
        config.options['verbose'] = args.verbose
        return COMMANDS[args.command](config)
    except TwistlabError as error:
        logger.error(f"{type(error).__name__}: {error}")
        return error.exit_code
    except Exception as error:
        logger.error(f"Error running {args.command}: {error}")
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
