import json

import Main
from absred.omega import omega_from_grid
from algebra.structure import AlgebraStructure
from classify.cycle import cycle_grid
from twisting.grid import EGrid
from utils import serialize
from utils.errors import EXIT_BUDGET, EXIT_INPUT, EXIT_MATH, EXIT_OK


def write_grid(path, g):
    path.write_text(serialize.dumps(serialize.grid_to_json(g)))
    return str(path)


def run(tmp_path, *argv):
    output = tmp_path / 'out.json'
    code = Main.main(list(argv) + ['--log-dir', str(tmp_path / 'logs'), '--output', str(output)])
    document = json.loads(output.read_text()) if output.exists() else None
    return code, document


def test_verify_flip(tmp_path, f2):
    grid = write_grid(tmp_path / 'flip.json', EGrid.flip(AlgebraStructure.diagonal(f2, 2), 2))
    code, doc = run(tmp_path, 'verify', grid)
    assert code == EXIT_OK
    assert doc['report']['passed'] is True
    assert doc['schema_version'] == 1
    assert doc['rrank'] == [0, 0]


def test_verify_reports_column_sum(tmp_path, f2):
    grid = write_grid(tmp_path / 'zero.json', EGrid.from_maps(AlgebraStructure.diagonal(f2, 2), 2, {}))
    code, doc = run(tmp_path, 'verify', grid)
    assert code == EXIT_MATH
    failing = [axiom for axiom in doc['report']['axioms'] if not axiom['passed']]
    assert failing[0]['name'] == 'column-sum'
    assert failing[0]['witness'] == [1]


def test_verify_cycle_grid_shows_two_cycle(tmp_path, qq):
    grid = write_grid(tmp_path / 'cycle.json', cycle_grid(qq, (1, 0), ('1/3', '2/3')))
    code, doc = run(tmp_path, 'verify', grid)
    assert code == EXIT_OK
    assert [1, 2] in doc['quiver']['arrows'] and [2, 1] in doc['quiver']['arrows']


def test_malformed_input(tmp_path):
    bad = tmp_path / 'bad.json'
    bad.write_text('{not json')
    code, _ = run(tmp_path, 'verify', str(bad))
    assert code == EXIT_INPUT
    code, _ = run(tmp_path, 'verify', str(tmp_path / 'missing.json'))
    assert code == EXIT_INPUT


def test_classify_and_compare_with_oracle(tmp_path):
    classified = tmp_path / 'classified.json'
    code = Main.main(['classify', '--all', '--n', '2', '--m', '2', '--field', 'p:2',
                      '--log-dir', str(tmp_path / 'logs'), '--output', str(classified)])
    assert code == EXIT_OK
    code, doc = run(tmp_path, 'oracle', '--n', '2', '--m', '2', '--p', '2', '--compare', str(classified))
    assert code == EXIT_OK
    assert doc['comparison']['equal'] is True
    assert doc['count'] == json.loads(classified.read_text())['count']


def test_compare_against_partial_set(tmp_path, f2):
    partial = tmp_path / 'partial.json'
    partial.write_text(serialize.dumps([serialize.grid_to_json(EGrid.flip(AlgebraStructure.diagonal(f2, 2), 2))]))
    code, doc = run(tmp_path, 'oracle', '--n', '2', '--m', '2', '--p', '2', '--compare', str(partial))
    assert code == EXIT_MATH
    assert doc['comparison']['only_right'] == 0
    assert doc['comparison']['only_left'] == doc['count'] - 1


def test_classify_builtin_shape(tmp_path):
    code, doc = run(tmp_path, 'classify', '--shape', '2cycle', '--m', '2', '--field', 'p:2')
    assert code == EXIT_OK
    assert doc['count'] == 7


def test_budget_exceeded(tmp_path):
    code, _ = run(tmp_path, 'oracle', '--n', '2', '--m', '2', '--p', '2', '--budget', '3')
    assert code == EXIT_BUDGET


def test_budget_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv('TWISTLAB_BUDGET', '3')
    code, _ = run(tmp_path, 'oracle', '--n', '2', '--m', '2', '--p', '2')
    assert code == EXIT_BUDGET
    monkeypatch.setenv('TWISTLAB_BUDGET', 'lots')
    code, _ = run(tmp_path, 'oracle', '--n', '2', '--m', '2', '--p', '2')
    assert code == EXIT_INPUT


def test_no_prune_oracle(tmp_path):
    code, doc = run(tmp_path, 'oracle', '--n', '2', '--m', '1', '--p', '2', '--no-prune')
    assert code == EXIT_OK
    assert doc['count'] == 1


def test_enumerate_loop_data(tmp_path):
    csv = tmp_path / 'counts.csv'
    code, doc = run(tmp_path, 'enumerate', '--kind', 'rank1', '--shape', 'loop', '--m', '3', '--field', 'p:2',
                    '--csv', str(csv))
    assert code == EXIT_OK
    assert len(doc['data']) == 10
    assert csv.read_text().splitlines()[0] == 'kind,m,field,count'


def test_enumerate_rational_cycle_families(tmp_path):
    code, doc = run(tmp_path, 'enumerate', '--kind', 'cycle', '--m', '2', '--field', 'q', '--seed', '4')
    assert code == EXIT_OK
    assert doc['seed'] == 4
    assert {'u': [2, 1], 'a': ['a_1', '1 - a_1'], 'parameters': ['a_1']} in doc['families']


def test_normalize_two_by_two(tmp_path):
    problem = tmp_path / 'x.json'
    problem.write_text(json.dumps({'field': 'q', 'X': [[2, 3], [4, 5]], 'u': [1, 2]}))
    code, doc = run(tmp_path, 'normalize', str(problem))
    assert code == EXIT_OK
    assert doc['canonical'] == {'form': 'X2', 'x': '1/2', 'y': '5/3', 'alpha1': 2, 'alpha2': 1}


def test_extract_cycle_datum(tmp_path, f3):
    grid = write_grid(tmp_path / 'cycle.json', cycle_grid(f3, (1, 0), (2, 2)))
    code, doc = run(tmp_path, 'extract', grid)
    assert code == EXIT_OK
    assert doc['datum'] == {'field': 'p:3', 'u': [2, 1], 'a': [2, 2]}


def test_build_flip(tmp_path, qq):
    grid = write_grid(tmp_path / 'flip.json', EGrid.flip(AlgebraStructure.diagonal(qq, 2), 2))
    code, doc = run(tmp_path, 'build', grid)
    assert code == EXIT_OK
    assert doc['algebra']['dim'] == 4
    assert doc['algebra']['unit'] == ['1/1'] * 4


def test_export_dot(tmp_path, qq):
    grid = write_grid(tmp_path / 'cycle.json', cycle_grid(qq, (1, 0), ('1/3', '2/3')))
    output = tmp_path / 'grid.dot'
    code = Main.main(['export', '--dot', grid, '--log-dir', str(tmp_path / 'logs'), '--output', str(output)])
    assert code == EXIT_OK
    text = output.read_text()
    assert '1 -> 2;' in text and '2 -> 1;' in text


def test_unknown_shape(tmp_path):
    code, _ = run(tmp_path, 'classify', '--shape', 'star:3', '--m', '2', '--field', 'p:2')
    assert code == EXIT_INPUT


def test_extract_from_omega_list(tmp_path, f3):
    g = cycle_grid(f3, (1, 0), (2, 2))
    omegas = {'field': 'p:3', 'omegas': [serialize.omega_to_json(omega_from_grid(g, p))['omega'] for p in range(2)]}
    source = tmp_path / 'omegas.json'
    source.write_text(serialize.dumps(omegas))
    code, doc = run(tmp_path, 'extract', str(source))
    assert code == EXIT_OK
    assert doc['datum'] == {'field': 'p:3', 'u': [2, 1], 'a': [2, 2]}
    assert [w['omega'] for w in doc['omegas']] == omegas['omegas']


def test_extract_rejects_malformed_omegas(tmp_path):
    source = tmp_path / 'omegas.json'
    source.write_text(json.dumps({'field': 'q', 'omegas': 3}))
    code, _ = run(tmp_path, 'extract', str(source))
    assert code == EXIT_INPUT


def test_unexpected_errors_are_not_input_errors(tmp_path, monkeypatch, f2):
    def broken(config):
        raise KeyError('boom')

    monkeypatch.setitem(Main.COMMANDS, 'verify', broken)
    grid = write_grid(tmp_path / 'flip.json', EGrid.flip(AlgebraStructure.diagonal(f2, 2), 2))
    code, _ = run(tmp_path, 'verify', grid)
    assert code == EXIT_MATH
