import pytest

from absred.omega import omega_from_grid
from classify.cycle import CycleDatum, cycle_grid
from utils import serialize
from utils.errors import InputError


def test_omega_document_round_trip(qq):
    w = omega_from_grid(cycle_grid(qq, (1, 0), ('1/3', '2/3')), 0)
    doc = serialize.omega_to_json(w)
    assert doc['n'] == 2 and doc['m'] == 2
    assert serialize.omega_from_json(doc) == w


def test_omega_list_forms_agree(f3):
    g = cycle_grid(f3, (1, 0, 2), (1, 0, 0))
    ws = [omega_from_grid(g, p) for p in range(3)]
    as_list = [serialize.omega_to_json(w) for w in ws]
    as_object = {'field': 'p:3', 'omegas': [doc['omega'] for doc in as_list]}
    assert serialize.omega_list_from_json(as_list) == ws
    assert serialize.omega_list_from_json(as_object) == ws


@pytest.mark.parametrize('doc', [
    {'field': 'q', 'omegas': []},
    {'field': 'q'},
    {'field': 'q', 'omegas': [[[1, 0]]]},
    'omega',
])
def test_malformed_omega_lists(doc):
    with pytest.raises(InputError):
        serialize.omega_list_from_json(doc)


def test_cycle_datum_document_is_one_based(f2):
    datum = CycleDatum.create(f2, (0, 0, 0), (0, 0, 1))
    assert serialize.cycle_datum_to_json(datum) == {'field': 'p:2', 'u': [1, 1, 1], 'a': [0, 0, 1]}
