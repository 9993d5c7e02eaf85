import random

import pytest

from algebra.field import FieldSpec
from algebra.linalg import EndoMap, Matrix
from algebra.structure import AlgebraStructure
from classify.catalog import classified_grids
from classify.rank_one import idempotent_functions
from oracle.compare import GridSet, compare_sets
from oracle.search import SearchSpace, brute_force_twisting_maps, count_idempotent_functions, \
    idempotent_candidates, passes_axioms
from quiver.quiver import Quiver, quiver_rrank
from twisting.grid import EGrid, check_axioms
from twisting.pair import grid_from_pair, pair_from_grid
from utils import serialize
from utils.errors import BudgetExceeded, InputError


@pytest.mark.parametrize('n, m, p', [(2, 2, 2), (2, 2, 3), (3, 2, 2), (2, 3, 2), (2, 3, 3)])
def test_oracle_matches_classification(n, m, p):
    field = FieldSpec.prime(p)
    found = brute_force_twisting_maps(n, m, p)
    report = compare_sets(found, classified_grids(n, m, field))
    assert report.equal, report.summary()


@pytest.mark.parametrize('m', [1, 2])
def test_pruning_loses_nothing(m):
    assert brute_force_twisting_maps(2, m, 2, prune=False) == brute_force_twisting_maps(2, m, 2)


def test_found_grids_pass_the_axiom_checker():
    for g in brute_force_twisting_maps(2, 2, 3):
        assert check_axioms(g).passed


def test_reduced_rank_is_bounded():
    for g in brute_force_twisting_maps(3, 2, 2):
        assert quiver_rrank(Quiver(g.n, tuple(g.support()))) <= 1


def test_one_vertex_has_only_the_flip():
    grids = brute_force_twisting_maps(1, 3, 2)
    assert list(grids) == [EGrid.flip(AlgebraStructure.diagonal(FieldSpec.prime(2), 3), 1)]


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        brute_force_twisting_maps(2, 2, 2, budget=3)
    with pytest.raises(BudgetExceeded):
        brute_force_twisting_maps(2, 2, 2, prune=False, budget=1000)


def test_candidates_are_idempotent_with_zero_row_sums():
    for matrix in idempotent_candidates(2, 3):
        assert all(sum(row) % 3 == 0 for row in matrix)
    assert ((0, 0), (0, 0)) in idempotent_candidates(2, 3)


def test_passes_axioms_on_residues():
    flip = (((1, 0), (0, 1)), ((0, 0), (0, 0))), (((0, 0), (0, 0)), ((1, 0), (0, 1)))
    assert passes_axioms(flip, 2, 2, 2)
    zero = tuple(tuple(((0, 0), (0, 0)) for _ in range(2)) for _ in range(2))
    assert not passes_axioms(zero, 2, 2, 2)


def test_search_space_validation():
    with pytest.raises(InputError):
        SearchSpace(2, 2, 4)
    assert SearchSpace(2, 2, 2).raw_size == 2 ** 16


@pytest.mark.parametrize('m', [1, 2, 3, 4])
def test_idempotent_function_counts_agree(m):
    assert count_idempotent_functions(m) == len(idempotent_functions(m))


def test_compare_sets_reports_witnesses(f2):
    grids = brute_force_twisting_maps(2, 2, 2)
    flip = EGrid.flip(AlgebraStructure.diagonal(f2, 2), 2)
    report = compare_sets(grids, grids.without(flip))
    assert not report
    assert report.only_left == [flip]
    assert report.only_right == []
    assert compare_sets(GridSet(), GridSet()).equal


@pytest.mark.parametrize('n, m, p', [(2, 2, 2), (2, 2, 3), (3, 2, 2), (2, 3, 2)])
def test_grid_pair_round_trip_on_every_found_grid(n, m, p):
    for g in brute_force_twisting_maps(n, m, p):
        assert grid_from_pair(pair_from_grid(g)) == g


@pytest.mark.parametrize('p', [2, 3])
def test_two_incoming_arrows_break_the_axioms(p):
    field = FieldSpec.prime(p)
    maps = {
        (0, 0): EndoMap.from_matrix(Matrix.identity(field, 2)),
        (1, 1): EndoMap.from_matrix(Matrix.identity(field, 2)),
        (0, 2): EndoMap.from_matrix(Matrix.of(field, [[1, 0], [0, 0]])),
        (1, 2): EndoMap.from_matrix(Matrix.of(field, [[0, 0], [0, 1]])),
    }
    g = EGrid.from_maps(AlgebraStructure.diagonal(field, 2), 3, maps)
    assert quiver_rrank(Quiver(3, tuple(g.support()))) == 2
    assert not check_axioms(g).passed


def test_grid_documents_are_byte_identical(f2, qq):
    def render(grids):
        return serialize.dumps(serialize.gridset_to_json(grids))

    assert render(classified_grids(2, 2, f2)) == render(classified_grids(2, 2, f2))
    assert render(brute_force_twisting_maps(2, 2, 3)) == render(brute_force_twisting_maps(2, 2, 3))
    first = classified_grids(2, 2, qq, rng=random.Random(3), samples=2)
    second = classified_grids(2, 2, qq, rng=random.Random(3), samples=2)
    assert render(first) == render(second)
