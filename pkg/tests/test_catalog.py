import random

import pytest

from algebra.structure import AlgebraStructure
from classify.catalog import classified_grids, classify_shape, flip_datum
from classify.rank_one import rep_from_rank1_datum
from quiver.quiver import quiver_rrank, shape_from_arrows
from twisting.grid import EGrid, check_axioms
from twisting.pair import grid_from_pair
from utils.errors import RrankTooLarge


def test_flip_is_classified(f2):
    grids = classified_grids(2, 2, f2)
    assert EGrid.flip(AlgebraStructure.diagonal(f2, 2), 2) in grids
    assert grid_from_pair(rep_from_rank1_datum(flip_datum(2, 2, f2))) in grids


def test_every_classified_grid_is_valid(f2):
    for g in classified_grids(3, 2, f2):
        assert check_axioms(g).passed


def test_components_are_merged(f2):
    # a 2-cycle beside an isolated vertex
    shape = shape_from_arrows(3, [(0, 1), (1, 0)])
    pairs = classify_shape(shape, 2, f2)
    assert len(pairs) == 7
    assert all(quiver_rrank(pair.shape.quiver) <= 1 for pair in pairs)


def test_relabeled_cycle_component(f2):
    shape = shape_from_arrows(3, [(1, 2), (2, 1), (1, 0)])
    for pair in classify_shape(shape, 2, f2):
        assert check_axioms(grid_from_pair(pair)).passed


def test_rank_two_shape_rejected(f2):
    with pytest.raises(RrankTooLarge):
        classify_shape(shape_from_arrows(3, [(0, 2), (1, 2)]), 2, f2)


def test_rational_classification_is_seeded(qq, rng):
    first = classified_grids(2, 2, qq, rng=rng, samples=2)
    second = classified_grids(2, 2, qq, rng=random.Random(0), samples=2)
    assert first == second
