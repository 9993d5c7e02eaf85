import pytest

from algebra.linalg import EndoMap, Matrix
from algebra.structure import AlgebraStructure
from classify.catalog import loop_data_count
from classify.rank_one import RankOneDatum, enumerate_rank1_data, ideal_decomposition, ideal_decompositions, \
    idempotent_functions, rep_from_rank1_datum, validate_rank_one_datum
from quiver.quiver import shape_from_arrows
from twisting.grid import check_axioms
from twisting.pair import check_admissible, grid_from_pair, pair_from_arrow_maps
from utils.errors import ConditionViolated, RrankTooLarge


@pytest.mark.parametrize('m, count', [(1, 1), (2, 3), (3, 10), (4, 41)])
def test_idempotent_function_count(m, count):
    assert len(idempotent_functions(m)) == count


def test_single_loop_has_ten_data_at_m3(f2):
    assert loop_data_count(3, f2) == 10


def test_path_data_counts(f2):
    shape = shape_from_arrows(2, [(0, 1)])
    assert len(list(enumerate_rank1_data(shape, 2, f2))) == 7
    assert len(list(enumerate_rank1_data(shape, 2, f2, roots_identity=True))) == 3


def test_path_example_maps(qq):
    shape = shape_from_arrows(2, [(0, 1)])
    pair = rep_from_rank1_datum(RankOneDatum(qq, shape, ((0, 1), (0, 0))))
    phi_2 = pair.loop_map(1)
    # phi_2(f_1) = f_1 + f_2 and phi_2(f_2) = 0
    assert phi_2.column(0).coords == (qq(1), qq(1))
    assert phi_2.column(1).is_zero()
    assert pair.map_for(0, 1) == pair.loop_map(0) - phi_2


@pytest.mark.parametrize('arrows', [[(0, 1)], [(1, 0)], [(0, 1), (1, 2)], [(0, 1), (0, 2)]])
def test_generated_pairs_are_twisting_maps(arrows, f3):
    shape = shape_from_arrows(len({v for arrow in arrows for v in arrow}), arrows)
    for datum in enumerate_rank1_data(shape, 2, f3, roots_identity=True):
        pair = rep_from_rank1_datum(datum)
        assert all(check_admissible(pair))
        assert check_axioms(grid_from_pair(pair)).passed
        assert all(decomposition.verified for decomposition in ideal_decompositions(pair))


def test_arrow_condition_violation(qq):
    shape = shape_from_arrows(3, [(0, 1), (1, 2)])
    datum = RankOneDatum(qq, shape, ((0, 1), (0, 0), (0, 0)))
    with pytest.raises(ConditionViolated) as info:
        validate_rank_one_datum(datum)
    assert info.value.arrow == (1, 2)
    assert info.value.coordinate == 1


def test_non_idempotent_function_rejected(qq):
    shape = shape_from_arrows(1, [])
    with pytest.raises(ConditionViolated) as info:
        validate_rank_one_datum(RankOneDatum(qq, shape, ((1, 0),)), roots_identity=False)
    assert info.value.arrow == (0, 0)


def test_root_must_carry_identity(qq):
    shape = shape_from_arrows(1, [])
    datum = RankOneDatum(qq, shape, ((0, 0),))
    validate_rank_one_datum(datum, roots_identity=False)
    with pytest.raises(ConditionViolated):
        rep_from_rank1_datum(datum)


def test_shapes_outside_rank_one(qq):
    with pytest.raises(RrankTooLarge):
        list(enumerate_rank1_data(shape_from_arrows(3, [(0, 2), (1, 2)]), 2, qq))
    with pytest.raises(ConditionViolated):
        list(enumerate_rank1_data(shape_from_arrows(2, [(0, 1), (1, 0)]), 2, qq))


def test_projector_loop_is_not_a_unital_subalgebra(qq):
    algebra = AlgebraStructure.diagonal(qq, 2)
    projector = EndoMap.from_matrix(Matrix.of(qq, [[1, 0], [0, 0]]))
    decomposition = ideal_decomposition(pair_from_arrow_maps(algebra, 1, {(0, 0): projector}), 0)
    assert decomposition.direct_sum
    assert not decomposition.subalgebra
    assert not decomposition.verified
