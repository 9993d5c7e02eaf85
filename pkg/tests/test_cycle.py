import pytest
from hypothesis import given, strategies as st

from algebra.field import FieldSpec
from classify.catalog import classified_grids
from classify.cycle import ALPHA_1, ALPHA_2, PHI_1, PHI_2, SUM_NOT_ONE, CycleDatum, cycle_conditions, \
    cycle_grid, cycle_maps, cycle_templates, enumerate_cycle_data, functional_cycles, rep_from_cycle_datum
from twisting.grid import EGrid, check_axioms
from twisting.pair import check_admissible, grid_from_pair
from utils.errors import ConditionViolated


def test_fixed_points_are_normalized(qq):
    datum = CycleDatum.create(qq, (0, 1), ('5', '7'))
    assert datum.a == (qq(0), qq(0))
    assert datum.is_valid()


def test_create_rejects_bad_lengths(qq):
    with pytest.raises(ConditionViolated):
        CycleDatum.create(qq, (0, 1), (0,))
    with pytest.raises(ConditionViolated):
        CycleDatum.create(qq, (0, 2), (0, 0))


def test_maps_of_swap(qq):
    maps = cycle_maps(qq, (1, 0), (qq('1/3'), qq('2/3')))
    assert maps[PHI_1].row(0).coords == (qq('1/3'), qq('2/3'))
    assert maps[ALPHA_1].row(0).coords == (qq('1/3'), qq('-1/3'))
    assert maps[PHI_2].row(1).coords == (qq('2/3'), qq('1/3'))
    assert maps[ALPHA_2].row(1).coords == (qq('-1/3'), qq('1/3'))
    # each column of the grid sums to Id
    assert maps[PHI_1] + maps[ALPHA_2] == maps[PHI_2] + maps[ALPHA_1]


def test_sum_condition_is_reported(qq):
    failures = cycle_conditions(qq, (1, 0), (qq(1), qq(1)))
    assert (SUM_NOT_ONE, 0) in failures
    assert not check_axioms(cycle_grid(qq, (1, 0), (1, 1))).passed


def test_non_boolean_off_two_cycle(qq):
    datum = CycleDatum.create(qq, (0, 0), (0, '1/2'))
    assert not datum.is_valid()
    with pytest.raises(ConditionViolated) as info:
        rep_from_cycle_datum(datum)
    assert info.value.coordinate == 1


def test_identity_function_gives_flip(qq):
    pair = rep_from_cycle_datum(CycleDatum.create(qq, (0, 1, 2), (0, 0, 0)))
    assert pair.shape.non_loop_arrows() == []
    assert grid_from_pair(pair) == EGrid.flip(pair.algebra, 2)


def test_f2_count_at_m2(f2):
    assert len(enumerate_cycle_data(2, f2)) == 7


def test_rational_families_at_m2(qq):
    families = enumerate_cycle_data(2, qq)
    assert len(families) == 6
    swap = next(family for family in families if family.u == (1, 0))
    assert swap.describe() == ['a_1', '1 - a_1']


def test_odd_cycle_has_no_data():
    assert cycle_templates((1, 2, 0)) == []


def test_functional_cycles():
    assert functional_cycles((1, 0, 0, 3)) == [(0, 1), (3,)]


@pytest.mark.parametrize('m', [1, 2, 3])
def test_every_f3_datum_is_a_twisting_map(m, f3):
    for datum in enumerate_cycle_data(m, f3):
        assert datum.is_valid()
        pair = rep_from_cycle_datum(datum)
        assert all(check_admissible(pair))
        assert check_axioms(cycle_grid(f3, datum.u, datum.a)).passed


@given(st.integers(-20, 20), st.integers(1, 20))
def test_swap_family_is_valid_for_every_rational(num, den):
    qq = FieldSpec.rationals()
    t = qq.fraction(num, den)
    datum = CycleDatum.create(qq, (1, 0), (t, qq.one - t))
    assert datum.is_valid()
    assert check_axioms(cycle_grid(qq, datum.u, datum.a)).passed


def test_children_of_a_fixed_point_choose_freely(f2):
    datum = CycleDatum.create(f2, (0, 0, 0), (0, 0, 1))
    assert datum.is_valid()
    g = cycle_grid(f2, datum.u, datum.a)
    assert check_axioms(g).passed
    assert set(g.support()) == {(0, 0), (0, 1), (1, 0), (1, 1)}
    assert g in classified_grids(2, 3, f2)


def test_grandchildren_alternate_from_their_parent(qq):
    assert CycleDatum.create(qq, (0, 0, 1), (0, 0, 1)).is_valid()
    assert not CycleDatum.create(qq, (0, 0, 1), (0, 1, 1)).is_valid()


@pytest.mark.parametrize('p', [2, 3])
@pytest.mark.parametrize('m', [1, 2, 3])
def test_normalized_data_are_canonical(m, p):
    field = FieldSpec.prime(p)
    data = enumerate_cycle_data(m, field)
    assert len({cycle_grid(field, d.u, d.a) for d in data}) == len(data)
    for datum in data:
        for q in range(m):
            if datum.u[q] != q:
                continue
            for value in field.elements():
                a = datum.a[:q] + (value,) + datum.a[q + 1:]
                assert CycleDatum.create(field, datum.u, a) == datum


@pytest.mark.parametrize('m', [1, 2, 3])
def test_condition_breaking_mutants(m, f3):
    # a mutant that still satisfies the axioms either changes nothing or leaves the 2-cycle shape
    classified = classified_grids(2, m, f3)
    for datum in enumerate_cycle_data(m, f3):
        source = cycle_grid(f3, datum.u, datum.a)
        for q in range(m):
            for value in f3.elements():
                if value == datum.a[q]:
                    continue
                a = datum.a[:q] + (value,) + datum.a[q + 1:]
                if not cycle_conditions(f3, datum.u, a):
                    continue
                g = cycle_grid(f3, datum.u, a)
                if check_axioms(g).passed:
                    assert g == source or not {(0, 1), (1, 0)} <= set(g.support())
                    assert g in classified
