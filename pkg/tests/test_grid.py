import pytest

from algebra.linalg import EndoMap, Matrix, zero_map
from algebra.structure import AlgebraStructure
from twisting.grid import COLUMN_SUM, IDEMPOTENT_COLUMNS, MULTIPLICATIVITY, EGrid, check_axioms, is_flip
from twisting.tensor import check_tensor_axioms
from utils.errors import DimensionMismatch


def path_grid(field):
    """Rank-one grid on 1 -> 2 with u_1 = id and u_2 = (1, 1)."""
    algebra = AlgebraStructure.diagonal(field, 2)
    phi_2 = EndoMap.from_matrix(Matrix.of(field, [[1, 0], [1, 0]]))
    alpha = EndoMap.from_matrix(Matrix.of(field, [[0, 0], [-1, 1]]))
    identity = EndoMap.from_matrix(Matrix.identity(field, 2))
    return EGrid.from_maps(algebra, 2, {(0, 0): identity, (0, 1): alpha, (1, 1): phi_2})


@pytest.mark.parametrize('n, m', [(1, 1), (2, 2), (3, 2)])
def test_flip_passes(n, m, qq):
    g = EGrid.flip(AlgebraStructure.diagonal(qq, m), n)
    assert check_axioms(g).passed
    assert is_flip(g)


def test_path_grid_passes(qq):
    g = path_grid(qq)
    report = check_axioms(g)
    assert report.passed
    assert report.first_failure is None
    assert g.support() == [(0, 0), (0, 1), (1, 1)]


def test_zero_grid_fails_column_sum(f3):
    algebra = AlgebraStructure.diagonal(f3, 2)
    g = EGrid.from_maps(algebra, 2, {})
    report = check_axioms(g)
    assert report.first_failure.name == COLUMN_SUM
    assert report.first_failure.witness == (0,)
    assert report.first_failure.describe_witness() == 'column=1'


def test_non_multiplicative_grid(qq):
    # idempotent columns summing to Id, but E_11(f_1 f_2) = 0 while E_11(f_1) E_11(f_2) = f_1
    algebra = AlgebraStructure.diagonal(qq, 2)
    p = EndoMap.from_matrix(Matrix.of(qq, [[1, 1], [0, 0]]))
    q = EndoMap.from_matrix(Matrix.of(qq, [[0, -1], [0, 1]]))
    g = EGrid.from_maps(algebra, 2, {(0, 0): p, (1, 0): q, (0, 1): zero_map(qq, 2),
                                     (1, 1): EndoMap.from_matrix(Matrix.identity(qq, 2))})
    report = check_axioms(g)
    assert report.status()[IDEMPOTENT_COLUMNS] is True
    assert report.status()[MULTIPLICATIVITY] is False
    assert report.result(MULTIPLICATIVITY).witness == (0, 0, 0, 1)


def test_tensor_form_agrees(qq):
    good = path_grid(qq)
    assert check_tensor_axioms(good).passed
    bad = EGrid.from_maps(AlgebraStructure.diagonal(qq, 2), 2, {})
    assert not check_tensor_axioms(bad).passed


def test_entry_dimension_checked(qq):
    algebra = AlgebraStructure.diagonal(qq, 2)
    with pytest.raises(DimensionMismatch):
        EGrid(algebra, ((EndoMap.from_matrix(Matrix.identity(qq, 3)),),))
