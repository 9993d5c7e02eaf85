from algebra.linalg import EndoMap, Matrix, Vector, identity_map
from algebra.structure import AlgebraStructure

DUAL_NUMBERS = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]


def test_diagonal_algebra(f3):
    algebra = AlgebraStructure.diagonal(f3, 3)
    assert algebra.associativity_violation() is None
    assert algebra.unit_violation() is None
    assert algebra.is_commutative()
    assert algebra.multiply(Vector.of(f3, [1, 2, 0]), Vector.of(f3, [2, 2, 1])) == Vector.of(f3, [2, 1, 0])


def test_from_table_recognizes_diagonal(qq):
    algebra = AlgebraStructure.from_table(qq, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 1])
    assert algebra.componentwise


def test_dual_numbers(qq):
    algebra = AlgebraStructure.from_table(qq, DUAL_NUMBERS, [1, 0])
    assert not algebra.componentwise
    assert algebra.associativity_violation() is None
    assert algebra.unit_violation() is None
    epsilon = algebra.basis(1)
    assert algebra.multiply(epsilon, epsilon).is_zero()


def test_algebra_maps_of_dual_numbers(qq):
    algebra = AlgebraStructure.from_table(qq, DUAL_NUMBERS, [1, 0])
    assert algebra.is_algebra_map(identity_map(qq, 2))
    assert algebra.is_algebra_map(EndoMap.from_matrix(Matrix.of(qq, [[1, 0], [0, 0]])))
    assert not algebra.is_algebra_map(EndoMap.from_matrix(Matrix.of(qq, [[0, 0], [0, 1]])))


def test_non_associative_table(qq):
    e = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    zero = [0, 0, 0]
    table = [
        [e[0], e[1], e[2]],
        [e[1], e[2], e[1]],
        [e[2], zero, zero],
    ]
    algebra = AlgebraStructure.from_table(qq, table, [1, 0, 0])
    assert algebra.unit_violation() is None
    assert algebra.associativity_violation() == (1, 1, 1)
