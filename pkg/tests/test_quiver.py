import networkx as nx
import pytest
from sympy import Matrix

from quiver.decompose import unique_cycle_decomposition
from quiver.quiver import Arrow, Quiver, export_dot, paths, quiver_rank, quiver_rrank, rank, rank_one_shapes, \
    rrank, shape_from_arrows, validate_admissible_shape
from utils.errors import MissingLoop, MultipleArrows, RrankTooLarge, VertexOutOfRange


def test_ranks_count_incoming_arrows():
    q = Quiver(3, ((0, 0), (1, 1), (2, 2), (0, 2), (1, 2)))
    assert rank(q, 2) == 3
    assert rrank(q, 2) == 2
    assert quiver_rank(q) == 3
    assert quiver_rrank(q) == 2


def test_vertex_out_of_range():
    with pytest.raises(VertexOutOfRange):
        Quiver(2, ((0, 2),))


def test_validation_errors():
    with pytest.raises(MultipleArrows):
        validate_admissible_shape(Quiver(2, ((0, 0), (1, 1), (0, 1), (0, 1))))
    with pytest.raises(MissingLoop) as info:
        validate_admissible_shape(Quiver(2, ((0, 0), (0, 1))))
    assert info.value.vertex == 1


def test_paths_of_length_two():
    shape = shape_from_arrows(2, [(0, 1)])
    found = paths(shape.quiver, 2, 0, 1)
    assert set(found) == {(Arrow(0, 0), Arrow(0, 1)), (Arrow(0, 1), Arrow(1, 1))}
    assert paths(shape.quiver, 0, 1, 1) == [()]


def test_parent_and_two_cycles():
    shape = shape_from_arrows(3, [(0, 1), (1, 0), (1, 2)])
    assert shape.parent(2) == 1
    assert shape.two_cycles() == [(0, 1)]


@pytest.mark.parametrize('n, count', [(1, 1), (2, 4), (3, 27)])
def test_rank_one_shape_count(n, count):
    # each vertex picks no parent or one of the other n - 1 vertices
    shapes = list(rank_one_shapes(n))
    assert len(shapes) == count
    assert all(quiver_rrank(shape.quiver) <= 1 for shape in shapes)


def test_decomposition_of_cycle_with_tree():
    shape = shape_from_arrows(4, [(0, 1), (1, 0), (1, 2)])
    parts = unique_cycle_decomposition(shape)
    assert [part.vertices for part in parts] == [(0, 1, 2), (3,)]
    assert parts[0].cycle == (0, 1)
    assert parts[0].tree_at(1).vertices == (1, 2)
    assert parts[1].cycle == ()
    assert parts[0].reassemble() == tuple(sorted(a for a in shape.arrows if a.source in (0, 1, 2)))


def test_decomposition_rejects_two_parents():
    shape = shape_from_arrows(3, [(0, 2), (1, 2)])
    with pytest.raises(RrankTooLarge):
        unique_cycle_decomposition(shape)


def test_dot_export_is_one_based():
    text = export_dot(shape_from_arrows(2, [(0, 1)]).quiver)
    assert "1 -> 2;" in text
    assert text.startswith("digraph quiver {")
    assert text.endswith("}\n")


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5])
def test_every_weak_component_has_at_most_one_cycle(n):
    for shape in rank_one_shapes(n):
        graph = nx.DiGraph(shape.non_loop_arrows())
        graph.add_nodes_from(range(n))
        parts = unique_cycle_decomposition(shape)
        for component, part in zip(sorted(sorted(c) for c in nx.weakly_connected_components(graph)), parts):
            cycles = list(nx.simple_cycles(graph.subgraph(component)))
            assert len(cycles) <= 1
            assert len(part.cycle) == (len(cycles[0]) if cycles else 0)
            assert part.reassemble() == tuple(sorted(a for a in shape.arrows if a.source in component))


@pytest.mark.parametrize('n, arrows', [
    (2, [(0, 1)]),
    (2, [(0, 1), (1, 0)]),
    (3, [(0, 1), (1, 2), (2, 0)]),
    (4, [(0, 1), (1, 0), (1, 2), (2, 3)]),
])
def test_path_counts_match_adjacency_powers(n, arrows):
    q = shape_from_arrows(n, arrows).quiver
    adjacency = Matrix(q.adjacency())
    for k in range(4):
        power = adjacency ** k
        for i in range(n):
            for j in range(n):
                assert len(paths(q, k, i, j)) == power[i, j]
