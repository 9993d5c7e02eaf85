import logging
from dataclasses import dataclass

import networkx as nx

from quiver.quiver import Arrow, rrank
from utils.errors import RrankTooLarge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootedTree:
    root: int
    vertices: tuple
    arrows: tuple


@dataclass(frozen=True)
class CycleTreeDecomposition:
    """One weak component of a reduced-rank-one shape: its cycle and the trees hanging off it."""

    vertices: tuple
    cycle: tuple
    trees: tuple

    def cycle_arrows(self):
        if not self.cycle:
            return ()
        k = len(self.cycle)
        return tuple(Arrow(self.cycle[i], self.cycle[(i + 1) % k]) for i in range(k))

    def tree_at(self, root):
        for tree in self.trees:
            if tree.root == root:
                return tree
        return None

    def reassemble(self):
        """Arrow set rebuilt from loops, cycle and trees."""
        arrows = [Arrow(v, v) for v in self.vertices]
        arrows.extend(self.cycle_arrows())
        for tree in self.trees:
            arrows.extend(tree.arrows)
        return tuple(sorted(arrows))


def unique_cycle_decomposition(shape):
    """
    Split every weak component of a reduced-rank-one shape into its unique
    non-loop cycle (possibly empty) and the out-trees left after removing the
    cycle arrows.

    Args:
        shape: AdmissibleShape with rrank at most 1 at every vertex

    Returns:
        List of CycleTreeDecomposition ordered by smallest vertex

    Raises:
        RrankTooLarge: some vertex receives two non-loop arrows
    """
    q = shape.quiver
    for i in range(q.n):
        value = rrank(q, i)
        if value >= 2:
            raise RrankTooLarge(i, value)

    graph = nx.DiGraph()
    graph.add_nodes_from(range(q.n))
    graph.add_edges_from(shape.non_loop_arrows())

    decompositions = []
    for component in sorted(sorted(c) for c in nx.weakly_connected_components(graph)):
        sub = graph.subgraph(component)
        cycles = list(nx.simple_cycles(sub))
        cycle = ()
        if cycles:
            nodes = cycles[0]
            start = nodes.index(min(nodes))
            cycle = tuple(nodes[start:] + nodes[:start])

        forest = nx.DiGraph(sub)
        k = len(cycle)
        forest.remove_edges_from((cycle[i], cycle[(i + 1) % k]) for i in range(k))
        roots = cycle if cycle else tuple(v for v in component if forest.in_degree(v) == 0)

        trees = []
        for root in roots:
            members = sorted({root} | nx.descendants(forest, root))
            arrows = tuple(sorted(Arrow(s, t) for s, t in forest.subgraph(members).edges()))
            trees.append(RootedTree(root, tuple(members), arrows))
        decompositions.append(CycleTreeDecomposition(tuple(component), cycle, tuple(trees)))
        logger.debug(f"Component {[v + 1 for v in component]}: cycle {[v + 1 for v in cycle]}")
    return decompositions
