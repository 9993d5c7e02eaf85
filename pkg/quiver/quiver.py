"""Finite quivers with loops, their rank invariants and admissible shapes.

Vertices are 0-based here; serialization and messages present them 1-based.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

import networkx as nx

from utils.errors import MissingLoop, MultipleArrows, VertexOutOfRange

logger = logging.getLogger(__name__)


class Arrow(NamedTuple):
    source: int
    target: int

    @property
    def is_loop(self):
        return self.source == self.target

    def label(self):
        return f"{self.source + 1}->{self.target + 1}"


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple = ()

    def __post_init__(self):
        arrows = tuple(sorted(Arrow(int(s), int(t)) for s, t in self.arrows))
        for arrow in arrows:
            for vertex in arrow:
                if not 0 <= vertex < self.n:
                    raise VertexOutOfRange(vertex, self.n)
        object.__setattr__(self, 'arrows', arrows)

    @classmethod
    def loops(cls, n):
        return cls(n, tuple((i, i) for i in range(n)))

    def check_vertex(self, i):
        if not 0 <= i < self.n:
            raise VertexOutOfRange(i, self.n)

    def has_loop(self, i):
        return Arrow(i, i) in self.arrows

    def multiplicity(self, s, t):
        return self.arrows.count(Arrow(s, t))

    def arrows_into(self, i):
        return [arrow for arrow in self.arrows if arrow.target == i]

    def arrows_from(self, i):
        return [arrow for arrow in self.arrows if arrow.source == i]

    def non_loop_arrows(self):
        return [arrow for arrow in self.arrows if not arrow.is_loop]

    def adjacency(self):
        table = [[0] * self.n for _ in range(self.n)]
        for s, t in self.arrows:
            table[s][t] += 1
        return table

    def to_networkx(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.arrows)
        return graph

    def relabel(self, permutation):
        """Quiver with vertex v renamed permutation[v]."""
        return Quiver(self.n, tuple((permutation[s], permutation[t]) for s, t in self.arrows))


def rank(q, i):
    """Number of arrows ending at i, loops included."""
    q.check_vertex(i)
    return len(q.arrows_into(i))


def rrank(q, i):
    """Number of non-loop arrows ending at i."""
    q.check_vertex(i)
    return sum(1 for arrow in q.arrows_into(i) if not arrow.is_loop)


def quiver_rank(q):
    return max((rank(q, i) for i in range(q.n)), default=0)


def quiver_rrank(q):
    return max((rrank(q, i) for i in range(q.n)), default=0)


@dataclass(frozen=True)
class AdmissibleShape:
    """A quiver with no multiple arrows and a loop at every vertex."""

    quiver: Quiver

    @property
    def n(self):
        return self.quiver.n

    @property
    def arrows(self):
        return self.quiver.arrows

    def has_arrow(self, s, t):
        return Arrow(s, t) in self.quiver.arrows

    def non_loop_arrows(self):
        return self.quiver.non_loop_arrows()

    def parent(self, i):
        """Source of the unique non-loop arrow into i, or None."""
        sources = [arrow.source for arrow in self.quiver.arrows_into(i) if not arrow.is_loop]
        return sources[0] if len(sources) == 1 else None

    def two_cycles(self):
        return [(s, t) for s, t in self.non_loop_arrows() if s < t and self.has_arrow(t, s)]

    def has_two_cycle(self):
        return bool(self.two_cycles())


def validate_admissible_shape(q):
    """
    Certify that q can carry an admissible pair.

    Args:
        q: Quiver

    Returns:
        AdmissibleShape wrapping q

    Raises:
        MultipleArrows: first repeated (s, t) in lexicographic order
        MissingLoop: lowest vertex without a loop
    """
    seen = set()
    for arrow in q.arrows:
        if arrow in seen:
            raise MultipleArrows(arrow.source, arrow.target)
        seen.add(arrow)
    for i in range(q.n):
        if not q.has_loop(i):
            raise MissingLoop(i)
    return AdmissibleShape(q)


def shape_from_arrows(n, non_loop_arrows):
    return validate_admissible_shape(Quiver(n, tuple((i, i) for i in range(n)) + tuple(non_loop_arrows)))


def paths(q, k, i, j):
    """
    All paths of length k from i to j as tuples of arrows.

    The only path of length 0 is the empty one at i = j.
    """
    q.check_vertex(i)
    q.check_vertex(j)
    found = []

    def walk(vertex, prefix):
        if len(prefix) == k:
            if vertex == j:
                found.append(tuple(prefix))
            return
        for arrow in q.arrows_from(vertex):
            prefix.append(arrow)
            walk(arrow.target, prefix)
            prefix.pop()

    walk(i, [])
    return found


def export_dot(q, name='quiver', labels=None):
    """
    Render q as a Graphviz digraph with 1-based vertex names.

    Args:
        q: Quiver
        name: Graph name
        labels: Optional mapping Arrow -> edge label text
    """
    lines = [f"digraph {name} {{"]
    for i in range(q.n):
        lines.append(f"    {i + 1};")
    for arrow in q.arrows:
        edge = f"    {arrow.source + 1} -> {arrow.target + 1}"
        if labels and arrow in labels:
            edge += f' [label="{labels[arrow]}"]'
        lines.append(edge + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"


def rank_one_shapes(n):
    """
    Every admissible shape on n vertices with rrank at most 1.

    Each vertex picks at most one non-loop parent; shapes come out in the
    lexicographic order of the parent choices.
    """
    for parents in product(range(-1, n), repeat=n):
        if any(parent == vertex for vertex, parent in enumerate(parents)):
            continue
        yield shape_from_arrows(n, [(parent, vertex) for vertex, parent in enumerate(parents) if parent >= 0])
