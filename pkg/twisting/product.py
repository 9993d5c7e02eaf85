import logging
from dataclasses import dataclass

from algebra.linalg import Vector
from algebra.structure import AlgebraStructure
from utils.errors import NotAssociative

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TwistedAlgebra:
    """A (x)_tau K^n on the basis f_p (x) e_i, indexed i*m + p."""

    structure: AlgebraStructure
    n: int
    m: int

    @property
    def dim(self):
        return self.n * self.m

    def index(self, i, p):
        return i * self.m + p

    def labels(self):
        return [(i, p) for i in range(self.n) for p in range(self.m)]


def _twisted_table(g):
    algebra = g.algebra
    n, m = g.n, g.m
    field = g.field
    columns = [[g.entry(i, j).columns() for j in range(n)] for i in range(n)]
    table = []
    for i in range(n):
        for p in range(m):
            row = []
            for j in range(n):
                for q in range(m):
                    # (f_p (x) e_i)(f_q (x) e_j) = f_p E_ij(f_q) (x) e_j
                    local = algebra.multiply(algebra.basis(p), columns[i][j][q])
                    coords = [field.zero] * (n * m)
                    coords[j * m:(j + 1) * m] = local.coords
                    row.append(Vector(field, tuple(coords)))
            table.append(tuple(row))
    unit = Vector(field, algebra.unit.coords * n)
    return AlgebraStructure(field, tuple(table), unit)


def build_twisted_algebra(g):
    """
    Structure constants of the twisted tensor product of a grid.

    Associativity and the unit are re-verified on every basis triple and
    element.

    Args:
        g: EGrid passing check_axioms

    Returns:
        TwistedAlgebra

    Raises:
        NotAssociative: the grid is not a twisting map after all
    """
    structure = _twisted_table(g)
    triple = structure.associativity_violation()
    if triple is not None:
        raise NotAssociative(triple)
    broken = structure.unit_violation()
    if broken is not None:
        raise NotAssociative((broken,), reason="unit law fails")
    logger.debug(f"Twisted algebra of dimension {structure.dim} certified associative and unital")
    return TwistedAlgebra(structure, g.n, g.m)


def direct_product(algebra, n):
    """Structure constants of A x ... x A (n copies) on the same basis."""
    m = algebra.dim
    field = algebra.field
    table = []
    for i in range(n):
        for p in range(m):
            row = []
            for j in range(n):
                for q in range(m):
                    coords = [field.zero] * (n * m)
                    if i == j:
                        coords[j * m:(j + 1) * m] = algebra.table[p][q].coords
                    row.append(Vector(field, tuple(coords)))
            table.append(tuple(row))
    return AlgebraStructure(field, tuple(table), Vector(field, algebra.unit.coords * n))
