"""The E-grid form of a twisting map and its four pointwise axioms.

tau(e_i (x) a) = sum_j E_ij(a) (x) e_j, with E_ij endomorphisms of the ambient algebra A.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from algebra.linalg import Vector, compose, identity_map, zero_map
from algebra.structure import AlgebraStructure
from utils.errors import DimensionMismatch

logger = logging.getLogger(__name__)

IDEMPOTENT_COLUMNS = 'idempotent-columns'
MULTIPLICATIVITY = 'multiplicativity'
COLUMN_SUM = 'column-sum'
UNIT = 'unit'
AXIOM_NAMES = (IDEMPOTENT_COLUMNS, MULTIPLICATIVITY, COLUMN_SUM, UNIT)

_WITNESS_FIELDS = {
    IDEMPOTENT_COLUMNS: ('column', 'i', 'j'),
    MULTIPLICATIVITY: ('i', 'j', 'q', 'r'),
    COLUMN_SUM: ('column',),
    UNIT: ('i', 'j'),
}


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.passed

    def describe_witness(self):
        if self.witness is None:
            return '-'
        names = _WITNESS_FIELDS.get(self.name, tuple(f'k{i}' for i in range(len(self.witness))))
        return ', '.join(f"{name}={value + 1}" for name, value in zip(names, self.witness))


@dataclass(frozen=True)
class AxiomReport:
    results: tuple

    @property
    def passed(self):
        return all(result.passed for result in self.results)

    def __bool__(self):
        return self.passed

    @property
    def first_failure(self):
        for result in self.results:
            if not result.passed:
                return result
        return None

    def result(self, name):
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    def status(self):
        return {result.name: result.passed for result in self.results}


@dataclass(frozen=True, eq=False)
class EGrid:
    algebra: AlgebraStructure
    entries: tuple

    def __post_init__(self):
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise DimensionMismatch(n, len(row))
            for entry in row:
                if entry.dimension != self.algebra.dim:
                    raise DimensionMismatch(self.algebra.dim, entry.dimension)
                if entry.field != self.algebra.field:
                    raise DimensionMismatch(self.algebra.field.label, entry.field.label)

    @classmethod
    def flip(cls, algebra, n):
        """The ordinary tensor product: E_ij = delta_ij Id."""
        identity = identity_map(algebra.field, algebra.dim)
        zero = zero_map(algebra.field, algebra.dim)
        return cls(algebra, tuple(tuple(identity if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def from_maps(cls, algebra, n, maps):
        """Grid with E_ij = maps[(i, j)] and zero elsewhere."""
        zero = zero_map(algebra.field, algebra.dim)
        return cls(algebra, tuple(tuple(maps.get((i, j), zero) for j in range(n)) for i in range(n)))

    @property
    def n(self):
        return len(self.entries)

    @property
    def m(self):
        return self.algebra.dim

    @property
    def field(self):
        return self.algebra.field

    def entry(self, i, j):
        return self.entries[i][j]

    def support(self):
        return [(i, j) for i in range(self.n) for j in range(self.n) if not self.entries[i][j].is_zero()]

    def key(self):
        return tuple(tuple(entry.key() for entry in row) for row in self.entries)

    def __eq__(self, other):
        if not isinstance(other, EGrid):
            return NotImplemented
        return self.algebra == other.algebra and self.entries == other.entries

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"EGrid(n={self.n}, m={self.m}, field={self.field.label})"


def _check_idempotent_columns(g):
    zero = zero_map(g.field, g.m)
    for p in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                expected = g.entry(i, p) if i == j else zero
                if compose(g.entry(i, p), g.entry(j, p)) != expected:
                    return AxiomResult(IDEMPOTENT_COLUMNS, False, (p, i, j))
    return AxiomResult(IDEMPOTENT_COLUMNS, True)


def _check_multiplicativity(g):
    algebra = g.algebra
    n, m = g.n, g.m
    columns = [[g.entry(i, j).columns() for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for q in range(m):
                for r in range(m):
                    lhs = g.entry(i, j).apply(algebra.table[q][r])
                    rhs = Vector.zero(g.field, m)
                    for p in range(n):
                        rhs = rhs + algebra.multiply(columns[i][p][q], columns[p][j][r])
                    if lhs != rhs:
                        return AxiomResult(MULTIPLICATIVITY, False, (i, j, q, r))
    return AxiomResult(MULTIPLICATIVITY, True)


def _check_column_sum(g):
    identity = identity_map(g.field, g.m)
    for j in range(g.n):
        total = zero_map(g.field, g.m)
        for i in range(g.n):
            total = total + g.entry(i, j)
        if total != identity:
            return AxiomResult(COLUMN_SUM, False, (j,))
    return AxiomResult(COLUMN_SUM, True)


def _check_unit(g):
    unit = g.algebra.unit
    zero = Vector.zero(g.field, g.m)
    for i in range(g.n):
        for j in range(g.n):
            if g.entry(i, j).apply(unit) != (unit if i == j else zero):
                return AxiomResult(UNIT, False, (i, j))
    return AxiomResult(UNIT, True)


def check_axioms(g):
    """
    Check the four pointwise twisting axioms of an E-grid.

    Multiplicativity is tested on basis pairs (f_q, f_r) only; bilinearity
    extends it to all of A.

    Args:
        g: EGrid

    Returns:
        AxiomReport with one AxiomResult per axiom, each carrying the first
        violating index tuple in lexicographic order
    """
    report = AxiomReport((
        _check_idempotent_columns(g),
        _check_multiplicativity(g),
        _check_column_sum(g),
        _check_unit(g),
    ))
    if not report.passed:
        failure = report.first_failure
        logger.debug(f"{g} fails {failure.name} at {failure.describe_witness()}")
    return report


def is_flip(g):
    return g == EGrid.flip(g.algebra, g.n)
