import logging
from dataclasses import dataclass
from itertools import product

from algebra.field import FieldSpec
from algebra.linalg import Vector, hadamard
from utils.errors import DimensionMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AlgebraStructure:
    """
    Finite-dimensional unital algebra given by structure constants.

    ``table[q][r]`` is the product f_q f_r of two basis vectors. The diagonal
    algebra K^m multiplies componentwise and skips the table lookup.
    """

    field: FieldSpec
    table: tuple
    unit: Vector
    componentwise: bool = False

    @classmethod
    def diagonal(cls, field, m):
        table = tuple(
            tuple(Vector.basis(field, m, q) if q == r else Vector.zero(field, m) for r in range(m))
            for q in range(m)
        )
        return cls(field, table, Vector.ones(field, m), componentwise=True)

    @classmethod
    def from_table(cls, field, table, unit):
        """Build from nested lists of scalars: table[q][r] is a coordinate list."""
        dim = len(unit)
        rows = []
        for q in range(dim):
            if len(table[q]) != dim:
                raise DimensionMismatch(dim, len(table[q]))
            rows.append(tuple(Vector.of(field, table[q][r]) for r in range(dim)))
        structure = cls(field, tuple(rows), Vector.of(field, unit))
        if structure == cls.diagonal(field, dim):
            return cls.diagonal(field, dim)
        return structure

    @property
    def dim(self):
        return len(self.unit)

    def basis(self, q):
        return Vector.basis(self.field, self.dim, q)

    def multiply(self, x, y):
        if self.componentwise:
            return hadamard(x, y)
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(self.dim, (len(x), len(y)))
        zero = self.field.zero
        coords = [zero] * self.dim
        for q, a in enumerate(x.coords):
            if a == zero:
                continue
            for r, b in enumerate(y.coords):
                if b == zero:
                    continue
                c = a * b
                for k, t in enumerate(self.table[q][r].coords):
                    if t != zero:
                        coords[k] += c * t
        return Vector(self.field, tuple(coords))

    def associativity_violation(self):
        """First basis triple (q, r, s) with (f_q f_r) f_s != f_q (f_r f_s), or None."""
        d = self.dim
        for q, r, s in product(range(d), repeat=3):
            left = self.multiply(self.table[q][r], self.basis(s))
            right = self.multiply(self.basis(q), self.table[r][s])
            if left != right:
                return (q, r, s)
        return None

    def unit_violation(self):
        for q in range(self.dim):
            e = self.basis(q)
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                return q
        return None

    def is_commutative(self):
        return all(self.table[q][r] == self.table[r][q] for q in range(self.dim) for r in range(q))

    def is_algebra_map(self, f):
        """Unital and multiplicative on basis pairs; bilinearity covers the rest."""
        if f.apply(self.unit) != self.unit:
            return False
        images = f.columns()
        for q in range(self.dim):
            for r in range(self.dim):
                if f.apply(self.table[q][r]) != self.multiply(images[q], images[r]):
                    return False
        return True

    def key(self):
        return (self.dim, self.unit.key(),
                tuple(tuple(v.key() for v in row) for row in self.table))

    def __eq__(self, other):
        if not isinstance(other, AlgebraStructure):
            return NotImplemented
        return self.field == other.field and self.unit == other.unit and self.table == other.table

    def __hash__(self):
        return hash((self.field, self.key()))

    def __repr__(self):
        kind = 'K^' + str(self.dim) if self.componentwise else f'dim {self.dim}'
        return f"AlgebraStructure({kind} over {self.field.label})"
