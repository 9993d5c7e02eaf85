"""Vectors of K^m, matrices and endomorphisms, and dual functionals.

Convention: column q of an EndoMap holds the image of the basis vector f_q,
so composition is the plain matrix product and ``(f @ g).apply(v) == f.apply(g.apply(v))``.
Row reduction is delegated to sympy's DomainMatrix over the exact domain.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from sympy.polys.matrices import DomainMatrix

from algebra.field import FieldSpec
from utils.errors import DimensionMismatch, SingularMatrix

logger = logging.getLogger(__name__)


def _check_same(left, right):
    if left.field != right.field:
        raise DimensionMismatch(left.field.label, right.field.label)


@dataclass(frozen=True, eq=False)
class Vector:
    field: FieldSpec
    coords: tuple

    @classmethod
    def of(cls, field, values):
        return cls(field, tuple(field(v) for v in values))

    @classmethod
    def zero(cls, field, m):
        return cls(field, (field.zero,) * m)

    @classmethod
    def ones(cls, field, m):
        return cls(field, (field.one,) * m)

    @classmethod
    def basis(cls, field, m, p):
        return cls(field, tuple(field.one if q == p else field.zero for q in range(m)))

    @property
    def dimension(self):
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def _pair(self, other):
        _check_same(self, other)
        if len(self) != len(other):
            raise DimensionMismatch(len(self), len(other))

    def __add__(self, other):
        self._pair(other)
        return Vector(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._pair(other)
        return Vector(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Vector(self.field, tuple(-a for a in self.coords))

    def scale(self, c):
        return Vector(self.field, tuple(c * a for a in self.coords))

    def is_zero(self):
        return all(a == self.field.zero for a in self.coords)

    def support(self):
        return tuple(q for q, a in enumerate(self.coords) if a != self.field.zero)

    def key(self):
        return tuple(self.field.key(a) for a in self.coords)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.key()))

    def __repr__(self):
        return f"Vector({[self.field.render(a) for a in self.coords]})"


@dataclass(frozen=True, eq=False)
class Functional:
    """A linear form on K^m written in the dual basis f_1^*..f_m^*."""

    field: FieldSpec
    coeffs: tuple

    @classmethod
    def of(cls, field, values):
        return cls(field, tuple(field(v) for v in values))

    @classmethod
    def zero(cls, field, m):
        return cls(field, (field.zero,) * m)

    @classmethod
    def dual(cls, field, m, p):
        return cls(field, tuple(field.one if q == p else field.zero for q in range(m)))

    @property
    def dimension(self):
        return len(self.coeffs)

    def evaluate(self, v):
        if len(v) != len(self.coeffs):
            raise DimensionMismatch(len(self.coeffs), len(v))
        total = self.field.zero
        for c, a in zip(self.coeffs, v.coords):
            total += c * a
        return total

    def __add__(self, other):
        return Functional(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return Functional(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Functional(self.field, tuple(-a for a in self.coeffs))

    def scale(self, c):
        return Functional(self.field, tuple(c * a for a in self.coeffs))

    def is_zero(self):
        return all(a == self.field.zero for a in self.coeffs)

    def key(self):
        return tuple(self.field.key(a) for a in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.key()))

    def __repr__(self):
        return f"Functional({[self.field.render(a) for a in self.coeffs]})"


@dataclass(frozen=True, eq=False)
class Matrix:
    field: FieldSpec
    rows: tuple

    def __post_init__(self):
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise DimensionMismatch(min(widths), max(widths))

    @classmethod
    def of(cls, field, rows):
        return cls(field, tuple(tuple(field(v) for v in row) for row in rows))

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, tuple((field.zero,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, field, n):
        return cls(field, tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, field, values):
        n = len(values)
        return cls(field, tuple(tuple(values[i] if i == j else field.zero for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, field, columns, nrows=None):
        if not columns:
            return cls(field, tuple(() for _ in range(nrows or 0)))
        height = len(columns[0])
        return cls(field, tuple(tuple(col[i] for col in columns) for i in range(height)))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i, j):
        return self.rows[i][j]

    def row(self, i):
        return Vector(self.field, self.rows[i])

    def column(self, j):
        return Vector(self.field, tuple(row[j] for row in self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def _wrap(self, rows):
        if isinstance(self, EndoMap) and rows and len(rows) == len(rows[0]):
            return EndoMap(self.field, rows)
        return Matrix(self.field, rows)

    @cached_property
    def domain_matrix(self):
        return DomainMatrix([list(row) for row in self.rows], self.shape, self.field.domain)

    def apply(self, v):
        if self.ncols != len(v):
            raise DimensionMismatch(self.ncols, len(v))
        out = []
        for row in self.rows:
            total = self.field.zero
            for a, b in zip(row, v.coords):
                total += a * b
            out.append(total)
        return Vector(self.field, tuple(out))

    def __matmul__(self, other):
        _check_same(self, other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(self.shape, other.shape)
        if self.nrows == 0 or other.ncols == 0 or self.ncols == 0:
            return self._wrap(tuple((self.field.zero,) * other.ncols for _ in range(self.nrows)))
        product = self.domain_matrix.matmul(other.domain_matrix)
        return self._wrap(tuple(tuple(row) for row in product.to_list()))

    def _entrywise(self, other, op):
        _check_same(self, other)
        if self.shape != other.shape:
            raise DimensionMismatch(self.shape, other.shape)
        return self._wrap(tuple(tuple(op(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __add__(self, other):
        return self._entrywise(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._entrywise(other, lambda a, b: a - b)

    def __neg__(self):
        return self._wrap(tuple(tuple(-a for a in row) for row in self.rows))

    def scale(self, c):
        return self._wrap(tuple(tuple(c * a for a in row) for row in self.rows))

    def transpose(self):
        return Matrix(self.field, tuple(tuple(row[j] for row in self.rows) for j in range(self.ncols)))

    def submatrix(self, row_indices, col_indices):
        return Matrix(self.field, tuple(tuple(self.rows[i][j] for j in col_indices) for i in row_indices))

    def is_zero(self):
        return all(a == self.field.zero for row in self.rows for a in row)

    def is_square(self):
        return self.nrows == self.ncols

    def is_identity(self):
        return self.is_square() and self == Matrix.identity(self.field, self.nrows)

    def rref(self):
        """Reduced row echelon form and pivot columns."""
        if self.nrows == 0 or self.ncols == 0:
            return self, ()
        reduced, pivots = self.domain_matrix.rref()
        return Matrix(self.field, tuple(tuple(row) for row in reduced.to_list())), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        """Basis of {v : Mv = 0}, one vector per free column of the RREF."""
        reduced, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for c in free:
            coords = [self.field.zero] * self.ncols
            coords[c] = self.field.one
            for k, pc in enumerate(pivots):
                coords[pc] = -reduced.rows[k][c]
            basis.append(Vector(self.field, tuple(coords)))
        return basis

    def column_space(self):
        """Columns of M at the pivot positions of its RREF."""
        _, pivots = self.rref()
        return [self.column(c) for c in pivots]

    def is_invertible(self):
        return self.is_square() and self.rank() == self.nrows

    def inverse(self):
        if not self.is_square():
            raise SingularMatrix(f"non-square {self.shape} matrix has no inverse")
        n = self.nrows
        identity = Matrix.identity(self.field, n)
        augmented = Matrix(self.field, tuple(r + s for r, s in zip(self.rows, identity.rows)))
        reduced, pivots = augmented.rref()
        if tuple(pivots[:n]) != tuple(range(n)):
            raise SingularMatrix()
        return self._wrap(tuple(row[n:] for row in reduced.rows))

    def permute_rows(self, sigma):
        """Row i of the result is row sigma[i] of self."""
        return Matrix(self.field, tuple(self.rows[sigma[i]] for i in range(self.nrows)))

    def key(self):
        return tuple(tuple(self.field.key(a) for a in row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.key()))

    def __repr__(self):
        body = [[self.field.render(a) for a in row] for row in self.rows]
        return f"{type(self).__name__}({body})"


class EndoMap(Matrix):
    """Square matrix acting on K^m."""

    def __post_init__(self):
        super().__post_init__()
        if self.nrows != self.ncols:
            raise DimensionMismatch(self.nrows, self.ncols)

    @classmethod
    def from_matrix(cls, matrix):
        return cls(matrix.field, matrix.rows)

    @property
    def dimension(self):
        return self.nrows


def identity_map(field, m):
    return EndoMap.from_matrix(Matrix.identity(field, m))


def zero_map(field, m):
    return EndoMap.from_matrix(Matrix.zeros(field, m, m))


def hadamard(u, v):
    """Componentwise product, the multiplication of K^m."""
    u._pair(v)
    return Vector(u.field, tuple(a * b for a, b in zip(u.coords, v.coords)))


def compose(f, g):
    if f.dimension != g.dimension:
        raise DimensionMismatch(f.dimension, g.dimension)
    return f @ g


def is_idempotent(f):
    return compose(f, f) == f


def is_algebra_map(f):
    """
    Check that f is a unital algebra endomorphism of K^m.

    Bilinearity reduces multiplicativity to the basis pairs (f_p, f_q).
    """
    m = f.dimension
    field = f.field
    if f.apply(Vector.ones(field, m)) != Vector.ones(field, m):
        return False
    images = f.columns()
    for p in range(m):
        for q in range(m):
            product = images[p] if p == q else Vector.zero(field, m)
            if hadamard(images[p], images[q]) != product:
                return False
    return True


def endo_from_function(u, field):
    """
    Algebra endomorphism theta of K^m attached to a self-map u of {0..m-1}.

    theta(f_p) is the sum of the f_q with u(q) = p, so the entry at
    (row q, column p) is 1 exactly when u(q) = p.

    Args:
        u: Sequence of 0-based images
        field: FieldSpec of the result

    Returns:
        EndoMap
    """
    m = len(u)
    if any(not 0 <= image < m for image in u):
        raise DimensionMismatch(m, max(u) + 1)
    return EndoMap(field, tuple(tuple(field.one if u[q] == p else field.zero for p in range(m)) for q in range(m)))


def kernel_basis(f):
    return f.nullspace()


def image_basis(f):
    return f.column_space()


def span_rank(field, vectors):
    if not vectors:
        return 0
    return Matrix.from_columns(field, list(vectors)).rank()


def span_contains(field, basis, v):
    return span_rank(field, list(basis) + [v]) == span_rank(field, list(basis))


def subspace_product_is_zero(U, V, multiply=hadamard):
    """True when every product of a spanning vector of U with one of V vanishes."""
    return all(multiply(u, v).is_zero() for u in U for v in V)
