"""K^m-module structures on an n-dimensional space, written as matrices of functionals.

``entries[i][j]`` is omega_ij, with a w_i = sum_j omega_ji(a) w_j. Evaluating
every entry at f_q gives the n x n matrix W(q); the module axioms say the
W(q) are orthogonal idempotents summing to the identity.
"""

import logging
from dataclasses import dataclass

from algebra.linalg import Functional, Matrix
from utils.errors import DimensionMismatch, SingularMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class OmegaMatrix:
    field: object
    entries: tuple

    def __post_init__(self):
        n = len(self.entries)
        widths = {f.dimension for row in self.entries for f in row}
        if any(len(row) != n for row in self.entries):
            raise DimensionMismatch(n, [len(row) for row in self.entries])
        if len(widths) > 1:
            raise DimensionMismatch(min(widths), max(widths))

    @classmethod
    def of(cls, field, rows):
        return cls(field, tuple(tuple(Functional.of(field, coeffs) for coeffs in row) for row in rows))

    @property
    def n(self):
        return len(self.entries)

    @property
    def m(self):
        return self.entries[0][0].dimension if self.entries else 0

    def entry(self, i, j):
        return self.entries[i][j]

    def at(self, q):
        """W(q): the matrix of omega_ij(f_q)."""
        return Matrix(self.field, tuple(tuple(f.coeffs[q] for f in row) for row in self.entries))

    def evaluate(self, a):
        return Matrix(self.field, tuple(tuple(f.evaluate(a) for f in row) for row in self.entries))

    def key(self):
        return tuple(tuple(f.key() for f in row) for row in self.entries)

    def __eq__(self, other):
        if not isinstance(other, OmegaMatrix):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.key()))

    def __repr__(self):
        return f"OmegaMatrix(n={self.n}, m={self.m}, field={self.field.label})"


def check_module_axioms(w, m=None):
    """
    Multiplicativity and unit law of omega over K^m on all basis pairs.

    Args:
        w: OmegaMatrix
        m: Dimension of K^m; defaults to the width of the functionals

    Returns:
        bool
    """
    m = w.m if m is None else m
    if w.n and w.m != m:
        return False
    zero = Matrix.zeros(w.field, w.n, w.n)
    total = zero
    values = [w.at(q) for q in range(m)]
    for q in range(m):
        total = total + values[q]
        for r in range(m):
            expected = values[q] if q == r else zero
            if values[q] @ values[r] != expected:
                logger.debug(f"W({q + 1})W({r + 1}) breaks multiplicativity")
                return False
    if total != Matrix.identity(w.field, w.n):
        logger.debug("omega(1) is not the identity")
        return False
    return True


def characters(field, m):
    """The characters f_1^*, ..., f_m^* of K^m."""
    return [Functional.dual(field, m, q) for q in range(m)]


def omega_from_diag(X, u, chars):
    """
    omega = X diag(chars[u(1)], ..., chars[u(n)]) X^-1.

    Args:
        X: Invertible n x n Matrix
        u: 0-based character index per diagonal position
        chars: List of Functional characters

    Raises:
        SingularMatrix: X is not invertible
    """
    field = X.field
    inverse = X.inverse()
    n = X.nrows
    m = chars[0].dimension
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = Functional.zero(field, m)
            for k in range(n):
                c = X.entry(i, k) * inverse.entry(k, j)
                if c != field.zero:
                    entry = entry + chars[u[k]].scale(c)
            row.append(entry)
        rows.append(tuple(row))
    return OmegaMatrix(field, tuple(rows))


def omega_from_grid(g, p):
    """Module structure read off coordinate p of a grid: omega_ij = (E_ij)_p."""
    return OmegaMatrix(g.field, tuple(
        tuple(Functional(g.field, g.entry(i, j).rows[p]) for j in range(g.n)) for i in range(g.n)))


def diagonalize(w):
    """
    Recover (X, u) with omega = X diag(f_u(i)^*) X^-1.

    The columns of X are bases of the images of W(1), W(2), ... in that
    order, and u records which W(q) each column came from.

    Raises:
        SingularMatrix: the images of the W(q) do not span K^n
    """
    columns, u = [], []
    for q in range(w.m):
        for column in w.at(q).column_space():
            columns.append(column)
            u.append(q)
    if len(columns) != w.n:
        raise SingularMatrix(f"images of omega(f_q) span {len(columns)} of {w.n} dimensions")
    X = Matrix.from_columns(w.field, columns)
    if not X.is_invertible():
        raise SingularMatrix("images of omega(f_q) are not independent")
    return X, tuple(u)
