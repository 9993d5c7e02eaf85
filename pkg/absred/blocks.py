"""Fiber blocks of a matrix, the stabilizer H_u and normalized invertible matrices."""

import logging
from dataclasses import dataclass
from itertools import product

from algebra.linalg import Functional, Matrix
from utils.errors import SingularMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiberPartition:
    """Nonempty fibers of u: {0..n-1} -> {0..r-1}, ordered by increasing image value."""

    u: tuple
    fibers: tuple

    @classmethod
    def from_function(cls, u):
        u = tuple(u)
        fibers = tuple(tuple(i for i in range(len(u)) if u[i] == value) for value in sorted(set(u)))
        return cls(u, fibers)

    @property
    def n(self):
        return len(self.u)

    @property
    def sizes(self):
        return tuple(len(fiber) for fiber in self.fibers)

    def fiber_of(self, i):
        for k, fiber in enumerate(self.fibers):
            if i in fiber:
                return k
        raise IndexError(i)


@dataclass(frozen=True)
class BlockView:
    matrix: Matrix
    partition: FiberPartition

    def block(self, k, l):
        """X^{kl}: rows in fiber k, columns in fiber l."""
        return self.matrix.submatrix(self.partition.fibers[k], self.partition.fibers[l])

    def column_block(self, k):
        """X^k: every row, columns in fiber k."""
        return self.matrix.submatrix(range(self.matrix.nrows), self.partition.fibers[k])

    def __len__(self):
        return len(self.partition.fibers)


def blocks(X, f):
    return BlockView(X, f)


def _commutes_with_characters(Y, f):
    # (Y theta)_ij = y_ij theta_u(j) against (theta Y)_ij = theta_u(i) y_ij
    r = max(f.u) + 1 if f.u else 0
    theta = [Functional.dual(Y.field, r, value) for value in f.u]
    return all(theta[j].scale(Y.entry(i, j)) == theta[i].scale(Y.entry(i, j))
               for i in range(Y.nrows) for j in range(Y.ncols))


def is_in_Hu(Y, f):
    """
    Y is invertible with vanishing off-diagonal fiber blocks.

    The block test and the commutant test against diag(theta_u(i)) are both
    evaluated and must agree.
    """
    view = blocks(Y, f)
    off_diagonal_zero = all(view.block(k, l).is_zero() for k in range(len(view)) for l in range(len(view)) if k != l)
    if off_diagonal_zero != _commutes_with_characters(Y, f):
        logger.error(f"Block and commutant descriptions of H_u disagree on {Y}")
        return False
    return off_diagonal_zero and Y.is_invertible()


def enumerate_hu(f, field):
    """Every element of H_u over a prime field, in lexicographic order of entries."""
    n = f.n
    positions = [(i, j) for i in range(n) for j in range(n) if f.u[i] == f.u[j]]
    found = []
    for values in product(field.elements(), repeat=len(positions)):
        rows = [[field.zero] * n for _ in range(n)]
        for (i, j), value in zip(positions, values):
            rows[i][j] = value
        Y = Matrix(field, tuple(tuple(row) for row in rows))
        if Y.is_invertible():
            found.append(Y)
    logger.debug(f"|H_u| = {len(found)} for fibers {f.sizes} over {field.label}")
    return found


def gl_order(k, p):
    """Order of GL_k(F_p)."""
    order = 1
    for i in range(k):
        order *= p ** k - p ** i
    return order


@dataclass(frozen=True)
class NormalizedMatrix:
    """
    Representative of the H_u-orbit of ``source``.

    Column block k of ``matrix`` is (I; Z_k) with its rows placed by sigma_k:
    row ``sigmas[k][i]`` of the block is row i of (I; Z_k). ``transform`` is
    the element of H_u with matrix = source @ transform.
    """

    source: Matrix
    partition: FiberPartition
    matrix: Matrix
    sigmas: tuple
    residuals: tuple
    transform: Matrix


def _first_independent_rows(block, count):
    chosen = []
    for r in range(block.nrows):
        trial = block.submatrix(chosen + [r], range(block.ncols))
        if trial.rank() == len(chosen) + 1:
            chosen.append(r)
            if len(chosen) == count:
                break
    return chosen


def normalize(X, f):
    """
    Normalized invertible matrix in the H_u-orbit of X.

    For each fiber the lexicographically first independent rows of X^k are
    moved to the top and the block is multiplied by the inverse of that
    square part.

    Raises:
        SingularMatrix: X is not invertible
    """
    if not X.is_invertible():
        raise SingularMatrix()
    field = X.field
    n = X.nrows
    view = blocks(X, f)
    out = [[field.zero] * n for _ in range(n)]
    transform = [[field.zero] * n for _ in range(n)]
    sigmas, residuals = [], []
    for k, fiber in enumerate(f.fibers):
        size = len(fiber)
        block = view.column_block(k)
        chosen = _first_independent_rows(block, size)
        order = chosen + [r for r in range(n) if r not in chosen]
        top = block.submatrix(order[:size], range(size))
        top_inverse = top.inverse()
        rest = block.submatrix(order[size:], range(size))
        residual = rest @ top_inverse if rest.nrows else rest
        stacked = Matrix.identity(field, size).rows + residual.rows
        for i, row in enumerate(stacked):
            for c, column in enumerate(fiber):
                out[order[i]][column] = row[c]
        for a, column_a in enumerate(fiber):
            for b, column_b in enumerate(fiber):
                transform[column_a][column_b] = top_inverse.entry(a, b)
        sigmas.append(tuple(order))
        residuals.append(residual)
    matrix = Matrix(field, tuple(tuple(row) for row in out))
    return NormalizedMatrix(X, f, matrix, tuple(sigmas), tuple(residuals),
                            Matrix(field, tuple(tuple(row) for row in transform)))


def same_orbit(X, Y, f):
    """True iff X^-1 Y lies in H_u, i.e. X and Y define the same module with u."""
    if not Y.is_invertible():
        raise SingularMatrix()
    return is_in_Hu(X.inverse() @ Y, f)
