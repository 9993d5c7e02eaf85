"""Two-dimensional modules: the canonical forms X1 = (1 x; y 1) and X2 = (x 1; 1 y)."""

import logging
from dataclasses import dataclass

from absred.blocks import normalize
from absred.omega import OmegaMatrix
from algebra.linalg import Functional, Matrix
from utils.errors import DegenerateParameters, DimensionMismatch, SingularMatrix

logger = logging.getLogger(__name__)

FORM_X1 = 'X1'
FORM_X2 = 'X2'


@dataclass(frozen=True)
class CanonicalForm2:
    """
    One of X1 = (1 x; y 1) or X2 = (x 1; 1 y), with xy != 1.

    ``alpha1`` and ``alpha2`` are the character indices feeding
    two_dim_action: (u(1), u(2)) for X1 and (u(2), u(1)) for X2.
    """

    form: str
    x: object
    y: object
    alpha1: int
    alpha2: int

    def matrix(self, field):
        one = field.one
        if self.form == FORM_X1:
            return Matrix(field, ((one, self.x), (self.y, one)))
        return Matrix(field, ((self.x, one), (one, self.y)))

    def omega(self, field, m):
        return two_dim_action(field, self.x, self.y, Functional.dual(field, m, self.alpha1),
                              Functional.dual(field, m, self.alpha2))


def _form(form, x, y, u):
    if form == FORM_X1:
        return CanonicalForm2(FORM_X1, x, y, u[0], u[1])
    return CanonicalForm2(FORM_X2, x, y, u[1], u[0])


def normalize2(X, f):
    """
    Canonical form of the H_u-orbit of a 2 x 2 invertible matrix.

    Args:
        X: Invertible 2 x 2 Matrix
        f: FiberPartition of u: {0, 1} -> characters

    Returns:
        CanonicalForm2; a single fiber gives X1 with x = y = 0

    Raises:
        SingularMatrix: X is not invertible
    """
    if X.shape != (2, 2):
        raise DimensionMismatch((2, 2), X.shape)
    if not X.is_invertible():
        raise SingularMatrix()
    field = X.field
    zero, one = field.zero, field.one
    u = f.u
    if len(f.fibers) == 1:
        return _form(FORM_X1, zero, zero, u)
    if X.entry(0, 0) == one and X.entry(1, 1) == one:
        return _form(FORM_X1, X.entry(0, 1), X.entry(1, 0), u)
    if X.entry(0, 1) == one and X.entry(1, 0) == one:
        return _form(FORM_X2, X.entry(0, 0), X.entry(1, 1), u)

    Z = normalize(X, f).matrix
    (a, b), (c, d) = Z.rows
    if a == one and b == one:
        # (1 1; x1 y1): scale a column to reach X2 or X1
        if c != zero:
            return _form(FORM_X2, one / c, d, u)
        return _form(FORM_X1, one / d, zero, u)
    if c == one and d == one:
        # (x2 y2; 1 1)
        if b != zero:
            return _form(FORM_X2, a, one / b, u)
        return _form(FORM_X1, zero, one / a, u)
    if a == one and d == one:
        return _form(FORM_X1, b, c, u)
    return _form(FORM_X2, a, d, u)


def two_dim_action(field, x, y, alpha1, alpha2):
    """
    omega of the module defined by X1 = (1 x; y 1) and characters alpha1, alpha2.

    Raises:
        DegenerateParameters: xy = 1
    """
    x, y = field(x), field(y)
    xy = x * y
    if xy == field.one:
        raise DegenerateParameters(x, y)
    d = field.one / (field.one - xy)
    difference = alpha1 - alpha2
    entries = (
        ((alpha1 - alpha2.scale(xy)).scale(d), difference.scale(-x * d)),
        (difference.scale(y * d), (alpha2 - alpha1.scale(xy)).scale(d)),
    )
    return OmegaMatrix(field, entries)
