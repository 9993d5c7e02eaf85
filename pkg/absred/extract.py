"""Recover 2-cycle data (u, a) from the module structures omega^p of a 2-vertex grid."""

import logging

from absred.blocks import FiberPartition
from absred.omega import check_module_axioms, diagonalize, omega_from_grid
from absred.two_dim import normalize2
from algebra.linalg import Functional
from classify.cycle import CycleDatum, cycle_grid
from utils.errors import DimensionMismatch, NotSplitConsistent

logger = logging.getLogger(__name__)


def _check_split(w, p, m):
    target = Functional.dual(w.field, m, p)
    for j in range(2):
        if w.entry(0, j) + w.entry(1, j) != target:
            raise NotSplitConsistent(p)


def _coordinate(w, p, m):
    """(u(p), a_p) for one coordinate."""
    field = w.field
    one = field.one
    _check_split(w, p, m)
    if not check_module_axioms(w, m):
        raise NotSplitConsistent(p, "omega^p is not a K^m-module structure")
    X, u = diagonalize(w)
    form = normalize2(X, FiberPartition.from_function(u))
    logger.debug(f"p={p + 1}: {form.form}(x={field.render(form.x)}, y={field.render(form.y)}), "
                 f"characters ({form.alpha1 + 1}, {form.alpha2 + 1})")
    if form.alpha1 == form.alpha2:
        return p, field.zero
    if form.y == -one and form.alpha2 == p:
        return form.alpha1, form.x / (one + form.x)
    if form.x == -one and form.alpha1 == p:
        return form.alpha2, one / (one + form.y)
    raise NotSplitConsistent(p, "canonical form matches no 2-cycle row")


def extract_cycle_datum(ws):
    """
    Read (u, a) back from omega^1, ..., omega^m of a representation of 1 <-> 2.

    Args:
        ws: List of m OmegaMatrix, each 2 x 2 with functionals on K^m

    Returns:
        CycleDatum whose grid reproduces every omega^p

    Raises:
        NotSplitConsistent: a column of some omega^p does not sum to f_p^*, or
            no (u(p), a_p) reproduces it
    """
    m = len(ws)
    if not ws:
        raise DimensionMismatch(1, 0)
    field = ws[0].field
    for w in ws:
        if w.n != 2 or w.m != m:
            raise DimensionMismatch((2, m), (w.n, w.m))
    pairs = [_coordinate(w, p, m) for p, w in enumerate(ws)]
    datum = CycleDatum.create(field, [target for target, _ in pairs], [a for _, a in pairs])

    grid = cycle_grid(field, datum.u, datum.a)
    for p, w in enumerate(ws):
        if omega_from_grid(grid, p) != w:
            raise NotSplitConsistent(p, "omega^p is not reproduced by the extracted data")
    for violation in datum.violations():
        logger.warning(f"Extracted datum {datum} breaks a condition: {violation}")
    return datum


def extract_from_grid(g):
    """extract_cycle_datum applied to omega_from_grid(g, p) for every p."""
    if g.n != 2:
        raise DimensionMismatch(2, g.n)
    return extract_cycle_datum([omega_from_grid(g, p) for p in range(g.m)])
