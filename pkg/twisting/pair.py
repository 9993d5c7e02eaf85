"""Admissible pairs (quiver, representation) and the bijection with E-grids."""

import logging
from dataclasses import dataclass
from typing import Optional

from algebra.linalg import Vector, compose, identity_map, zero_map
from quiver.quiver import Arrow, Quiver, paths, rank, validate_admissible_shape
from twisting.grid import EGrid, check_axioms
from utils.errors import AxiomViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AdmissiblePair:
    """
    A quiver shape plus one endomorphism of A per arrow.

    Construction does not certify the splitted/unital/factorizable
    conditions; ``check_admissible`` does.
    """

    shape: object
    phi: tuple
    algebra: object

    @classmethod
    def from_maps(cls, shape, maps, algebra):
        return cls(shape, tuple(sorted((Arrow(*arrow), f) for arrow, f in maps.items())), algebra)

    @property
    def n(self):
        return self.shape.n

    @property
    def field(self):
        return self.algebra.field

    def maps(self):
        return dict(self.phi)

    def map_for(self, s, t):
        for arrow, f in self.phi:
            if arrow == (s, t):
                return f
        raise KeyError(Arrow(s, t))

    def loop_map(self, i):
        return self.map_for(i, i)

    def key(self):
        return (self.shape.quiver, tuple((arrow, f.key()) for arrow, f in self.phi))

    def __eq__(self, other):
        if not isinstance(other, AdmissiblePair):
            return NotImplemented
        return self.shape == other.shape and self.phi == other.phi and self.algebra == other.algebra

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        arrows = ', '.join(arrow.label() for arrow, _ in self.phi)
        return f"AdmissiblePair(n={self.n}, arrows=[{arrows}])"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Optional[tuple] = None
    detail: str = ''

    def __bool__(self):
        return self.passed


def pair_from_arrow_maps(algebra, n, maps):
    """
    Admissible pair supported on the arrows whose map is non-zero.

    Args:
        algebra: Ambient AlgebraStructure
        n: Number of vertices
        maps: Mapping (s, t) -> EndoMap; loops must be present

    Returns:
        AdmissiblePair whose quiver is the support of ``maps``
    """
    support = {Arrow(*arrow): f for arrow, f in maps.items() if arrow[0] == arrow[1] or not f.is_zero()}
    shape = validate_admissible_shape(Quiver(n, tuple(support)))
    return AdmissiblePair.from_maps(shape, support, algebra)


def pair_from_grid(g):
    """
    Read off the quiver (arrow i->j iff E_ij != 0) and representation of a grid.

    Raises:
        AxiomViolation: the grid is not a twisting map
    """
    report = check_axioms(g)
    if not report.passed:
        raise AxiomViolation(report)
    maps = {(i, j): g.entry(i, j) for i in range(g.n) for j in range(g.n) if not g.entry(i, j).is_zero()}
    return pair_from_arrow_maps(g.algebra, g.n, maps)


def grid_from_pair(pair):
    return EGrid.from_maps(pair.algebra, pair.n, {tuple(arrow): f for arrow, f in pair.phi})


def check_splitted(pair):
    """
    At every vertex the maps of incoming arrows are non-zero orthogonal
    idempotents summing to the identity.
    """
    field, m = pair.field, pair.algebra.dim
    maps = pair.maps()
    zero = zero_map(field, m)
    for i in range(pair.n):
        incoming = [arrow for arrow, _ in pair.phi if arrow.target == i]
        total = zero
        for first in incoming:
            if maps[first].is_zero():
                return CheckResult('splitted', False, (i, first), 'zero map on an arrow')
            for second in incoming:
                expected = maps[first] if first == second else zero
                if compose(maps[first], maps[second]) != expected:
                    return CheckResult('splitted', False, (i, first, second), 'not orthogonal idempotents')
            total = total + maps[first]
        if total != identity_map(field, m):
            return CheckResult('splitted', False, (i,), 'incoming maps do not sum to Id')
    return CheckResult('splitted', True)


def check_unital(pair):
    unit = pair.algebra.unit
    zero = Vector.zero(pair.field, pair.algebra.dim)
    for arrow, f in pair.phi:
        if f.apply(unit) != (unit if arrow.is_loop else zero):
            return CheckResult('unital', False, (arrow,))
    return CheckResult('unital', True)


def check_factorizable(pair):
    """
    For all i, j and basis pairs (f_q, f_r): the sum over length-2 paths
    i -> k -> j of phi(f_q) phi(f_r) equals phi_{i->j}(f_q f_r), or 0 when
    there is no arrow i -> j.
    """
    algebra = pair.algebra
    field, m = pair.field, algebra.dim
    maps = pair.maps()
    quiver = pair.shape.quiver
    for i in range(pair.n):
        for j in range(pair.n):
            two_paths = paths(quiver, 2, i, j)
            direct = maps.get(Arrow(i, j))
            for q in range(m):
                for r in range(m):
                    lhs = Vector.zero(field, m)
                    for first, second in two_paths:
                        lhs = lhs + algebra.multiply(maps[first].column(q), maps[second].column(r))
                    rhs = direct.apply(algebra.table[q][r]) if direct is not None else Vector.zero(field, m)
                    if lhs != rhs:
                        return CheckResult('factorizable', False, (i, j, q, r))
    return CheckResult('factorizable', True)


def check_admissible(pair):
    return [check_splitted(pair), check_unital(pair), check_factorizable(pair)]


def check_identity_loop_characterization(pair):
    """phi_alpha = Id exactly when alpha is a loop at a vertex of rank 1."""
    quiver = pair.shape.quiver
    for arrow, f in pair.phi:
        predicted = arrow.is_loop and rank(quiver, arrow.target) == 1
        if f.is_identity() != predicted:
            return CheckResult('identity-loop', False, (arrow,))
    return CheckResult('identity-loop', True)
