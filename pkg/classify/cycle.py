"""Twisting data on the 2-cycle quiver 1 <-> 2 over K^m.

A datum is a self-map u of {0..m-1} with scalars a_p. Row p of the four maps:

    phi_1     a_p e_p + (1 - a_p) e_u(p)
    phi_alpha1    a_p (e_p - e_u(p))
    phi_2     (1 - a_p) e_p + a_p e_u(p)
    phi_alpha2    (1 - a_p) (e_p - e_u(p))

The grid is E_11 = phi_1, E_12 = phi_alpha1, E_21 = phi_alpha2, E_22 = phi_2.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Optional

from algebra.linalg import EndoMap
from algebra.structure import AlgebraStructure
from classify.rank_one import all_functions
from twisting.grid import EGrid
from twisting.pair import pair_from_arrow_maps
from utils.errors import ConditionViolated

logger = logging.getLogger(__name__)

PHI_1 = 'phi_1'
PHI_2 = 'phi_2'
ALPHA_1 = 'alpha_1'
ALPHA_2 = 'alpha_2'

FIXED_POINT_NONZERO = 1
SUM_NOT_ONE = 2
NOT_BOOLEAN = 3

_CONDITION_TEXT = {
    FIXED_POINT_NONZERO: "a_p must vanish at a fixed point of u",
    SUM_NOT_ONE: "a_p + a_u(p) must equal 1 unless u(p) is fixed",
    NOT_BOOLEAN: "a_p must be 0 or 1 off the 2-cycles of u",
}


def cycle_conditions(field, u, a):
    """
    Every failed condition of a raw (u, a) as (condition, p) pairs, no normalization applied.

    Conditions: FIXED_POINT_NONZERO, SUM_NOT_ONE, NOT_BOOLEAN. The sum
    condition does not apply when u(p) is a fixed point: a at a fixed point
    does not enter the maps.
    """
    zero, one = field.zero, field.one
    failures = []
    for p in range(len(u)):
        if u[p] == p:
            if a[p] != zero:
                failures.append((FIXED_POINT_NONZERO, p))
            continue
        if u[u[p]] != u[p] and a[p] + a[u[p]] != one:
            failures.append((SUM_NOT_ONE, p))
        if u[u[p]] != p and a[p] not in (zero, one):
            failures.append((NOT_BOOLEAN, p))
    return failures


@dataclass(frozen=True, eq=False)
class CycleDatum:
    field: object
    u: tuple
    a: tuple

    @classmethod
    def create(cls, field, u, a):
        """Coerce the scalars and set a_p = 0 wherever u(p) = p."""
        u = tuple(int(v) for v in u)
        if len(a) != len(u):
            raise ConditionViolated(f"u has {len(u)} entries but a has {len(a)}")
        if any(not 0 <= v < len(u) for v in u):
            raise ConditionViolated("u leaves {1..m}")
        scalars = tuple(field.zero if u[p] == p else field(value) for p, value in enumerate(a))
        return cls(field, u, scalars)

    @property
    def m(self):
        return len(self.u)

    def violations(self):
        return [ConditionViolated(_CONDITION_TEXT[condition], coordinate=p)
                for condition, p in cycle_conditions(self.field, self.u, self.a)]

    def is_valid(self):
        return not self.violations()

    def key(self):
        return (self.u, tuple(self.field.key(x) for x in self.a))

    def __eq__(self, other):
        if not isinstance(other, CycleDatum):
            return NotImplemented
        return self.field == other.field and self.u == other.u and self.a == other.a

    def __hash__(self):
        return hash((self.field, self.key()))

    def __repr__(self):
        return f"CycleDatum(u={[v + 1 for v in self.u]}, a={[self.field.render(x) for x in self.a]})"


def cycle_maps(field, u, a):
    """The four maps of a raw (u, a), keyed PHI_1, ALPHA_1, PHI_2, ALPHA_2."""
    m = len(u)
    zero, one = field.zero, field.one
    rows = {PHI_1: [], ALPHA_1: [], PHI_2: [], ALPHA_2: []}
    for p in range(m):
        ap = field(a[p])
        bp = one - ap
        target = u[p]
        for name, own, other in ((PHI_1, ap, bp), (ALPHA_1, ap, -ap), (PHI_2, bp, ap), (ALPHA_2, bp, -bp)):
            row = [zero] * m
            row[p] += own
            row[target] += other
            rows[name].append(tuple(row))
    return {name: EndoMap(field, tuple(body)) for name, body in rows.items()}


def cycle_grid_maps(field, u, a):
    maps = cycle_maps(field, u, a)
    return {(0, 0): maps[PHI_1], (0, 1): maps[ALPHA_1], (1, 0): maps[ALPHA_2], (1, 1): maps[PHI_2]}


def cycle_grid(field, u, a):
    """EGrid of a raw (u, a) over K^m, whether or not the conditions hold."""
    algebra = AlgebraStructure.diagonal(field, len(u))
    return EGrid.from_maps(algebra, 2, cycle_grid_maps(field, u, a))


def rep_from_cycle_datum(d):
    """
    Admissible pair of a 2-cycle datum.

    Arrow maps that vanish are dropped, so u = id gives the pair of two
    isolated loops.

    Raises:
        ConditionViolated: first failing coordinate
    """
    violations = d.violations()
    if violations:
        raise violations[0]
    algebra = AlgebraStructure.diagonal(d.field, d.m)
    return pair_from_arrow_maps(algebra, 2, cycle_grid_maps(d.field, d.u, d.a))


@dataclass(frozen=True)
class AffineEntry:
    """constant + sign * a_parameter, or a plain constant when parameter is None."""

    constant: int
    sign: int = 0
    parameter: Optional[int] = None

    def evaluate(self, field, values):
        value = field(self.constant)
        if self.parameter is not None:
            value += field(self.sign) * values[self.parameter]
        return value

    def describe(self):
        if self.parameter is None:
            return str(self.constant)
        name = f"a_{self.parameter + 1}"
        if self.constant == 0:
            return name if self.sign > 0 else f"-{name}"
        return f"{self.constant} {'+' if self.sign > 0 else '-'} {name}"


@dataclass(frozen=True)
class CycleFamily:
    """All data sharing u whose a is affine in a few free parameters."""

    u: tuple
    entries: tuple
    parameters: tuple

    def instantiate(self, field, values):
        lookup = dict(zip(self.parameters, values))
        return CycleDatum.create(field, self.u, [entry.evaluate(field, lookup) for entry in self.entries])

    def expand(self, field):
        for values in product(field.elements(), repeat=len(self.parameters)):
            yield self.instantiate(field, values)

    def sample(self, field, rng):
        return self.instantiate(field, [field.random_element(rng) for _ in self.parameters])

    def describe(self):
        return [entry.describe() for entry in self.entries]


def functional_cycles(u):
    """Cycles of the functional graph of u, each rotated to start at its smallest point."""
    cycles, seen = [], set()
    for start in range(len(u)):
        path, position = [], {}
        x = start
        while x not in seen and x not in position:
            position[x] = len(path)
            path.append(x)
            x = u[x]
        if x in position:
            cycle = path[position[x]:]
            k = cycle.index(min(cycle))
            cycles.append(tuple(cycle[k:] + cycle[:k]))
        seen.update(path)
    return cycles


def _cycle_choices(u, cycle):
    length = len(cycle)
    if length == 1:
        return [{cycle[0]: AffineEntry(0)}]
    if length == 2:
        p, q = cycle
        hanging = any(u[r] in cycle and r not in cycle for r in range(len(u)))
        if hanging:
            return [{p: AffineEntry(0), q: AffineEntry(1)}, {p: AffineEntry(1), q: AffineEntry(0)}]
        return [{p: AffineEntry(0, 1, p), q: AffineEntry(1, -1, p)}]
    if length % 2:
        return []
    return [{vertex: AffineEntry((k + start) % 2) for k, vertex in enumerate(cycle)} for start in (0, 1)]


def cycle_templates(u):
    """
    Solve the 2-cycle conditions for a fixed u.

    Each component of the functional graph is one cycle with trees hanging
    off it. Values on a tree alternate from the cycle point it drains into,
    except below a fixed point: each point mapped onto a fixed point picks
    0 or 1 on its own and its subtree alternates from there.

    Returns:
        List of CycleFamily; empty when u has an odd cycle of length >= 3
    """
    u = tuple(u)
    m = len(u)
    cycles = functional_cycles(u)
    on_cycle = {vertex for cycle in cycles for vertex in cycle}
    free_children = [r for r in range(m) if r not in on_cycle and u[u[r]] == u[r]]
    families = []
    for combination in product(*(_cycle_choices(u, cycle) for cycle in cycles)):
        values = {}
        for choice in combination:
            values.update(choice)
        for bits in product((0, 1), repeat=len(free_children)):
            anchors = dict(zip(free_children, bits))
            entries = []
            for r in range(m):
                if r in on_cycle:
                    entries.append(values[r])
                    continue
                depth, x = 0, r
                while x not in on_cycle and x not in anchors:
                    x = u[x]
                    depth += 1
                base = anchors[x] if x in anchors else values[x].constant
                entries.append(AffineEntry(base if depth % 2 == 0 else 1 - base))
            parameters = tuple(sorted({entry.parameter for entry in entries if entry.parameter is not None}))
            families.append(CycleFamily(u, tuple(entries), parameters))
    return families


def cycle_families(m):
    return [family for u in all_functions(m) for family in cycle_templates(u)]


def enumerate_cycle_data(m, field):
    """
    All 2-cycle data over ``field``.

    Args:
        m: Dimension of K^m
        field: FieldSpec

    Returns:
        Over a prime field, the sorted list of every CycleDatum. Over the
        rationals, the list of CycleFamily objects with free parameters.
    """
    families = cycle_families(m)
    if not field.is_finite:
        logger.info(f"{len(families)} 2-cycle families for m={m} over {field.label}")
        return families
    data = sorted({datum for family in families for datum in family.expand(field)}, key=CycleDatum.key)
    logger.info(f"{len(data)} 2-cycle data for m={m} over {field.label}")
    return data
