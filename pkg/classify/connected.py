"""Connected reduced-rank-one shapes containing a 2-cycle.

The shape is relabeled so the 2-cycle sits on vertices 0 and 1 (the smaller
original vertex first) with alpha_1: 0 -> 1 and alpha_2: 1 -> 0; the other
vertices keep their relative order. Tree vertices carry idempotent
functions as in the rank-one case.
"""

import logging
import random
from dataclasses import dataclass
from itertools import product

from algebra.linalg import endo_from_function, identity_map
from algebra.structure import AlgebraStructure
from classify.cycle import CycleDatum, cycle_grid_maps, enumerate_cycle_data
from classify.rank_one import arrow_condition_failure, idempotent_functions, is_idempotent_function
from quiver.decompose import unique_cycle_decomposition
from quiver.quiver import validate_admissible_shape
from twisting.pair import pair_from_arrow_maps
from utils.config import DEFAULT_SEED
from utils.errors import ConditionViolated

logger = logging.getLogger(__name__)

CYCLE_ARROWS = ((0, 1), (1, 0))


def canonical_cycle_labeling(shape):
    """
    Relabel a connected rrank-1 shape with one 2-cycle.

    Returns:
        (relabeled AdmissibleShape, permutation) where permutation[old] = new

    Raises:
        RrankTooLarge: some vertex has two non-loop parents
        ConditionViolated: the shape is disconnected or its cycle is not a 2-cycle
    """
    components = unique_cycle_decomposition(shape)
    if len(components) != 1:
        raise ConditionViolated(f"shape has {len(components)} weak components, expected 1")
    cycle = components[0].cycle
    if len(cycle) != 2:
        raise ConditionViolated(f"shape carries a cycle of length {len(cycle)}, expected a 2-cycle")
    s, t = sorted(cycle)
    order = [s, t] + [v for v in range(shape.n) if v not in (s, t)]
    permutation = [0] * shape.n
    for new, old in enumerate(order):
        permutation[old] = new
    return validate_admissible_shape(shape.quiver.relabel(permutation)), tuple(permutation)


@dataclass(frozen=True, eq=False)
class ConnectedCycleDatum:
    """A canonically labeled shape, a 2-cycle datum on vertices 0, 1 and functions on the tree vertices."""

    shape: object
    cycle: CycleDatum
    u: tuple

    @classmethod
    def create(cls, shape, cycle, tree_functions):
        return cls(shape, cycle, (cycle.u, cycle.u) + tuple(tuple(u_i) for u_i in tree_functions))

    @property
    def field(self):
        return self.cycle.field

    @property
    def m(self):
        return self.cycle.m

    def key(self):
        return (self.shape.quiver, self.cycle.key(), self.u)

    def __eq__(self, other):
        if not isinstance(other, ConnectedCycleDatum):
            return NotImplemented
        return self.shape == other.shape and self.cycle == other.cycle and self.u == other.u

    def __hash__(self):
        return hash(self.key())


def _feeding_cycle_map(shape, grid_maps, vertex):
    """Map carried by the cycle arrow of ``shape`` that ends at ``vertex``."""
    arrows = [(s, t) for s, t in shape.non_loop_arrows() if t == vertex and (s, t) in grid_maps]
    if len(arrows) != 1:
        raise ConditionViolated("cycle vertex needs exactly one incoming cycle arrow", arrow=(vertex, vertex))
    return grid_maps[arrows[0]]


def connected_cycle_violation(d):
    """
    First broken condition of a connected-cycle datum, or None.

    An arrow s -> t leaving the cycle needs, at every p moved by both u and
    u_t, the row p of the cycle arrow into s to vanish: a_p = 1 when s is
    vertex 0, a_p = 0 when s is vertex 1.
    """
    if len(d.u) != d.shape.n or d.u[0] != d.cycle.u or d.u[1] != d.cycle.u:
        return ConditionViolated("cycle vertices must both carry the cycle function")
    violations = d.cycle.violations()
    if violations:
        return violations[0]
    for i in range(2, d.shape.n):
        if not is_idempotent_function(d.u[i]):
            return ConditionViolated("vertex function is not idempotent", arrow=(i, i))
    maps = cycle_grid_maps(d.field, d.cycle.u, d.cycle.a)
    for s, t in d.shape.non_loop_arrows():
        if (s, t) in CYCLE_ARROWS:
            continue
        if s in (0, 1):
            feeding = _feeding_cycle_map(d.shape, maps, s)
            for p in range(d.m):
                if d.u[t][p] != p and not feeding.row(p).is_zero():
                    wanted = 1 if s == 0 else 0
                    return ConditionViolated(f"arrow leaving the cycle needs a_p = {wanted}", arrow=(s, t),
                                             coordinate=p)
        else:
            p = arrow_condition_failure(d.u[s], d.u[t])
            if p is not None:
                return ConditionViolated("coordinate fixed by neither endpoint function", arrow=(s, t),
                                         coordinate=p)
    return None


def rep_from_connected_cycle(d):
    """
    Admissible pair of a connected-cycle datum on its canonical labels.

    Cycle arrows carry the 2-cycle maps, tree loops theta(u_i) and every other
    arrow Id - phi_t.

    Raises:
        ConditionViolated: first failing arrow and coordinate
    """
    violation = connected_cycle_violation(d)
    if violation is not None:
        raise violation
    field, m, n = d.field, d.m, d.shape.n
    maps = cycle_grid_maps(field, d.cycle.u, d.cycle.a)
    loops = {i: maps[(i, i)] for i in (0, 1)}
    for i in range(2, n):
        loops[i] = endo_from_function(d.u[i], field)
        maps[(i, i)] = loops[i]
    identity = identity_map(field, m)
    for s, t in d.shape.non_loop_arrows():
        if (s, t) not in CYCLE_ARROWS:
            maps[(s, t)] = identity - loops[t]
    return pair_from_arrow_maps(AlgebraStructure.diagonal(field, m), n, maps)


def _cycle_candidates(m, field, rng, samples):
    found = enumerate_cycle_data(m, field)
    if field.is_finite:
        return found
    data = []
    for family in found:
        draws = samples if family.parameters else 1
        for _ in range(draws):
            datum = family.sample(field, rng)
            if datum not in data:
                data.append(datum)
    return data


def enumerate_connected_cycle_data(shape, m, field, rng=None, samples=1):
    """
    Connected-cycle data on a canonically labeled shape.

    Over a prime field every datum is listed; over the rationals each free
    cycle family contributes ``samples`` random members drawn from ``rng``.

    Args:
        shape: Output of canonical_cycle_labeling
        m: Dimension of K^m
        field: FieldSpec
        rng: random.Random for the rational samples
        samples: Draws per free family

    Returns:
        List of ConnectedCycleDatum
    """
    rng = rng or random.Random(DEFAULT_SEED)
    trees = [idempotent_functions(m)] * (shape.n - 2)
    data = []
    for cycle in _cycle_candidates(m, field, rng, samples):
        for tree_functions in product(*trees):
            datum = ConnectedCycleDatum.create(shape, cycle, tree_functions)
            if connected_cycle_violation(datum) is None:
                data.append(datum)
    logger.debug(f"{len(data)} connected-cycle data on {shape.n} vertices, m={m}")
    return data
