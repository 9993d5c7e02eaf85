"""Rank-one representations without 2-cycles, built from idempotent functions.

Each vertex i carries an idempotent self-map u_i of {0..m-1}; the loop map is
the algebra endomorphism theta(u_i) and a non-loop arrow alpha gets
Id - theta(u_{t(alpha)}).
"""

import logging
from dataclasses import dataclass
from itertools import product

from algebra.linalg import endo_from_function, identity_map, image_basis, kernel_basis, \
    span_contains, span_rank, subspace_product_is_zero
from algebra.structure import AlgebraStructure
from quiver.quiver import quiver_rrank
from twisting.pair import pair_from_arrow_maps
from utils.errors import ConditionViolated, RrankTooLarge

logger = logging.getLogger(__name__)


def all_functions(m):
    return list(product(range(m), repeat=m))


def is_idempotent_function(u):
    return all(u[u[p]] == u[p] for p in range(len(u)))


def idempotent_functions(m):
    """Idempotent self-maps of {0..m-1} in lexicographic order."""
    return [u for u in all_functions(m) if is_idempotent_function(u)]


def arrow_condition_failure(u_source, u_target):
    """First p fixed by neither function, or None."""
    for p in range(len(u_source)):
        if u_source[p] != p and u_target[p] != p:
            return p
    return None


@dataclass(frozen=True)
class RankOneDatum:
    field: object
    shape: object
    u: tuple

    @property
    def m(self):
        return len(self.u[0]) if self.u else 0


def check_rank_one_shape(shape):
    value = quiver_rrank(shape.quiver)
    if value > 1:
        vertex = next(i for i in range(shape.n) if len([a for a in shape.quiver.arrows_into(i) if not a.is_loop]) > 1)
        raise RrankTooLarge(vertex, value)
    if shape.has_two_cycle():
        s, t = shape.two_cycles()[0]
        raise ConditionViolated("shape contains a 2-cycle", arrow=(s, t))


def is_identity_function(u):
    return all(image == p for p, image in enumerate(u))


def validate_rank_one_datum(d, roots_identity=True):
    """
    Raise ConditionViolated for the first broken requirement of a datum.

    Loop idempotency failures are reported on the loop arrow (i, i). With
    ``roots_identity`` a vertex without incoming non-loop arrow must carry the
    identity, since its loop map alone has to sum to Id.
    """
    check_rank_one_shape(d.shape)
    if len(d.u) != d.shape.n:
        raise ConditionViolated(f"expected {d.shape.n} functions, got {len(d.u)}")
    for i, u_i in enumerate(d.u):
        if not is_idempotent_function(u_i):
            raise ConditionViolated("vertex function is not idempotent", arrow=(i, i))
        if roots_identity and d.shape.parent(i) is None and not is_identity_function(u_i):
            raise ConditionViolated("vertex without incoming arrow needs the identity function", arrow=(i, i))
    for s, t in d.shape.non_loop_arrows():
        p = arrow_condition_failure(d.u[s], d.u[t])
        if p is not None:
            raise ConditionViolated("coordinate fixed by neither endpoint function", arrow=(s, t), coordinate=p)


def rank_one_maps(field, shape, u):
    m = len(u[0])
    identity = identity_map(field, m)
    loops = [endo_from_function(u_i, field) for u_i in u]
    maps = {(i, i): loops[i] for i in range(shape.n)}
    for s, t in shape.non_loop_arrows():
        maps[(s, t)] = identity - loops[t]
    return maps


def rep_from_rank1_datum(d):
    """
    Admissible pair of a rank-one datum.

    Args:
        d: RankOneDatum

    Returns:
        AdmissiblePair over K^m; arrows whose map vanishes are dropped

    Raises:
        ConditionViolated: the datum breaks idempotency or the arrow condition
    """
    validate_rank_one_datum(d)
    algebra = AlgebraStructure.diagonal(d.field, d.m)
    return pair_from_arrow_maps(algebra, d.shape.n, rank_one_maps(d.field, d.shape, d.u))


def enumerate_rank1_data(shape, m, field, roots_identity=False):
    """
    Every rank-one datum on ``shape``, lexicographic in (u_1, ..., u_n).

    Vertices are assigned in order and a partial tuple is abandoned as soon
    as an arrow between assigned vertices fails.

    Args:
        shape: AdmissibleShape with rrank <= 1 and no 2-cycle
        m: Dimension of K^m
        field: FieldSpec the data will be realized over
        roots_identity: Only the identity at vertices without a parent, i.e.
            exactly the data ``rep_from_rank1_datum`` accepts
    """
    check_rank_one_shape(shape)
    candidates = idempotent_functions(m)
    identity = tuple(range(m))
    arrows = shape.non_loop_arrows()
    n = shape.n

    def extend(prefix):
        i = len(prefix)
        if i == n:
            yield RankOneDatum(field, shape, tuple(prefix))
            return
        choices = [identity] if roots_identity and shape.parent(i) is None else candidates
        for u_i in choices:
            prefix.append(u_i)
            ok = all(arrow_condition_failure(prefix[s], prefix[t]) is None
                     for s, t in arrows if max(s, t) == i)
            if ok:
                yield from extend(prefix)
            prefix.pop()

    count = 0
    for datum in extend([]):
        count += 1
        yield datum
    logger.debug(f"Enumerated {count} rank-one data on {len(arrows)} non-loop arrows, m={m}")


@dataclass(frozen=True)
class KernelProduct:
    arrow: tuple
    forward_zero: bool
    reverse_zero: bool


def kernel_product_report(pair):
    """
    For each non-loop arrow s -> t: whether Ker phi_s . Ker phi_t = 0 (required)
    and whether Ker phi_t . Ker phi_s = 0 (reported only; differs for
    noncommutative algebras).
    """
    multiply = pair.algebra.multiply
    report = []
    for arrow, _ in pair.phi:
        if arrow.is_loop:
            continue
        source_kernel = kernel_basis(pair.loop_map(arrow.source))
        target_kernel = kernel_basis(pair.loop_map(arrow.target))
        report.append(KernelProduct(
            tuple(arrow),
            subspace_product_is_zero(source_kernel, target_kernel, multiply),
            subspace_product_is_zero(target_kernel, source_kernel, multiply),
        ))
    return report


@dataclass(frozen=True)
class IdealDecomposition:
    vertex: int
    image: tuple
    kernel: tuple
    direct_sum: bool
    subalgebra: bool
    ideal: bool
    arrow_products: tuple

    @property
    def verified(self):
        return self.direct_sum and self.subalgebra and self.ideal and all(ok for _, ok in self.arrow_products)


def ideal_decomposition(pair, vertex):
    """
    Split A = B_i + M_i with B_i = Im phi_i and M_i = Ker phi_i at a vertex.

    Checks that the sum is direct, B_i is a unital subalgebra, M_i a
    two-sided ideal, and M_s M_t = 0 for the non-loop arrows leaving the vertex.
    """
    algebra = pair.algebra
    field, dim = pair.field, algebra.dim
    phi = pair.loop_map(vertex)
    image = image_basis(phi)
    kernel = kernel_basis(phi)

    direct_sum = len(image) + len(kernel) == dim and span_rank(field, image + kernel) == dim
    subalgebra = span_contains(field, image, algebra.unit) and all(
        span_contains(field, image, algebra.multiply(x, y)) for x in image for y in image)
    basis = [algebra.basis(q) for q in range(dim)]
    ideal = all(span_contains(field, kernel, algebra.multiply(a, k)) and
                span_contains(field, kernel, algebra.multiply(k, a)) for a in basis for k in kernel)

    products = []
    for arrow, _ in pair.phi:
        if arrow.is_loop or arrow.source != vertex:
            continue
        target_kernel = kernel_basis(pair.loop_map(arrow.target))
        products.append((tuple(arrow), subspace_product_is_zero(kernel, target_kernel, algebra.multiply)))

    return IdealDecomposition(vertex, tuple(image), tuple(kernel), direct_sum, subalgebra, ideal, tuple(products))


def ideal_decompositions(pair):
    return [ideal_decomposition(pair, i) for i in range(pair.n)]


