"""Hochschild extensions A = B + M of an algebra B by a bimodule M and their lifted representations.

Basis of A: the basis of B followed by the basis of M. The product is

    (b, m)(b', m') = (bb', bm' + mb' + omega(b, b'))

with unit (1, 0), so M is a two-sided ideal with M^2 = 0.
"""

import logging
from dataclasses import dataclass
from itertools import product

from algebra.linalg import EndoMap, Matrix, Vector, identity_map, image_basis, is_idempotent, kernel_basis, \
    span_contains
from algebra.structure import AlgebraStructure
from classify.rank_one import check_rank_one_shape
from twisting.pair import pair_from_arrow_maps
from utils.errors import ConditionViolated, DimensionMismatch, ImageConditionViolated, NotACocycle

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HochschildData:
    """
    B, a B-bimodule M and a bilinear omega: B x B -> M.

    ``left[q]`` and ``right[q]`` are the k x k matrices of m -> f_q m and
    m -> m f_q; ``omega[q][r]`` is omega(f_q, f_r) in M.
    """

    base: AlgebraStructure
    left: tuple
    right: tuple
    omega: tuple

    def __post_init__(self):
        b = self.base.dim
        if len(self.left) != b or len(self.right) != b or len(self.omega) != b:
            raise DimensionMismatch(b, (len(self.left), len(self.right), len(self.omega)))
        k = self.left[0].nrows if self.left else 0
        for matrix in self.left + self.right:
            if matrix.shape != (k, k):
                raise DimensionMismatch((k, k), matrix.shape)
        for row in self.omega:
            if len(row) != b or any(len(v) != k for v in row):
                raise DimensionMismatch(k, [len(v) for v in row])

    @classmethod
    def of(cls, base, left, right, omega):
        """Build from nested lists of scalars."""
        field = base.field
        return cls(base,
                   tuple(Matrix.of(field, rows) for rows in left),
                   tuple(Matrix.of(field, rows) for rows in right),
                   tuple(tuple(Vector.of(field, v) for v in row) for row in omega))

    @property
    def field(self):
        return self.base.field

    @property
    def b_dim(self):
        return self.base.dim

    @property
    def k_dim(self):
        return self.left[0].nrows if self.left else 0

    def _combine(self, matrices, x):
        total = Matrix.zeros(self.field, self.k_dim, self.k_dim)
        for q, c in enumerate(x.coords):
            if c != self.field.zero:
                total = total + matrices[q].scale(c)
        return total

    def left_action(self, x):
        return self._combine(self.left, x)

    def right_action(self, x):
        return self._combine(self.right, x)

    def omega_of(self, x, y):
        total = Vector.zero(self.field, self.k_dim)
        for q, c in enumerate(x.coords):
            for r, d in enumerate(y.coords):
                if c != self.field.zero and d != self.field.zero:
                    total = total + self.omega[q][r].scale(c * d)
        return total

    def omega_values(self):
        return [self.omega[q][r] for q in range(self.b_dim) for r in range(self.b_dim)]


def validate_hochschild(h):
    """
    Check B, the bimodule axioms and the normalized 2-cocycle identity on basis elements.

    Raises:
        NotACocycle: first failing basis pair or triple, with the broken axiom as reason
    """
    base = h.base
    triple = base.associativity_violation()
    if triple is not None:
        raise NotACocycle(triple, reason="base algebra is not associative")
    broken = base.unit_violation()
    if broken is not None:
        raise NotACocycle((broken,), reason="base algebra unit fails")

    identity = Matrix.identity(h.field, h.k_dim)
    if h.left_action(base.unit) != identity:
        raise NotACocycle((), reason="unit does not act as Id on the left")
    if h.right_action(base.unit) != identity:
        raise NotACocycle((), reason="unit does not act as Id on the right")
    for q, r in product(range(h.b_dim), repeat=2):
        if h.left_action(base.table[q][r]) != h.left[q] @ h.left[r]:
            raise NotACocycle((q, r), reason="left action is not multiplicative")
        if h.right_action(base.table[q][r]) != h.right[r] @ h.right[q]:
            raise NotACocycle((q, r), reason="right action is not multiplicative")
        if h.left[q] @ h.right[r] != h.right[r] @ h.left[q]:
            raise NotACocycle((q, r), reason="left and right actions do not commute")

    for q in range(h.b_dim):
        e = base.basis(q)
        if not h.omega_of(base.unit, e).is_zero() or not h.omega_of(e, base.unit).is_zero():
            raise NotACocycle((q,), reason="cocycle is not normalized")

    for a, b, c in product(range(h.b_dim), repeat=3):
        ea, ec = base.basis(a), base.basis(c)
        value = (h.left[a].apply(h.omega[b][c])
                 - h.omega_of(base.table[a][b], ec)
                 + h.omega_of(ea, base.table[b][c])
                 - h.right[c].apply(h.omega[a][b]))
        if not value.is_zero():
            raise NotACocycle((a, b, c))


def hochschild_extension(h):
    """
    Structure constants of B + M.

    Args:
        h: HochschildData

    Returns:
        AlgebraStructure of dimension dim B + dim M

    Raises:
        NotACocycle: h fails a bimodule or cocycle axiom
    """
    validate_hochschild(h)
    field = h.field
    b, k = h.b_dim, h.k_dim
    zero_b = (field.zero,) * b
    zero_m = Vector.zero(field, k)
    table = []
    for x in range(b + k):
        row = []
        for y in range(b + k):
            if x < b and y < b:
                coords = h.base.table[x][y].coords + h.omega[x][y].coords
            elif x < b:
                coords = zero_b + h.left[x].column(y - b).coords
            elif y < b:
                coords = zero_b + h.right[y].column(x - b).coords
            else:
                coords = zero_b + zero_m.coords
            row.append(Vector(field, coords))
        table.append(tuple(row))
    unit = Vector(field, h.base.unit.coords + zero_m.coords)
    algebra = AlgebraStructure(field, tuple(table), unit)
    triple = algebra.associativity_violation()
    if triple is not None:
        raise NotACocycle(triple, reason="extension is not associative")
    logger.debug(f"Hochschild extension of dimension {b}+{k} built")
    return algebra


@dataclass(frozen=True)
class LiftReport:
    phi: EndoMap
    bimodule_morphism: bool
    preserves_omega: bool
    algebra_map: bool
    idempotent: bool
    kernel_in_m: bool

    @property
    def predicted_algebra_map(self):
        return self.bimodule_morphism and self.preserves_omega

    @property
    def consistent(self):
        return self.predicted_algebra_map == self.algebra_map

    def __bool__(self):
        return self.algebra_map


def is_bimodule_morphism(h, f):
    return all(f @ h.left[q] == h.left[q] @ f and f @ h.right[q] == h.right[q] @ f for q in range(h.b_dim))


def lift_matrix(h, f):
    """Block diagonal (Id_B, f)."""
    field = h.field
    b, k = h.b_dim, h.k_dim
    if f.shape != (k, k):
        raise DimensionMismatch((k, k), f.shape)
    rows = []
    for i in range(b + k):
        if i < b:
            rows.append(tuple(field.one if j == i else field.zero for j in range(b + k)))
        else:
            rows.append((field.zero,) * b + f.rows[i - b])
    return EndoMap(field, tuple(rows))


def phi_from_f(h, f, algebra=None):
    """
    Lift f: M -> M to phi(b, m) = (b, f(m)) and report on it.

    Args:
        h: HochschildData
        f: k x k Matrix
        algebra: Precomputed hochschild_extension(h)

    Returns:
        LiftReport comparing the predicted algebra-map status (bimodule
        morphism and f o omega = omega) with a direct check on A
    """
    algebra = algebra or hochschild_extension(h)
    phi = lift_matrix(h, f)
    kernel = kernel_basis(phi)
    report = LiftReport(
        phi=phi,
        bimodule_morphism=is_bimodule_morphism(h, f),
        preserves_omega=all(f.apply(v) == v for v in h.omega_values()),
        algebra_map=algebra.is_algebra_map(phi),
        idempotent=is_idempotent(phi),
        kernel_in_m=all(all(c == h.field.zero for c in v.coords[:h.b_dim]) for v in kernel),
    )
    if not report.consistent:
        logger.warning(f"Lift prediction {report.predicted_algebra_map} differs from direct check {report.algebra_map}")
    return report


def rep_from_hochschild_family(h, shape, fs):
    """
    Admissible pair over B + M with loop maps lifted from the f_i.

    Args:
        h: HochschildData
        shape: AdmissibleShape with rrank <= 1 and no 2-cycle
        fs: One k x k idempotent bimodule endomorphism of M per vertex

    Returns:
        AdmissiblePair; non-loop arrows get Id - phi_t

    Raises:
        ConditionViolated: some f_i is not an idempotent bimodule morphism,
            or a vertex without incoming arrow has f_i != Id
        ImageConditionViolated: Im omega is not inside Im f_i
    """
    check_rank_one_shape(shape)
    if len(fs) != shape.n:
        raise ConditionViolated(f"expected {shape.n} endomorphisms, got {len(fs)}")
    algebra = hochschild_extension(h)
    field = h.field
    values = h.omega_values()
    loops = []
    for i, f in enumerate(fs):
        f = EndoMap.from_matrix(f)
        if not is_idempotent(f):
            raise ConditionViolated("endomorphism of M is not idempotent", arrow=(i, i))
        if not is_bimodule_morphism(h, f):
            raise ConditionViolated("endomorphism of M is not a bimodule morphism", arrow=(i, i))
        if shape.parent(i) is None and not f.is_identity():
            raise ConditionViolated("vertex without incoming arrow needs f = Id", arrow=(i, i))
        image = image_basis(f)
        if any(not span_contains(field, image, v) for v in values):
            raise ImageConditionViolated(i)
        loops.append(lift_matrix(h, f))

    identity = identity_map(field, algebra.dim)
    maps = {(i, i): loops[i] for i in range(shape.n)}
    for s, t in shape.non_loop_arrows():
        maps[(s, t)] = identity - loops[t]
    return pair_from_arrow_maps(algebra, shape.n, maps)
