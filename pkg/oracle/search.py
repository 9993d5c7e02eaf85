"""Exhaustive search for E-grids over K^m with K = F_p.

Entries are handled as plain residues mod p; a grid is a tuple (over i) of
tuples (over j) of m x m matrices stored as tuples of rows. Found grids are
converted to EGrid objects only at the end.
"""

import logging
from dataclasses import dataclass
from itertools import product

from tqdm import tqdm

from algebra.field import FieldSpec
from algebra.linalg import EndoMap
from algebra.structure import AlgebraStructure
from oracle.compare import GridSet
from twisting.grid import EGrid
from utils.config import DEFAULT_BUDGET
from utils.errors import BudgetExceeded, InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchSpace:
    n: int
    m: int
    p: int
    prune: bool = True

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise InputError(f"dimensions must be positive, got n={self.n}, m={self.m}")
        FieldSpec.prime(self.p)

    @property
    def field(self):
        return FieldSpec.prime(self.p)

    @property
    def raw_size(self):
        return self.p ** (self.n * self.n * self.m * self.m)

    def describe(self):
        if not self.prune:
            return f"all {self.raw_size} grids, full axiom check"
        return ("columns left to right; off-diagonal entries drawn from idempotents killing the "
                "all-ones vector; orthogonality within a column; diagonal entry Id minus the rest; "
                "multiplicativity on complete grids")


class _Counter:
    def __init__(self, budget):
        self.budget = budget
        self.visited = 0

    def tick(self):
        self.visited += 1
        if self.visited > self.budget:
            raise BudgetExceeded(self.visited, self.budget)


def _identity(m):
    return tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))


def _zero(m):
    return tuple((0,) * m for _ in range(m))


def _matmul(a, b, p):
    m = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(m)) % p for j in range(m)) for i in range(m))


def _add(a, b, p):
    return tuple(tuple((x + y) % p for x, y in zip(r, s)) for r, s in zip(a, b))


def _sub(a, b, p):
    return tuple(tuple((x - y) % p for x, y in zip(r, s)) for r, s in zip(a, b))


def idempotent_candidates(m, p):
    """Idempotent m x m matrices over F_p with zero row sums, in lexicographic order."""
    found = []
    for rows in product(product(range(p), repeat=m - 1), repeat=m):
        matrix = tuple(row + ((-sum(row)) % p,) for row in rows)
        if _matmul(matrix, matrix, p) == matrix:
            found.append(matrix)
    return found


def _column_options(n, m, p, candidates, counter):
    """Ordered (n-1)-tuples of pairwise orthogonal candidates, one per off-diagonal row."""
    zero = _zero(m)
    options = []

    def extend(chosen):
        if len(chosen) == n - 1:
            options.append(tuple(chosen))
            return
        for candidate in candidates:
            counter.tick()
            if all(_matmul(candidate, other, p) == zero and _matmul(other, candidate, p) == zero
                   for other in chosen):
                chosen.append(candidate)
                extend(chosen)
                chosen.pop()

    extend([])
    return options


def _place_column(j, off_diagonal, m, p):
    column = list(off_diagonal)
    total = _zero(m)
    for matrix in column:
        total = _add(total, matrix, p)
    column.insert(j, _sub(_identity(m), total, p))
    return column


def _is_multiplicative(grid, n, m, p):
    # E_ij(f_q f_r) = sum_k E_ik(f_q) E_kj(f_r), coordinatewise in row s
    for i in range(n):
        for j in range(n):
            for q in range(m):
                for r in range(m):
                    for s in range(m):
                        lhs = grid[i][j][s][q] if q == r else 0
                        rhs = sum(grid[i][k][s][q] * grid[k][j][s][r] for k in range(n)) % p
                        if lhs != rhs:
                            return False
    return True


def passes_axioms(grid, n, m, p):
    """All four axioms on a residue grid, with no assumption on how it was built."""
    identity, zero = _identity(m), _zero(m)
    for j in range(n):
        total = zero
        for i in range(n):
            total = _add(total, grid[i][j], p)
            for k in range(n):
                expected = grid[i][j] if i == k else zero
                if _matmul(grid[i][j], grid[k][j], p) != expected:
                    return False
            ones_image = tuple(sum(row) % p for row in grid[i][j])
            if ones_image != ((1,) * m if i == j else (0,) * m):
                return False
        if total != identity:
            return False
    return _is_multiplicative(grid, n, m, p)


def _pruned_search(n, m, p, counter, progress):
    candidates = idempotent_candidates(m, p)
    options = _column_options(n, m, p, candidates, counter)
    columns = [[_place_column(j, choice, m, p) for choice in options] for j in range(n)]
    logger.debug(f"{len(candidates)} off-diagonal candidates, {len(options)} options per column")
    found = []
    total = len(options) ** n
    if counter.visited + total > counter.budget:
        raise BudgetExceeded(counter.visited + total, counter.budget)
    for choice in tqdm(product(*columns), total=total, desc="grids", disable=not progress):
        counter.tick()
        grid = tuple(tuple(choice[j][i] for j in range(n)) for i in range(n))
        if _is_multiplicative(grid, n, m, p):
            found.append(grid)
    return found


def _exhaustive_search(n, m, p, counter, progress):
    size = n * n * m * m
    if p ** size > counter.budget:
        raise BudgetExceeded(p ** size, counter.budget)
    found = []
    for entries in tqdm(product(range(p), repeat=size), total=p ** size, desc="grids", disable=not progress):
        counter.tick()
        grid = tuple(
            tuple(
                tuple(tuple(entries[((i * n + j) * m + s) * m + t] for t in range(m)) for s in range(m))
                for j in range(n))
            for i in range(n))
        if passes_axioms(grid, n, m, p):
            found.append(grid)
    return found


def grid_from_residues(grid, field):
    algebra = AlgebraStructure.diagonal(field, len(grid[0][0]))
    return EGrid(algebra, tuple(
        tuple(EndoMap(field, tuple(tuple(field(x) for x in row) for row in matrix)) for matrix in line)
        for line in grid))


def brute_force_twisting_maps(n, m, p, prune=True, budget=DEFAULT_BUDGET, progress=False):
    """
    Every E-grid over K^m with K = F_p satisfying the four axioms.

    Args:
        n: Number of vertices
        m: Dimension of K^m
        p: Prime characteristic
        prune: Build columns from admissible candidates; False scans every grid
        budget: Maximum number of search nodes
        progress: Show a tqdm bar

    Returns:
        GridSet

    Raises:
        BudgetExceeded: the node count passes ``budget``
    """
    space = SearchSpace(n, m, p, prune)
    counter = _Counter(budget)
    logger.info(f"Searching n={n}, m={m}, p={p}: {space.describe()}")
    search = _pruned_search if prune else _exhaustive_search
    found = search(n, m, p, counter, progress)
    grids = GridSet(grid_from_residues(grid, space.field) for grid in found)
    logger.info(f"Found {len(grids)} twisting grids after {counter.visited} nodes")
    return grids


def count_idempotent_functions(m):
    return sum(1 for u in product(range(m), repeat=m) if all(u[u[x]] == u[x] for x in range(m)))
