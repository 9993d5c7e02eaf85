"""Twisting maps in tensor form.

The coefficient ``tau[i][q][r][j]`` is the coordinate of f_r (x) e_j in
tau(e_i (x) f_q). The defining identities are evaluated on basis tensors,
independently of the pointwise E-grid axioms.
"""

import logging

from twisting.grid import (AxiomReport, AxiomResult, COLUMN_SUM, IDEMPOTENT_COLUMNS,
                           MULTIPLICATIVITY, UNIT)

logger = logging.getLogger(__name__)


def twisting_map_from_grid(g):
    n, m = g.n, g.m
    return [[[[g.entry(i, j).entry(r, q) for j in range(n)] for r in range(m)] for q in range(m)]
            for i in range(n)]


def check_tensor_axioms(g):
    """
    Evaluate the four identities of a twisting map tau: K^n (x) A -> A (x) K^n.

    The checks are reported under the names of the pointwise axioms they are
    equivalent to: compatibility with the product of K^n, with the product
    of A, with the unit of K^n and with the unit of A.
    """
    tau = twisting_map_from_grid(g)
    field = g.field
    zero, one = field.zero, field.one
    table = g.algebra.table
    unit = g.algebra.unit.coords
    n, m = g.n, g.m

    def product_of_kn():
        # tau(e_i e_j (x) f_q) against (A (x) mu)(tau (x) K^n)(K^n (x) tau)
        for i in range(n):
            for j in range(n):
                for q in range(m):
                    for s in range(m):
                        for k in range(n):
                            lhs = tau[i][q][s][k] if i == j else zero
                            rhs = zero
                            for r in range(m):
                                rhs += tau[j][q][r][k] * tau[i][r][s][k]
                            if lhs != rhs:
                                return AxiomResult(IDEMPOTENT_COLUMNS, False, (i, j, q))
        return AxiomResult(IDEMPOTENT_COLUMNS, True)

    def product_of_a():
        # tau(e_i (x) f_q f_r) against (mu_A (x) K^n)(A (x) tau)(tau (x) A)
        for i in range(n):
            for q in range(m):
                for r in range(m):
                    lhs = [[zero] * n for _ in range(m)]
                    for u, c in enumerate(table[q][r].coords):
                        if c == zero:
                            continue
                        for s in range(m):
                            for l in range(n):
                                lhs[s][l] += c * tau[i][u][s][l]
                    rhs = [[zero] * n for _ in range(m)]
                    for s in range(m):
                        for k in range(n):
                            a = tau[i][q][s][k]
                            if a == zero:
                                continue
                            for t in range(m):
                                for l in range(n):
                                    b = tau[k][r][t][l]
                                    if b == zero:
                                        continue
                                    for w, c in enumerate(table[s][t].coords):
                                        if c != zero:
                                            rhs[w][l] += a * b * c
                    if lhs != rhs:
                        return AxiomResult(MULTIPLICATIVITY, False, (i, q, r))
        return AxiomResult(MULTIPLICATIVITY, True)

    def unit_of_kn():
        # tau(1 (x) f_q) = f_q (x) 1
        for q in range(m):
            for s in range(m):
                for k in range(n):
                    total = zero
                    for i in range(n):
                        total += tau[i][q][s][k]
                    if total != (one if s == q else zero):
                        return AxiomResult(COLUMN_SUM, False, (q,))
        return AxiomResult(COLUMN_SUM, True)

    def unit_of_a():
        # tau(e_i (x) 1) = 1 (x) e_i
        for i in range(n):
            for s in range(m):
                for k in range(n):
                    total = zero
                    for q in range(m):
                        total += unit[q] * tau[i][q][s][k]
                    if total != (unit[s] if k == i else zero):
                        return AxiomResult(UNIT, False, (i,))
        return AxiomResult(UNIT, True)

    return AxiomReport((product_of_kn(), product_of_a(), unit_of_kn(), unit_of_a()))
