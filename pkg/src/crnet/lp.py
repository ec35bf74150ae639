"""Exact two-phase simplex over the rationals.

Solves::

    maximize    c . x
    subject to  A_eq x  = b_eq
                A_ub x <= b_ub
                x >= 0

with :class:`fractions.Fraction` arithmetic throughout and Bland's rule for
both the entering and the leaving variable, so it never cycles and the
returned basic solution is a deterministic function of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple] = None
    value: Optional[Fraction] = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows  # list[list[Fraction]]
        self.rhs = rhs  # list[Fraction]
        self.basis = basis  # list[int]

    def pivot(self, r: int, col: int) -> None:
        rows, rhs = self.rows, self.rhs
        p = rows[r][col]
        if p != 1:
            rows[r] = [a / p for a in rows[r]]
            rhs[r] = rhs[r] / p
        pr = rows[r]
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][col]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
                rhs[i] -= f * rhs[r]
        self.basis[r] = col

    def run(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> str:
        """Maximize ``cost . x`` from the current basis. Returns a status."""
        ncols = len(cost)
        while True:
            # reduced costs, recomputed each pass; tableaux here are tiny
            cb = [cost[b] for b in self.basis]
            in_basis = set(self.basis)
            entering = None
            for j in range(ncols):
                if not allowed[j] or j in in_basis:
                    continue
                z = cost[j]
                for i, row in enumerate(self.rows):
                    if cb[i] and row[j]:
                        z -= cb[i] * row[j]
                if z > 0:
                    entering = j
                    break
            if entering is None:
                return OPTIMAL
            leave = None
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        best, leave = ratio, i
            if leave is None:
                return UNBOUNDED
            self.pivot(leave, entering)


def solve(
    c: Sequence,
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
) -> LPResult:
    n = len(c)
    A_eq = [[Fraction(a) for a in row] for row in A_eq]
    A_ub = [[Fraction(a) for a in row] for row in A_ub]
    if any(len(row) != n for row in A_eq + A_ub):
        raise ValueError("constraint rows must have one entry per variable")
    n_slack = len(A_ub)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for row, b in zip(A_eq, b_eq):
        rows.append(row + [Fraction(0)] * n_slack)
        rhs.append(Fraction(b))
    for k, (row, b) in enumerate(zip(A_ub, b_ub)):
        slack = [Fraction(0)] * n_slack
        slack[k] = Fraction(1)
        rows.append(row + slack)
        rhs.append(Fraction(b))
    m = len(rows)
    n_struct = n + n_slack
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-a for a in rows[i]]
            rhs[i] = -rhs[i]
    # one artificial per row gives an obvious starting basis
    for i in range(m):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows[i] = rows[i] + art
    ncols = n_struct + m
    tab = _Tableau(rows, rhs, [n_struct + i for i in range(m)])

    phase1_cost = [Fraction(0)] * n_struct + [Fraction(-1)] * m
    tab.run(phase1_cost, [True] * ncols)
    if any(tab.rhs[i] != 0 for i in range(len(tab.rows)) if tab.basis[i] >= n_struct):
        return LPResult(INFEASIBLE)

    # drive zero-valued artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= n_struct:
            col = next((j for j in range(n_struct) if tab.rows[i][j] != 0), None)
            if col is None:
                del tab.rows[i], tab.rhs[i], tab.basis[i]
                continue
            tab.pivot(i, col)
        i += 1

    cost = [Fraction(a) for a in c] + [Fraction(0)] * (n_slack + m)
    allowed = [True] * n_struct + [False] * m
    status = tab.run(cost, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * ncols
    for r, b in enumerate(tab.basis):
        x[b] = tab.rhs[r]
    value = sum((Fraction(a) * xi for a, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, tuple(x[:n]), value)


def feasible_point(A_eq=(), b_eq=(), A_ub=(), b_ub=(), n: Optional[int] = None) -> Optional[tuple]:
    """A basic feasible point of the constraint system, or ``None``."""
    if n is None:
        first = (list(A_eq) or list(A_ub))
        if not first:
            raise ValueError("cannot infer the number of variables")
        n = len(first[0])
    res = solve([0] * n, A_eq, b_eq, A_ub, b_ub)
    return res.x if res.status == OPTIMAL else None
