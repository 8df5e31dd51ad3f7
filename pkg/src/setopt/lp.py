"""Exact two-phase simplex over the rationals.

Problems have the form ``maximize c.v subject to G v >= g`` with free
variables. Internally each free variable is split as ``v = v+ - v-`` and
every row gets a surplus variable, giving ``G v+ - G v- - s = g``. Pivoting
uses Bland's rule throughout, so the method terminates on degenerate input
and is deterministic for a fixed problem.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InputError
from .rational import Matrix, Vector, dot, zeros

ZERO = Fraction(0)
ONE = Fraction(1)


class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """maximize ``objective . v`` subject to ``constraints v >= rhs``."""

    objective: Vector
    constraints: Matrix
    rhs: Vector

    def __post_init__(self):
        n = len(self.objective)
        if len(self.constraints) != len(self.rhs):
            raise InputError(
                f"{len(self.constraints)} constraint rows but {len(self.rhs)} rhs entries")
        for i, row in enumerate(self.constraints):
            if len(row) != n:
                raise InputError(f"constraint row {i} has {len(row)} columns, expected {n}")

    @property
    def var_count(self) -> int:
        return len(self.objective)

    @property
    def row_count(self) -> int:
        return len(self.constraints)

    def is_feasible_point(self, v: Vector) -> bool:
        return all(dot(row, v) >= g for row, g in zip(self.constraints, self.rhs))


@dataclass(frozen=True)
class LPOutcome:
    status: LPStatus
    value: Optional[Fraction] = None
    point: Optional[Vector] = None
    ray: Optional[Vector] = None

    @property
    def optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


class _Tableau:
    """Dense tableau ``T u = rhs``, ``u >= 0``, with one basic column per row."""

    def __init__(self, rows, rhs, basis, ncols):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.ncols = ncols
        self.obj = []
        self.obj_value = ZERO

    def set_objective(self, cost):
        # reduced costs c_j - c_B B^-1 A_j for the current basis
        obj = list(cost)
        value = ZERO
        for r, bcol in enumerate(self.basis):
            cb = cost[bcol]
            if not cb:
                continue
            row = self.rows[r]
            for j, a in enumerate(row):
                if a:
                    obj[j] -= cb * a
            value += cb * self.rhs[r]
        self.obj = obj
        self.obj_value = value

    def pivot(self, r, col):
        prow = self.rows[r]
        p = prow[col]
        if p != ONE:
            prow = [a / p for a in prow]
            self.rows[r] = prow
            self.rhs[r] /= p
        nz = [(j, a) for j, a in enumerate(prow) if a]
        prhs = self.rhs[r]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[col]
            if not f:
                continue
            for j, a in nz:
                row[j] -= f * a
            self.rhs[i] -= f * prhs
        f = self.obj[col]
        if f:
            for j, a in nz:
                self.obj[j] -= f * a
            self.obj_value += f * prhs
        self.basis[r] = col

    def run(self, allowed):
        """Maximize with Bland's rule; return None on optimum, else the entering column of an unbounded ray."""
        while True:
            col = next((j for j in range(self.ncols) if allowed[j] and self.obj[j] > 0), None)
            if col is None:
                return None
            best = None
            for r, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    ratio = self.rhs[r] / a
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return col
            self.pivot(best[1], col)


def lp_solve(lp: LinearProgram) -> LPOutcome:
    """Solve ``lp`` exactly.

    Returns an :class:`LPOutcome`: the optimal value and a maximizing point,
    an infeasibility verdict, or an unbounded verdict with a ray ``r``
    satisfying ``G r >= 0`` and ``c.r > 0``.
    """
    n = lp.var_count
    m = lp.row_count
    nsplit = 2 * n
    ncols = nsplit + m
    rows = []
    rhs = []
    basis = []
    needs_artificial = []
    for i, (grow, g) in enumerate(zip(lp.constraints, lp.rhs)):
        row = [ZERO] * ncols
        for j, a in enumerate(grow):
            if a:
                row[j] = a
                row[n + j] = -a
        row[nsplit + i] = -ONE
        g = Fraction(g)
        if g <= 0:
            # -G v + s = -g >= 0: the surplus column is a ready basic variable
            row = [-a for a in row]
            rows.append(row)
            rhs.append(-g)
            basis.append(nsplit + i)
        else:
            rows.append(row)
            rhs.append(g)
            basis.append(None)
            needs_artificial.append(i)

    n_art = len(needs_artificial)
    total = ncols + n_art
    for row in rows:
        row.extend([ZERO] * n_art)
    for k, i in enumerate(needs_artificial):
        rows[i][ncols + k] = ONE
        basis[i] = ncols + k

    tab = _Tableau(rows, rhs, basis, total)
    if n_art:
        cost = [ZERO] * ncols + [-ONE] * n_art
        tab.set_objective(cost)
        tab.run([True] * total)
        if tab.obj_value < 0:
            return LPOutcome(LPStatus.INFEASIBLE)
        _drive_out_artificials(tab, ncols)

    cost = [ZERO] * total
    for j, c in enumerate(lp.objective):
        cost[j] = Fraction(c)
        cost[n + j] = -Fraction(c)
    tab.set_objective(cost)
    allowed = [j < ncols for j in range(total)]
    entering = tab.run(allowed)

    if entering is not None:
        u = [ZERO] * total
        u[entering] = ONE
        for r, bcol in enumerate(tab.basis):
            u[bcol] -= tab.rows[r][entering]
        ray = tuple(u[j] - u[n + j] for j in range(n))
        return LPOutcome(LPStatus.UNBOUNDED, ray=ray)

    u = [ZERO] * total
    for r, bcol in enumerate(tab.basis):
        u[bcol] = tab.rhs[r]
    point = tuple(u[j] - u[n + j] for j in range(n))
    return LPOutcome(LPStatus.OPTIMAL, value=dot(lp.objective, point), point=point)


def _drive_out_artificials(tab: _Tableau, first_artificial: int) -> None:
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] < first_artificial:
            r += 1
            continue
        row = tab.rows[r]
        col = next((j for j in range(first_artificial) if row[j]), None)
        if col is None:
            # linearly dependent row
            del tab.rows[r]
            del tab.rhs[r]
            del tab.basis[r]
            continue
        tab.pivot(r, col)
        r += 1


def feasible_point(constraints: Matrix, rhs: Vector, dim: int) -> Optional[Vector]:
    """Some point of ``{v : constraints v >= rhs}``, or None if empty."""
    out = lp_solve(LinearProgram(zeros(dim), constraints, rhs))
    return out.point if out.optimal else None
