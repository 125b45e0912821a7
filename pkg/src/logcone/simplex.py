"""Exact rational linear programming via the two-phase primal simplex.

All arithmetic is in :class:`fractions.Fraction`; Bland's smallest-index
rule guarantees termination.  Infeasibility and optimality are therefore
proofs, not tolerance calls, which is what the tropical-feasibility
decision needs.  Problems here are tiny (tens of variables), so a dense
tableau is plenty.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None
    x: list[Fraction] | None
    # Dual multipliers, one per constraint row in input order (equalities
    # first, then inequalities); a certificate of the optimal bound.
    duals: list[Fraction] | None


def _simplex(T, basis, n_cols):
    """Run Bland-rule simplex on tableau T in place; returns False if unbounded.

    T has one row per constraint plus the objective row last; the objective
    row holds reduced costs for minimization (optimal when all >= 0).
    """
    m = len(T) - 1
    while True:
        obj = T[-1]
        enter = next((j for j in range(n_cols) if obj[j] < 0), None)
        if enter is None:
            return True
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _, leave = best
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(len(T)):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], T[leave])]
        basis[leave] = enter


def solve_lp(c, a_eq, b_eq, a_ub, b_ub, maximize=False) -> LPResult:
    """Solve min (or max) c.x subject to a_eq x = b_eq and a_ub x <= b_ub.

    Variables are free; internally each is split into a difference of
    non-negative parts and slacks are added.  Returns optimal x and the
    dual multipliers of all constraints.
    """
    c = [Fraction(v) for v in c]
    if maximize:
        c = [-v for v in c]
    n = len(c)
    rows = [( [Fraction(v) for v in row], Fraction(b), True) for row, b in zip(a_eq, b_eq)]
    rows += [([Fraction(v) for v in row], Fraction(b), False) for row, b in zip(a_ub, b_ub)]
    m = len(rows)
    n_slack = sum(1 for _, _, is_eq in rows if not is_eq)

    # columns: x+ (n), x- (n), slacks (n_slack), artificials (m)
    width = 2 * n + n_slack + m
    T = []
    slack_idx = 0
    row_sign = []
    for i, (row, b, is_eq) in enumerate(rows):
        line = [Fraction(0)] * (width + 1)
        for j, v in enumerate(row):
            line[j] = v
            line[n + j] = -v
        if not is_eq:
            line[2 * n + slack_idx] = Fraction(1)
            slack_idx += 1
        if b < 0:
            line = [-v for v in line]
            b = -b
            row_sign.append(-1)
        else:
            row_sign.append(1)
        line[2 * n + n_slack + i] = Fraction(1)
        line[-1] = b
        T.append(line)

    # phase 1: minimize the sum of artificials
    obj = [Fraction(0)] * (width + 1)
    for j in range(2 * n + n_slack, width):
        obj[j] = Fraction(1)
    T.append(obj)
    basis = [2 * n + n_slack + i for i in range(m)]
    for i in range(m):
        T[-1] = [a - b for a, b in zip(T[-1], T[i])]
    _simplex(T, basis, width)
    if -T[-1][-1] != 0:
        return LPResult("infeasible", None, None, None)
    # drive any artificials out of the basis, then drop their columns
    for i in range(m):
        if basis[i] >= 2 * n + n_slack:
            enter = next((j for j in range(2 * n + n_slack) if T[i][j] != 0), None)
            if enter is None:
                continue  # redundant row
            piv = T[i][enter]
            T[i] = [x / piv for x in T[i]]
            for k in range(len(T)):
                if k != i and T[k][enter] != 0:
                    f = T[k][enter]
                    T[k] = [a - f * b for a, b in zip(T[k], T[i])]
            basis[i] = enter

    # phase 2
    T[-1] = [Fraction(0)] * (width + 1)
    for j in range(n):
        T[-1][j] = c[j]
        T[-1][n + j] = -c[j]
    for i in range(m):
        if basis[i] < 2 * n + n_slack and T[-1][basis[i]] != 0:
            f = T[-1][basis[i]]
            T[-1] = [a - f * b for a, b in zip(T[-1], T[i])]
    if not _simplex(T, basis, 2 * n + n_slack):
        return LPResult("unbounded", None, None, None)

    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] += T[i][-1]
        elif basis[i] < 2 * n:
            x[basis[i] - n] -= T[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    # duals read off the artificial columns of the final objective row
    # (reduced cost of artificial i is -y_i, modulo the row negation above)
    duals = [-T[-1][2 * n + n_slack + i] * row_sign[i] for i in range(m)]
    if maximize:
        value = -value
        duals = [-d for d in duals]
    return LPResult("optimal", value, x, duals)
