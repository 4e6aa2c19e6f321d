"""Exact rational linear programming (two-phase simplex, Bland's rule)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: list | None = None
    value: Fraction | None = None


def _pivot(T, basis, r, c):
    row = T[r]
    p = row[c]
    if p != 1:
        T[r] = row = [v / p for v in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                T[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _simplex(T, basis, cost_row, allowed):
    """Minimise the objective held in ``T[cost_row]`` (reduced costs, rhs last)."""
    m = cost_row  # constraint rows are 0..cost_row-1
    while True:
        obj = T[cost_row]
        entering = None
        for j in allowed:
            if obj[j] < 0:
                entering = j
                break
        if entering is None:
            return "optimal"
        best = None
        leave = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return "unbounded"
        _pivot(T, basis, leave, entering)


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), free=()):
    """Minimise ``c @ x`` subject to ``A_ub x <= b_ub``, ``A_eq x == b_eq``.

    Variables are nonnegative except those listed in ``free``.  All data are
    converted to :class:`fractions.Fraction`; the answer is exact.
    """
    n = len(c)
    free = sorted(set(free))
    # split free variables x = x+ - x-
    extra = {j: n + k for k, j in enumerate(free)}
    nv = n + len(free)

    def expand(row):
        out = [Fraction(v) for v in row] + [Fraction(0)] * len(free)
        for j, k in extra.items():
            out[k] = -out[j]
        return out

    rows, rhs = [], []
    for row, b in zip(A_ub, b_ub):
        rows.append(expand(row))
        rhs.append(Fraction(b))
    n_ub = len(rows)
    for row, b in zip(A_eq, b_eq):
        rows.append(expand(row))
        rhs.append(Fraction(b))
    m = len(rows)
    n_slack = n_ub
    total = nv + n_slack + m  # structural, slack, artificial
    T = []
    for i in range(m):
        line = rows[i] + [Fraction(0)] * (n_slack + m) + [rhs[i]]
        if i < n_ub:
            line[nv + i] = Fraction(1)
        if line[-1] < 0:
            line = [-v for v in line]
        line[nv + n_slack + i] = Fraction(1)
        T.append(line)
    basis = [nv + n_slack + i for i in range(m)]

    # phase 1: minimise the sum of artificials
    phase1 = [Fraction(0)] * (total + 1)
    for i in range(m):
        phase1 = [a - b for a, b in zip(phase1, T[i])]
    for i in range(m):
        phase1[nv + n_slack + i] = Fraction(0)
    T.append(phase1)
    _simplex(T, basis, m, range(total))
    if T[m][-1] != 0:
        return LPResult("infeasible")
    # drive artificials out of the basis
    for i in range(m):
        if basis[i] >= nv + n_slack:
            for j in range(nv + n_slack):
                if T[i][j] != 0:
                    _pivot(T, basis, i, j)
                    break
    T.pop()

    cost = [Fraction(v) for v in c] + [Fraction(0)] * len(free)
    for j, k in extra.items():
        cost[k] = -cost[j]
    obj = cost + [Fraction(0)] * (n_slack + m) + [Fraction(0)]
    for i in range(m):
        b = basis[i]
        if b < total and obj[b]:
            f = obj[b]
            obj = [a - f * v for a, v in zip(obj, T[i])]
    T.append(obj)
    status = _simplex(T, basis, m, range(nv + n_slack))
    if status == "unbounded":
        return LPResult("unbounded")
    values = [Fraction(0)] * total
    for i in range(m):
        values[basis[i]] = T[i][-1]
    x = values[:n]
    for j, k in extra.items():
        x[j] = values[j] - values[k]
    value = sum((Fraction(cj) * xj for cj, xj in zip(c, x)), Fraction(0))
    return LPResult("optimal", x, value)


def feasible(A_ub=(), b_ub=(), A_eq=(), b_eq=(), n=None, free=()):
    """Return a feasible point or ``None``."""
    if n is None:
        n = len((list(A_ub) + list(A_eq))[0])
    res = linprog([0] * n, A_ub, b_ub, A_eq, b_eq, free)
    return res.x if res.status == "optimal" else None
