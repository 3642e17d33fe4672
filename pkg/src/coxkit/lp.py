"""Exact rational linear programming, feasibility form only.

A dense phase-1 simplex over `fractions.Fraction` with Bland's rule (which
guarantees termination). Infeasible systems come back with an exact Farkas
witness, so every answer is certified: either a nonnegative solution that
reproduces the right-hand side, or a functional separating it from the
column cone.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

__all__ = ["solve_feasibility", "positive_functional"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def solve_feasibility(
    rows: Sequence[Sequence], rhs: Sequence
) -> tuple[list[Fraction] | None, list[Fraction] | None]:
    """Decide whether rows . x = rhs has a solution with x >= 0.

    Returns ``(x, None)`` with an exact solution when feasible, otherwise
    ``(None, y)`` where y . rows <= 0 componentwise and y . rhs > 0.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a: list[list[Fraction]] = []
    b: list[Fraction] = []
    sign: list[int] = []
    for row, beta in zip(rows, rhs):
        beta = Fraction(beta)
        if len(row) != n:
            raise ValueError("ragged system")
        if beta < 0:
            a.append([-Fraction(x) for x in row])
            b.append(-beta)
            sign.append(-1)
        else:
            a.append([Fraction(x) for x in row])
            b.append(beta)
            sign.append(1)

    # Tableau [A | I | b] with the artificial identity block as initial basis;
    # minimize the sum of artificials.
    total = n + m
    t = [a[i] + [_ONE if j == i else _ZERO for j in range(m)] + [b[i]] for i in range(m)]
    basis = list(range(n, n + m))

    def reduced_cost(j: int) -> Fraction:
        cj = _ONE if j >= n else _ZERO
        s = _ZERO
        for i in range(m):
            if basis[i] >= n:
                s += t[i][j]
        return cj - s

    while True:
        enter = -1
        for j in range(total):  # Bland: smallest index with negative reduced cost
            if reduced_cost(j) < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            if t[i][enter] > 0:
                ratio = t[i][total] / t[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:  # phase-1 objective is bounded below by zero
            raise AssertionError("phase-1 simplex cannot be unbounded")
        piv = t[leave][enter]
        t[leave] = [x / piv for x in t[leave]]
        for i in range(m):
            if i != leave and t[i][enter] != 0:
                f = t[i][enter]
                t[i] = [x - f * y for x, y in zip(t[i], t[leave])]
        basis[leave] = enter

    value = _ZERO
    for i in range(m):
        if basis[i] >= n:
            value += t[i][total]
    if value == 0:
        x = [_ZERO] * n
        for i in range(m):
            if basis[i] < n:
                x[basis[i]] = t[i][total]
        for i in range(m):  # exact certification of the solution
            s = sum((Fraction(rows[i][j]) * x[j] for j in range(n)), _ZERO)
            if s != Fraction(rhs[i]):
                raise AssertionError("simplex returned a non-solution")
        return x, None

    # Farkas witness from the optimal multipliers: y_i = 1 - rc(artificial_i),
    # undoing the row sign normalization.
    y = [sign[i] * (_ONE - reduced_cost(n + i)) for i in range(m)]
    for j in range(n):
        s = sum((y[i] * Fraction(rows[i][j]) for i in range(m)), _ZERO)
        if s > 0:
            raise AssertionError("invalid Farkas witness")
    if sum((y[i] * Fraction(rhs[i]) for i in range(m)), _ZERO) <= 0:
        raise AssertionError("invalid Farkas witness")
    return None, y


def positive_functional(columns: Sequence[Sequence[int]]) -> list[int] | None:
    """An integer functional y with y . c >= 1 for every column, if one exists.

    Exists iff 0 is outside the convex hull of the columns. The system
    y . c_j - s_j = 1, s_j >= 0 is solved with y split into positive and
    negative parts.
    """
    if not columns:
        return []
    d = len(columns[0])
    k = len(columns)
    rows = []
    for j, c in enumerate(columns):
        row = [Fraction(x) for x in c]
        row += [-Fraction(x) for x in c]
        row += [-_ONE if i == j else _ZERO for i in range(k)]
        rows.append(row)
    x, _witness = solve_feasibility(rows, [_ONE] * k)
    if x is None:
        return None
    y = [x[i] - x[d + i] for i in range(d)]
    denom = 1
    for v in y:
        denom = denom * v.denominator // math.gcd(denom, v.denominator)
    out = [int(v * denom) for v in y]
    for c in columns:
        if sum(o * int(x) for o, x in zip(out, c)) < 1:
            raise AssertionError("positive functional certification failed")
    return out
