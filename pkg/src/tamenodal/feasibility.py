"""Exact feasibility of ``A y = 0, y > 0`` over the rationals.

Because the system is homogeneous, ``y > 0`` is feasible iff ``y >= 1`` is.
Substituting ``y = 1 + z`` gives a standard-form problem ``A z = -A 1, z >= 0``
which is settled by phase one of the simplex method with Bland's rule.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def phase_one(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """Return some ``z >= 0`` with ``A z = b``, or None if there is none."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]] + [Fraction(0)] * m + [Fraction(b[i])]
        if row[-1] < 0:
            row = [-x for x in row]
        row[n + i] = Fraction(1)
        rows.append(row)
    basis = [n + i for i in range(m)]
    width = n + m
    # objective: minimise the sum of artificials, written as reduced costs
    cost = [Fraction(0)] * (width + 1)
    for r in rows:
        for j in range(n):
            cost[j] -= r[j]
        cost[-1] -= r[-1]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[-1] / r[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # cannot happen in phase one: objective is bounded below
            break
        _pivot(rows, cost, best[1], enter)
        basis[best[1]] = enter
    if cost[-1] != 0:
        return None
    z = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            z[j] = rows[i][-1]
    return z


def _pivot(rows, cost, r, c) -> None:
    piv = rows[r][c]
    rows[r] = [x / piv for x in rows[r]]
    for i, row in enumerate(rows):
        if i != r and row[c] != 0:
            f = row[c]
            rows[i] = [x - f * y for x, y in zip(row, rows[r])]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [x - f * y for x, y in zip(cost, rows[r])]


def positive_solution(A: Sequence[Sequence[int | Fraction]], n: int) -> list[int] | None:
    """Least positive integer vector proportional to a strictly positive solution of A y = 0."""
    A = [[Fraction(x) for x in row] for row in A]
    b = [-sum(row) for row in A]
    z = phase_one(A, b) if A else [Fraction(0)] * n
    if z is None:
        return None
    y = [1 + x for x in z]
    scale = lcm(*(x.denominator for x in y))
    ints = [int(x * scale) for x in y]
    g = gcd(*ints)
    return [x // g for x in ints]
