"""Shared fixtures and independent oracles.

The brute-force solvers here are deliberately separate implementations of
the textbook definitions (explicit deviation loops), so the library solvers
are always checked against something that does not share their code path.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from qegs import Bimatrix

PD_GRID = [[(3, 3), (0, 5)], [(5, 0), (1, 1)]]

# 2x3 game with a risky second row: unique-looking equilibrium play at (2,3)
# but (1,2) also satisfies the weak-inequality definition.
G23_GRID = [[(3, 1), (2, 3), (2, 0)], [(-100, 1), (-100, 2), (3, 3)]]


@pytest.fixture
def pd() -> Bimatrix:
    return Bimatrix.of(PD_GRID)


@pytest.fixture
def g23() -> Bimatrix:
    return Bimatrix.of(G23_GRID, row_labels=["T", "B"], col_labels=["L", "M", "R"])


# -- independent oracles --


def brute_nash(u1, u2):
    """Def-5 check by explicit deviation loops over every profile."""
    n, m = len(u1), len(u1[0])
    out = set()
    for i in range(n):
        for j in range(m):
            ok = True
            for i2 in range(n):
                if u1[i2][j] > u1[i][j]:
                    ok = False
                    break
            if ok:
                for j2 in range(m):
                    if u2[i][j2] > u2[i][j]:
                        ok = False
                        break
            if ok:
                out.add((i + 1, j + 1))
    return out


def brute_dominated(u1, u2):
    n, m = len(u1), len(u1[0])
    rows = set()
    for i in range(n):
        for i2 in range(n):
            if i2 != i and all(u1[i2][j] > u1[i][j] for j in range(m)):
                rows.add(i + 1)
                break
    cols = set()
    for j in range(m):
        for j2 in range(m):
            if j2 != j and all(u2[i][j2] > u2[i][j] for i in range(n)):
                cols.add(j + 1)
                break
    return rows, cols


def brute_maximin(u1, u2):
    n, m = len(u1), len(u1[0])
    row_mins = [min(u1[i][j] for j in range(m)) for i in range(n)]
    col_mins = [min(u2[i][j] for i in range(n)) for j in range(m)]
    best1, best2 = max(row_mins), max(col_mins)
    rows = {i + 1 for i in range(n) if row_mins[i] == best1}
    cols = {j + 1 for j in range(m) if col_mins[j] == best2}
    return rows, cols, (best1, best2)


# -- random game generators --


def random_constant_game(rng: random.Random, max_n=8, max_m=8, lo=-10, hi=10,
                         use_fractions=False) -> Bimatrix:
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)

    def value():
        if use_fractions:
            return Fraction(rng.randint(lo, hi), rng.randint(1, 7))
        return Fraction(rng.randint(lo, hi))

    return Bimatrix.of([[(value(), value()) for _ in range(m)] for _ in range(n)])


def random_constant_2x2(rng: random.Random, lo=-10, hi=10) -> Bimatrix:
    return Bimatrix.of(
        [[(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(2)] for _ in range(2)]
    )


def random_symmetric_2x2(rng: random.Random, lo=-10, hi=10) -> Bimatrix:
    u1 = [[rng.randint(lo, hi) for _ in range(2)] for _ in range(2)]
    return Bimatrix.of(
        [[(u1[i][j], u1[j][i]) for j in range(2)] for i in range(2)]
    )


# -- integer grid oracle for parametric games --
#
# Evaluating p(k/N) scaled by D*N^2 (D = common denominator of all
# coefficients) turns every payoff into an integer, so grid solving runs in
# plain int arithmetic, independent of the sweep's algebraic machinery.


def int_poly_table(g: Bimatrix, grid_n: int):
    from math import lcm

    u1, u2 = g.payoff_grids()
    denom = 1
    for grid in (u1, u2):
        for row in grid:
            for p in row:
                for c in p.coeffs:
                    denom = lcm(denom, c.denominator)

    def table(grid):
        out = []
        for row in grid:
            cells = []
            for p in row:
                cs = list(p.coeffs) + [Fraction(0)] * (3 - len(p.coeffs))
                if len(cs) > 3:
                    raise ValueError("grid oracle supports degree <= 2")
                a0 = int(cs[0] * denom) * grid_n * grid_n
                a1 = int(cs[1] * denom) * grid_n
                a2 = int(cs[2] * denom)
                cells.append((a0, a1, a2))
            out.append(cells)
        return out

    return table(u1), table(u2)


def int_grid_solve(t1, t2, k: int, analyses):
    """Solve the game at parameter k/N from integer coefficient tables."""
    n, m = len(t1), len(t1[0])
    u1 = [[a0 + a1 * k + a2 * k * k for (a0, a1, a2) in row] for row in t1]
    u2 = [[a0 + a1 * k + a2 * k * k for (a0, a1, a2) in row] for row in t2]
    out = {}
    if "ne" in analyses:
        col_max = [max(u1[i][j] for i in range(n)) for j in range(m)]
        row_max = [max(u2[i][j] for j in range(m)) for i in range(n)]
        out["nash"] = frozenset(
            (i + 1, j + 1)
            for i in range(n)
            for j in range(m)
            if u1[i][j] == col_max[j] and u2[i][j] == row_max[i]
        )
    if "dominated" in analyses:
        rows, cols = brute_dominated(u1, u2)
        out["dominated_rows"] = frozenset(rows)
        out["dominated_cols"] = frozenset(cols)
    if "maximin" in analyses:
        rows, cols, _levels = brute_maximin(u1, u2)
        out["maximin_rows"] = frozenset(rows)
        out["maximin_cols"] = frozenset(cols)
    return out


def assert_sweep_matches_grid(g: Bimatrix, result, grid_n: int, analyses):
    """Compare every solution set at k/N against the containing segment."""
    t1, t2 = int_poly_table(g, grid_n)
    segments = result.segments
    idx = 0
    for k in range(grid_n + 1):
        x = Fraction(k, grid_n)
        while not segments[idx].contains(x):
            idx += 1
        data = segments[idx].data
        want = int_grid_solve(t1, t2, k, analyses)
        for field, expected in want.items():
            assert getattr(data, field) == expected, (
                f"mismatch at {x} ({field}): sweep={getattr(data, field)} grid={expected}"
            )


def assert_constant_matches_grid(g: Bimatrix, grid_n: int, analyses):
    """Degenerate family (no parameter): one solve must hold at every point."""
    from qegs import solve

    result = solve(g)
    fixed = {
        "nash": result.nash,
        "dominated_rows": result.dominated_rows,
        "dominated_cols": result.dominated_cols,
        "maximin_rows": result.maximin_rows,
        "maximin_cols": result.maximin_cols,
    }
    t1, t2 = int_poly_table(g, grid_n)
    for k in range(grid_n + 1):
        want = int_grid_solve(t1, t2, k, analyses)
        for field, expected in want.items():
            assert fixed[field] == expected
