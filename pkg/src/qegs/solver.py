"""Pure-strategy analysis of constant bimatrix games.

Equilibria use the weak best-response inequalities (ties admitted), strict
dominance requires a strictly better alternative against every opponent
strategy, and maximin returns every argmax-tied strategy together with the
attained security levels. All strategy indices in results are 1-based,
matching the (row, column) profile notation used throughout.

The ``*_grid`` helpers work on plain grids of exactly-comparable values
(Fraction or QuadAlgebraic), which is what the parametric sweep feeds them
at irrational breakpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Optional, Tuple

from .algebraic import QuadAlgebraic
from .core import Bimatrix, format_rational
from .errors import IndexOutOfRangeError, ParamError, ParametricInputError

ANALYSES = ("ne", "dominated", "maximin")

Profile = Tuple[int, int]


@dataclass(frozen=True)
class SolveResult:
    nash: FrozenSet[Profile]
    dominated_rows: FrozenSet[int]
    dominated_cols: FrozenSet[int]
    maximin_rows: FrozenSet[int]
    maximin_cols: FrozenSet[int]
    security_levels: Tuple[object, object]


def nash_grid(u1, u2) -> FrozenSet[Profile]:
    n, m = len(u1), len(u1[0])
    col_max = [max(u1[i][j] for i in range(n)) for j in range(m)]
    row_max = [max(u2[i][j] for j in range(m)) for i in range(n)]
    return frozenset(
        (i + 1, j + 1)
        for i in range(n)
        for j in range(m)
        if u1[i][j] == col_max[j] and u2[i][j] == row_max[i]
    )


def _dominated_lines(lines) -> FrozenSet[int]:
    """Indices of lines strictly beaten elsewhere in every coordinate."""
    out = set()
    for i, line in enumerate(lines):
        for other in lines:
            if other is line:
                continue
            if all(o > x for o, x in zip(other, line)):
                out.add(i + 1)
                break
    return frozenset(out)


def dominated_grid(u1, u2) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    rows = _dominated_lines(u1)
    cols = _dominated_lines(list(zip(*u2)))
    return rows, cols


def _maximin_lines(lines):
    mins = [min(line) for line in lines]
    best = max(mins)
    picks = frozenset(i + 1 for i, v in enumerate(mins) if v == best)
    return picks, best


def maximin_grid(u1, u2):
    rows, level1 = _maximin_lines(u1)
    cols, level2 = _maximin_lines(list(zip(*u2)))
    return rows, cols, (level1, level2)


def _grids(g: Bimatrix):
    if not g.is_constant:
        raise ParametricInputError()
    return g.constant_grids()


def find_pure_ne(g: Bimatrix) -> FrozenSet[Profile]:
    """All pure Nash equilibria (1-based profiles) of a constant game."""
    return nash_grid(*_grids(g))


def dominated_strategies(g: Bimatrix) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Strictly dominated rows and columns; single pass, no iteration."""
    return dominated_grid(*_grids(g))


def maximin(g: Bimatrix):
    """Maximin rows/cols (all ties) and the two security levels."""
    return maximin_grid(*_grids(g))


def check_profile(g: Bimatrix, i: int, j: int) -> bool:
    """Re-check the equilibrium inequalities for one profile (1-based)."""
    u1, u2 = _grids(g)
    if not (1 <= i <= g.rows and 1 <= j <= g.cols):
        raise IndexOutOfRangeError(f"profile ({i}, {j}) outside {g.rows}x{g.cols} game")
    i0, j0 = i - 1, j - 1
    if any(u1[r][j0] > u1[i0][j0] for r in range(g.rows)):
        return False
    if any(u2[i0][c] > u2[i0][j0] for c in range(g.cols)):
        return False
    return True


def solve(g: Bimatrix) -> SolveResult:
    """All three analyses of a constant game in one result."""
    u1, u2 = _grids(g)
    rows, cols = dominated_grid(u1, u2)
    mrows, mcols, levels = maximin_grid(u1, u2)
    return SolveResult(nash_grid(u1, u2), rows, cols, mrows, mcols, levels)


def format_exact(value) -> str:
    """Render an exact value (rational or quadratic surd) as a string."""
    if isinstance(value, QuadAlgebraic):
        return str(value)
    return format_rational(Fraction(value))


def result_to_json(result: SolveResult, analyses=ANALYSES) -> dict:
    """Result JSON schema: 1-based indices, exact values as strings."""
    out = {}
    if "ne" in analyses:
        out["ne"] = [list(p) for p in sorted(result.nash)]
    if "dominated" in analyses:
        out["dominatedRows"] = sorted(result.dominated_rows)
        out["dominatedCols"] = sorted(result.dominated_cols)
    if "maximin" in analyses:
        out["maximinRows"] = sorted(result.maximin_rows)
        out["maximinCols"] = sorted(result.maximin_cols)
        out["securityLevels"] = [format_exact(v) for v in result.security_levels]
    return out


def normalize_analyses(raw) -> Tuple[str, ...]:
    """Accepts "ne|maximin|dominated|all" or an iterable of those."""
    if raw is None or raw == "all":
        return ANALYSES
    if isinstance(raw, str):
        raw = [raw]
    chosen = []
    for item in raw:
        if item == "all":
            return ANALYSES
        if item not in ANALYSES:
            raise ParamError(f"unknown analysis {item!r}; expected ne, maximin, dominated or all")
        if item not in chosen:
            chosen.append(item)
    if not chosen:
        return ANALYSES
    return tuple(chosen)
