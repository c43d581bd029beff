"""Exact breakpoint decomposition of single-parameter games.

Where an interactive slider would re-solve the game at every position, this
module computes, once and exactly, the finitely many parameter values at
which the requested solution sets (equilibria, dominated strategies,
maximin) can change: the real roots of the relevant pairwise payoff
difference polynomials. Between consecutive breakpoints the solution sets
are constant, so each open interval is solved at one rational sample point
and each breakpoint is solved exactly in quadratic-surd arithmetic.

Degree <= 2 differences (everything the extension classes produce) stay
fully exact. Higher-degree user input falls back to sign-change bisection
and the result is marked approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .algebraic import QuadAlgebraic, rational_between, sqrt_fraction
from .core import Bimatrix, PayoffPoly, format_rational
from .errors import DegreeTooHighError, EmptyDomainError, NoParameterError
from .solver import (
    dominated_grid,
    format_exact,
    maximin_grid,
    nash_grid,
    normalize_analyses,
)

BISECTION_WIDTH = 1e-12
_SCAN_STEPS = 2048


@dataclass(frozen=True)
class SegmentData:
    """Requested solution sets on one segment; unrequested analyses are None.

    ``security_levels`` are strings: exact values on point segments, the
    level polynomial in the parameter on interval segments (the maximin
    index sets are constant there but the attained level still varies).
    """

    nash: Optional[frozenset] = None
    dominated_rows: Optional[frozenset] = None
    dominated_cols: Optional[frozenset] = None
    maximin_rows: Optional[frozenset] = None
    maximin_cols: Optional[frozenset] = None
    security_levels: Optional[Tuple[str, str]] = None

    def key(self):
        """Merge identity: the index sets only."""
        return (
            self.nash,
            self.dominated_rows,
            self.dominated_cols,
            self.maximin_rows,
            self.maximin_cols,
        )

    def to_json(self) -> dict:
        out = {}
        if self.nash is not None:
            out["ne"] = [list(p) for p in sorted(self.nash)]
        if self.dominated_rows is not None:
            out["dominatedRows"] = sorted(self.dominated_rows)
            out["dominatedCols"] = sorted(self.dominated_cols)
        if self.maximin_rows is not None:
            out["maximinRows"] = sorted(self.maximin_rows)
            out["maximinCols"] = sorted(self.maximin_cols)
            out["securityLevels"] = list(self.security_levels)
        return out


def exact_to_json(x) -> dict:
    if isinstance(x, QuadAlgebraic):
        return {
            "rational": format_rational(x.rational),
            "surd": {"q": format_rational(x.coeff), "d": x.rad},
        }
    return {"rational": format_rational(Fraction(x)), "surd": None}


@dataclass(frozen=True)
class Segment:
    kind: str  # "interval" or "point"
    data: SegmentData
    lo: object = None
    hi: object = None
    lo_open: bool = False
    hi_open: bool = False
    at: object = None
    sample: Optional[Fraction] = None

    def contains(self, x) -> bool:
        if self.kind == "point":
            return self.at == x
        if self.lo_open:
            if not self.lo < x:
                return False
        elif not self.lo <= x:
            return False
        if self.hi_open:
            return x < self.hi
        return x <= self.hi

    def to_json(self) -> dict:
        if self.kind == "point":
            return {"kind": "point", "at": exact_to_json(self.at), "result": self.data.to_json()}
        return {
            "kind": "interval",
            "lo": exact_to_json(self.lo),
            "hi": exact_to_json(self.hi),
            "loOpen": self.lo_open,
            "hiOpen": self.hi_open,
            "sample": format_rational(self.sample),
            "result": self.data.to_json(),
        }


@dataclass
class SweepResult:
    parameter: str
    lo: Fraction
    hi: Fraction
    breakpoints: list
    segments: list
    exact: bool
    analyses: Tuple[str, ...]

    def segment_at(self, x) -> Segment:
        for seg in self.segments:
            if seg.contains(x):
                return seg
        raise ValueError(f"{x} outside swept domain [{self.lo}, {self.hi}]")

    def to_json(self) -> dict:
        return {
            "parameter": self.parameter,
            "domain": [format_rational(self.lo), format_rational(self.hi)],
            "exact": self.exact,
            "analyses": list(self.analyses),
            "breakpoints": [exact_to_json(b) for b in self.breakpoints],
            "segments": [seg.to_json() for seg in self.segments],
        }


def _exact_roots(p: PayoffPoly):
    if p.degree == 0:
        return []
    if p.degree == 1:
        c0, c1 = p.coeffs
        return [-c0 / c1]
    if p.degree == 2:
        c0, c1, c2 = p.coeffs
        disc = c1 * c1 - 4 * c2 * c0
        if disc < 0:
            return []
        center = -c1 / (2 * c2)
        if disc == 0:
            return [center]
        coeff, rad = sqrt_fraction(disc)
        spread = coeff / (2 * c2)
        return [
            QuadAlgebraic.make(center, -spread, rad),
            QuadAlgebraic.make(center, spread, rad),
        ]
    raise DegreeTooHighError(f"difference polynomial of degree {p.degree}")


def _numeric_roots(p: PayoffPoly, lo: Fraction, hi: Fraction):
    """Sign-change bisection to width 1e-12; misses tangential roots."""
    cs = [float(c) for c in p.coeffs]

    def f(x: float) -> float:
        acc = cs[-1]
        for c in reversed(cs[:-1]):
            acc = acc * x + c
        return acc

    a, b = float(lo), float(hi)
    step = (b - a) / _SCAN_STEPS
    roots = []
    prev_x, prev_y = a, f(a)
    for k in range(1, _SCAN_STEPS + 1):
        x = a + k * step
        y = f(x)
        if prev_y == 0.0:
            roots.append(prev_x)
        elif prev_y * y < 0:
            left, right = prev_x, x
            while right - left > BISECTION_WIDTH:
                mid = (left + right) / 2
                if f(left) * f(mid) <= 0:
                    right = mid
                else:
                    left = mid
            roots.append((left + right) / 2)
        prev_x, prev_y = x, y
    if prev_y == 0.0:
        roots.append(prev_x)
    return [Fraction(r) for r in roots]


def _pairwise_diffs(grid):
    cells = [p for row in grid for p in row]
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            yield cells[i] - cells[j]


def _line_diffs(u1, u2):
    n, m = len(u1), len(u1[0])
    for j in range(m):
        for i in range(n):
            for i2 in range(i + 1, n):
                yield u1[i][j] - u1[i2][j]
    for i in range(n):
        for j in range(m):
            for j2 in range(j + 1, m):
                yield u2[i][j] - u2[i][j2]


def _candidate_polys(u1, u2, analyses):
    seen = {}
    sources = []
    if "ne" in analyses or "dominated" in analyses:
        sources.append(_line_diffs(u1, u2))
    if "maximin" in analyses:
        sources.append(_pairwise_diffs(u1))
        sources.append(_pairwise_diffs(u2))
    for src in sources:
        for p in src:
            if p.degree == 0:
                continue
            lead = p.coeffs[-1]
            key = tuple(c / lead for c in p.coeffs)
            seen.setdefault(key, p)
    return list(seen.values())


def sweep(g: Bimatrix, lo, hi, analyses=None) -> SweepResult:
    """Decompose [lo, hi] into maximal segments of constant solution sets."""
    if g.parameter is None:
        raise NoParameterError("sweep needs a parametric game")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise EmptyDomainError(f"empty domain [{lo}, {hi}]")
    analyses = normalize_analyses(analyses)
    u1_polys, u2_polys = g.payoff_grids()

    exact = True
    roots = []
    for p in _candidate_polys(u1_polys, u2_polys, analyses):
        try:
            roots.extend(_exact_roots(p))
        except DegreeTooHighError:
            exact = False
            roots.extend(_numeric_roots(p, lo, hi))

    interior = []
    at_lo = at_hi = False
    for r in sorted(roots):
        if r == lo:
            at_lo = True
        elif r == hi:
            at_hi = True
        elif lo < r < hi and (not interior or interior[-1] != r):
            interior.append(r)

    def value_grids(x):
        vals1 = [[p.evaluate(x) for p in row] for row in u1_polys]
        vals2 = [[p.evaluate(x) for p in row] for row in u2_polys]
        return vals1, vals2

    def solve_at(x, point: bool) -> SegmentData:
        vals1, vals2 = value_grids(x)
        fields = {}
        if "ne" in analyses:
            fields["nash"] = nash_grid(vals1, vals2)
        if "dominated" in analyses:
            rows, cols = dominated_grid(vals1, vals2)
            fields["dominated_rows"] = rows
            fields["dominated_cols"] = cols
        if "maximin" in analyses:
            mrows, mcols, levels = maximin_grid(vals1, vals2)
            fields["maximin_rows"] = mrows
            fields["maximin_cols"] = mcols
            if point:
                fields["security_levels"] = (format_exact(levels[0]), format_exact(levels[1]))
            else:
                # identify the active level polynomials (constant on the segment)
                i_star = min(mrows) - 1
                j_min = min(range(len(vals1[0])), key=lambda j: (vals1[i_star][j], j))
                j_star = min(mcols) - 1
                i_min = min(range(len(vals2)), key=lambda i: (vals2[i][j_star], i))
                fields["security_levels"] = (
                    str(u1_polys[i_star][j_min]),
                    str(u2_polys[i_min][j_star]),
                )
        return SegmentData(**fields)

    segments = []
    if at_lo:
        segments.append(Segment("point", solve_at(lo, True), at=lo))
    bounds = [lo] + interior + [hi]
    for k in range(len(bounds) - 1):
        a, b = bounds[k], bounds[k + 1]
        first, last = k == 0, k == len(bounds) - 2
        sample = rational_between(a, b)
        segments.append(
            Segment(
                "interval",
                solve_at(sample, False),
                lo=a,
                hi=b,
                lo_open=(not first) or at_lo,
                hi_open=(not last) or at_hi,
                sample=sample,
            )
        )
        if not last:
            segments.append(Segment("point", solve_at(b, True), at=b))
    if at_hi:
        segments.append(Segment("point", solve_at(hi, True), at=hi))

    segments = _merge(segments)
    breakpoints = [s.at for s in segments if s.kind == "point" and lo < s.at < hi]
    return SweepResult(g.parameter, lo, hi, breakpoints, segments, exact, analyses)


def _fuse(left: Segment, right: Segment) -> Segment:
    return Segment(
        "interval",
        left.data,
        lo=left.lo,
        hi=right.hi,
        lo_open=left.lo_open,
        hi_open=right.hi_open,
        sample=left.sample,
    )


def _merge(segments: Sequence[Segment]) -> list:
    """Drop breakpoints where no requested solution set changes.

    An interior point segment disappears only when both flanking intervals
    and the point itself agree; a boundary point segment folds into its
    single neighbour by closing the interval end.
    """
    out = list(segments)
    changed = True
    while changed:
        changed = False
        for i, seg in enumerate(out):
            if seg.kind != "point":
                continue
            left = out[i - 1] if i > 0 else None
            right = out[i + 1] if i + 1 < len(out) else None
            if left is not None and right is not None:
                if (
                    left.kind == right.kind == "interval"
                    and left.data.key() == seg.data.key() == right.data.key()
                ):
                    out[i - 1 : i + 2] = [_fuse(left, right)]
                    changed = True
                    break
            elif left is not None and left.kind == "interval":
                if left.data.key() == seg.data.key():
                    out[i - 1 : i + 1] = [
                        Segment(
                            "interval",
                            left.data,
                            lo=left.lo,
                            hi=seg.at,
                            lo_open=left.lo_open,
                            hi_open=False,
                            sample=left.sample,
                        )
                    ]
                    changed = True
                    break
            elif right is not None and right.kind == "interval":
                if right.data.key() == seg.data.key():
                    out[i : i + 2] = [
                        Segment(
                            "interval",
                            right.data,
                            lo=seg.at,
                            hi=right.hi,
                            lo_open=False,
                            hi_open=right.hi_open,
                            sample=right.sample,
                        )
                    ]
                    changed = True
                    break
    return out
