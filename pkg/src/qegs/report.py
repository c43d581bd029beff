"""Markdown analysis reports.

The report planner sorts inputs into four cases: a constant 2x2 game gets
the full treatment (all eleven extension classes, symbolic in their class
parameter, plus equilibrium/maximin/dominance sections), a parametric 2x2
game gets the extension sections only, a constant n x m game gets the
property sections only, and a parametric non-2x2 game yields no report.

Output is deterministic byte-for-byte: exact rationals everywhere, no
timestamps, a single metadata line carrying the tool version.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import __version__
from .core import Bimatrix, PayoffPoly, format_rational
from .errors import NoReportError, ParamError
from .extensions import (
    CLASS_NAMES,
    FOUR_STRATEGY_CLASSES,
    class_info,
    extend3,
    extend4,
    _variant_grids,
)
from .solver import format_exact, solve

FULL_2X2 = "Full2x2Numeric"
EXTENSIONS_ONLY = "ExtensionsOnlySymbolic2x2"
PROPERTIES_ONLY = "PropertiesOnlyNumericNxM"
NO_REPORT = "None"

_NAME_RE = re.compile(r"^[A-Za-z0-9_-]+$")
PROPERTY_SECTIONS = ("Nash Equilibria", "Maximin", "Dominated Strategies")


@dataclass(frozen=True)
class ReportPlan:
    kind: str
    file_name: str


def plan_report(g: Bimatrix, name: str) -> ReportPlan:
    """Which report (if any) an input game gets, and its file name."""
    two_by_two = g.rows == 2 and g.cols == 2
    if g.is_constant and two_by_two:
        return ReportPlan(FULL_2X2, f"Report_{name}.md")
    if two_by_two:
        return ReportPlan(EXTENSIONS_ONLY, f"Report_{name}_extensions.md")
    if g.is_constant:
        return ReportPlan(PROPERTIES_ONLY, f"Report_{name}_properties.md")
    return ReportPlan(NO_REPORT, "")


def _default_labels(prefix: str, k: int):
    return [f"{prefix}{i + 1}" for i in range(k)]


def _matrix_table(g: Bimatrix) -> str:
    rows = g.row_labels or _default_labels("R", g.rows)
    cols = g.col_labels or _default_labels("C", g.cols)
    lines = ["| | " + " | ".join(cols) + " |", "|" + "---|" * (g.cols + 1)]
    for label, row in zip(rows, g.entries):
        cells = " | ".join(str(pair) for pair in row)
        lines.append(f"| **{label}** | {cells} |")
    return "\n".join(lines)


def _poly_coeff_str(p: PayoffPoly) -> str:
    s = str(p)
    if " " in s or s.startswith("-"):
        return f"({s})"
    return s


def _bivariate_str(terms: dict, kind: str) -> str:
    """Render sum of coeff(x) * kind**power with polynomial coefficients."""
    parts = []
    for power in sorted(terms):
        poly = terms[power]
        if poly == PayoffPoly.const(0):
            continue
        if power == 0:
            parts.append(str(poly))
        else:
            var = kind if power == 1 else f"{kind}^{power}"
            parts.append(f"{_poly_coeff_str(poly)}{var}")
    return " + ".join(parts) if parts else "0"


def _bivariate_block(g: Bimatrix, combo, kind: str):
    """2x2 grid of (terms_u1, terms_u2) for a parametric base game."""
    variants = _variant_grids(g)
    out = [[({}, {}) for _ in range(2)] for _ in range(2)]
    for variant, spec in combo:
        grid = variants[variant]
        for power, c in enumerate(spec):
            if c == 0:
                continue
            for i in range(2):
                for j in range(2):
                    for side in (0, 1):
                        poly = grid[i][j].u1 if side == 0 else grid[i][j].u2
                        terms = out[i][j][side]
                        terms[power] = terms.get(power, PayoffPoly.const(0)) + poly * Fraction(c)
    return out


def _bivariate_table(g: Bimatrix, name: str) -> str:
    spec = FOUR_STRATEGY_CLASSES[name]
    kind = spec["kind"] or "t"
    b12 = _bivariate_block(g, spec["b12"], kind)
    b21 = _bivariate_block(g, spec["b21"], kind)
    b22 = _bivariate_block(g, spec["b22"], kind)
    e = g.entries

    def base_cell(pair):
        return f"({pair.u1}, {pair.u2})"

    def biv_cell(cell):
        return f"({_bivariate_str(cell[0], kind)}, {_bivariate_str(cell[1], kind)})"

    grid = [
        [base_cell(e[0][0]), base_cell(e[0][1]), biv_cell(b12[0][0]), biv_cell(b12[0][1])],
        [base_cell(e[1][0]), base_cell(e[1][1]), biv_cell(b12[1][0]), biv_cell(b12[1][1])],
        [biv_cell(b21[0][0]), biv_cell(b21[0][1]), biv_cell(b22[0][0]), biv_cell(b22[0][1])],
        [biv_cell(b21[1][0]), biv_cell(b21[1][1]), biv_cell(b22[1][0]), biv_cell(b22[1][1])],
    ]
    labels = ("I", "iX", "U1", "U2")
    lines = ["| | " + " | ".join(labels) + " |", "|" + "---|" * 5]
    for label, row in zip(labels, grid):
        lines.append(f"| **{label}** | " + " | ".join(row) + " |")
    return "\n".join(lines)


def _extension_section(g: Bimatrix, name: str) -> str:
    info = class_info(name)
    if info.size == 3:
        note = "One added unitary strategy."
        body = _matrix_table(extend3(g, name))
    else:
        if info.param_kind:
            note = f"Two added unitary strategies; parameter {info.param_kind} in [0, 1]."
        else:
            note = "Two added unitary strategies; no free parameter."
        body = _matrix_table(extend4(g, name, None)) if g.is_constant else _bivariate_table(g, name)
    return f"## {name}\n\n{note}\n\n{body}\n"


def _property_sections(g: Bimatrix) -> list:
    result = solve(g)
    ne_lines = []
    for (i, j) in sorted(result.nash):
        pair = g.pair(i, j)
        ne_lines.append(f"- ({i}, {j}) with payoff ({pair.u1}, {pair.u2})")
    ne_body = "\n".join(ne_lines) if ne_lines else "No pure Nash equilibrium."

    levels = result.security_levels
    maximin_body = "\n".join([
        f"- Player 1 rows: {_index_set(result.maximin_rows)} "
        f"(security level {format_exact(levels[0])})",
        f"- Player 2 columns: {_index_set(result.maximin_cols)} "
        f"(security level {format_exact(levels[1])})",
    ])

    dom_body = "\n".join([
        f"- Player 1 rows: {_index_set(result.dominated_rows)}",
        f"- Player 2 columns: {_index_set(result.dominated_cols)}",
    ])
    return [
        f"## Nash Equilibria\n\n{ne_body}\n",
        f"## Maximin\n\n{maximin_body}\n",
        f"## Dominated Strategies\n\n{dom_body}\n",
    ]


def _index_set(values) -> str:
    items = sorted(values)
    return "{" + ", ".join(str(v) for v in items) + "}" if items else "none"


def render_report(g: Bimatrix, name: str) -> tuple:
    """(file_name, markdown text); raises NoReportError for symbolic n x m input."""
    if not _NAME_RE.match(name):
        raise ParamError(f"report name must match [A-Za-z0-9_-]+, got {name!r}")
    plan = plan_report(g, name)
    if plan.kind == NO_REPORT:
        raise NoReportError()
    parts = [f"# Report: {name}", f"Generated by qegs {__version__}.", ""]
    parts.append("Input game:")
    parts.append("")
    parts.append(_matrix_table(g))
    parts.append("")
    if plan.kind in (FULL_2X2, EXTENSIONS_ONLY):
        for cls in CLASS_NAMES:
            parts.append(_extension_section(g, cls))
    if plan.kind in (FULL_2X2, PROPERTIES_ONLY):
        parts.extend(_property_sections(g))
    return plan.file_name, "\n".join(parts)


def generate_report(g: Bimatrix, name: str, out_dir) -> Path:
    """Write the planned report; returns the written path."""
    file_name, text = render_report(g, name)
    out = Path(out_dir) / file_name
    out.write_text(text, encoding="utf-8")
    return out
