"""The permissible quantum extensions of a 2x2 game.

Three classes add one unitary strategy (3x3 result), eight add two (4x4
result). Every new payoff cell is a linear combination of the base game and
its row/column-swapped variants, with coefficients that are polynomials of
degree <= 2 in the class parameter:

    a-classes (A1, A2): a in [0, 1], with the derived b = (2a - 1)^2
    t-classes (C1, D1, D2, E1, E2): t in [0, 1]
    fixed classes (A0, B0, C0, B1): no parameter

The combination tables below are the single source of truth; both the matrix
builders here and the report renderer consume them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .core import Bimatrix, PayoffPair, PayoffPoly
from .errors import (
    NotTwoByTwoError,
    ParamError,
    ParamOutOfRangeError,
    ParametricBaseError,
)

# variant indices: 0 = game, 1 = rows swapped, 2 = cols swapped, 3 = both
G, G1, G2, G3 = range(4)

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)

# coefficient polynomials in the class parameter, constant term first
_ONE = (1,)
_P = (0, 1)            # a or t
_P1 = (1, -1)          # 1 - a  /  1 - t
_B = (1, -4, 4)        # (2a-1)^2
_B1 = (0, 4, -4)       # 1 - (2a-1)^2
_SQ = (0, 0, 1)        # t^2
_CROSS = (0, 1, -1)    # t(1-t)
_SQ1 = (1, -2, 1)      # (1-t)^2

_AVG4 = ((G, (_QUARTER,)), (G1, (_QUARTER,)), (G2, (_QUARTER,)), (G3, (_QUARTER,)))

# One added strategy: the bordered 3x3 matrix takes its last column from
# column 1 of `col`, its last row from row 1 of `row`, and its corner from
# entry (1,1) of `corner`.
THREE_STRATEGY_CLASSES = {
    "A0": {
        "col": ((G, (_HALF,)), (G2, (_HALF,))),
        "row": ((G, (_HALF,)), (G1, (_HALF,))),
        "corner": _AVG4,
    },
    "B0": {
        "col": ((G1, (_HALF,)), (G3, (_HALF,))),
        "row": ((G2, (_HALF,)), (G3, (_HALF,))),
        "corner": _AVG4,
    },
    "C0": {"col": _AVG4, "row": _AVG4, "corner": _AVG4},
}

_DE_DIAG = ((G, _SQ), (G1, _CROSS), (G2, _CROSS), (G3, _SQ1))

# Two added strategies: 2x2 block layout [[game, b12], [b21, b22]].
FOUR_STRATEGY_CLASSES = {
    "A1": {
        "kind": "a",
        "b12": ((G, _P), (G3, _P1)),
        "b21": ((G, _P), (G3, _P1)),
        "b22": ((G, _B), (G3, _B1)),
    },
    "A2": {
        "kind": "a",
        "b12": ((G2, _P), (G1, _P1)),
        "b21": ((G1, _P), (G2, _P1)),
        "b22": ((G3, _B), (G, _B1)),
    },
    "B1": {"kind": None, "b12": _AVG4, "b21": _AVG4, "b22": _AVG4},
    "C1": {
        "kind": "t",
        "b12": ((G, (0, _HALF)), (G3, (0, _HALF)), (G1, (_HALF, -_HALF)), (G2, (_HALF, -_HALF))),
        "b21": ((G, (0, _HALF)), (G3, (0, _HALF)), (G1, (_HALF, -_HALF)), (G2, (_HALF, -_HALF))),
        "b22": ((G, _SQ1), (G1, _CROSS), (G2, _CROSS), (G3, _SQ)),
    },
    "D1": {"kind": "t", "b12": ((G, _P), (G2, _P1)), "b21": ((G, _P), (G1, _P1)), "b22": _DE_DIAG},
    "D2": {"kind": "t", "b12": ((G3, _P), (G1, _P1)), "b21": ((G3, _P), (G2, _P1)), "b22": _DE_DIAG},
    "E1": {"kind": "t", "b12": ((G, _P), (G1, _P1)), "b21": ((G, _P), (G2, _P1)), "b22": _DE_DIAG},
    "E2": {"kind": "t", "b12": ((G3, _P), (G2, _P1)), "b21": ((G3, _P), (G1, _P1)), "b22": _DE_DIAG},
}

CLASS_NAMES = ("A0", "B0", "C0", "A1", "A2", "B1", "C1", "D1", "D2", "E1", "E2")


@dataclass(frozen=True)
class ExtensionClass:
    """Canonical description of one permissible extension class."""

    name: str
    param_kind: Optional[str]  # None | "a" | "t"
    size: int


def class_info(name: str) -> ExtensionClass:
    if name in THREE_STRATEGY_CLASSES:
        return ExtensionClass(name, None, 3)
    if name in FOUR_STRATEGY_CLASSES:
        return ExtensionClass(name, FOUR_STRATEGY_CLASSES[name]["kind"], 4)
    raise ParamError(f"unknown extension class {name!r}; expected one of {', '.join(CLASS_NAMES)}")


def _require_2x2(g: Bimatrix):
    if g.rows != 2 or g.cols != 2:
        raise NotTwoByTwoError()


def _swap_pair(t):
    return (t[1], t[0]) if t is not None else None


def gamma1(g: Bimatrix) -> Bimatrix:
    """Rows swapped."""
    _require_2x2(g)
    e = g.entries
    return Bimatrix((e[1], e[0]), _swap_pair(g.row_labels), g.col_labels)


def gamma2(g: Bimatrix) -> Bimatrix:
    """Columns swapped."""
    _require_2x2(g)
    e = g.entries
    return Bimatrix(
        ((e[0][1], e[0][0]), (e[1][1], e[1][0])), g.row_labels, _swap_pair(g.col_labels)
    )


def gamma3(g: Bimatrix) -> Bimatrix:
    """Rows and columns swapped."""
    return gamma1(gamma2(g))


def _variant_grids(g: Bimatrix):
    e = g.entries
    rows = (e[1], e[0])
    cols = ((e[0][1], e[0][0]), (e[1][1], e[1][0]))
    both = ((e[1][1], e[1][0]), (e[0][1], e[0][0]))
    return (e, rows, cols, both)


Coefficient = Union[Fraction, PayoffPoly]


def _combo_coefficient(spec, value: Optional[Fraction], pname: Optional[str]) -> Coefficient:
    poly = PayoffPoly(spec, pname) if len(tuple(spec)) > 1 else PayoffPoly(spec)
    if value is None:
        return poly
    return poly.evaluate(value)


def _combine(variants, combo, value, pname):
    """2x2 grid of PayoffPair: sum of coeff * variant over the combo."""
    out = [[None, None], [None, None]]
    for variant, spec in combo:
        c = _combo_coefficient(spec, value, pname)
        grid = variants[variant]
        for i in range(2):
            for j in range(2):
                term1 = grid[i][j].u1 * c
                term2 = grid[i][j].u2 * c
                if out[i][j] is None:
                    out[i][j] = (term1, term2)
                else:
                    out[i][j] = (out[i][j][0] + term1, out[i][j][1] + term2)
    return [[PayoffPair(u1, u2) for (u1, u2) in row] for row in out]


def extend3(g: Bimatrix, name: str) -> Bimatrix:
    """One-unitary extension (A0, B0 or C0); parametric base games allowed."""
    _require_2x2(g)
    if name not in THREE_STRATEGY_CLASSES:
        raise ParamError(f"{name!r} is not a three-strategy class")
    spec = THREE_STRATEGY_CLASSES[name]
    variants = _variant_grids(g)
    col = _combine(variants, spec["col"], None, None)
    row = _combine(variants, spec["row"], None, None)
    corner = _combine(variants, spec["corner"], None, None)
    e = g.entries
    grid = [
        [e[0][0], e[0][1], col[0][0]],
        [e[1][0], e[1][1], col[1][0]],
        [row[0][0], row[0][1], corner[0][0]],
    ]
    labels = ("I", "iX", "U")
    return Bimatrix(grid, labels, labels)


def extend4(g: Bimatrix, name: str, param=None) -> Bimatrix:
    """Two-unitary extension (A1..E2).

    ``param`` is a rational in [0, 1] for a concrete matrix or None for the
    symbolic one (entries polynomial in "a" or "t"). The base game must be
    constant: its single parameter slot is taken by the class parameter.
    """
    _require_2x2(g)
    if name not in FOUR_STRATEGY_CLASSES:
        raise ParamError(f"{name!r} is not a four-strategy class")
    if not g.is_constant:
        raise ParametricBaseError(
            f"base game is parametric in {g.parameter!r}; evaluate it first"
        )
    spec = FOUR_STRATEGY_CLASSES[name]
    kind = spec["kind"]
    value = None
    if kind is None:
        if param is not None:
            raise ParamError(f"class {name} takes no parameter")
    elif param is not None:
        value = Fraction(param)
        if not 0 <= value <= 1:
            raise ParamOutOfRangeError(f"class parameter must lie in [0, 1], got {value}")
    variants = _variant_grids(g)
    b12 = _combine(variants, spec["b12"], value, kind)
    b21 = _combine(variants, spec["b21"], value, kind)
    b22 = _combine(variants, spec["b22"], value, kind)
    e = g.entries
    grid = [
        [e[0][0], e[0][1], b12[0][0], b12[0][1]],
        [e[1][0], e[1][1], b12[1][0], b12[1][1]],
        [b21[0][0], b21[0][1], b22[0][0], b22[0][1]],
        [b21[1][0], b21[1][1], b22[1][0], b22[1][1]],
    ]
    labels = ("I", "iX", "U1", "U2")
    return Bimatrix(grid, labels, labels)


def extend(g: Bimatrix, name: str, param=None) -> Bimatrix:
    """Dispatch to extend3/extend4 by class name."""
    info = class_info(name)
    if info.size == 3:
        if param is not None:
            raise ParamError(f"class {name} takes no parameter")
        return extend3(g, name)
    return extend4(g, name, param)
