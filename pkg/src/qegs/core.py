"""Bimatrix games over exact rationals and single-parameter polynomials.

Payoff entries are univariate polynomials with ``fractions.Fraction``
coefficients in at most one named parameter; constants are degree-0
polynomials with no parameter name. A whole game therefore carries at most
one parameter, which is what makes exact breakpoint analysis possible
downstream.

The on-disk representation is a small JSON document ("Game File Format"):

    { "rows": n, "cols": m, "parameter": "x" | null,
      "rowLabels": [...], "colLabels": [...],        # optional
      "payoffs": [ [ [P, P], ... ], ... ] }

where P is a rational string ("3", "-1/2") or { "coeffs": ["c0", "c1", ...] }.
Rationals are always fraction strings; JSON numbers are rejected so that no
file can smuggle in floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import ParamError, ParseError, ShapeError

Rational = Fraction

_LABEL_KINDS = ("rowLabels", "colLabels")


def parse_rational(text: str) -> Fraction:
    """Parse "3", "-1/2" style fraction strings exactly."""
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {text!r}")
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None
    return value


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class PayoffPoly:
    """Immutable polynomial sum(c_i * x**i) with exact coefficients.

    Canonical form: no trailing zero coefficients; the zero polynomial keeps a
    single zero coefficient; a polynomial of degree 0 carries no parameter
    name.
    """

    __slots__ = ("coeffs", "param")

    def __init__(self, coeffs: Iterable, param: Optional[str] = None):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        self.coeffs = tuple(cs)
        self.param = param if len(cs) > 1 else None
        if len(cs) > 1 and param is None:
            raise ParamError("non-constant polynomial needs a parameter name")

    @staticmethod
    def const(value) -> "PayoffPoly":
        return PayoffPoly([Fraction(value)])

    @staticmethod
    def variable(param: str) -> "PayoffPoly":
        """The polynomial x itself."""
        return PayoffPoly([0, 1], param)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_constant(self) -> bool:
        return self.param is None

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ParamError(f"polynomial in {self.param!r} is not constant")
        return self.coeffs[0]

    def _join_param(self, other: "PayoffPoly") -> Optional[str]:
        if self.param is None:
            return other.param
        if other.param is None or other.param == self.param:
            return self.param
        raise ParamError(f"two distinct parameter names: {self.param!r}, {other.param!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PayoffPoly.const(other)
        param = self._join_param(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return PayoffPoly([x + y for x, y in zip(a, b)], param)

    __radd__ = __add__

    def __neg__(self):
        return PayoffPoly([-c for c in self.coeffs], self.param)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PayoffPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PayoffPoly([c * other for c in self.coeffs], self.param)
        param = self._join_param(other)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PayoffPoly(out, param)

    __rmul__ = __mul__

    def evaluate(self, x):
        """Horner evaluation; exact for Fraction or QuadAlgebraic arguments."""
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.coeffs[0] == other
        if not isinstance(other, PayoffPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.param == other.param

    def __hash__(self):
        return hash((self.coeffs, self.param))

    def __repr__(self):
        return f"PayoffPoly({list(self.coeffs)!r}, {self.param!r})"

    def __str__(self):
        if self.is_constant:
            return format_rational(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = format_rational(mag)
            else:
                var = self.param if i == 1 else f"{self.param}^{i}"
                if mag == 1:
                    term = var
                elif mag.denominator == 1:
                    term = f"{mag.numerator}{var}"
                else:
                    term = f"({format_rational(mag)}){var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def as_poly(value, param: Optional[str] = None) -> PayoffPoly:
    """Coerce a Fraction/int/str/coefficient-list/PayoffPoly into a PayoffPoly."""
    if isinstance(value, PayoffPoly):
        return value
    if isinstance(value, str):
        return PayoffPoly.const(parse_rational(value))
    if isinstance(value, (int, Fraction)):
        return PayoffPoly.const(value)
    if isinstance(value, (list, tuple)):
        return PayoffPoly(value, param)
    raise ParseError(f"cannot interpret payoff {value!r}")


@dataclass(frozen=True)
class PayoffPair:
    """Player 1 / player 2 payoffs for one strategy profile."""

    u1: PayoffPoly
    u2: PayoffPoly

    def __post_init__(self):
        self.u1._join_param(self.u2)

    @staticmethod
    def of(u1, u2) -> "PayoffPair":
        return PayoffPair(as_poly(u1), as_poly(u2))

    @property
    def param(self) -> Optional[str]:
        return self.u1.param or self.u2.param

    def evaluate(self, x) -> "PayoffPair":
        return PayoffPair(PayoffPoly([self.u1.evaluate(x)]), PayoffPoly([self.u2.evaluate(x)]))

    def __str__(self):
        return f"({self.u1}, {self.u2})"


class Bimatrix:
    """Rectangular n x m grid of payoff pairs with optional strategy labels.

    Immutable after construction. At most one distinct parameter name may
    occur across all entries; ``parameter`` is that name or None.
    """

    __slots__ = ("entries", "row_labels", "col_labels", "parameter")

    def __init__(
        self,
        entries: Sequence[Sequence[PayoffPair]],
        row_labels: Optional[Sequence[str]] = None,
        col_labels: Optional[Sequence[str]] = None,
    ):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise ShapeError("game needs at least one row and one column")
        m = len(rows[0])
        for row in rows:
            if len(row) != m:
                raise ShapeError("ragged payoff grid")
        param = None
        for row in rows:
            for pair in row:
                p = pair.param
                if p is not None:
                    if param is None:
                        param = p
                    elif param != p:
                        raise ParamError(f"two distinct parameter names: {param!r}, {p!r}")
        if row_labels is not None and len(row_labels) != len(rows):
            raise ParseError("rowLabels length mismatch")
        if col_labels is not None and len(col_labels) != m:
            raise ParseError("colLabels length mismatch")
        self.entries = rows
        self.row_labels = tuple(row_labels) if row_labels is not None else None
        self.col_labels = tuple(col_labels) if col_labels is not None else None
        self.parameter = param

    @staticmethod
    def of(grid, row_labels=None, col_labels=None, param: Optional[str] = None) -> "Bimatrix":
        """Build from a grid of (u1, u2) payoff literals (ints, "p/q", polys)."""
        entries = []
        for row in grid:
            entries.append([
                PayoffPair(as_poly(u1, param), as_poly(u2, param)) for (u1, u2) in row
            ])
        return Bimatrix(entries, row_labels, col_labels)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_constant(self) -> bool:
        return self.parameter is None

    def pair(self, i: int, j: int) -> PayoffPair:
        """1-based entry access, matching reported strategy profiles."""
        return self.entries[i - 1][j - 1]

    def payoff_grids(self):
        """The two payoff grids as lists of lists of PayoffPoly."""
        u1 = [[pair.u1 for pair in row] for row in self.entries]
        u2 = [[pair.u2 for pair in row] for row in self.entries]
        return u1, u2

    def constant_grids(self):
        """Payoff grids as plain Fractions; requires a constant game."""
        if not self.is_constant:
            raise ParamError(f"game is parametric in {self.parameter!r}")
        u1 = [[pair.u1.coeffs[0] for pair in row] for row in self.entries]
        u2 = [[pair.u2.coeffs[0] for pair in row] for row in self.entries]
        return u1, u2

    def evaluate(self, x: Fraction) -> "Bimatrix":
        """Substitute the parameter; returns a constant game, labels kept."""
        if self.is_constant:
            return self
        x = Fraction(x)
        return Bimatrix(
            [[pair.evaluate(x) for pair in row] for row in self.entries],
            self.row_labels,
            self.col_labels,
        )

    def __eq__(self, other):
        if not isinstance(other, Bimatrix):
            return NotImplemented
        return (
            self.entries == other.entries
            and self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
        )

    def __hash__(self):
        return hash((self.entries, self.row_labels, self.col_labels))

    def __repr__(self):
        return f"Bimatrix({self.rows}x{self.cols}, parameter={self.parameter!r})"


def is_symmetric(g: Bimatrix) -> bool:
    """True iff the game is square and u2 is the transpose of u1."""
    if g.rows != g.cols:
        return False
    for i in range(g.rows):
        for j in range(g.cols):
            if g.entries[i][j].u2 != g.entries[j][i].u1:
                return False
    return True


def evaluate(p: PayoffPoly, x) -> Fraction:
    """Exact polynomial evaluation at a rational point."""
    return p.evaluate(Fraction(x))


def evaluate_bimatrix(g: Bimatrix, x) -> Bimatrix:
    return g.evaluate(x)


# -- Game File Format --


def _parse_payoff(raw, param: Optional[str]) -> PayoffPoly:
    if isinstance(raw, str):
        return PayoffPoly.const(parse_rational(raw))
    if isinstance(raw, dict):
        coeffs = raw.get("coeffs")
        if not isinstance(coeffs, list) or not coeffs:
            raise ParseError(f"payoff object needs a non-empty 'coeffs' list: {raw!r}")
        values = [parse_rational(c) for c in coeffs]
        probe = PayoffPoly(values, "_")
        if probe.degree == 0:
            return PayoffPoly(values[:1])
        if param is None:
            raise ParamError("polynomial payoff but file declares no parameter")
        return PayoffPoly(values, param)
    raise ParseError(f"payoff must be a rational string or a coeffs object, got {raw!r}")


def parse_game(data: Union[bytes, str]) -> Bimatrix:
    """Parse the Game File Format; exact rationals only, no floats."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    try:
        n, m = doc["rows"], doc["cols"]
        payoffs = doc["payoffs"]
    except KeyError as exc:
        raise ParseError(f"missing key {exc}") from None
    if not (isinstance(n, int) and isinstance(m, int)) or n < 1 or m < 1:
        raise ParseError("rows/cols must be positive integers")
    param = doc.get("parameter")
    if param is not None and (not isinstance(param, str) or not param):
        raise ParseError("parameter must be null or a non-empty string")
    labels = {}
    for kind in _LABEL_KINDS:
        raw = doc.get(kind)
        if raw is not None:
            if not isinstance(raw, list) or not all(isinstance(s, str) for s in raw):
                raise ParseError(f"{kind} must be a list of strings")
            labels[kind] = raw
    if not isinstance(payoffs, list) or len(payoffs) != n:
        raise ShapeError(f"expected {n} payoff rows")
    entries = []
    for row in payoffs:
        if not isinstance(row, list) or len(row) != m:
            raise ShapeError(f"expected {m} cells per row")
        cells = []
        for cell in row:
            if not isinstance(cell, list) or len(cell) != 2:
                raise ParseError(f"cell must be a [P, P] pair, got {cell!r}")
            cells.append(PayoffPair(_parse_payoff(cell[0], param), _parse_payoff(cell[1], param)))
        entries.append(cells)
    return Bimatrix(entries, labels.get("rowLabels"), labels.get("colLabels"))


def _payoff_json(p: PayoffPoly):
    if p.is_constant:
        return format_rational(p.coeffs[0])
    return {"coeffs": [format_rational(c) for c in p.coeffs]}


def game_to_dict(g: Bimatrix) -> dict:
    doc = {"rows": g.rows, "cols": g.cols, "parameter": g.parameter}
    if g.row_labels is not None:
        doc["rowLabels"] = list(g.row_labels)
    if g.col_labels is not None:
        doc["colLabels"] = list(g.col_labels)
    doc["payoffs"] = [
        [[_payoff_json(pair.u1), _payoff_json(pair.u2)] for pair in row] for row in g.entries
    ]
    return doc


def serialize_game(g: Bimatrix, indent: Optional[int] = 2) -> bytes:
    """Canonical Game File Format bytes; parse_game round-trips exactly."""
    return json.dumps(game_to_dict(g), indent=indent).encode("utf-8")
