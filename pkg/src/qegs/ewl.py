"""Payoff engine for two-player quantum strategy profiles.

A strategy is a unitary U(theta, alpha, beta); a profile of two strategies
induces four squared-amplitude weights over the classical outcomes, and the
profile payoff is the weight-average of the classical payoff pairs.

Angles are preferably exact rational multiples of pi. Whenever every
trigonometric value entering the weight formula has a rational square (its
multiple of pi has denominator 1, 2, 3, 4 or 6), the weights are computed in
exact surd arithmetic and come out as Fractions; otherwise evaluation happens
in double precision. ``OutcomeWeights.exact`` records which path was taken.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .algebraic import squarefree_split
from .core import Bimatrix, PayoffPoly, PayoffPair
from .errors import NotTwoByTwoError, ParamError, ParametricInputError

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class Angle:
    """Exact multiple of pi (pi_mult set) or a plain float in radians."""

    pi_mult: Optional[Fraction]
    rads: float

    @staticmethod
    def pi(multiple) -> "Angle":
        m = Fraction(multiple)
        return Angle(m, float(m) * math.pi)

    @staticmethod
    def radians(value: float) -> "Angle":
        return Angle(None, float(value))

    @property
    def exact(self) -> bool:
        return self.pi_mult is not None

    def _combine(self, other: "Angle", sign: int) -> "Angle":
        if self.exact and other.exact:
            return Angle.pi(self.pi_mult + sign * other.pi_mult)
        return Angle.radians(self.rads + sign * other.rads)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def half(self) -> "Angle":
        if self.exact:
            return Angle.pi(self.pi_mult / 2)
        return Angle.radians(self.rads / 2)


def _normalized(angle: Angle, period: Fraction) -> Angle:
    if angle.exact:
        return Angle.pi(angle.pi_mult % period)
    r = math.fmod(angle.rads, float(period) * math.pi)
    if r < 0:
        r += float(period) * math.pi
    return Angle.radians(r)


class _Surd(NamedTuple):
    """coeff * sqrt(rad); rad square-free, rad == 1 for rational values."""

    coeff: Fraction
    rad: int

    def times(self, other: "_Surd") -> "_Surd":
        c = self.coeff * other.coeff
        if c == 0:
            return _Surd(Fraction(0), 1)
        k, d = squarefree_split(self.rad * other.rad)
        return _Surd(c * k, d)

    def square(self) -> Fraction:
        return self.coeff * self.coeff * self.rad


_HALF = Fraction(1, 2)
# cos(k*pi/12) for the k where the value is a single quadratic surd
_COS_TWELFTHS = {
    0: _Surd(Fraction(1), 1),
    2: _Surd(_HALF, 3),
    3: _Surd(_HALF, 2),
    4: _Surd(_HALF, 1),
    6: _Surd(Fraction(0), 1),
    8: _Surd(-_HALF, 1),
    9: _Surd(-_HALF, 2),
    10: _Surd(-_HALF, 3),
    12: _Surd(Fraction(-1), 1),
}


def _cos_surd(angle: Angle) -> Optional[_Surd]:
    """Exact cosine when representable as coeff*sqrt(rad), else None."""
    if not angle.exact:
        return None
    m = angle.pi_mult % 2
    if m > 1:
        m = 2 - m
    k = m * 12
    if k.denominator != 1:
        return None
    return _COS_TWELFTHS.get(int(k))


def _sin_surd(angle: Angle) -> Optional[_Surd]:
    if not angle.exact:
        return None
    return _cos_surd(Angle.pi(angle.pi_mult - _HALF))


@dataclass(frozen=True)
class UnitaryParams:
    """Strategy parameters (theta, alpha, beta): theta in [0, pi], phases in [0, 2*pi)."""

    theta: Angle
    alpha: Angle
    beta: Angle

    def __post_init__(self):
        theta = self.theta
        if theta.exact:
            if not 0 <= theta.pi_mult <= 1:
                raise ParamError(f"theta must lie in [0, pi], got {theta.pi_mult}*pi")
        elif not -1e-12 <= theta.rads <= math.pi + 1e-12:
            raise ParamError(f"theta must lie in [0, pi], got {theta.rads}")
        object.__setattr__(self, "alpha", _normalized(self.alpha, Fraction(2)))
        object.__setattr__(self, "beta", _normalized(self.beta, Fraction(2)))

    @staticmethod
    def from_pi(theta, alpha, beta) -> "UnitaryParams":
        """Angles given as rational multiples of pi (from_pi(1/2, 0, 0) is U(pi/2, 0, 0))."""
        return UnitaryParams(Angle.pi(theta), Angle.pi(alpha), Angle.pi(beta))

    @staticmethod
    def from_radians(theta, alpha, beta) -> "UnitaryParams":
        return UnitaryParams(Angle.radians(theta), Angle.radians(alpha), Angle.radians(beta))


IDENTITY = UnitaryParams.from_pi(0, 0, 0)
FLIP = UnitaryParams.from_pi(1, 0, 0)  # i*X, the classical swap strategy


@dataclass(frozen=True)
class OutcomeWeights:
    """Squared-amplitude weights of the four classical outcomes; sum to 1."""

    w11: object
    w12: object
    w21: object
    w22: object
    exact: bool

    def as_tuple(self):
        return (self.w11, self.w12, self.w21, self.w22)


def _exact_weights(u1: UnitaryParams, u2: UnitaryParams):
    h1, h2 = u1.theta.half(), u2.theta.half()
    ch1, sh1 = _cos_surd(h1), _sin_surd(h1)
    ch2, sh2 = _cos_surd(h2), _sin_surd(h2)
    caa = _cos_surd(u1.alpha + u2.alpha)
    saa = _sin_surd(u1.alpha + u2.alpha)
    sbb = _sin_surd(u1.beta + u2.beta)
    cbb = _cos_surd(u1.beta + u2.beta)
    cab = _cos_surd(u1.alpha - u2.beta)
    sab = _sin_surd(u1.alpha - u2.beta)
    cba = _cos_surd(u2.alpha - u1.beta)
    sba = _sin_surd(u2.alpha - u1.beta)
    parts = (ch1, sh1, ch2, sh2, caa, saa, sbb, cbb, cab, sab, cba, sba)
    if any(p is None for p in parts):
        return None

    def sum_sq(a: _Surd, b: _Surd, sign: int) -> Optional[Fraction]:
        cross = a.times(b)
        if cross.coeff != 0 and cross.rad != 1:
            return None  # genuinely irrational weight; caller falls back to floats
        return a.square() + b.square() + 2 * sign * cross.coeff * cross.rad

    weights = (
        sum_sq(caa.times(ch1).times(ch2), sbb.times(sh1).times(sh2), +1),
        sum_sq(cab.times(ch1).times(sh2), sba.times(sh1).times(ch2), +1),
        sum_sq(sab.times(ch1).times(sh2), cba.times(sh1).times(ch2), +1),
        sum_sq(saa.times(ch1).times(ch2), cbb.times(sh1).times(sh2), -1),
    )
    if any(w is None for w in weights):
        return None
    return weights


def _float_weights(u1: UnitaryParams, u2: UnitaryParams):
    h1, h2 = u1.theta.rads / 2, u2.theta.rads / 2
    ch1, sh1, ch2, sh2 = math.cos(h1), math.sin(h1), math.cos(h2), math.sin(h2)
    a1, a2 = u1.alpha.rads, u2.alpha.rads
    b1, b2 = u1.beta.rads, u2.beta.rads
    return (
        (math.cos(a1 + a2) * ch1 * ch2 + math.sin(b1 + b2) * sh1 * sh2) ** 2,
        (math.cos(a1 - b2) * ch1 * sh2 + math.sin(a2 - b1) * sh1 * ch2) ** 2,
        (math.sin(a1 - b2) * ch1 * sh2 + math.cos(a2 - b1) * sh1 * ch2) ** 2,
        (math.sin(a1 + a2) * ch1 * ch2 - math.cos(b1 + b2) * sh1 * sh2) ** 2,
    )


def ewl_weights(u1: UnitaryParams, u2: UnitaryParams) -> OutcomeWeights:
    """The four outcome weights for the strategy profile (u1, u2)."""
    exact = _exact_weights(u1, u2)
    if exact is not None:
        return OutcomeWeights(*exact, exact=True)
    return OutcomeWeights(*_float_weights(u1, u2), exact=False)


def _require_2x2_constant(g: Bimatrix):
    if g.rows != 2 or g.cols != 2:
        raise NotTwoByTwoError()
    if not g.is_constant:
        raise ParametricInputError()


def ewl_payoff(g: Bimatrix, u1: UnitaryParams, u2: UnitaryParams):
    """Profile payoff pair; exact Fractions whenever the weights are exact."""
    _require_2x2_constant(g)
    w = ewl_weights(u1, u2)
    p1, p2 = g.constant_grids()
    if w.exact:
        vals1, vals2 = p1, p2
    else:
        vals1 = [[float(v) for v in row] for row in p1]
        vals2 = [[float(v) for v in row] for row in p2]
    ws = w.as_tuple()
    cells = ((0, 0), (0, 1), (1, 0), (1, 1))
    out1 = sum(wk * vals1[i][j] for wk, (i, j) in zip(ws, cells))
    out2 = sum(wk * vals2[i][j] for wk, (i, j) in zip(ws, cells))
    return out1, out2


def _as_exact(value) -> Fraction:
    # Double-precision payoffs embed as their exact binary value so the
    # resulting Bimatrix stays rational.
    return value if isinstance(value, Fraction) else Fraction(value)


def extension_3x3_from_u(g: Bimatrix, u: UnitaryParams) -> Bimatrix:
    """Border a 2x2 game with one extra unitary strategy for both players."""
    _require_2x2_constant(g)
    iu = ewl_payoff(g, IDENTITY, u)
    xu = ewl_payoff(g, FLIP, u)
    ui = ewl_payoff(g, u, IDENTITY)
    ux = ewl_payoff(g, u, FLIP)
    uu = ewl_payoff(g, u, u)

    def pair(vals) -> PayoffPair:
        return PayoffPair(PayoffPoly([_as_exact(vals[0])]), PayoffPoly([_as_exact(vals[1])]))

    e = g.entries
    grid = [
        [e[0][0], e[0][1], pair(iu)],
        [e[1][0], e[1][1], pair(xu)],
        [pair(ui), pair(ux), pair(uu)],
    ]
    labels = ("I", "iX", "U")
    return Bimatrix(grid, labels, labels)
