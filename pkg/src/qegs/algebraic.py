"""Exact quadratic algebraic numbers of the form r + s*sqrt(d).

These are the endpoints produced by degree-2 breakpoint analysis: roots of
quadratics with rational coefficients. All sign determinations are exact
integer/rational arithmetic; floating point is never consulted, so ordering
and equality are safe to use as dictionary keys and for deduplication.

``QuadAlgebraic.make`` is the only constructor that should be used: it
normalizes the radicand to its square-free part and collapses to a plain
``Fraction`` whenever the value is rational, so a ``QuadAlgebraic`` instance
always denotes an irrational number.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

Exact = Union[int, Fraction, "QuadAlgebraic"]


def squarefree_split(n: int) -> tuple[int, int]:
    """Split n >= 0 as k*k*d with d square-free; returns (k, d)."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 1, 0
    k, d, m, p = 1, 1, n, 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            k *= p
        if m % p == 0:
            m //= p
            d *= p
        p += 1 if p == 2 else 2
    return k, d * m


def sqrt_fraction(f: Fraction) -> tuple[Fraction, int]:
    """Express sqrt(f) exactly as coeff*sqrt(rad) with rad square-free."""
    if f < 0:
        raise ValueError("negative radicand")
    k, d = squarefree_split(f.numerator * f.denominator)
    return Fraction(k, f.denominator), d


class QuadAlgebraic:
    """Irrational value rational + coeff*sqrt(rad), rad square-free >= 2."""

    __slots__ = ("rational", "coeff", "rad")

    def __init__(self, rational: Fraction, coeff: Fraction, rad: int):
        # Internal: assumes already normalized. Use make().
        self.rational = rational
        self.coeff = coeff
        self.rad = rad

    @staticmethod
    def make(rational, coeff=0, rad: int = 0) -> Exact:
        """Normalized construction; returns a Fraction when the value is rational."""
        rational = Fraction(rational)
        coeff = Fraction(coeff)
        if coeff == 0 or rad == 0:
            return rational
        k, d = squarefree_split(rad)
        coeff *= k
        if d <= 1:
            return rational + coeff * d
        return QuadAlgebraic(rational, coeff, d)

    # -- arithmetic (closed within a single radicand) --

    def _coerce(self, other):
        if isinstance(other, QuadAlgebraic):
            if other.rad != self.rad:
                raise ArithmeticError("mixed radicands; compare instead")
            return other.rational, other.coeff
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return NotImplemented

    def __add__(self, other):
        parts = self._coerce(other)
        if parts is NotImplemented:
            return NotImplemented
        r, s = parts
        return QuadAlgebraic.make(self.rational + r, self.coeff + s, self.rad)

    __radd__ = __add__

    def __neg__(self):
        return QuadAlgebraic(-self.rational, -self.coeff, self.rad)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadAlgebraic) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + Fraction(other)

    def __mul__(self, other):
        if isinstance(other, QuadAlgebraic):
            if other.rad != self.rad:
                raise ArithmeticError("mixed radicands")
            return QuadAlgebraic.make(
                self.rational * other.rational + self.coeff * other.coeff * self.rad,
                self.rational * other.coeff + self.coeff * other.rational,
                self.rad,
            )
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return QuadAlgebraic.make(self.rational * q, self.coeff * q, self.rad)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return QuadAlgebraic.make(self.rational / q, self.coeff / q, self.rad)
        return NotImplemented

    # -- exact ordering --

    def _sign(self) -> int:
        """Exact sign; the instance is guaranteed irrational (coeff != 0)."""
        r, s, d = self.rational, self.coeff, self.rad
        if r == 0:
            return 1 if s > 0 else -1
        if r > 0 and s > 0:
            return 1
        if r < 0 and s < 0:
            return -1
        lhs, rhs = r * r, s * s * d
        if lhs == rhs:
            return 0
        bigger_rational = lhs > rhs
        if r > 0:
            return 1 if bigger_rational else -1
        return -1 if bigger_rational else 1

    @staticmethod
    def sign_of(x) -> int:
        if isinstance(x, QuadAlgebraic):
            return x._sign()
        x = Fraction(x)
        return (x > 0) - (x < 0)

    def _cmp(self, other) -> int:
        """Exact sign of self - other, any radicands."""
        if isinstance(other, (int, Fraction)):
            return QuadAlgebraic.sign_of(
                QuadAlgebraic.make(self.rational - Fraction(other), self.coeff, self.rad)
            )
        if not isinstance(other, QuadAlgebraic):
            return NotImplemented
        if other.rad == self.rad:
            return QuadAlgebraic.sign_of(
                QuadAlgebraic.make(
                    self.rational - other.rational, self.coeff - other.coeff, self.rad
                )
            )
        # sign of A + B*sqrt(u) + C*sqrt(v), distinct square-free u, v >= 2
        a = self.rational - other.rational
        b, u = self.coeff, self.rad
        c, v = -other.coeff, other.rad
        if b > 0 and c > 0:
            surd_sign = 1
        elif b < 0 and c < 0:
            surd_sign = -1
        else:
            # b*b*u == c*c*v would force u == v (both square-free)
            surd_sign = QuadAlgebraic.sign_of(b) if b * b * u > c * c * v else QuadAlgebraic.sign_of(c)
        if a == 0:
            return surd_sign
        a_sign = 1 if a > 0 else -1
        if a_sign == surd_sign:
            return a_sign
        # opposite signs: compare a^2 against (b*sqrt(u) + c*sqrt(v))^2
        surd_sq = QuadAlgebraic.make(b * b * u + c * c * v, 2 * b * c, u * v)
        diff = a * a - surd_sq if isinstance(surd_sq, Fraction) else (-surd_sq) + a * a
        s = QuadAlgebraic.sign_of(diff)
        if s == 0:
            return 0
        return a_sign if s > 0 else surd_sign

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadAlgebraic)):
            return self._cmp(other) == 0
        return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash((self.rational, self.coeff, self.rad))

    # -- approximation & rendering --

    def approx(self, bits: int = 64) -> Fraction:
        """Rational approximation with error below 2**-bits."""
        guard = 8 + abs(self.coeff.numerator // self.coeff.denominator).bit_length()
        scale = 1 << (bits + guard)
        root = Fraction(isqrt(self.rad * scale * scale), scale)
        return self.rational + self.coeff * root

    def __float__(self):
        return float(self.approx(60))

    def __repr__(self):
        return f"QuadAlgebraic({self.rational!r}, {self.coeff!r}, {self.rad})"

    def __str__(self):
        s = self.coeff
        sign = "+" if s >= 0 else "-"
        mag = abs(s)
        head = "" if mag == 1 else f"{mag}*"
        if self.rational == 0:
            return f"{'-' if s < 0 else ''}{head}sqrt({self.rad})"
        return f"{self.rational} {sign} {head}sqrt({self.rad})"


def approx_value(x: Exact, bits: int = 64) -> Fraction:
    """Rational approximation of an exact value with error below 2**-bits."""
    if isinstance(x, QuadAlgebraic):
        return x.approx(bits)
    return Fraction(x)


def rational_between(lo: Exact, hi: Exact) -> Fraction:
    """A small-denominator rational strictly inside (lo, hi); lo < hi required."""
    bits = 16
    while True:
        mid = (approx_value(lo, bits) + approx_value(hi, bits)) / 2
        if lo < mid < hi:
            den = 1
            while den <= mid.denominator:
                simple = mid.limit_denominator(den)
                if lo < simple < hi:
                    return simple
                den *= 10
            return mid
        bits *= 2
        if bits > 1 << 16:
            raise ArithmeticError("empty interval")
