"""Exact quadratic surd arithmetic and ordering."""

import random
from fractions import Fraction
from math import isqrt

import pytest

from qegs.algebraic import (
    QuadAlgebraic,
    approx_value,
    rational_between,
    sqrt_fraction,
    squarefree_split,
)


def test_squarefree_split():
    assert squarefree_split(0) == (1, 0)
    assert squarefree_split(1) == (1, 1)
    assert squarefree_split(12) == (2, 3)
    assert squarefree_split(49) == (7, 1)
    assert squarefree_split(360) == (6, 10)
    k, d = squarefree_split(2 * 3 * 5 * 7 * 4)
    assert k * k * d == 840


def test_sqrt_fraction():
    assert sqrt_fraction(Fraction(9, 4)) == (Fraction(3, 2), 1)
    coeff, rad = sqrt_fraction(Fraction(3, 4))
    assert coeff == Fraction(1, 2) and rad == 3
    coeff, rad = sqrt_fraction(Fraction(2, 3))
    assert (coeff, rad) == (Fraction(1, 3), 6)  # sqrt(2/3) = sqrt(6)/3
    with pytest.raises(ValueError):
        sqrt_fraction(Fraction(-1))


def test_make_collapses_rationals():
    assert QuadAlgebraic.make(Fraction(1, 2), 0, 5) == Fraction(1, 2)
    assert QuadAlgebraic.make(0, Fraction(1, 3), 9) == Fraction(1)
    assert QuadAlgebraic.make(1, 2, 8) == QuadAlgebraic.make(1, 4, 2)
    v = QuadAlgebraic.make(0, 1, 18)
    assert isinstance(v, QuadAlgebraic) and v.rad == 2 and v.coeff == 3


def test_arithmetic_identities():
    r2 = QuadAlgebraic.make(0, 1, 2)
    assert r2 * r2 == 2
    golden = QuadAlgebraic.make(Fraction(1, 2), Fraction(1, 2), 5)
    assert golden * golden == golden + 1  # x^2 = x + 1
    assert (r2 + 1) * (r2 - 1) == 1
    assert -(r2 - 3) == 3 - r2


def test_cross_radicand_comparisons():
    r2 = QuadAlgebraic.make(0, 1, 2)
    r3 = QuadAlgebraic.make(0, 1, 3)
    r6 = QuadAlgebraic.make(0, 1, 6)
    assert r2 < r3 < r2 + 1
    assert 1 + r2 < r6  # 2.414... < 2.449...
    assert r2 < QuadAlgebraic.make(-1, 1, 6)  # sqrt(2) < sqrt(6) - 1
    assert not r2 == r3
    assert QuadAlgebraic.make(1, 2, 2) == QuadAlgebraic.make(1, 1, 8)


def test_sign_against_rationals():
    x = QuadAlgebraic.make(Fraction(7, 5), Fraction(-1), 2)  # 7/5 - sqrt(2) < 0
    assert x < 0
    y = QuadAlgebraic.make(Fraction(3, 2), Fraction(-1), 2)  # 3/2 - sqrt(2) > 0
    assert y > 0
    assert y < Fraction(1, 10)


def _reference(x, digits=50):
    """Decimal-style reference value via integer square root."""
    if isinstance(x, QuadAlgebraic):
        scale = 10**digits
        root = Fraction(isqrt(x.rad * scale * scale), scale)
        return x.rational + x.coeff * root
    return Fraction(x)


def _random_value(rng):
    r = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
    s = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
    d = rng.randint(0, 60)
    return QuadAlgebraic.make(r, s, d)


def test_ordering_matches_50_digit_reference():
    rng = random.Random(20240817)
    values = [_random_value(rng) for _ in range(1000)]
    refs = [_reference(v) for v in values]
    for _ in range(4000):
        i, j = rng.randrange(1000), rng.randrange(1000)
        exact = (values[i] > values[j]) - (values[i] < values[j])
        # reference comparison is reliable except for exact ties
        if values[i] == values[j]:
            assert abs(refs[i] - refs[j]) < Fraction(1, 10**40)
        else:
            ref = (refs[i] > refs[j]) - (refs[i] < refs[j])
            assert exact == ref


def test_ordering_transitive_via_sort():
    rng = random.Random(7)
    values = [_random_value(rng) for _ in range(300)]
    ordered = sorted(values)
    for a, b in zip(ordered, ordered[1:]):
        assert a <= b
        assert not b < a
    assert sorted(ordered, reverse=True) == list(reversed(ordered))


def test_rational_between():
    rng = random.Random(99)
    for _ in range(200):
        a, b = _random_value(rng), _random_value(rng)
        if a == b:
            continue
        lo, hi = (a, b) if a < b else (b, a)
        mid = rational_between(lo, hi)
        assert lo < mid < hi


def test_approx_error_bound():
    v = QuadAlgebraic.make(Fraction(1, 3), Fraction(1000), 7)
    approx = approx_value(v, 64)
    ref = _reference(v, digits=60)
    assert abs(approx - ref) < Fraction(1, 2**63)
