"""Gamma variants and the eleven extension classes."""

import math
import random
from fractions import Fraction

import pytest

from qegs import (
    Bimatrix,
    CLASS_NAMES,
    UnitaryParams,
    class_info,
    ewl_payoff,
    extend,
    extend3,
    extend4,
    extension_3x3_from_u,
    gamma1,
    gamma2,
    gamma3,
    is_symmetric,
)
from qegs.errors import (
    NotTwoByTwoError,
    ParamError,
    ParamOutOfRangeError,
    ParametricBaseError,
)

from conftest import random_constant_2x2, random_symmetric_2x2

F = Fraction


def test_gamma_examples(pd):
    assert gamma1(pd) == Bimatrix.of([[(5, 0), (1, 1)], [(3, 3), (0, 5)]])
    assert gamma2(pd) == Bimatrix.of([[(0, 5), (3, 3)], [(1, 1), (5, 0)]])
    assert gamma3(pd) == Bimatrix.of([[(1, 1), (5, 0)], [(0, 5), (3, 3)]])


def test_gamma_algebra():
    rng = random.Random(2)
    for _ in range(50):
        g = random_constant_2x2(rng)
        assert gamma3(gamma3(g)) == g
        assert gamma1(gamma1(g)) == g
        assert gamma3(g) == gamma1(gamma2(g)) == gamma2(gamma1(g))


def test_gamma_requires_2x2(g23):
    with pytest.raises(NotTwoByTwoError):
        gamma1(g23)


def test_a0_of_pd(pd):
    expect = Bimatrix.of(
        [
            [(3, 3), (0, 5), (F(3, 2), 4)],
            [(5, 0), (1, 1), (3, F(1, 2))],
            [(4, F(3, 2)), (F(1, 2), 3), (F(9, 4), F(9, 4))],
        ],
        row_labels=["I", "iX", "U"],
        col_labels=["I", "iX", "U"],
    )
    assert extend3(pd, "A0") == expect


def test_b0_of_pd(pd):
    expect = Bimatrix.of(
        [
            [(3, 3), (0, 5), (3, F(1, 2))],
            [(5, 0), (1, 1), (F(3, 2), 4)],
            [(F(1, 2), 3), (4, F(3, 2)), (F(9, 4), F(9, 4))],
        ],
        row_labels=["I", "iX", "U"],
        col_labels=["I", "iX", "U"],
    )
    assert extend3(pd, "B0") == expect


def test_c0_of_pd_is_all_average(pd):
    ext = extend3(pd, "C0")
    avg = F(9, 4)
    for i in range(1, 4):
        for j in range(1, 4):
            if i <= 2 and j <= 2:
                continue
            pair = ext.pair(i, j)
            assert pair.u1.constant_value() == avg
            assert pair.u2.constant_value() == avg


def test_b1_of_pd_blocks_are_average(pd):
    ext = extend4(pd, "B1")
    for i in range(1, 5):
        for j in range(1, 5):
            if i <= 2 and j <= 2:
                continue
            assert ext.pair(i, j).u1.constant_value() == F(9, 4)
            assert ext.pair(i, j).u2.constant_value() == F(9, 4)


def test_d1_of_pd_at_slider_point(pd):
    ext = extend4(pd, "D1", F(24, 100))
    assert ext.pair(2, 2).u1.constant_value() == 1
    assert ext.pair(3, 2).u1.constant_value() == F(19, 25)
    assert ext.pair(3, 2).u2.constant_value() == F(49, 25)


def test_a1_symbolic_block(pd):
    ext = extend4(pd, "A1")
    # upper-right block a*G + (1-a)*G3
    expect = [
        [("1 + 2a", "1 + 2a"), ("5 - 5a", "5a")],
        [("5a", "5 - 5a"), ("3 - 2a", "3 - 2a")],
    ]
    for i in range(2):
        for j in range(2):
            pair = ext.pair(i + 1, j + 3)
            assert (str(pair.u1), str(pair.u2)) == expect[i][j]


def test_c1_at_half_equals_b1(pd):
    c1 = extend4(pd, "C1", F(1, 2))
    b1 = extend4(pd, "B1")
    assert c1 == b1


def test_parameter_endpoints(pd):
    a1 = extend4(pd, "A1", 1)
    for i in range(1, 3):
        for j in range(1, 3):
            base = pd.pair(i, j)
            assert a1.pair(i, j + 2) == base     # block12 = game at a=1
            assert a1.pair(i + 2, j + 2) == base  # block22 = game (b=1)
    d1 = extend4(pd, "D1", 0)
    g2, g1 = gamma2(pd), gamma1(pd)
    for i in range(1, 3):
        for j in range(1, 3):
            assert d1.pair(i, j + 2) == g2.pair(i, j)
            assert d1.pair(i + 2, j) == g1.pair(i, j)


def test_errors(pd, g23):
    with pytest.raises(NotTwoByTwoError):
        extend3(g23, "A0")
    with pytest.raises(NotTwoByTwoError):
        extend4(g23, "A1", F(1, 2))
    with pytest.raises(ParamOutOfRangeError):
        extend4(pd, "A1", F(3, 2))
    with pytest.raises(ParamOutOfRangeError):
        extend4(pd, "D1", -1)
    parametric = Bimatrix.of([[([0, 1], [0, 1]), (1, 1)], [(2, 2), (3, 3)]], param="x")
    with pytest.raises(ParametricBaseError):
        extend4(parametric, "D1", F(1, 2))
    with pytest.raises(ParamError):
        extend4(pd, "B1", F(1, 2))  # B1 takes no parameter
    with pytest.raises(ParamError):
        extend(pd, "Z9")


def test_class_info():
    assert class_info("A0").size == 3 and class_info("A0").param_kind is None
    assert class_info("A1").param_kind == "a"
    assert class_info("B1").param_kind is None and class_info("B1").size == 4
    for name in ("C1", "D1", "D2", "E1", "E2"):
        assert class_info(name).param_kind == "t"


def _random_param(rng, name):
    if class_info(name).param_kind is None:
        return None
    return F(rng.randint(0, 100), 100)


def test_top_left_block_preserved_everywhere():
    rng = random.Random(31)
    for _ in range(200):
        g = random_constant_2x2(rng)
        for name in CLASS_NAMES:
            ext = extend(g, name, _random_param(rng, name))
            for i in range(1, 3):
                for j in range(1, 3):
                    assert ext.pair(i, j) == g.pair(i, j)


def test_symmetry_preserved_everywhere():
    rng = random.Random(41)
    for _ in range(200):
        g = random_symmetric_2x2(rng)
        assert is_symmetric(g)
        for name in CLASS_NAMES:
            assert is_symmetric(extend(g, name, _random_param(rng, name)))


def test_symbolic_degree_bound():
    rng = random.Random(51)
    for _ in range(50):
        g = random_constant_2x2(rng)
        for name in CLASS_NAMES:
            info = class_info(name)
            ext = extend(g, name, None)
            for row in ext.entries:
                for pair in row:
                    assert pair.u1.degree <= 2 and pair.u2.degree <= 2
                    if info.param_kind is None:
                        assert pair.u1.is_constant and pair.u2.is_constant


def test_three_strategy_ewl_oracle(pd):
    half, quarter = F(1, 2), F(1, 4)
    anchors = {
        "A0": UnitaryParams.from_pi(half, 0, 0),
        "B0": UnitaryParams.from_pi(half, half, half),
        "C0": UnitaryParams.from_pi(half, quarter, quarter),
    }
    rng = random.Random(61)
    games = [pd] + [random_constant_2x2(rng) for _ in range(100)]
    for g in games:
        for name, u in anchors.items():
            assert extend3(g, name) == extension_3x3_from_u(g, u)


def test_a1_ewl_oracle(pd):
    # Exercise the derived angle assignment U1 = U(0, alpha, 0),
    # U2 = U(pi, 0, -alpha) with a = cos^2(alpha) against the weight formula.
    rng = random.Random(71)
    for _ in range(20):
        alpha = rng.uniform(0, 2 * math.pi)
        a = Fraction(math.cos(alpha) ** 2)
        ext = extend4(pd, "A1", a)
        u1 = UnitaryParams.from_radians(0.0, alpha, 0.0)
        u2 = UnitaryParams.from_radians(math.pi, 0.0, -alpha)
        strategies = [
            UnitaryParams.from_pi(0, 0, 0),
            UnitaryParams.from_pi(1, 0, 0),
            u1,
            u2,
        ]
        for i, s_row in enumerate(strategies):
            for j, s_col in enumerate(strategies):
                got = ewl_payoff(pd, s_row, s_col)
                want = ext.pair(i + 1, j + 1)
                assert abs(float(got[0]) - float(want.u1.constant_value())) < 1e-10
                assert abs(float(got[1]) - float(want.u2.constant_value())) < 1e-10
