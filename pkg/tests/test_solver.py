"""Equilibria, dominance and maximin against brute-force oracles."""

import random
from fractions import Fraction

import pytest

from qegs import (
    Bimatrix,
    UnitaryParams,
    check_profile,
    dominated_strategies,
    extend3,
    extension_3x3_from_u,
    find_pure_ne,
    maximin,
    solve,
)
from qegs.errors import IndexOutOfRangeError, ParametricInputError

from conftest import (
    brute_dominated,
    brute_maximin,
    brute_nash,
    random_constant_game,
)

F = Fraction


def test_pd_baseline(pd):
    assert find_pure_ne(pd) == {(2, 2)}
    assert dominated_strategies(pd) == ({1}, {1})
    rows, cols, levels = maximin(pd)
    assert (rows, cols) == ({2}, {2})
    assert levels == (1, 1)


def test_2x3_game_definition_faithful(g23):
    # By the weak-inequality definition both (1,2) and (2,3) are equilibria:
    # at (1,2), 2 >= -100 for the row player and 3 >= 1, 0 for the column
    # player. The brute-force oracle agrees.
    u1, u2 = g23.constant_grids()
    assert brute_nash(u1, u2) == {(1, 2), (2, 3)}
    assert find_pure_ne(g23) == {(1, 2), (2, 3)}


def test_2x3_game_maximin_and_dominance(g23):
    rows, cols, levels = maximin(g23)
    assert rows == {1} and cols == {2}
    assert levels == (2, 2)
    assert g23.pair(1, 2).u1.constant_value() == 2
    assert g23.pair(1, 2).u2.constant_value() == 3
    assert dominated_strategies(g23) == (frozenset(), {1})


def test_eq14_matrix_ne(pd):
    ext = extension_3x3_from_u(pd, UnitaryParams.from_pi(F(1, 3), F(1, 2), 1))
    assert find_pure_ne(ext) == {(3, 3)}
    assert check_profile(ext, 3, 3)


def test_a0_dominance(pd):
    ext = extend3(pd, "A0")
    assert dominated_strategies(ext) == ({1, 3}, {1, 3})


def test_c0_dominance_ties(pd):
    ext = extend3(pd, "C0")
    assert dominated_strategies(ext) == (frozenset(), frozenset())


def test_all_equal_game_total_tie():
    g = Bimatrix.of([[(1, 1), (1, 1)], [(1, 1), (1, 1)]])
    rows, cols, levels = maximin(g)
    assert rows == {1, 2} and cols == {1, 2}
    assert find_pure_ne(g) == {(1, 1), (1, 2), (2, 1), (2, 2)}


def test_check_profile(pd):
    assert check_profile(pd, 2, 2)
    assert not check_profile(pd, 1, 1)
    with pytest.raises(IndexOutOfRangeError):
        check_profile(pd, 3, 1)


def test_parametric_rejected():
    g = Bimatrix.of([[([0, 1], [0, 1]), (1, 1)], [(2, 2), (3, 3)]], param="x")
    for fn in (find_pure_ne, dominated_strategies, maximin, solve):
        with pytest.raises(ParametricInputError):
            fn(g)


def test_brute_force_agreement_500_games():
    rng = random.Random(2024)
    for k in range(500):
        g = random_constant_game(rng, use_fractions=(k % 3 == 0))
        u1, u2 = g.constant_grids()
        nash = find_pure_ne(g)
        assert nash == brute_nash(u1, u2)
        assert all(check_profile(g, i, j) for (i, j) in nash)
        rows, cols = dominated_strategies(g)
        assert (set(rows), set(cols)) == brute_dominated(u1, u2)
        mrows, mcols, levels = maximin(g)
        brows, bcols, blevels = brute_maximin(u1, u2)
        assert (set(mrows), set(mcols)) == (brows, bcols)
        assert levels == blevels
        # a strictly dominated strategy never appears in an equilibrium
        for (i, j) in nash:
            assert i not in rows
            assert j not in cols


def test_affine_scaling_invariance():
    rng = random.Random(77)
    for _ in range(100):
        g = random_constant_game(rng, max_n=5, max_m=5)
        p = F(rng.randint(1, 9), rng.randint(1, 9))
        q = F(rng.randint(-20, 20), rng.randint(1, 5))
        scaled = Bimatrix(
            [
                [
                    type(pair)(pair.u1 * p + q, pair.u2)
                    for pair in row
                ]
                for row in g.entries
            ]
        )
        assert find_pure_ne(scaled) == find_pure_ne(g)
        assert dominated_strategies(scaled) == dominated_strategies(g)
        rows, cols, levels = maximin(g)
        srows, scols, slevels = maximin(scaled)
        assert (srows, scols) == (rows, cols)
        assert slevels[0] == levels[0] * p + q
        assert slevels[1] == levels[1]
