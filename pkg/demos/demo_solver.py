"""Solving classical games: equilibria, dominance, maximin.

Walks through the prisoner's dilemma and a 2x3 game where the security-level
story and the equilibrium story disagree.
"""

from qegs import Bimatrix, dominated_strategies, find_pure_ne, format_rational, maximin


def fmt_levels(levels):
    return "(" + ", ".join(format_rational(v) for v in levels) + ")"


pd = Bimatrix.of([[(3, 3), (0, 5)], [(5, 0), (1, 1)]])
print("Prisoner's dilemma")
print("  pure NE:", sorted(find_pure_ne(pd)))
rows, cols = dominated_strategies(pd)
print("  strictly dominated rows/cols:", sorted(rows), sorted(cols))
mrows, mcols, levels = maximin(pd)
print("  maximin rows/cols:", sorted(mrows), sorted(mcols), "levels:", fmt_levels(levels))

# A game where playing it safe beats chasing the (B, R) equilibrium: the
# second row risks -100 against two of the three columns.
risky = Bimatrix.of(
    [[(3, 1), (2, 3), (2, 0)], [(-100, 1), (-100, 2), (3, 3)]],
    row_labels=["T", "B"],
    col_labels=["L", "M", "R"],
)
print("\n2x3 game with a risky row")
print("  pure NE:", sorted(find_pure_ne(risky)))
mrows, mcols, levels = maximin(risky)
print("  maximin rows/cols:", sorted(mrows), sorted(mcols), "levels:", fmt_levels(levels))
rows, cols = dominated_strategies(risky)
print("  dominated cols:", sorted(cols), "(L is strictly beaten by M)")
