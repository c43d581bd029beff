"""The eleven permissible extension classes.

Three classes (A0, B0, C0) add one unitary strategy, eight (A1..E2) add two.
The four-strategy classes are one-parameter families; built symbolically,
their entries are exact polynomials in `a` or `t`.
"""

from fractions import Fraction

from qegs import CLASS_NAMES, Bimatrix, class_info, extend, find_pure_ne

pd = Bimatrix.of([[(3, 3), (0, 5)], [(5, 0), (1, 1)]])

for name in CLASS_NAMES:
    info = class_info(name)
    kind = info.param_kind or "fixed"
    print(f"{name}: {info.size}x{info.size}, parameter: {kind}")

print("\nA0 extension of the prisoner's dilemma:")
for row in extend(pd, "A0").entries:
    print("  ", "  ".join(str(pair) for pair in row))

print("\nA1 extension, symbolic in a:")
for row in extend(pd, "A1").entries:
    print("  ", "  ".join(str(pair) for pair in row))

print("\nA1 at a = 13/20 (two equilibria appear):")
g = extend(pd, "A1", Fraction(13, 20))
print("  NE:", sorted(find_pure_ne(g)))

print("\nD1 at t = 6/25 (the classical (2,2) survives):")
g = extend(pd, "D1", Fraction(6, 25))
print("  NE:", sorted(find_pure_ne(g)))
