"""The unitary-strategy payoff engine.

Classical strategies are the unitaries I = U(0,0,0) and iX = U(pi,0,0);
adding a third unitary U(pi/3, pi/2, pi) to the prisoner's dilemma moves the
unique equilibrium to the new strategy pair with payoff 43/16 each.
"""

from fractions import Fraction

from qegs import (
    FLIP,
    IDENTITY,
    Bimatrix,
    UnitaryParams,
    ewl_payoff,
    ewl_weights,
    extension_3x3_from_u,
    find_pure_ne,
)

pd = Bimatrix.of([[(3, 3), (0, 5)], [(5, 0), (1, 1)]])

print("classical recovery:")
for name1, s1 in (("I", IDENTITY), ("iX", FLIP)):
    for name2, s2 in (("I", IDENTITY), ("iX", FLIP)):
        p1, p2 = ewl_payoff(pd, s1, s2)
        print(f"  u({name1}, {name2}) = ({p1}, {p2})")

u = UnitaryParams.from_pi(Fraction(1, 3), Fraction(1, 2), 1)
w = ewl_weights(u, u)
print("\noutcome weights for (U, U):", [str(x) for x in w.as_tuple()],
      "(exact)" if w.exact else "(float)")
p1, p2 = ewl_payoff(pd, u, u)
print(f"payoff u(U, U): ({p1}, {p2})")

ext = extension_3x3_from_u(pd, u)
print("\n3x3 extension (rows/cols I, iX, U):")
for row in ext.entries:
    print("  ", "  ".join(str(pair) for pair in row))
print("pure NE:", sorted(find_pure_ne(ext)), "- the added strategy pair wins")

# Angles without exact trigonometry drop to double precision transparently.
fuzzy = UnitaryParams.from_radians(1.0, 0.4, 2.2)
print("\nfloat-angle payoff:", ewl_payoff(pd, fuzzy, IDENTITY))
