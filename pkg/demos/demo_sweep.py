"""Exact parametric analysis instead of a slider.

One sweep call decomposes the parameter range into maximal segments of
constant solution sets; the endpoints are exact algebraic numbers (roots of
the payoff-difference quadratics), so nothing is sampled or rounded.
"""

from fractions import Fraction

from qegs import Bimatrix, extend, sweep

pd = Bimatrix.of([[(3, 3), (0, 5)], [(5, 0), (1, 1)]])
a1 = extend(pd, "A1")

result = sweep(a1, 0, 1, ["ne"])
print(f"equilibria of the A1 family over a in [0, 1] ({len(result.segments)} segments)")
for seg in result.segments:
    nash = sorted(seg.data.nash)
    if seg.kind == "point":
        print(f"  a = {seg.at}: {nash}")
    else:
        lo = "(" if seg.lo_open else "["
        hi = ")" if seg.hi_open else "]"
        print(f"  a in {lo}{seg.lo}, {seg.hi}{hi}: {nash}")

print("\nlookup at slider positions:")
for a in (Fraction(28, 100), Fraction(65, 100)):
    seg = result.segment_at(a)
    print(f"  a = {a}: NE {sorted(seg.data.nash)}")

print("\nmaximin sweep of D1 (levels are polynomials in t inside segments):")
for seg in sweep(extend(pd, "D1"), 0, 1, ["maximin"]).segments:
    where = f"at {seg.at}" if seg.kind == "point" else f"[{seg.lo}, {seg.hi}]"
    print(f"  {where}: rows {sorted(seg.data.maximin_rows)} levels {seg.data.security_levels}")
