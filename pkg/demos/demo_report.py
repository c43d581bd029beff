"""Markdown reports for the four input shapes.

A constant 2x2 game gets everything (11 extension sections + 3 property
sections); a parametric 2x2 gets extensions only; a constant n x m gets
properties only; a parametric n x m is refused.
"""

import tempfile
from pathlib import Path

from qegs import Bimatrix, generate_report, plan_report
from qegs.errors import NoReportError

pd = Bimatrix.of([[(3, 3), (0, 5)], [(5, 0), (1, 1)]])
sym = Bimatrix.of([[([1, -2], [1, -2]), (0, 5)], [(5, 0), ([0, 1], [0, 1])]], param="x")
wide = Bimatrix.of([[(3, 1), (2, 3), (2, 0)], [(-100, 1), (-100, 2), (3, 3)]])
sym_wide = Bimatrix.of([[([1, -2], 0), (0, 5), (1, 1)], [(5, 0), (2, 2), (3, 3)]], param="x")

out = Path(tempfile.mkdtemp(prefix="qegs_reports_"))
for game, name in ((pd, "pd"), (sym, "sym"), (wide, "wide")):
    plan = plan_report(game, name)
    path = generate_report(game, name, out)
    print(f"{name}: {plan.kind} -> {path}")

try:
    generate_report(sym_wide, "nope", out)
except NoReportError as exc:
    print(f"nope: refused ({exc})")

print("\nfirst lines of the full report:")
print("\n".join((out / "Report_pd.md").read_text().splitlines()[:14]))
