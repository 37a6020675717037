"""Searching for annihilators of bounded L-degree and M-window.

Run:  python3 demos/05_bounded_search.py
"""

from ajcable.jones import cable_sequence, constant_sequence, demo_exp_sequence
from ajcable.recurrence import search_annihilators

for name, seq, ldeg, window in [
    ("constant 1", constant_sequence(), 1, (0, 0)),
    ("t^(n^2+n)", demo_exp_sequence(), 1, (0, 1)),
]:
    rep = search_annihilators(seq, ldeg, window, range(1, 11))
    print(f"{name}: {[str(c) for c in rep.candidates]}  [{rep.certificate}]")

# No operator of L-degree <= 3 with M-exponents in [-8, 8] kills the (9, 2)-cable.
# 68 unknowns need more than 40 equations, so the rows are topped up with n = 41...
rep = search_annihilators(cable_sequence(9), 3, (-8, 8), range(1, 41))
print("cable(9):", rep.candidates or "none")
print("  searched:", rep.bounds)
print("  equations: n =", rep.rows_used[0], "..", rep.rows_used[-1], f"({rep.unknowns} unknowns)")
print("  certificate:", rep.certificate)
