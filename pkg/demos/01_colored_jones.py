"""Colored Jones polynomials of the figure-eight knot and its (r, 2)-cables.

Run:  python3 demos/01_colored_jones.py
"""

from ajcable import cable_jones, degree_oracle, jones_fig8, odd_jones, qint

# The unknot: quantum integers.
for n in range(1, 4):
    print(f"[{n}] = {qint(n)}")

# Habiro's sum for the figure-eight knot.  J(0) = 0, J(1) = 1, J(-n) = -J(n).
for n in range(0, 4):
    print(f"J_E({n}) = {jones_fig8(n)}")

# Extreme degrees follow 4n^2 - 2n - 2 and its negative.
for n in range(1, 7):
    v = jones_fig8(n)
    print(f"n={n}: d+={v.dplus} (formula {degree_oracle('fig8_plus', n)}), breadth={v.degrees()[2]}")

# The odd subsequence n -> J_E(2n + 1) has breadth 32n^2 + 24n.
print("breadth of J_E(2n+1):", [odd_jones(n).degrees()[2] for n in range(1, 6)])

# Cables: r must be odd.  Values come from the one-step recurrence in n.
r = 9
for n in range(1, 5):
    v = cable_jones(r, n)
    print(f"J_(E^(9,2))({n}): {len(v.terms)} terms, degrees {v.dminus}..{v.dplus}")

# The closed-form degree of the cable fails where leading terms cancel.
v = cable_jones(7, 2)
print("r=7, n=2: d- computed", v.dminus, "formula", degree_oracle("cable_minus", 2, 7))
