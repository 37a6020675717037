"""Numerical probes: the Melvin-Morton limit, breadth fits and the degree sweep.

Run:  python3 demos/06_probes.py
"""

from ajcable import breadth_fit, degree_sweep, mm_probe
from ajcable.jones import fig8_sequence, odd_fig8_sequence

# J_E(n)/[n] at t^(4n) = z tends to 1/Delta(z), Delta(z) = -z + 3 - 1/z, near z = 1.
for z in (0.5, 2, 0.5 + 0.5j, 3):
    res = mm_probe(z, (10, 20, 40, 80))
    errs = ", ".join(f"{e:.3g}" for e in res.errors)
    print(f"z = {z}: target {res.target:.4f}, errors {errs}")
# z = 3 is outside the region where the sum converges; its errors grow.

print("breadth of J_E(n), n = 2..10:", breadth_fit(fig8_sequence(), range(2, 11)))
print("breadth of J_E(2n+1), n = 1..10:", breadth_fit(odd_fig8_sequence(), range(1, 11)))

table = degree_sweep([5, -5, 7, -7, 9, -9], 6)
print(table.to_csv().splitlines()[0])
for row in table.mismatches():
    print("mismatch:", row)
