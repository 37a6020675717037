"""Compare eps(S) with the A-polynomial of the (r, 2)-cable up to a factor in M.

Run:  python3 demos/04_aj_certificate.py [r]      (default r = -9)
"""

import json
import sys

from ajcable import a_polynomial_cable, check_aj, irreducibility_probe

r = int(sys.argv[1]) if len(sys.argv) > 1 else -9

print("A-polynomial (expanded in L):")
for k, c in sorted(a_polynomial_cable(r).coeffs.items(), reverse=True):
    print(f"  L^{k}: {len(c.terms)} terms in M")

rep = check_aj(r, n_check=12)
print("eps(S) proportional to A:", rep.proportional)
print("ratio eps(S)/A =", rep.witness)

# The quadratic factor L^2 - b L + 1 does not split over Q(M).
print("discriminant is not a square:", irreducibility_probe())

summary = rep.to_json()
print(json.dumps({k: summary[k] for k in ("r", "proportional", "annihilation_checked")}))
