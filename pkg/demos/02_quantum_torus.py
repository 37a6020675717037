"""Operators sum a_k(t, M) L^k acting on sequences: (L f)(n) = f(n+1), (M f)(n) = t^(2n) f(n).

Run:  python3 demos/02_quantum_torus.py
"""

from ajcable import LaurentPoly2, QTorusOperator, op_apply, op_epsilon, op_mirror
from ajcable.jones import demo_exp_sequence, quantum_integer_sequence

t, M = LaurentPoly2.t(), LaurentPoly2.M()
L = QTorusOperator.L()
Mop = QTorusOperator.M()

# LM = t^2 ML.
print("L*M     =", L * Mop)
print("t^2*M*L =", t**2 * (Mop * L))

# L - t^2 M annihilates f(n) = t^(n^2 + n).
f = demo_exp_sequence()
op = L - t**2 * Mop
print("(L - t^2 M) f at n = -2..3:", [op_apply(op, f, n) for n in range(-2, 4)])

# Shifting the quantum integers.
print("(L [.])(4) =", op_apply(L, quantum_integer_sequence(), 4))

# eps sets t = -1, giving a commutative polynomial in M and L.
a = (t**-2 * M**2 - t**2 * M**-2) * L + t * Mop
print("a      =", a)
print("eps(a) =", op_epsilon(a))

# The mirror map M -> t^-2 M^-1, L -> L^-1 is an involution.
print("mirror(a) =", op_mirror(a))
print("mirror(mirror(a)) == a:", op_mirror(op_mirror(a)) == a)
