"""Exact q-difference machinery for the colored Jones function of the
figure-eight knot and its (r, 2)-cables: Laurent-polynomial arithmetic, the
quantum torus, operator construction and annihilation certificates, and the
comparison with the cable's A-polynomial."""

from .apoly import AJReport, a_polynomial_cable, check_aj, eq_up_to_M, irreducibility_probe
from .jones import (
    EvenR,
    JonesSequence,
    cable_jones,
    cable_jones_direct,
    cable_sequence,
    degree_oracle,
    fig8_sequence,
    jones_fig8,
    odd_fig8_sequence,
    odd_jones,
    qint,
)
from .laurent import LaurentPoly1, LaurentPoly2, NotDivisible, RationalFunc1
from .probes import breadth_fit, degree_sweep, mm_probe
from .qtorus import CommutativeMLPoly, QTorusOperator, op_apply, op_epsilon, op_mirror, op_mul, op_normalize
from .recurrence import (
    build_odd_annihilator,
    build_Q,
    build_Qprime,
    build_S,
    cm_operator,
    fit_inhomogeneous,
    guess_annihilator,
    verify_annihilates,
)

__version__ = "0.1.0"
