"""A-polynomial of the ``(r, 2)``-cable and the comparison ``eps(S) ~ A``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .jones import _check_r
from .laurent import LaurentPoly1, RationalFunc1, poly_to_json
from .qtorus import CommutativeMLPoly, op_epsilon
from .recurrence import AnnihilatorCertificate, build_S

__all__ = [
    "ZeroInput",
    "AJReport",
    "fig8_trace_term",
    "a_polynomial_cable",
    "eq_up_to_M",
    "check_aj",
    "laurent_sqrt",
    "irreducibility_probe",
    "quadratic_discriminant",
]


class ZeroInput(ValueError):
    pass


def _m(coeffs: dict[int, int]) -> LaurentPoly1:
    return LaurentPoly1(coeffs, "M")


def fig8_trace_term() -> LaurentPoly1:
    """``(M^8 + M^-8 - M^4 - M^-4 - 2)^2 - 2``, the middle coefficient of the quadratic factor."""
    x = _m({8: 1, -8: 1, 4: -1, -4: -1, 0: -2})
    return x * x - 2


def a_polynomial_cable(r: int) -> CommutativeMLPoly:
    """``(L - 1) (L^2 - b L + 1) (L + M^-2r)`` with ``b`` from :func:`fig8_trace_term`."""
    _check_r(r)
    L = CommutativeMLPoly.L()
    quad = L * L - CommutativeMLPoly({1: fig8_trace_term()}) + 1
    return (L - 1) * quad * (L + CommutativeMLPoly.M(-2 * r))


def eq_up_to_M(f: CommutativeMLPoly, g: CommutativeMLPoly) -> tuple[bool, RationalFunc1 | None, list[tuple[int, int]]]:
    """Whether ``f / g`` is free of ``L``; returns ``(flag, witness, failures)``.

    Each side is scaled by its ``L``-leading coefficient, then coefficients are
    compared by cross-multiplication.  ``failures`` lists ``(k, lead)`` index
    pairs where ``f_k g_lead != g_k f_lead``.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroInput("proportionality is only defined for nonzero inputs")
    fl, gl = f.l_degree, g.l_degree
    zero = LaurentPoly1({}, "M")
    failures = []
    for k in sorted(set(f.coeffs) | set(g.coeffs)):
        lhs = f.coeffs.get(k, zero) * g.coeffs.get(gl, zero)
        rhs = g.coeffs.get(k, zero) * f.coeffs.get(fl, zero)
        if fl != gl or lhs != rhs:
            failures.append((k, max(fl, gl)))
    if failures:
        return False, None, failures
    return True, RationalFunc1(f.coeffs[fl], g.coeffs[gl]).reduced(), []


@dataclass
class AJReport:
    r: int
    epsilon_S: CommutativeMLPoly
    a_poly: CommutativeMLPoly
    proportional: bool
    witness: RationalFunc1 | None
    failures: list[tuple[int, int]] = field(default_factory=list)
    annihilation_checked: list[int] = field(default_factory=list)
    certificate: AnnihilatorCertificate | None = None

    @property
    def passed(self) -> bool:
        return self.proportional and self.certificate is not None and self.certificate.result == "pass"

    def to_json(self) -> dict:
        w = None
        if self.witness is not None:
            w = {"num": poly_to_json(self.witness.num), "den": poly_to_json(self.witness.den)}
        return {
            "r": self.r,
            "proportional": self.proportional,
            "witness": w,
            "epsilon_S": self.epsilon_S.to_json(),
            "a_poly": self.a_poly.to_json(),
            "annihilation_checked": list(self.annihilation_checked),
        }


def check_aj(r: int, n_check: int = 12, threads: int = 1) -> AJReport:
    """Build ``S`` for the cable, check it on ``n = 1..n_check`` and compare ``eps(S)`` with ``A``."""
    _check_r(r)
    if n_check < 1:
        raise ValueError("n_check must be positive")
    cert = build_S(r, n_check=n_check, threads=threads)
    eps = op_epsilon(cert.operator)
    a = a_polynomial_cable(r)
    ok, witness, failures = eq_up_to_M(eps, a)
    return AJReport(r, eps, a, ok, witness, failures, cert.checked_range, cert)


# -- irreducibility of the quadratic factor ------------------------------------------------


def _frac_sqrt(c: Fraction) -> Fraction | None:
    if c < 0:
        return None
    a, b = isqrt(c.numerator), isqrt(c.denominator)
    if a * a == c.numerator and b * b == c.denominator:
        return Fraction(a, b)
    return None


def laurent_sqrt(p: LaurentPoly1) -> LaurentPoly1 | None:
    """A Laurent polynomial ``q`` over Q with ``q^2 = p``, or ``None``."""
    if p.is_zero():
        return p
    lo, hi = min(p.terms), max(p.terms)
    if lo % 2 or hi % 2:
        return None
    top = _frac_sqrt(Fraction(p.terms[hi]))
    if top is None:
        return None
    # solve for q from the top coefficient down: q has exponents lo/2 .. hi/2
    qlo, qhi = lo // 2, hi // 2
    q = {qhi: top}
    for e in range(qhi - 1, qlo - 1, -1):
        # coefficient of M^(qhi + e) in q^2 is 2 q_hi q_e plus ordered pairs strictly inside
        target = qhi + e
        acc = Fraction(p.terms.get(target, 0))
        for i in range(e + 1, qhi):
            acc -= q[i] * q[target - i]
        q[e] = acc / (2 * top)
    cand = LaurentPoly1({e: c for e, c in q.items() if c}, p.var)
    return cand if cand * cand == p else None


def quadratic_discriminant() -> LaurentPoly1:
    b = fig8_trace_term()
    return b * b - 4


def irreducibility_probe(disc: LaurentPoly1 | None = None) -> bool:
    """True when ``disc`` (default: that of ``L^2 - b L + 1``) has no square root in ``Q[M^±]``.

    A quadratic in ``L`` splits over ``Q(M)`` exactly when its discriminant is
    a square there; this is a surrogate for irreducibility, not a proof of
    absolute irreducibility.
    """
    disc = quadratic_discriminant() if disc is None else disc
    return laurent_sqrt(disc) is None
