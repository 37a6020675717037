"""The quantum torus: q-difference operators ``sum_k a_k(t, M) L^k`` with ``LM = t^2 ML``.

Operators act on discrete functions ``f: Z -> Z[t, 1/t]`` by
``(L f)(n) = f(n + 1)`` and ``(M f)(n) = t^(2n) f(n)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Mapping

from .laurent import LaurentPoly1, LaurentPoly2, NotDivisible, poly_from_json, poly_to_json, sum_polys

__all__ = [
    "QTorusOperator",
    "CommutativeMLPoly",
    "op_mul",
    "op_apply",
    "op_epsilon",
    "op_mirror",
    "op_normalize",
    "op_to_json",
    "op_from_json",
]


class QTorusOperator:
    """Normal form ``sum_k a_k(t, M) L^k``; ``coeffs`` maps ``k`` to ``a_k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, LaurentPoly2 | int] | None = None):
        out = {}
        for k, a in (coeffs or {}).items():
            if isinstance(a, int):
                a = LaurentPoly2.const(a)
            elif isinstance(a, LaurentPoly1):
                a = LaurentPoly2.from_t(a)
            if not a.is_zero():
                out[int(k)] = a
        self.coeffs = out

    @classmethod
    def identity(cls) -> "QTorusOperator":
        return cls({0: 1})

    @classmethod
    def L(cls, k: int = 1) -> "QTorusOperator":
        return cls({k: 1})

    @classmethod
    def M(cls, j: int = 1) -> "QTorusOperator":
        return cls({0: LaurentPoly2.monomial(1, 0, j)})

    @classmethod
    def scalar(cls, a: LaurentPoly2 | LaurentPoly1 | int) -> "QTorusOperator":
        return cls({0: a})

    def _coerce(self, other):
        if isinstance(other, QTorusOperator):
            return other
        if isinstance(other, (int, LaurentPoly1, LaurentPoly2)):
            return QTorusOperator.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for k, a in other.coeffs.items():
            out[k] = out[k] + a if k in out else a
        return QTorusOperator(out)

    __radd__ = __add__

    def __neg__(self):
        return QTorusOperator({k: -a for k, a in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return op_mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return op_mul(other, self)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def l_support(self) -> list[int]:
        return sorted(self.coeffs)

    @property
    def l_degree(self) -> int:
        """Width of the ``L``-support (the order of the recurrence)."""
        ks = self.coeffs
        return max(ks) - min(ks) if ks else -1

    def m_support(self) -> tuple[int, int]:
        lo = min(a.m_support()[0] for a in self.coeffs.values())
        hi = max(a.m_support()[1] for a in self.coeffs.values())
        return lo, hi

    def __call__(self, f, n: int) -> LaurentPoly1:
        return op_apply(self, f, n)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            mono = "" if k == 0 else ("L" if k == 1 else f"L^{k}")
            body = repr(self.coeffs[k])
            parts.append(f"[{body}]{'*' + mono if mono else ''}")
        return " + ".join(parts)


def op_mul(a: QTorusOperator, b: QTorusOperator) -> QTorusOperator:
    """Product via ``a(M) L^k * b(M) L^l = a(M) b(t^(2k) M) L^(k+l)``."""
    out: dict[int, LaurentPoly2] = {}
    for k, ak in a.coeffs.items():
        for l, bl in b.coeffs.items():
            term = ak * bl.subst_M(2 * k, 1)
            out[k + l] = out[k + l] + term if k + l in out else term
    return QTorusOperator(out)


def op_apply(a: QTorusOperator, f, n: int) -> LaurentPoly1:
    """``(a f)(n) = sum_k a_k(t, t^(2n)) f(n + k)``."""
    return sum_polys((ak.spec_M(n) * f(n + k) for k, ak in a.coeffs.items()), LaurentPoly1())


def op_mirror(a: QTorusOperator) -> QTorusOperator:
    """``sum a_k(t, M) L^k -> sum a_k(t, t^-2 M^-1) L^-k``."""
    return QTorusOperator({-k: ak.subst_M(-2, -1) for k, ak in a.coeffs.items()})


def op_normalize(a: QTorusOperator) -> QTorusOperator:
    """Left-multiply by a power of ``L`` so the support starts at 0; drop integer content."""
    if a.is_zero():
        raise ValueError("cannot normalize the zero operator")
    s = -min(a.coeffs)
    shifted = {k + s: ak.subst_M(2 * s, 1) for k, ak in a.coeffs.items()}
    g = 0
    for ak in shifted.values():
        g = gcd(g, ak.content())
    lead = shifted[max(shifted)]
    if lead.terms[max(lead.terms)] < 0:
        g = -g
    if g != 1:
        shifted = {k: ak.exact_scalar_div(g) for k, ak in shifted.items()}
    return QTorusOperator(shifted)


def op_epsilon(a: QTorusOperator) -> "CommutativeMLPoly":
    """Specialize ``t = -1``."""
    return CommutativeMLPoly({k: ak.spec_t() for k, ak in a.coeffs.items()})


def op_to_json(a: QTorusOperator) -> dict:
    return {"op": [[k, poly_to_json(a.coeffs[k])] for k in sorted(a.coeffs)]}


def op_from_json(obj) -> QTorusOperator:
    return QTorusOperator({k: poly_from_json(p) for k, p in obj["op"]})


# -- commutative image ----------------------------------------------------------------


def _normalize(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def _mpoly(p) -> LaurentPoly1:
    if isinstance(p, LaurentPoly1):
        return p if p.var == "M" else LaurentPoly1(p.terms, "M")
    if isinstance(p, (int, Fraction)):
        return LaurentPoly1.const(p, "M")
    raise TypeError(f"expected a Laurent polynomial in M, got {type(p).__name__}")


class CommutativeMLPoly:
    """Polynomial in ``L`` with Laurent-polynomial-in-``M`` coefficients over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, LaurentPoly1 | int] | None = None):
        self.coeffs = {int(k): _mpoly(c) for k, c in (coeffs or {}).items() if not _mpoly(c).is_zero()}

    @classmethod
    def L(cls) -> "CommutativeMLPoly":
        return cls({1: 1})

    @classmethod
    def M(cls, j: int = 1) -> "CommutativeMLPoly":
        return cls({0: LaurentPoly1.monomial(1, j, "M")})

    @classmethod
    def const(cls, c) -> "CommutativeMLPoly":
        return cls({0: c})

    def _coerce(self, other):
        if isinstance(other, CommutativeMLPoly):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly1)):
            return CommutativeMLPoly({0: _mpoly(other)})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return CommutativeMLPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return CommutativeMLPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, LaurentPoly1] = {}
        for k, a in self.coeffs.items():
            for l, b in other.coeffs.items():
                out[k + l] = out[k + l] + a * b if k + l in out else a * b
        return CommutativeMLPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = CommutativeMLPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def l_degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def l_valuation(self) -> int:
        return min(self.coeffs)

    def eval_L(self, value) -> LaurentPoly1:
        """Substitute a number for ``L``."""
        value = Fraction(value)
        return sum_polys((c * _normalize(value**k) for k, c in self.coeffs.items()), LaurentPoly1({}, "M"))

    def eval_M(self, value) -> "CommutativeMLPoly":
        """Substitute a number for ``M`` (result has constant coefficients)."""
        return CommutativeMLPoly({k: c(Fraction(value)) for k, c in self.coeffs.items()})

    def div_L_minus_1(self) -> "CommutativeMLPoly":
        """Exact quotient by ``L - 1`` (synthetic division), or :class:`NotDivisible`."""
        if self.is_zero():
            return self
        lo, hi = min(self.coeffs), max(self.coeffs)
        zero = LaurentPoly1({}, "M")
        quot: dict[int, LaurentPoly1] = {}
        carry = zero
        for k in range(hi, lo, -1):
            carry = carry + self.coeffs.get(k, zero)
            quot[k - 1] = carry
        if not (carry + self.coeffs.get(lo, zero)).is_zero():
            raise NotDivisible("not divisible by L - 1")
        return CommutativeMLPoly(quot)

    def divisible_by_L_minus_1(self) -> bool:
        return self.eval_L(1).is_zero()

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            mono = "" if k == 0 else ("L" if k == 1 else f"L^{k}")
            parts.append(f"({self.coeffs[k]!r}){'*' + mono if mono else ''}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"poly": [[k, poly_to_json(self.coeffs[k])] for k in sorted(self.coeffs)]}

    @classmethod
    def from_json(cls, obj) -> "CommutativeMLPoly":
        return cls({k: poly_from_json(p) for k, p in obj["poly"]})

