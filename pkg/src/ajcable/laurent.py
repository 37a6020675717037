"""Exact Laurent polynomials in ``t`` (one variable) and in ``t, M`` (two variables).

Terms are stored sparsely as ``{exponent: coefficient}`` with no zero
coefficients, so equal polynomials always have equal term dictionaries.
Coefficients are Python integers; :class:`LaurentPoly1` also accepts
:class:`fractions.Fraction` coefficients, which is how Laurent polynomials in
``M`` over the rationals (images of the ``t = -1`` specialization) are kept.

Large products go through Kronecker substitution: both operands are packed into
big integers, multiplied once, and unpacked.  This is what makes cable
polynomials of degree ``10^4 .. 10^5`` affordable in pure Python.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly1",
    "LaurentPoly2",
    "RationalFunc1",
    "NotDivisible",
    "ZeroPolynomial",
    "lp_arith",
    "lp_subst_M",
    "lp_spec_t",
    "lp_spec_M",
    "lp_div_exact",
    "lp_degrees",
    "lp_eval_complex",
    "poly_to_json",
    "poly_from_json",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact quotient does not exist."""


class ZeroPolynomial(ValueError):
    """Raised when an operation is undefined on the zero polynomial."""


# products with fewer term pairs than this use the schoolbook loop
_KRONECKER_THRESHOLD = 4096


def _schoolbook(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _bias(n: int, bits: int) -> int:
    # sum_{i<n} 2^(bits-1) * 2^(bits*i)
    base = 1 << bits
    return (1 << (bits - 1)) * ((base**n - 1) // (base - 1))


def _pack(dense: list[int], bits: int) -> int:
    width = bits // 8
    half = 1 << (bits - 1)
    raw = b"".join((c + half).to_bytes(width, "little") for c in dense)
    return int.from_bytes(raw, "little") - _bias(len(dense), bits)


def _unpack(value: int, n: int, bits: int) -> list[int]:
    width = bits // 8
    half = 1 << (bits - 1)
    raw = (value + _bias(n, bits)).to_bytes(n * width, "little")
    return [int.from_bytes(raw[i : i + width], "little") - half for i in range(0, n * width, width)]


def _kronecker(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    amin, bmin = min(a), min(b)
    step = 0
    for e in a:
        step = gcd(step, e - amin)
    for e in b:
        step = gcd(step, e - bmin)
    step = step or 1
    na = (max(a) - amin) // step + 1
    nb = (max(b) - bmin) // step + 1
    da = [0] * na
    for e, c in a.items():
        da[(e - amin) // step] = c
    db = [0] * nb
    for e, c in b.items():
        db[(e - bmin) // step] = c
    bound = max(abs(c) for c in a.values()) * max(abs(c) for c in b.values()) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    bits += -bits % 8
    n = na + nb - 1
    prod = _unpack(_pack(da, bits) * _pack(db, bits), n, bits)
    base = amin + bmin
    return {base + i * step: c for i, c in enumerate(prod) if c}


def _mul_terms(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    if not a or not b:
        return {}
    if len(a) * len(b) < _KRONECKER_THRESHOLD:
        return _schoolbook(a, b)
    if not all(type(c) is int for c in a.values()) or not all(type(c) is int for c in b.values()):
        return _schoolbook(a, b)
    return _kronecker(a, b)


def _add_terms(a: Mapping, b: Mapping, sign: int = 1) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _normalize_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly1:
    """Laurent polynomial in a single variable (``t`` by default).

    >>> t = LaurentPoly1.gen()
    >>> (t + t**-1) * (t - t**-1)
    t^2 - t^-2
    """

    __slots__ = ("terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "t"):
        self.terms = {int(e): _normalize_coeff(c) for e, c in (terms or {}).items() if c}
        self.var = var
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, var: str) -> "LaurentPoly1":
        p = object.__new__(cls)
        p.terms = terms
        p.var = var
        p._hash = None
        return p

    @classmethod
    def gen(cls, var: str = "t") -> "LaurentPoly1":
        return cls._raw({1: 1}, var)

    @classmethod
    def const(cls, c, var: str = "t") -> "LaurentPoly1":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, c, e: int, var: str = "t") -> "LaurentPoly1":
        return cls({e: c}, var)

    def _coerce(self, other) -> "LaurentPoly1":
        if isinstance(other, LaurentPoly1):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly1({0: other}, self.var)
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly1._raw(_add_terms(self.terms, other.terms), self.var)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly1._raw(_add_terms(self.terms, other.terms, -1), self.var)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return LaurentPoly1._raw({e: -c for e, c in self.terms.items()}, self.var)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly1._raw({}, self.var)
            return LaurentPoly1._raw({e: _normalize_coeff(c * other) for e, c in self.terms.items()}, self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly1._raw(_mul_terms(self.terms, other.terms), self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise NotDivisible("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise NotDivisible("coefficient is not a unit")
            return LaurentPoly1._raw({e * k: c if k % 2 else 1}, self.var)
        result = LaurentPoly1.const(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly1":
        """Multiply by ``var**k``."""
        return LaurentPoly1._raw({e + k: c for e, c in self.terms.items()}, self.var)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly1.const(other, self.var)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    # structure

    def degrees(self) -> tuple[int, int, int]:
        if not self.terms:
            raise ZeroPolynomial("degrees of the zero polynomial are undefined")
        hi, lo = max(self.terms), min(self.terms)
        return hi, lo, hi - lo

    @property
    def dplus(self) -> int:
        return self.degrees()[0]

    @property
    def dminus(self) -> int:
        return self.degrees()[1]

    def leading(self):
        return self.terms[max(self.terms)]

    def content(self):
        """Nonnegative gcd of the coefficients (integer coefficients only)."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def map_coeffs(self, f) -> "LaurentPoly1":
        return LaurentPoly1({e: f(c) for e, c in self.terms.items()}, self.var)

    def exact_scalar_div(self, d) -> "LaurentPoly1":
        out = {}
        for e, c in self.terms.items():
            if isinstance(c, int) and isinstance(d, int):
                q, r = divmod(c, d)
                if r:
                    raise NotDivisible(f"coefficient {c} not divisible by {d}")
                out[e] = q
            else:
                out[e] = _normalize_coeff(Fraction(c) / d)
        return LaurentPoly1._raw(out, self.var)

    def subs_power(self, k: int) -> "LaurentPoly1":
        """Substitute ``var -> var**k``."""
        return LaurentPoly1._raw({e * k: c for e, c in self.terms.items()}, self.var)

    # evaluation

    def __call__(self, x):
        return sum(c * x**e for e, c in self.terms.items())

    def eval_complex(self, t0: complex) -> complex:
        if t0 == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at 0")
        t0 = complex(t0)
        return complex(sum(float(c) * t0**e for e, c in self.terms.items()))

    def eval_mod(self, t0: int, p: int) -> int:
        inv = pow(t0, -1, p)
        acc = 0
        for e, c in self.terms.items():
            acc += c * (pow(t0, e, p) if e >= 0 else pow(inv, -e, p))
        return acc % p

    # division

    def divmod_exact(self, d: "LaurentPoly1") -> "LaurentPoly1":
        """Exact quotient ``self / d`` or :class:`NotDivisible`."""
        if not d.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return LaurentPoly1._raw({}, self.var)
        if len(d.terms) == 1:
            (e, c), = d.terms.items()
            return self.exact_scalar_div(c).shift(-e)
        dhi, dlo = max(d.terms), min(d.terms)
        lc = d.terms[dhi]
        rem = dict(self.terms)
        quot = {}
        lo_bound = min(rem) - dlo
        while rem:
            hi = max(rem)
            qe = hi - dhi
            if qe < lo_bound:
                raise NotDivisible("nonzero remainder")
            c = rem[hi]
            if isinstance(c, int) and isinstance(lc, int):
                qc, r = divmod(c, lc)
                if r:
                    raise NotDivisible("leading coefficient does not divide")
            else:
                qc = _normalize_coeff(Fraction(c) / lc)
            quot[qe] = qc
            for de, dc in d.terms.items():
                k = qe + de
                v = rem.get(k, 0) - qc * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly1._raw(quot, self.var)

    def __floordiv__(self, other):
        other = self._coerce(other)
        return self.divmod_exact(other)

    def divides(self, p: "LaurentPoly1") -> bool:
        try:
            p.divmod_exact(self)
        except NotDivisible:
            return False
        return True

    # display

    def sorted_terms(self) -> list[tuple[int, int]]:
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if e == 0:
                body = str(mag)
            else:
                mono = self.var if e == 1 else f"{self.var}^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


class LaurentPoly2:
    """Laurent polynomial in ``t`` and ``M``; terms keyed by ``(t_exp, M_exp)``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms = {(int(i), int(j)): c for (i, j), c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly2":
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def t(cls) -> "LaurentPoly2":
        return cls._raw({(1, 0): 1})

    @classmethod
    def M(cls) -> "LaurentPoly2":
        return cls._raw({(0, 1): 1})

    @classmethod
    def const(cls, c) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c, i: int, j: int) -> "LaurentPoly2":
        return cls({(i, j): c})

    @classmethod
    def from_t(cls, p: LaurentPoly1, m_exp: int = 0) -> "LaurentPoly2":
        return cls._raw({(e, m_exp): c for e, c in p.terms.items()})

    @classmethod
    def from_m_coeffs(cls, coeffs: Mapping[int, LaurentPoly1]) -> "LaurentPoly2":
        out = {}
        for j, p in coeffs.items():
            for i, c in p.terms.items():
                out[(i, j)] = c
        return cls._raw(out)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2.const(other)
        if isinstance(other, LaurentPoly1):
            return LaurentPoly2.from_t(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly2._raw(_add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly2._raw(_add_terms(self.terms, other.terms, -1))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return LaurentPoly2._raw({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly2._raw({})
            return LaurentPoly2._raw({k: c * other for k, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly2._raw({})
        if len(a) * len(b) < _KRONECKER_THRESHOLD:
            return LaurentPoly2._raw(_schoolbook2(a, b))
        # fold M into t with a stride wider than any product t-span
        ia = [i for i, _ in a]
        ib = [i for i, _ in b]
        lo = min(ia) + min(ib)
        stride = max(ia) - min(ia) + max(ib) - min(ib) + 1
        fa = {i - min(ia) + j * stride: c for (i, j), c in a.items()}
        fb = {i - min(ib) + j * stride: c for (i, j), c in b.items()}
        out = {}
        for e, c in _mul_terms(fa, fb).items():
            j, i = divmod(e, stride)
            out[(i + lo, j)] = c
        return LaurentPoly2._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1 or next(iter(self.terms.values())) not in (1, -1):
                raise NotDivisible("only unit monomials have Laurent inverses")
            ((i, j), c), = self.terms.items()
            return LaurentPoly2._raw({(i * k, j * k): c if k % 2 else 1})
        result = LaurentPoly2.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if isinstance(other, LaurentPoly1):
            other = LaurentPoly2.from_t(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def shift(self, i: int = 0, j: int = 0) -> "LaurentPoly2":
        """Multiply by ``t**i * M**j``."""
        return LaurentPoly2._raw({(a + i, b + j): c for (a, b), c in self.terms.items()})

    def m_support(self) -> tuple[int, int]:
        js = [j for _, j in self.terms]
        return min(js), max(js)

    def m_coeffs(self) -> dict[int, LaurentPoly1]:
        """Coefficients of each power of ``M`` as Laurent polynomials in ``t``."""
        out: dict[int, dict[int, int]] = {}
        for (i, j), c in self.terms.items():
            out.setdefault(j, {})[i] = c
        return {j: LaurentPoly1._raw(d, "t") for j, d in out.items()}

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def exact_scalar_div(self, d: int) -> "LaurentPoly2":
        out = {}
        for k, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by {d}")
            out[k] = q
        return LaurentPoly2._raw(out)

    def subst_M(self, a: int, b: int) -> "LaurentPoly2":
        return lp_subst_M(self, a, b)

    def spec_M(self, n: int) -> LaurentPoly1:
        return lp_spec_M(self, n)

    def spec_t(self) -> LaurentPoly1:
        return lp_spec_t(self)

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for j, p in sorted(self.m_coeffs().items(), reverse=True):
            mono = "" if j == 0 else ("M" if j == 1 else f"M^{j}")
            body = repr(p)
            if not mono:
                pieces.append(f"({body})")
            elif body == "1":
                pieces.append(mono)
            else:
                pieces.append(f"({body})*{mono}")
        return " + ".join(pieces)


def _schoolbook2(a, b):
    out: dict[tuple[int, int], int] = {}
    get = out.get
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


# -- rational functions in t -------------------------------------------------


def _poly_gcd_q(a: LaurentPoly1, b: LaurentPoly1) -> LaurentPoly1:
    """Monic gcd over Q of two Laurent polynomials (as ordinary polynomials)."""
    if a.is_zero():
        return _make_monic(b)
    if b.is_zero():
        return _make_monic(a)
    a = a.shift(-min(a.terms)).map_coeffs(Fraction)
    b = b.shift(-min(b.terms)).map_coeffs(Fraction)
    while not b.is_zero():
        a, b = b, _poly_rem(a, b)
    return _make_monic(a)


def _poly_rem(a: LaurentPoly1, b: LaurentPoly1) -> LaurentPoly1:
    rem = {e: Fraction(c) for e, c in a.terms.items()}
    bhi = max(b.terms)
    lc = Fraction(b.terms[bhi])
    while rem and max(rem) >= bhi:
        hi = max(rem)
        q = rem[hi] / lc
        for e, c in b.terms.items():
            k = e + hi - bhi
            v = rem.get(k, 0) - q * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly1(rem, a.var)


def _make_monic(p: LaurentPoly1) -> LaurentPoly1:
    if p.is_zero():
        return p
    p = p.shift(-min(p.terms))
    return p.map_coeffs(lambda c: Fraction(c) / Fraction(p.leading()))


def _clear_fractions(p: LaurentPoly1) -> tuple[LaurentPoly1, int]:
    """Return ``(k * p, k)`` with ``k * p`` integral and primitive up to sign of ``k``."""
    den = 1
    for c in p.terms.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    return p * den, den


class RationalFunc1:
    """Quotient of two Laurent polynomials in one variable."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly1, den: LaurentPoly1 | None = None):
        if den is None:
            den = LaurentPoly1.const(1, num.var)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    def __eq__(self, other):
        if isinstance(other, LaurentPoly1):
            other = RationalFunc1(other)
        if not isinstance(other, RationalFunc1):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        r = self.reduced()
        return hash((r.num, r.den))

    def __add__(self, other):
        other = _as_rf(other, self.num.var)
        return RationalFunc1(self.num * other.den + other.num * self.den, self.den * other.den).reduced()

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_rf(other, self.num.var))

    def __neg__(self):
        return RationalFunc1(-self.num, self.den)

    def __mul__(self, other):
        other = _as_rf(other, self.num.var)
        return RationalFunc1(self.num * other.num, self.den * other.den).reduced()

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other, self.num.var)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunc1(self.num * other.den, self.den * other.num).reduced()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def reduced(self) -> "RationalFunc1":
        """Cancel the gcd over Q; result has integer, primitive numerator and denominator."""
        var = self.num.var
        if self.num.is_zero():
            return RationalFunc1(LaurentPoly1({}, var), LaurentPoly1.const(1, var))
        g = _poly_gcd_q(self.num, self.den)
        num = self.num.map_coeffs(Fraction).divmod_exact(g)
        den = self.den.map_coeffs(Fraction).divmod_exact(g)
        # move monomial factors of the denominator to the numerator
        shift = min(den.terms)
        num, den = num.shift(-shift), den.shift(-shift)
        num, a = _clear_fractions(num)
        den, b = _clear_fractions(den)
        num, den = num * b, den * a
        ca, cb = _content(num), _content(den)
        g = gcd(ca, cb)
        if g > 1:
            num, den = num.exact_scalar_div(g), den.exact_scalar_div(g)
        if den.leading() < 0:
            num, den = -num, -den
        return RationalFunc1(num, den)

    def as_poly(self) -> LaurentPoly1:
        """The polynomial value, or :class:`NotDivisible` if the denominator does not cancel."""
        r = self.reduced()
        return r.num.divmod_exact(r.den)

    def is_poly(self) -> bool:
        try:
            self.as_poly()
        except NotDivisible:
            return False
        return True

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def _content(p: LaurentPoly1) -> int:
    g = 0
    for c in p.terms.values():
        g = gcd(g, int(c))
    return g or 1


def _as_rf(x, var="t") -> RationalFunc1:
    if isinstance(x, RationalFunc1):
        return x
    if isinstance(x, LaurentPoly1):
        return RationalFunc1(x)
    if isinstance(x, (int, Fraction)):
        return RationalFunc1(LaurentPoly1.const(x, var))
    raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunc1")


# -- functional interface ----------------------------------------------------


def lp_arith(a, b, kind: str):
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "neg":
        return -a
    raise ValueError(f"unknown operation {kind!r}")


def lp_subst_M(p: LaurentPoly2, a: int, b: int) -> LaurentPoly2:
    """Substitute ``M -> t**a * M**b``."""
    if b == 0:
        raise ValueError("M -> t^a is not an automorphism (b must be nonzero)")
    return LaurentPoly2._raw({(i + a * j, b * j): c for (i, j), c in p.terms.items()})


def lp_spec_t(p: LaurentPoly2) -> LaurentPoly1:
    """Set ``t = -1``; the result is a Laurent polynomial in ``M``."""
    out: dict[int, int] = {}
    for (i, j), c in p.terms.items():
        out[j] = out.get(j, 0) + (-c if i & 1 else c)
    return LaurentPoly1(out, "M")


def lp_spec_M(p: LaurentPoly2, n: int) -> LaurentPoly1:
    """Set ``M = t**(2n)``."""
    out: dict[int, int] = {}
    for (i, j), c in p.terms.items():
        e = i + 2 * n * j
        out[e] = out.get(e, 0) + c
    return LaurentPoly1(out)


def lp_div_exact(p, d):
    """Exact quotient of ``p`` by ``d``.

    Two-variable dividends are divided one ``M``-coefficient at a time, so ``d``
    must then be free of ``M``.
    """
    if isinstance(p, LaurentPoly2):
        if isinstance(d, LaurentPoly2):
            coeffs = d.m_coeffs()
            if set(coeffs) != {0}:
                raise NotDivisible("only M-free divisors are supported for two-variable dividends")
            d = coeffs[0]
        return LaurentPoly2.from_m_coeffs({j: q.divmod_exact(d) for j, q in p.m_coeffs().items()})
    return p.divmod_exact(d)


def lp_degrees(p: LaurentPoly1) -> tuple[int, int, int]:
    return p.degrees()


def lp_eval_complex(p: LaurentPoly1, t0: complex) -> complex:
    return p.eval_complex(t0)


def poly_to_json(p) -> dict:
    def fmt(c):
        return str(c)

    if isinstance(p, LaurentPoly2):
        return {"vars": ["t", "M"], "terms": [[i, j, fmt(c)] for (i, j), c in p.sorted_terms()]}
    return {"vars": [p.var], "terms": [[e, fmt(c)] for e, c in p.sorted_terms()]}


def poly_from_json(obj) -> LaurentPoly1 | LaurentPoly2:
    if isinstance(obj, str):
        obj = json.loads(obj)
    names = obj["vars"]

    def parse(s: str):
        return Fraction(s) if "/" in s else int(s)

    if len(names) == 2:
        return LaurentPoly2({(i, j): parse(c) for i, j, c in obj["terms"]})
    if len(names) == 1:
        return LaurentPoly1({e: parse(c) for e, c in obj["terms"]}, names[0])
    raise ValueError(f"unsupported variable list {names!r}")


def sum_polys(items: Iterable, zero):
    acc = dict(zero.terms)
    for p in items:
        for e, c in p.terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
    return type(zero)._raw(acc) if isinstance(zero, LaurentPoly2) else LaurentPoly1._raw(acc, zero.var)
