"""Colored Jones functions: quantum integers, the figure-eight knot, its
``(r, 2)``-cables and the odd subsequence ``n -> J(2n + 1)``.

Every sequence is a :class:`JonesSequence`, a memoizing map from integers to
:class:`~ajcable.laurent.LaurentPoly1`.  Values at negative colors follow the
convention ``J(-n) = -J(n)``, ``J(0) = 0``.
"""

from __future__ import annotations

import threading
from typing import Callable

from .laurent import LaurentPoly1, sum_polys

__all__ = [
    "EvenR",
    "JonesSequence",
    "qint",
    "jones_fig8",
    "cable_jones",
    "cable_jones_direct",
    "cable_step",
    "odd_jones",
    "degree_oracle",
    "quantum_integer_sequence",
    "fig8_sequence",
    "cable_sequence",
    "odd_fig8_sequence",
    "constant_sequence",
    "demo_exp_sequence",
    "sequence_from_descriptor",
]


class EvenR(ValueError):
    """The ``(r, 2)``-cable is a two-component link for even ``r``."""


def _check_r(r: int) -> None:
    if r % 2 == 0:
        raise EvenR(f"r must be odd, got {r}")


class JonesSequence:
    """A deterministic, memoized discrete function ``Z -> Z[t, 1/t]``.

    ``evaluator`` computes the value at one index; ``mod_evaluator``, when
    given, evaluates at ``t = t0`` modulo a prime without building the
    polynomial (used by large rank screens).
    """

    def __init__(
        self,
        evaluator: Callable[[int], LaurentPoly1],
        descriptor: str = "custom",
        mod_evaluator: Callable[[int, int, int], int] | None = None,
    ):
        self._evaluator = evaluator
        self._mod_evaluator = mod_evaluator
        self.descriptor = descriptor
        self._cache: dict[int, LaurentPoly1] = {}
        self._lock = threading.Lock()

    def __call__(self, n: int) -> LaurentPoly1:
        try:
            return self._cache[n]
        except KeyError:
            pass
        value = self._evaluator(n)
        with self._lock:
            return self._cache.setdefault(n, value)

    def eval_mod(self, n: int, t0: int, p: int) -> int:
        if self._mod_evaluator is not None:
            return self._mod_evaluator(n, t0, p)
        return self(n).eval_mod(t0, p)

    def __repr__(self):
        return f"JonesSequence({self.descriptor})"


# -- quantum integers ---------------------------------------------------------


def qint(n: int) -> LaurentPoly1:
    """``[n] = (t^(2n) - t^(-2n)) / (t^2 - t^(-2))``."""
    if n == 0:
        return LaurentPoly1()
    if n < 0:
        return -qint(-n)
    return LaurentPoly1({2 * (n - 1) - 4 * j: 1 for j in range(n)})


def _qint_mod(n: int, t0: int, p: int) -> int:
    t2 = t0 * t0 % p
    num = (pow(t2, n, p) - pow(t2, -n, p)) % p
    den = (t2 - pow(t2, -1, p)) % p
    if den == 0:
        raise ZeroDivisionError("t0 is a root of t^2 - t^-2; pick another evaluation point")
    return num * pow(den, -1, p) % p


# -- figure-eight knot ----------------------------------------------------------


def _habiro(n: int) -> LaurentPoly1:
    # Work in u = t^4, encoded as X = 2^bits; each factor of the Habiro product
    # is multiplied by u^n so that all shifts are nonnegative.
    bits = 2 * n + n.bit_length() + 4
    bits += -bits % 8
    total = 0
    prod = 1
    for k in range(n):
        if k:
            prod = (prod << (bits * 2 * n)) + prod - (prod << (bits * (n + k))) - (prod << (bits * (n - k)))
        total += prod << (bits * (n - 1 - k) * n)
    total *= ((1 << (bits * n)) - 1) // ((1 << bits) - 1)  # the geometric sum for [n]
    length = 2 * (n - 1) * n + n
    half = 1 << (bits - 1)
    base = 1 << bits
    bias = half * ((base**length - 1) // (base - 1))
    width = bits // 8
    raw = (total + bias).to_bytes(length * width, "little")
    terms = {}
    shift = -4 * (n - 1) * n - 2 * (n - 1)
    for i in range(length):
        c = int.from_bytes(raw[i * width : (i + 1) * width], "little") - half
        if c:
            terms[4 * i + shift] = c
    return LaurentPoly1._raw(terms, "t")


def _fig8_eval(n: int) -> LaurentPoly1:
    if n == 0:
        return LaurentPoly1()
    if n < 0:
        return -_fig8_eval(-n)
    return _habiro(n)


def _fig8_mod(n: int, t0: int, p: int) -> int:
    if n == 0:
        return 0
    if n < 0:
        return -_fig8_mod(-n, t0, p) % p
    u = pow(t0, 4, p)
    un = (pow(u, n, p) + pow(u, -n, p)) % p
    total, prod = 1, 1
    for l in range(1, n):
        prod = prod * (un - pow(u, l, p) - pow(u, -l, p)) % p
        total += prod
    return total * _qint_mod(n, t0, p) % p


_FIG8 = JonesSequence(_fig8_eval, "fig8", _fig8_mod)


def jones_fig8(n: int) -> LaurentPoly1:
    """Colored Jones polynomial of the figure-eight knot (Habiro's formula)."""
    return _FIG8(n)


def odd_jones(n: int) -> LaurentPoly1:
    """``J_E(2n + 1)``."""
    return _FIG8(2 * n + 1)


# -- (r, 2)-cables ----------------------------------------------------------------


def cable_jones_direct(r: int, n: int, base: JonesSequence | None = None) -> LaurentPoly1:
    """Cabling sum, evaluated term by term (no recurrence)."""
    _check_r(r)
    base = base or _FIG8
    if n == 0:
        return LaurentPoly1()
    if n < 0:
        return -cable_jones_direct(r, -n, base)
    terms = []
    for k in range(1, n + 1):
        v = base(2 * k - 1).shift(2 * r * k * (k - 1))
        terms.append(-v if (r * (n - k)) % 2 else v)
    return sum_polys(terms, LaurentPoly1()).shift(-2 * r * (n * n - 1))


def cable_step(r: int, n: int, base: JonesSequence | None = None, value_at_n: LaurentPoly1 | None = None) -> LaurentPoly1:
    """Value of the cable at ``n + 1`` computed from its value at ``n``.

    ``J_c(n+1) = -t^(-2r(2n+1)) J_c(n) + t^(-2rn) J_K(2n+1)``.
    """
    _check_r(r)
    base = base or _FIG8
    if value_at_n is None:
        value_at_n = cable_sequence(r, base)(n)
    return base(2 * n + 1).shift(-2 * r * n) - value_at_n.shift(-2 * r * (2 * n + 1))


def _cable_mod(r: int, base: JonesSequence):
    def f(n: int, t0: int, p: int) -> int:
        if n == 0:
            return 0
        if n < 0:
            return -f(-n, t0, p) % p
        inv = pow(t0, -1, p)

        def tp(e):
            return pow(t0, e, p) if e >= 0 else pow(inv, -e, p)

        acc = 0
        for k in range(1, n + 1):
            v = tp(2 * r * k * (k - 1)) * base.eval_mod(2 * k - 1, t0, p)
            acc += -v if (r * (n - k)) % 2 else v
        return acc * tp(-2 * r * (n * n - 1)) % p

    return f


_CABLES: dict[tuple[int, int], JonesSequence] = {}
_CABLES_LOCK = threading.Lock()


def cable_sequence(r: int, base: JonesSequence | None = None) -> JonesSequence:
    """The ``(r, 2)``-cable of ``base`` as a memoized sequence.

    Positive indices are filled in with the step recurrence, starting from
    ``J_c(0) = 0``; negative ones by oddness.
    """
    _check_r(r)
    base = base or _FIG8
    key = (r, id(base))
    with _CABLES_LOCK:
        if key in _CABLES:
            return _CABLES[key]

    def evaluate(n: int) -> LaurentPoly1:
        if n == 0:
            return LaurentPoly1()
        if n < 0:
            return -seq(-n)
        # walk up from the largest cached index below n
        m = max((k for k in seq._cache if 0 <= k < n), default=0)
        value = seq(m) if m else LaurentPoly1()
        for k in range(m, n - 1):
            value = cable_step(r, k, base, value)
            with seq._lock:
                value = seq._cache.setdefault(k + 1, value)
        return cable_step(r, n - 1, base, value)

    seq = JonesSequence(evaluate, f"cable:{r}" + ("" if base is _FIG8 else f":{base.descriptor}"), _cable_mod(r, base))
    with _CABLES_LOCK:
        return _CABLES.setdefault(key, seq)


def cable_jones(r: int, n: int, base: JonesSequence | None = None) -> LaurentPoly1:
    """Colored Jones polynomial of the ``(r, 2)``-cable (``r`` odd)."""
    return cable_sequence(r, base)(n)


# -- sequence objects -----------------------------------------------------------------


def fig8_sequence() -> JonesSequence:
    return _FIG8


def quantum_integer_sequence() -> JonesSequence:
    return JonesSequence(qint, "quantum_integer", _qint_mod_signed)


def _qint_mod_signed(n, t0, p):
    if n == 0:
        return 0
    return _qint_mod(n, t0, p)


_ODD = JonesSequence(odd_jones, "odd_fig8", lambda n, t0, p: _fig8_mod(2 * n + 1, t0, p))


def odd_fig8_sequence() -> JonesSequence:
    return _ODD


def constant_sequence(c: int = 1) -> JonesSequence:
    return JonesSequence(lambda n: LaurentPoly1.const(c), "const", lambda n, t0, p: c % p)


def demo_exp_sequence() -> JonesSequence:
    """``n -> t^(n^2 + n)``, annihilated by ``L - t^2 M``."""
    return JonesSequence(
        lambda n: LaurentPoly1.monomial(1, n * n + n),
        "demo-exp",
        lambda n, t0, p: pow(t0, n * n + n, p),
    )


def sequence_from_descriptor(desc: str) -> JonesSequence:
    """Parse ``fig8``, ``odd-fig8``, ``qint``, ``const``, ``demo-exp`` or ``cable:<r>``."""
    desc = desc.strip()
    if desc in ("fig8", "figure-eight"):
        return fig8_sequence()
    if desc in ("odd-fig8", "odd_fig8", "odd"):
        return odd_fig8_sequence()
    if desc in ("qint", "quantum-integer", "quantum_integer"):
        return quantum_integer_sequence()
    if desc in ("const", "constant"):
        return constant_sequence()
    if desc == "demo-exp":
        return demo_exp_sequence()
    if desc.startswith("cable:"):
        return cable_sequence(int(desc.split(":", 1)[1]))
    raise ValueError(f"unknown sequence descriptor {desc!r}")


# -- degree formulas ----------------------------------------------------------------


def degree_oracle(kind: str, n: int, r: int | None = None) -> int:
    """Closed-form extreme ``t``-degrees for the figure-eight knot and its cables.

    ``kind`` is one of ``fig8_plus``, ``fig8_minus``, ``cable_plus``,
    ``cable_minus``.  Defined for ``n > 0``.
    """
    if n <= 0:
        raise ValueError("degree formulas hold for n > 0 only")
    if kind == "fig8_plus":
        return 4 * n * n - 2 * n - 2
    if kind == "fig8_minus":
        return -4 * n * n + 2 * n + 2
    if kind not in ("cable_plus", "cable_minus"):
        raise ValueError(f"unknown degree kind {kind!r}")
    if r is None:
        raise ValueError("cable degree formulas need r")
    _check_r(r)
    if kind == "cable_plus":
        if r >= -7:
            return 16 * n * n - (2 * r + 20) * n + 2 * r + 4
        return -2 * r * n * n + 2 * r
    if r >= 9:
        return -2 * r * n * n + 2 * r
    return -16 * n * n - (2 * r - 20) * n + 2 * r - 4
