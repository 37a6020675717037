"""Numerical and combinatorial probes: the Melvin-Morton limit, breadth fits, degree sweeps."""

from __future__ import annotations

import cmath
import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .jones import JonesSequence, _check_r, cable_jones, degree_oracle, jones_fig8
from .laurent import ZeroPolynomial

__all__ = [
    "NonQuadratic",
    "ZeroValue",
    "MMProbeResult",
    "alexander_fig8",
    "mm_value",
    "mm_probe",
    "breadth_fit",
    "DegreeRow",
    "DegreeTable",
    "degree_sweep",
    "SWEEP_HEADER",
    "fig8_degree_rows",
]

DEFAULT_MM_N = (10, 20, 40)
MM_TOLERANCE = 0.05  # artifact choice, not part of the limit statement


class NonQuadratic(ArithmeticError):
    pass


class ZeroValue(ValueError):
    pass


def alexander_fig8(z: complex) -> complex:
    """``-z + 3 - 1/z``, normalized so that the value at 1 is 1."""
    return -z + 3 - 1 / z


def mm_value(n: int, z: complex) -> complex:
    """``J_E(n) / [n]`` at ``t^4 = z^(1/n)`` (principal root), in double precision.

    With ``w = z^(1/n)`` the Habiro sum becomes
    ``sum_k prod_(l<=k) (z + 1/z - w^l - w^-l)``.
    """
    w = cmath.exp(cmath.log(z) / n)
    s = z + 1 / z
    total = prod = complex(1)
    wl = complex(1)
    for l in range(1, n):
        wl *= w
        prod *= s - wl - 1 / wl
        total += prod
    return total


@dataclass
class MMProbeResult:
    z: complex
    target: complex
    samples: list[tuple[int, complex, float]]
    overflow: list[int] = field(default_factory=list)

    @property
    def errors(self) -> list[float]:
        return [e for _, _, e in self.samples]

    def strictly_decreasing(self) -> bool:
        errs = self.errors
        return all(b < a for a, b in zip(errs, errs[1:]))

    def to_rows(self) -> list[list[str]]:
        return [[str(n), repr(v.real), repr(v.imag), repr(e)] for n, v, e in self.samples]


def mm_probe(z: complex, n_list=DEFAULT_MM_N) -> MMProbeResult:
    """Compare ``J_E(n)/[n]`` with ``1/Delta(z)`` along ``n_list``.

    The specialization is ``t^(4n) = z``: the colored Jones polynomial is a
    function of ``t^4``, and this is the normalization under which the limit
    exists near ``z = 1``.  Samples whose evaluation overflows are listed in
    ``overflow`` with an infinite error.
    """
    z = complex(z)
    if z in (0, 1, -1):
        raise ValueError(f"z = {z} is excluded")
    ns = list(n_list)
    if any(n <= 0 for n in ns) or ns != sorted(ns):
        raise ValueError("n_list must be ascending positive integers")
    delta = alexander_fig8(z)
    if delta == 0:
        raise ValueError(f"z = {z} is a root of the Alexander polynomial")
    target = 1 / delta
    samples, overflow = [], []
    for n in ns:
        try:
            v = mm_value(n, z)
        except OverflowError:
            v = complex(math.inf, math.inf)
        err = abs(v - target)
        if not math.isfinite(err):
            overflow.append(n)
            err = math.inf
        samples.append((n, v, err))
    return MMProbeResult(z, target, samples, overflow)


def breadth_fit(seq: JonesSequence, n_range) -> tuple:
    """Exact ``(a, b, c)`` with ``br[seq(n)] = a n^2 + b n + c`` on ``n_range``.

    Interpolates through the first three indices and checks the rest.
    """
    ns = list(n_range)
    if len(ns) < 4 or any(b - a != 1 for a, b in zip(ns, ns[1:])):
        raise ValueError("need at least four consecutive indices")
    br = {}
    for n in ns:
        try:
            br[n] = seq(n).degrees()[2]
        except ZeroPolynomial:
            raise ZeroValue(f"sequence vanishes at n = {n}") from None
    n0 = ns[0]
    y0, y1, y2 = br[n0], br[n0 + 1], br[n0 + 2]
    a = Fraction(y2 - 2 * y1 + y0, 2)
    b = Fraction(y1 - y0) - a * (2 * n0 + 1)
    c = y0 - a * n0 * n0 - b * n0
    for n in ns[3:]:
        if a * n * n + b * n + c != br[n]:
            raise NonQuadratic(f"breadth at n = {n} is off the quadratic through the first three points")
    return tuple(int(x) if x.denominator == 1 else x for x in (a, b, c))


SWEEP_HEADER = ["r", "n", "dplus_computed", "dplus_oracle", "dminus_computed", "dminus_oracle", "match"]


@dataclass(frozen=True)
class DegreeRow:
    r: int
    n: int
    dplus_computed: int
    dplus_oracle: int
    dminus_computed: int
    dminus_oracle: int

    @property
    def match(self) -> bool:
        return self.dplus_computed == self.dplus_oracle and self.dminus_computed == self.dminus_oracle


@dataclass
class DegreeTable:
    rows: list[DegreeRow]

    @property
    def all_match(self) -> bool:
        return all(row.match for row in self.rows)

    def mismatches(self) -> list[DegreeRow]:
        return [row for row in self.rows if not row.match]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(SWEEP_HEADER)
        for row in self.rows:
            w.writerow([row.r, row.n, row.dplus_computed, row.dplus_oracle, row.dminus_computed, row.dminus_oracle, str(row.match).lower()])
        return buf.getvalue()


def degree_sweep(r_list, n_max: int) -> DegreeTable:
    """Computed versus closed-form extreme degrees of the cable, ``n = 1..n_max``."""
    rs = list(r_list)
    for r in rs:
        _check_r(r)
    if n_max < 1:
        raise ValueError("n_max must be positive")
    rows = []
    for r in rs:
        for n in range(1, n_max + 1):
            v = cable_jones(r, n)
            rows.append(
                DegreeRow(r, n, v.dplus, degree_oracle("cable_plus", n, r), v.dminus, degree_oracle("cable_minus", n, r))
            )
    return DegreeTable(rows)


def fig8_degree_rows(n_max: int) -> list[tuple[int, int, int, int, int]]:
    """``(n, d+, d+ formula, d-, d- formula)`` for the knot itself."""
    out = []
    for n in range(1, n_max + 1):
        v = jones_fig8(n)
        out.append((n, v.dplus, degree_oracle("fig8_plus", n), v.dminus, degree_oracle("fig8_minus", n)))
    return out
