"""Exact linear algebra over ``Z[t, 1/t]`` and its fraction field.

``ff_solve`` is Bareiss fraction-free elimination: every division it performs
is exact, so entries stay Laurent polynomials until the final back
substitution.  ``vandermonde_solve`` is the same elimination specialised to
Vandermonde matrices whose nodes are powers of ``t`` (Newton divided
differences); it costs ``O(W^2)`` polynomial operations instead of ``O(W^3)``
and is what interpolation uses.
"""

from __future__ import annotations

import random
from math import gcd
from typing import Sequence

import numpy as np

from .laurent import LaurentPoly1, NotDivisible, RationalFunc1

__all__ = [
    "SingularMatrix",
    "ff_solve",
    "ff_nullspace",
    "vandermonde_solve",
    "div_binomial",
    "rank_mod_p",
    "nullspace_mod_p",
]


class SingularMatrix(ArithmeticError):
    """The matrix has no inverse over the fraction field."""


def _zero() -> LaurentPoly1:
    return LaurentPoly1()


def _as_poly(x) -> LaurentPoly1:
    if isinstance(x, LaurentPoly1):
        return x
    return LaurentPoly1.const(x)


def _bareiss(rows: list[list[LaurentPoly1]], ncols: int):
    """In-place fraction-free row echelon form; returns pivot columns.

    ``ncols`` limits the columns eligible as pivots (augmented columns are
    carried along but never pivoted on).
    """
    m = len(rows)
    prev = LaurentPoly1.const(1)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        # smallest nonzero entry keeps intermediate growth down
        candidates = [i for i in range(r, m) if not rows[i][c].is_zero()]
        if not candidates:
            continue
        p = min(candidates, key=lambda i: len(rows[i][c].terms))
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            a = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            for j in range(c + 1, len(row_i)):
                v = piv * row_i[j] - a * row_r[j]
                row_i[j] = v.divmod_exact(prev) if not prev.is_one() else v
            row_i[c] = _zero()
        # rows above r keep their (already eliminated) form
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def ff_solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[RationalFunc1]:
    """Solve the square system ``matrix . x = rhs`` exactly over ``Q(t)``."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("ff_solve expects a square matrix; use ff_nullspace for rectangular systems")
    if len(rhs) != n:
        raise ValueError("right-hand side has the wrong length")
    rows = [[_as_poly(x) for x in row] + [_as_poly(b)] for row, b in zip(matrix, rhs)]
    pivots = _bareiss(rows, n)
    if len(pivots) < n:
        raise SingularMatrix("matrix is singular over the fraction field")
    det = rows[n - 1][n - 1]
    # X_i = det * x_i is a polynomial (Cramer), so every division below is exact
    X: list[LaurentPoly1] = [_zero()] * n
    for i in range(n - 1, -1, -1):
        acc = rows[i][n] * det
        for j in range(i + 1, n):
            if not rows[i][j].is_zero():
                acc = acc - rows[i][j] * X[j]
        X[i] = acc.divmod_exact(rows[i][i])
    return [RationalFunc1(x, det).reduced() for x in X]


def ff_nullspace(matrix: Sequence[Sequence]) -> list[list[RationalFunc1]]:
    """Basis of the right kernel over ``Q(t)``.

    Each basis vector is scaled to have Laurent-polynomial entries with no
    common integer content and no common power of ``t``.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows = [[_as_poly(x) for x in row] for row in matrix]
    pivots = _bareiss(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x: dict[int, RationalFunc1] = {f: RationalFunc1(LaurentPoly1.const(1))}
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            acc = RationalFunc1(_zero())
            for j in range(c + 1, ncols):
                if j in x and not rows[i][j].is_zero():
                    acc = acc + x[j] * rows[i][j]
            x[c] = (-acc) / RationalFunc1(rows[i][c])
        vec = [x.get(j, RationalFunc1(_zero())) for j in range(ncols)]
        basis.append(_primitive_vector(vec))
    return basis


def _primitive_vector(vec: list[RationalFunc1]) -> list[RationalFunc1]:
    den = LaurentPoly1.const(1)
    for x in vec:
        r = x.reduced()
        if not r.den.is_one() and not r.den.divides(den):
            den = den * r.den
    polys = [(x * den).as_poly() if not x.is_zero() else _zero() for x in vec]
    g = 0
    lo = None
    for p in polys:
        if not p.is_zero():
            g = gcd(g, int(p.content()))
            lo = min(p.terms) if lo is None else min(lo, min(p.terms))
    nz = [p for p in polys if not p.is_zero()]
    sign = -1 if nz and nz[-1].leading() < 0 else 1
    polys = [p.exact_scalar_div(g * sign).shift(-lo) if not p.is_zero() else p for p in polys]
    return [RationalFunc1(p) for p in polys]


# -- Vandermonde systems with nodes t^e -------------------------------------------------


def div_binomial(p: LaurentPoly1, m: int) -> LaurentPoly1:
    """Exact quotient ``p / (t^m - 1)`` for ``m > 0``, or :class:`NotDivisible`."""
    if p.is_zero():
        return p
    terms = p.terms
    lo, hi = min(terms), max(terms)
    if hi - lo < m:
        raise NotDivisible("dividend too short for the binomial")
    step = m
    for e in terms:
        step = gcd(step, e - lo)
    # p_e = q_(e-m) - q_e, so q_e = q_(e-m) - p_e sweeping upward
    q: dict[int, int] = {}
    for e in range(lo, hi - m + 1, step):
        v = q.get(e - m, 0) - terms.get(e, 0)
        if v:
            q[e] = v
    for e in range(hi - m + step, hi + 1, step):
        if q.get(e - m, 0) != terms.get(e, 0):
            raise NotDivisible(f"t^{m} - 1 does not divide")
    return LaurentPoly1._raw(q, p.var)


class _Dense:
    """Dense coefficient vector on the grid ``lo, lo + step, ...`` (object dtype)."""

    __slots__ = ("lo", "arr")

    def __init__(self, lo: int, arr: np.ndarray):
        self.lo = lo
        self.arr = arr

    @classmethod
    def from_poly(cls, p: LaurentPoly1, step: int) -> "_Dense":
        if p.is_zero():
            return cls(0, np.zeros(0, dtype=object))
        lo, hi = min(p.terms), max(p.terms)
        arr = np.zeros((hi - lo) // step + 1, dtype=object)
        for e, c in p.terms.items():
            arr[(e - lo) // step] = c
        return cls(lo, arr)

    def to_poly(self, step: int) -> LaurentPoly1:
        return LaurentPoly1._raw({self.lo + i * step: int(c) for i, c in enumerate(self.arr) if c}, "t")

    def trimmed(self, step: int) -> "_Dense":
        nz = np.flatnonzero(self.arr != 0)
        if nz.size == 0:
            return _Dense(0, np.zeros(0, dtype=object))
        return _Dense(self.lo + int(nz[0]) * step, self.arr[nz[0] : nz[-1] + 1])


def _dense_add(a: _Dense, b: _Dense, step: int, sign: int = 1) -> _Dense:
    if a.arr.size == 0:
        return _Dense(b.lo, b.arr * sign) if sign != 1 else b
    if b.arr.size == 0:
        return a
    lo = min(a.lo, b.lo)
    hi = max(a.lo + (a.arr.size - 1) * step, b.lo + (b.arr.size - 1) * step)
    out = np.zeros((hi - lo) // step + 1, dtype=object)
    ia, ib = (a.lo - lo) // step, (b.lo - lo) // step
    out[ia : ia + a.arr.size] += a.arr
    if sign == 1:
        out[ib : ib + b.arr.size] += b.arr
    else:
        out[ib : ib + b.arr.size] -= b.arr
    return _Dense(lo, out).trimmed(step)


def _dense_div_binomial(a: _Dense, k: int) -> _Dense:
    # quotient by (X^k - 1), X = t^step:  q_i = -(p_i + p_(i-k) + ...)
    n = a.arr.size
    if n == 0:
        return a
    if n <= k:
        raise NotDivisible("dividend too short for the binomial")
    padded = np.zeros(-(-n // k) * k, dtype=object)
    padded[:n] = a.arr
    sums = padded.reshape(-1, k).cumsum(axis=0).reshape(-1)[:n]
    if np.any(sums[n - k :] != 0):
        raise NotDivisible("binomial does not divide")
    return _Dense(a.lo, -sums[: n - k])


def vandermonde_solve(node_exps: Sequence[int], values: Sequence[LaurentPoly1]) -> list[LaurentPoly1]:
    """Coefficients ``c_0..c_{W-1}`` with ``sum_i c_i x_k^i = values[k]`` for ``x_k = t^node_exps[k]``.

    Raises :class:`NotDivisible` when the interpolant is not a polynomial in
    ``M`` with Laurent-polynomial coefficients (some elimination step is not
    exact).
    """
    W = len(node_exps)
    if len(set(node_exps)) != W:
        raise SingularMatrix("Vandermonde nodes must be distinct")
    values = [_as_poly(v) for v in values]
    ref = next((min(v.terms) for v in values if not v.is_zero()), 0)
    step = 0
    for e in node_exps:
        step = gcd(step, e - node_exps[0])
    for v in values:
        for e in v.terms:
            step = gcd(step, e - ref)
    step = step or 1
    # every exponent sits on ref + step*Z and node gaps are multiples of step
    dd = [_Dense.from_poly(v, step) for v in values]
    newton = [dd[0]]
    for k in range(1, W):
        nxt = []
        for i in range(W - k):
            a, b = node_exps[i], node_exps[i + k]
            diff = _dense_add(dd[i + 1], dd[i], step, -1)
            # x_b - x_a = t^a (t^(b-a) - 1)
            lo, gap = min(a, b), abs(b - a)
            q = _dense_div_binomial(diff, gap // step)
            q = _Dense(q.lo - lo, q.arr if b > a else -q.arr)
            nxt.append(q)
        dd = nxt
        newton.append(dd[0])
    # Newton form -> monomial basis (Horner)
    empty = _Dense(0, np.zeros(0, dtype=object))
    coeffs = [newton[-1]]
    for k in range(W - 2, -1, -1):
        xk = node_exps[k]
        new = [empty] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            new[j + 1] = _dense_add(new[j + 1], c, step)
            new[j] = _dense_add(new[j], _Dense(c.lo + xk, c.arr), step, -1)
        new[0] = _dense_add(new[0], newton[k], step)
        coeffs = new
    return [c.to_poly(step) for c in coeffs]


# -- modular rank screen ---------------------------------------------------------------


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    return len(_echelon_mod_p([list(r) for r in rows], p)[1])


def _echelon_mod_p(rows: list[list[int]], p: int):
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def nullspace_mod_p(rows: list[list[int]], p: int) -> list[list[int]]:
    """Right kernel basis over ``GF(p)``."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = _echelon_mod_p([list(r) for r in rows], p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = -red[i][f] % p
        basis.append(v)
    return basis


def random_point(p: int, seed: int = 0) -> int:
    return random.Random(seed).randrange(2, p - 1)
