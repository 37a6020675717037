"""The operator tower for the figure-eight knot and its ``(r, 2)``-cables.

Pipeline::

    P_1, P_-1, P_0  ->  Q (parity transform of a product)  ->  Q' = L Q M^r (L + t^-2r M^-2r)
    R = Q' J_c (an element of Q(t)[M, 1/M], found by interpolation)
    S = (R' L - R'(t^2 M)) Q'

``S`` is homogeneous: ``R`` is constant in ``L``, and ``R' L - R'(t^2 M)``
kills ``R'`` (hence ``R``).  Everything is checked by exact evaluation on the
actual sequences.

Inhomogeneous right-hand sides are recovered by interpolation in ``M`` with
nodes ``t^(2n)``.  Their coefficients may carry a denominator depending on
``t`` only, so a fit stores a numerator in ``Z[t^±, M^±]`` together with a
denominator in ``Z[t^±]`` drawn from a short list of candidates.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .jones import JonesSequence, _check_r, cable_sequence, odd_fig8_sequence
from .laurent import LaurentPoly1, LaurentPoly2, NotDivisible, RationalFunc1, lp_div_exact
from .linalg import ff_nullspace, rank_mod_p, random_point, vandermonde_solve
from .qtorus import QTorusOperator, op_apply, op_normalize, op_to_json

__all__ = [
    "FactorizationMismatch",
    "WindowTooSmall",
    "RIsZero",
    "AnnihilationFailure",
    "InsufficientSamples",
    "InhomogeneousFit",
    "AnnihilatorCertificate",
    "AnnihilationReport",
    "GuessReport",
    "p_polynomials",
    "cm_operator",
    "q_polynomials",
    "factorization_sides",
    "parity_transform",
    "build_Q",
    "fit_inhomogeneous",
    "fit_adaptive",
    "build_Qprime",
    "extract_one_plus_t",
    "build_S",
    "verify_annihilates",
    "search_annihilators",
    "guess_annihilator",
    "build_odd_annihilator",
]


class FactorizationMismatch(ArithmeticError):
    """The operator identity behind ``Q`` failed: an arithmetic bug."""


class WindowTooSmall(ValueError):
    """The interpolation window cannot hold the right-hand side."""


class RIsZero(ArithmeticError):
    """``Q' J_c`` vanished identically, contradicting the construction."""


class AnnihilationFailure(ArithmeticError):
    def __init__(self, n: int, message: str = ""):
        super().__init__(message or f"operator does not annihilate the sequence at n = {n}")
        self.n = n


class InsufficientSamples(ValueError):
    """Fewer equations than unknowns and extension was disallowed."""


_t = LaurentPoly2.t()
_M = LaurentPoly2.M()
_ONE_PLUS_T = LaurentPoly1({0: 1, 1: 1})
_D = LaurentPoly1({2: 1, -2: -1})  # t^2 - t^-2

# denominators tried by the fit, in order
DENOMINATOR_CANDIDATES = (LaurentPoly1.const(1), _D, _D * _D)


# -- P, Q and the factorization ---------------------------------------------------------


def p_polynomials() -> tuple[LaurentPoly2, LaurentPoly2, LaurentPoly2]:
    """``(P_1, P_-1, P_0)``."""
    p1 = _t**-2 * _M**2 - _t**2 * _M**-2
    pm1 = _t**2 * _M**2 - _t**-2 * _M**-2
    p0 = (_M**2 - _M**-2) * (-(_M**4) - _M**-4 + _M**2 + _M**-2 + _t**4 + _t**-4)
    return p1, pm1, p0


def cm_operator() -> QTorusOperator:
    """``P_1 L + P_-1 L^-1 + P_0``; applied to ``J_E`` it lands in ``Q(t)[M^±]``."""
    p1, pm1, p0 = p_polynomials()
    return QTorusOperator({1: p1, -1: pm1, 0: p0})


def q_polynomials() -> tuple[LaurentPoly2, LaurentPoly2, LaurentPoly2]:
    """``(Q_1, Q_-1, Q_0)``."""
    p1, pm1, p0 = p_polynomials()

    def up(p):  # p(t, t^2 M)
        return p.subst_M(2, 1)

    def down(p):  # p(t, t^-2 M)
        return p.subst_M(-2, 1)

    q1 = p1 * up(p1) * down(p0)
    qm1 = pm1 * down(pm1) * up(p0)
    q0 = p1 * up(pm1) * down(p0) + pm1 * down(p1) * up(p0) - p0 * up(p0) * down(p0)
    return q1, qm1, q0


def factorization_sides() -> tuple[QTorusOperator, QTorusOperator]:
    """Both sides of ``Q_1 L^2 + Q_-1 L^-2 + Q_0 = X * (P_1 L + P_-1 L^-1 + P_0)``."""
    p1, pm1, p0 = p_polynomials()
    q1, qm1, q0 = q_polynomials()
    lhs = QTorusOperator({2: q1, -2: qm1, 0: q0})
    up, down = p0.subst_M(2, 1), p0.subst_M(-2, 1)
    x = QTorusOperator({1: p1 * down, -1: pm1 * up, 0: -(up * down)})
    return lhs, x * cm_operator()


def parity_transform(op: QTorusOperator) -> QTorusOperator:
    """``P(t, M) L^(2l) -> P(t, t^2 M^2) L^l``.

    Passes from an operator acting on ``n -> f(n)`` through even shifts to
    one acting on ``n -> f(2n + 1)``.
    """
    if any(k % 2 for k in op.coeffs):
        raise ValueError("parity transform needs even L-exponents only")
    return QTorusOperator({k // 2: a.subst_M(2, 2) for k, a in op.coeffs.items()})


def build_Q() -> QTorusOperator:
    lhs, rhs = factorization_sides()
    if not (lhs - rhs).is_zero():
        raise FactorizationMismatch("Q_1 L^2 + Q_-1 L^-2 + Q_0 differs from the factored product")
    return parity_transform(lhs)


# -- inhomogeneous fits -------------------------------------------------------------------


@dataclass
class InhomogeneousFit:
    """``op seq = rho / denominator`` as an element of ``Q(t)[M^±]``.

    ``rho`` is the numerator; ``denominator`` depends on ``t`` only and is
    ``1`` whenever the right-hand side has Laurent-polynomial coefficients.
    """

    rho: LaurentPoly2
    denominator: LaurentPoly1
    window: tuple[int, int]
    samples_used: list[int]
    verified_on: list[int]

    def value_at(self, n: int) -> LaurentPoly1:
        """``rho(t, t^(2n)) / denominator`` (exact)."""
        v = self.rho.spec_M(n)
        return v if self.denominator.is_one() else v.divmod_exact(self.denominator)

    def at_M_equal_1(self) -> RationalFunc1:
        return RationalFunc1(self.rho.spec_M(0), self.denominator).reduced()

    def is_zero(self) -> bool:
        return self.rho.is_zero()


def _centered_start(width: int, holdout: int) -> int:
    return -((width + holdout) // 2)


def fit_inhomogeneous(
    op: QTorusOperator,
    seq: JonesSequence,
    window: tuple[int, int],
    n_start: int | None = None,
    holdout: int = 5,
) -> InhomogeneousFit:
    """Interpolate ``n -> (op seq)(n)`` as ``sum_j c_j(t) t^(2nj)``, ``j`` in ``window``.

    Samples are ``n_start .. n_start + W - 1`` (``W`` the window width); the
    next ``holdout`` indices are used only for verification.  ``n_start=None``
    centers the samples on 0, which keeps the polynomials small.
    """
    jmin, jmax = window
    width = jmax - jmin + 1
    if width < 1:
        raise ValueError(f"empty window {window}")
    if holdout < 1:
        raise ValueError("holdout must be positive")
    if n_start is None:
        n_start = _centered_start(width, holdout)
    samples = list(range(n_start, n_start + width))
    held = list(range(n_start + width, n_start + width + holdout))
    values = {n: op_apply(op, seq, n) for n in samples + held}

    if all(values[n].is_zero() for n in samples + held):
        return InhomogeneousFit(LaurentPoly2(), LaurentPoly1.const(1), window, samples, held)

    for den in DENOMINATOR_CANDIDATES:
        try:
            # shift by t^(-2n jmin) so the unknown polynomial in M starts at M^0
            cs = vandermonde_solve(
                [2 * n for n in samples],
                [(values[n] * den).shift(-2 * n * jmin) for n in samples],
            )
        except NotDivisible:
            continue
        rho = LaurentPoly2.from_m_coeffs({jmin + i: c for i, c in enumerate(cs) if not c.is_zero()})
        if all(rho.spec_M(n) == values[n] * den for n in held):
            return InhomogeneousFit(rho, den, window, samples, held)
    raise WindowTooSmall(f"no fit of the right-hand side in M-window {window}")


def fit_adaptive(
    op: QTorusOperator,
    seq: JonesSequence,
    n_start: int | None = None,
    holdout: int = 5,
    cap: int = 64,
) -> InhomogeneousFit:
    """Fit with window ``(-W, W)``: ``W`` starts at the operator's M-reach plus 4 and doubles up to ``cap``."""
    lo, hi = op.m_support()
    w = max(-lo, hi) + 4
    while True:
        w = min(w, cap)
        try:
            return fit_inhomogeneous(op, seq, (-w, w), n_start, holdout)
        except WindowTooSmall:
            if w >= cap:
                raise
            w *= 2


# -- Q', R, S -----------------------------------------------------------------------------


def build_Qprime(r: int, Q: QTorusOperator | None = None) -> QTorusOperator:
    """``L Q M^r (L + t^-2r M^-2r)``."""
    _check_r(r)
    Q = Q or build_Q()
    tail = QTorusOperator({1: 1, 0: LaurentPoly2.monomial(1, -2 * r, -2 * r)})
    return QTorusOperator.L() * Q * QTorusOperator.M(r) * tail


def extract_one_plus_t(p: LaurentPoly2) -> tuple[int, LaurentPoly2]:
    """Largest ``m`` with ``(1 + t)^m | p`` and the cofactor."""
    if p.is_zero():
        raise ValueError("the zero polynomial is divisible by every power of 1 + t")
    m = 0
    while True:
        try:
            p = lp_div_exact(p, _ONE_PLUS_T)
        except NotDivisible:
            return m, p
        m += 1


def _one_plus_t_valuation(p: LaurentPoly1) -> int:
    v = 0
    while True:
        try:
            p = p.divmod_exact(_ONE_PLUS_T)
        except NotDivisible:
            return v
        v += 1


def _homogenize(fit: InhomogeneousFit) -> tuple[int, LaurentPoly2]:
    """Write ``rho / den = (1 + t)^m * u(t) * R'`` with ``R'`` integral and ``R'(-1, M) != 0``.

    ``u`` is a unit at ``t = -1`` and is dropped: scalars in ``t`` commute
    with ``L`` and ``M``, so they do not change the annihilator built from
    ``R'``.  ``m`` may be negative when ``den`` has a ``(1 + t)`` factor.
    """
    k, rprime = extract_one_plus_t(fit.rho)
    return k - _one_plus_t_valuation(fit.denominator), rprime


def _killer(rprime: LaurentPoly2) -> QTorusOperator:
    # (R' L - R'(t^2 M)) annihilates anything of the form c(t) R'(t, M)
    return QTorusOperator({1: rprime, 0: -rprime.subst_M(2, 1)})


@dataclass
class AnnihilationReport:
    checked: list[int]
    failures: list[int]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_annihilates(op: QTorusOperator, seq: JonesSequence, n_range, threads: int = 1) -> AnnihilationReport:
    """Exact zero test of ``op seq`` at each ``n``; the report is ordered by ``n``."""
    ns = sorted(set(n_range))
    if threads > 1 and len(ns) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            zeros = list(pool.map(lambda n: op_apply(op, seq, n).is_zero(), ns))
    else:
        zeros = [op_apply(op, seq, n).is_zero() for n in ns]
    return AnnihilationReport(ns, [n for n, z in zip(ns, zeros) if not z])


@dataclass
class AnnihilatorCertificate:
    operator: QTorusOperator
    r: int
    m: int
    r_prime: LaurentPoly2
    checked_range: list[int]
    fit: InhomogeneousFit | None = None
    result: str = "pass"

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "S": op_to_json(self.operator),
            "checked": list(self.checked_range),
            "result": self.result,
        }


def build_S(r: int, n_check: int = 12, threads: int = 1, Q: QTorusOperator | None = None) -> AnnihilatorCertificate:
    """The L-degree-4 annihilator of the ``(r, 2)``-cable, verified on ``n = 1..n_check``."""
    _check_r(r)
    qp = build_Qprime(r, Q)
    seq = cable_sequence(r)
    fit = fit_adaptive(qp, seq)
    if fit.is_zero():
        raise RIsZero(f"Q' J_c vanished for r = {r}")
    m, rprime = _homogenize(fit)
    S = _killer(rprime) * qp
    report = verify_annihilates(S, seq, range(1, n_check + 1), threads)
    if not report.ok:
        raise AnnihilationFailure(report.failures[0])
    return AnnihilatorCertificate(S, r, m, rprime, report.checked, fit)


def build_odd_annihilator(n_check: int = 12, Q: QTorusOperator | None = None) -> QTorusOperator:
    """``(Q''' L - Q'''(t^2 M)) Q``, a homogeneous annihilator of ``n -> J_E(2n + 1)``."""
    Q = Q or build_Q()
    seq = odd_fig8_sequence()
    fit = fit_adaptive(Q, seq)
    _, q3 = _homogenize(fit)
    op = _killer(q3) * Q
    report = verify_annihilates(op, seq, range(1, n_check + 1))
    if not report.ok:
        raise AnnihilationFailure(report.failures[0])
    return op


# -- bounded annihilator search -----------------------------------------------------------

_P61 = (1 << 61) - 1


@dataclass
class GuessReport:
    """Outcome of a bounded search; ``bounds`` states exactly what was searched."""

    candidates: list[QTorusOperator]
    bounds: str
    rows_used: list[int]
    unknowns: int
    certificate: str  # "modular-rank" (empty result proved) or "exact-nullspace"
    verified_on: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "bounds": self.bounds,
            "unknowns": self.unknowns,
            "rows": self.rows_used,
            "certificate": self.certificate,
            "verified_on": self.verified_on,
            "candidates": [op_to_json(c) for c in self.candidates] or "none",
        }


def _row_indices(sample_range: list[int], needed: int, extend: bool) -> list[int]:
    ns = sorted(set(sample_range))
    if len(ns) >= needed:
        return ns
    if not extend:
        raise InsufficientSamples(f"{len(ns)} samples for {needed} required equations")
    nxt = (ns[-1] if ns else 0) + 1
    while len(ns) < needed:
        ns.append(nxt)
        nxt += 1
    return ns


def _modular_rank(seq, ldeg, js, ns, seed) -> int:
    for attempt in range(8):
        t0 = random_point(_P61, seed + attempt)
        try:
            vals = {i: seq.eval_mod(i, t0, _P61) for i in range(ns[0], ns[-1] + ldeg + 1)}
            rows = [[pow(t0, 2 * n * j, _P61) * vals[n + k] % _P61 for k in range(ldeg + 1) for j in js] for n in ns]
        except ZeroDivisionError:
            continue
        return rank_mod_p(rows, _P61)
    raise ArithmeticError("no usable evaluation point found")


def search_annihilators(
    seq: JonesSequence,
    L_degree: int,
    window: tuple[int, int],
    sample_range,
    slack: int = 8,
    holdout: int = 5,
    extend: bool = True,
    seed: int = 0,
    max_rounds: int = 4,
) -> GuessReport:
    """All operators ``sum_(k<=L_degree, j in window) c_kj(t) M^j L^k`` with ``op seq = 0`` on the rows.

    Rows are the given samples, topped up with the following indices when
    there are fewer than ``unknowns + slack`` of them (``extend=False``
    raises :class:`InsufficientSamples` instead).  If the system has full
    column rank modulo ``p = 2^61 - 1`` at a point ``t = t0``, it has full
    rank over ``Q(t)`` and the answer is empty.  Otherwise an exact nullspace
    is computed and every candidate is re-checked on held-out indices; if
    some fail, more rows are added and the search repeats.
    """
    if L_degree < 0:
        raise ValueError("L_degree must be nonnegative")
    jmin, jmax = window
    js = list(range(jmin, jmax + 1))
    if not js:
        raise ValueError(f"empty window {window}")
    unknowns = (L_degree + 1) * len(js)
    bounds = f"L-degree <= {L_degree}, M-exponents in [{jmin}, {jmax}], coefficients in Q(t)"
    ns = _row_indices(list(sample_range), unknowns + slack, extend)

    for _ in range(max_rounds):
        if _modular_rank(seq, L_degree, js, ns, seed) == unknowns:
            return GuessReport([], bounds, ns, unknowns, "modular-rank")
        rows = [[seq(n + k).shift(2 * n * j) for k in range(L_degree + 1) for j in js] for n in ns]
        basis = ff_nullspace(rows)
        held = list(range(ns[-1] + 1, ns[-1] + 1 + holdout))
        ops = []
        for vec in basis:
            coeffs: dict[int, LaurentPoly2] = {}
            for idx, x in enumerate(vec):
                if x.is_zero():
                    continue
                k, j = divmod(idx, len(js))
                term = LaurentPoly2.from_t(x.as_poly(), js[j])
                coeffs[k] = coeffs[k] + term if k in coeffs else term
            ops.append(op_normalize(QTorusOperator(coeffs)))
        if all(verify_annihilates(op, seq, held).ok for op in ops):
            return GuessReport(ops, bounds, ns, unknowns, "exact-nullspace", held)
        ns = ns + list(range(ns[-1] + 1, ns[-1] + 1 + len(ns)))
    raise ArithmeticError("candidates kept failing held-out checks; increase max_rounds")


def guess_annihilator(seq: JonesSequence, L_degree: int, window: tuple[int, int], sample_range, **kw) -> list[QTorusOperator]:
    return search_annihilators(seq, L_degree, window, sample_range, **kw).candidates
