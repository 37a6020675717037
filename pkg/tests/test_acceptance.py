"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import time

import pytest

from ajcable.apoly import a_polynomial_cable, eq_up_to_M
from ajcable.jones import cable_jones, cable_jones_direct, cable_sequence, cable_step, jones_fig8, odd_fig8_sequence
from ajcable.laurent import LaurentPoly1, RationalFunc1
from ajcable.probes import breadth_fit, degree_sweep, fig8_degree_rows, mm_probe
from ajcable.qtorus import op_apply, op_epsilon, op_mirror
from ajcable.recurrence import cm_operator, factorization_sides, fit_adaptive, search_annihilators, verify_annihilates
from ajcable.jones import fig8_sequence
from conftest import ACCEPTANCE_LINES, habiro_oracle

t = LaurentPoly1.gen()
R_SET = [5, -5, 7, -7, 9, -9, 11, -11, 13, -13]


class Line:
    def __init__(self, number, title):
        self.number, self.title = number, title
        self.start = time.perf_counter()
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        elapsed = time.perf_counter() - self.start
        extra = f" ({self.detail})" if self.detail else ""
        text = f"[criterion {self.number:2d}] {status}  {self.title}  {elapsed:.2f}s{extra}"
        ACCEPTANCE_LINES.append(text)
        print("\n" + text)
        return False


def test_criterion_01_base_values():
    with Line(1, "base values and oddness of J_E") as line:
        assert jones_fig8(0).is_zero()
        assert jones_fig8(1) == LaurentPoly1.const(1)
        assert jones_fig8(2) == (t**2 + t**-2) * (t**8 + t**-8 - t**4 - t**-4 + 1) == habiro_oracle(2)
        for n in range(0, 11):
            assert jones_fig8(-n) == -jones_fig8(n)
        assert time.perf_counter() - line.start < 1


def test_criterion_02_degree_formulas():
    with Line(2, "closed-form extreme degrees, knot n<=12 and cables n<=8") as line:
        knot_bad = [row for row in fig8_degree_rows(12) if row[1] != row[2] or row[3] != row[4]]
        table = degree_sweep(R_SET, 8)
        bad = [(row.r, row.n, row.dplus_computed, row.dplus_oracle, row.dminus_computed, row.dminus_oracle) for row in table.mismatches()]
        line.detail = f"mismatches (r, n, d+, formula, d-, formula): {bad}" if bad else ""
        assert not knot_bad
        assert not bad


def test_criterion_03_cabling_consistency():
    with Line(3, "step recurrence equals the direct cabling sum"):
        for r in R_SET:
            value = LaurentPoly1()
            for n in range(0, 10):
                value = cable_step(r, n, value_at_n=value)
                assert value == cable_jones_direct(r, n + 1)


def test_criterion_04_factorization():
    with Line(4, "factorization identity behind Q") as line:
        lhs, rhs = factorization_sides()
        assert (lhs - rhs).is_zero()
        assert time.perf_counter() - line.start < 1


def test_criterion_05_inhomogeneous_membership(Q):
    with Line(5, "inhomogeneous fits for the CM operator and for Q") as line:
        cm = fit_adaptive(cm_operator(), fig8_sequence())
        assert len(cm.verified_on) >= 5
        for n in cm.verified_on:
            assert cm.value_at(n) == op_apply(cm_operator(), fig8_sequence(), n)
        assert cm.at_M_equal_1() == RationalFunc1(2 * (t**-2 - t**2))
        qf = fit_adaptive(Q, odd_fig8_sequence())
        assert len(qf.verified_on) >= 5
        for n in qf.verified_on:
            assert qf.value_at(n) == op_apply(Q, odd_fig8_sequence(), n)
        line.detail = f"windows {cm.window}, {qf.window}"
        assert time.perf_counter() - line.start < 60


@pytest.mark.parametrize("r", [9, -9, 11, -11])
def test_criterion_06_main_certificate(aj_report, r):
    with Line(6, f"S annihilates the (r,2)-cable and eps(S) ~ A, r = {r}") as line:
        rep = aj_report(r)
        S = rep.certificate.operator
        assert S.l_support() == [0, 1, 2, 3, 4]
        assert verify_annihilates(S, cable_sequence(r), range(1, 13)).ok
        ok, witness, _ = eq_up_to_M(op_epsilon(S), a_polynomial_cable(r))
        assert ok and rep.proportional
        line.detail = f"m = {rep.certificate.m}, window {rep.certificate.fit.window}"


def test_criterion_07_L_minus_1_divisibility(aj_report, odd_annihilator):
    with Line(7, "eps(S) and eps(odd annihilator) divisible by L - 1"):
        for r in (9, -9, 11, -11):
            assert op_epsilon(aj_report(r).certificate.operator).divisible_by_L_minus_1()
        eps = op_epsilon(odd_annihilator)
        assert eps.div_L_minus_1() * (eps.L() - 1) == eps


def test_criterion_08_mirror_closure(odd_annihilator):
    with Line(8, "mirror of the odd annihilator annihilates JJ_E on -6..6"):
        assert verify_annihilates(op_mirror(odd_annihilator), odd_fig8_sequence(), range(-6, 7)).ok


def test_criterion_09_bounded_nonexistence():
    with Line(9, "no annihilator of L-degree <= 3 in window (-8, 8) for cable(9)") as line:
        rep = search_annihilators(cable_sequence(9), 3, (-8, 8), range(1, 41))
        line.detail = f"searched {rep.bounds}; {len(rep.rows_used)} equations; {rep.certificate}"
        assert rep.candidates == []
        assert "L-degree <= 3" in rep.bounds and "[-8, 8]" in rep.bounds
        assert time.perf_counter() - line.start < 15 * 60


def test_criterion_10_breadth():
    with Line(10, "breadth of JJ_E is 32n^2 + 24n on 1..10"):
        assert breadth_fit(odd_fig8_sequence(), range(1, 11)) == (32, 24, 0)


@pytest.mark.parametrize("z", [0.5, 2])
def test_criterion_11_melvin_morton(z):
    with Line(11, f"Melvin-Morton errors decrease, z = {z}") as line:
        res = mm_probe(z, (10, 20, 40))
        line.detail = "errors " + ", ".join(f"{e:.4g}" for e in res.errors) + " (tolerance 0.05 is an artifact choice)"
        assert res.strictly_decreasing()
        assert res.errors[-1] < 0.05
