import functools

import pytest
import sympy as sp

from ajcable.laurent import LaurentPoly1

T = sp.symbols("t")

# filled by the acceptance module, echoed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


def sympy_to_laurent(expr, shift=400):
    """Convert an expanded sympy Laurent polynomial in ``t`` to LaurentPoly1."""
    poly = sp.Poly(sp.expand(expr * T**shift), T)
    return LaurentPoly1({e[0] - shift: int(c) for e, c in poly.terms()})


@functools.lru_cache(maxsize=None)
def habiro_oracle(n):
    """Colored Jones of the figure-eight via sympy, straight from the Habiro sum."""
    if n == 0:
        return LaurentPoly1()
    if n < 0:
        return -habiro_oracle(-n)
    s = sum(
        sp.prod([T ** (4 * n) + T ** (-4 * n) - T ** (4 * l) - T ** (-4 * l) for l in range(1, k + 1)])
        for k in range(n)
    )
    q = sp.cancel((T ** (2 * n) - T ** (-2 * n)) / (T**2 - T**-2))
    return sympy_to_laurent(q * s)


@functools.lru_cache(maxsize=None)
def _certificate(r):
    from ajcable.apoly import check_aj

    return check_aj(r, 12)


@pytest.fixture(scope="session")
def aj_report():
    return _certificate


@pytest.fixture(scope="session")
def Q():
    from ajcable.recurrence import build_Q

    return build_Q()


@functools.lru_cache(maxsize=None)
def _odd_annihilator():
    from ajcable.recurrence import build_odd_annihilator

    return build_odd_annihilator()


@pytest.fixture(scope="session")
def odd_annihilator():
    return _odd_annihilator()
