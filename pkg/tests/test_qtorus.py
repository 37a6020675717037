import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ajcable.jones import JonesSequence, constant_sequence, demo_exp_sequence, qint, quantum_integer_sequence
from ajcable.laurent import LaurentPoly1, LaurentPoly2
from ajcable.qtorus import (
    CommutativeMLPoly,
    QTorusOperator,
    op_apply,
    op_epsilon,
    op_from_json,
    op_mirror,
    op_mul,
    op_normalize,
    op_to_json,
)
from ajcable.recurrence import p_polynomials
from strategies import laurent2, operators

T, M = LaurentPoly2.t(), LaurentPoly2.M()
Op = QTorusOperator
L = Op.L()
Mop = Op.M()


def _seq(seed):
    # an arbitrary deterministic test sequence
    return JonesSequence(lambda n: LaurentPoly1({n: 1, (seed * n) % 7 - 3: 2, 0: n}), "custom")


def test_commutation():
    assert op_mul(L, Mop) == Op({1: T**2 * M})
    assert (L * Mop - T**2 * (Mop * L)).is_zero()
    assert (Op({1: M}) * Op({1: M})) == Op({2: T**2 * M**2})


@given(operators())
def test_identity(a):
    assert Op.identity() * a == a
    assert a * Op.identity() == a


def test_apply_examples():
    assert op_apply(L, quantum_integer_sequence(), 2) == qint(3)
    one = constant_sequence()
    for n in range(-3, 4):
        assert op_apply(Op({1: M}), one, n) == LaurentPoly1({2 * n: 1})
        assert op_apply(L - T**2 * Mop, demo_exp_sequence(), n).is_zero()


def test_epsilon_examples():
    p1, _, _ = p_polynomials()
    assert op_epsilon(Op({2: T * M})) == CommutativeMLPoly({2: LaurentPoly1({1: -1}, "M")})
    assert op_epsilon(Op({1: p1})) == CommutativeMLPoly({1: LaurentPoly1({2: 1, -2: -1}, "M")})
    assert op_epsilon(Op({0: (1 + T) * M**3, 4: (1 + T) * T})).is_zero()


def test_mirror_examples():
    assert op_mirror(L) == Op.L(-1)
    assert op_mirror(Mop) == Op({0: T**-2 * M**-1})


def test_normalize_examples():
    assert op_normalize(Op({-1: T**2, 1: 1})) == Op({0: T**2, 2: 1})
    assert op_normalize(Op({1: 2, 0: 2})) == Op({1: 1, 0: 1})
    a = Op({0: T - M, 2: 3 * M})
    assert op_normalize(a) == a
    with pytest.raises(ValueError):
        op_normalize(Op())


@settings(max_examples=40, deadline=None)
@given(operators(), operators(), operators())
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=40, deadline=None)
@given(operators(), operators(), st.integers(-4, 4), st.integers(0, 5))
def test_action_is_homomorphism(a, b, n, seed):
    f = _seq(seed)
    g = JonesSequence(lambda m: op_apply(b, f, m), "composite")
    assert op_apply(a * b, f, n) == op_apply(a, g, n)


@given(operators(), operators())
def test_epsilon_multiplicative(a, b):
    assert op_epsilon(a * b) == op_epsilon(a) * op_epsilon(b)


@settings(max_examples=40, deadline=None)
@given(operators(), operators())
def test_mirror_involution_and_homomorphism(a, b):
    assert op_mirror(op_mirror(a)) == a
    assert op_mirror(a * b) == op_mirror(a) * op_mirror(b)


@given(st.integers(-5, 5), st.integers(0, 5))
def test_commutation_on_sequences(n, seed):
    f = _seq(seed)
    assert op_apply(L * Mop, f, n) == op_apply(T**2 * (Mop * L), f, n)


@given(operators())
def test_operator_json_roundtrip(a):
    text = json.dumps(op_to_json(a))
    assert op_from_json(json.loads(text)) == a
    ks = [k for k, _ in json.loads(text)["op"]]
    assert ks == sorted(ks)


def test_normal_form_drops_zero_coefficients():
    a = Op({1: M, 0: T}) - Op({1: M})
    assert a.l_support() == [0]
    assert Op.identity().coeffs == {0: LaurentPoly2.const(1)}


def test_commutative_division_by_L_minus_1():
    Lc = CommutativeMLPoly.L()
    f = (Lc - 1) * (Lc * Lc + CommutativeMLPoly.M(3))
    assert f.divisible_by_L_minus_1()
    assert f.div_L_minus_1() == Lc * Lc + CommutativeMLPoly.M(3)
    assert not (Lc + 1).divisible_by_L_minus_1()
