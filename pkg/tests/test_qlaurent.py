from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qweyl.qlaurent import (HJet, LaurentQ, add, bar, eval_q1, h_jet, mul, parse_laurent, q_power,
                            quantum_integer)

from strategies import laurents

q = q_power(1)
qh = q_power(Fraction(1, 2))


def test_representation_is_canonical():
    x = LaurentQ({Fraction(2, 4): 3, 1: 0})
    assert x.denom == 2
    assert x.terms() == {Fraction(1, 2): 3}
    assert LaurentQ({Fraction(2, 2): 1}) == q
    assert LaurentQ({Fraction(1, 2): 1, Fraction(-1, 2): 1}) == quantum_integer(2)
    assert x.denom * Fraction(1, 2) == 1


def test_add():
    assert add(qh, -qh) == 0
    assert not (qh - qh)
    assert quantum_integer(2) + quantum_integer(0) == qh + q_power(Fraction(-1, 2))
    # [4] + [2] = [2][3] = q^{3/2} + 2 q^{1/2} + 2 q^{-1/2} + q^{-3/2}
    expected = parse_laurent("q^{3/2} + 2*q^{1/2} + 2*q^{-1/2} + q^{-3/2}")
    assert quantum_integer(4) + quantum_integer(2) == expected
    diff = qh - q_power(Fraction(-1, 2))
    via_formula = (q_power(2) - q_power(-2) + q - q_power(-1)).divmod_exact(diff)
    assert via_formula == expected


def test_add_mixed_denominators():
    x = q_power(Fraction(1, 3)) + q_power(Fraction(1, 2))
    assert x.denom == 6
    assert (x - q_power(Fraction(1, 3))).denom == 2


def test_mul():
    diff = qh - q_power(Fraction(-1, 2))
    for n in range(-6, 7):
        assert mul(diff, quantum_integer(n)) == q_power(Fraction(n, 2)) - q_power(Fraction(-n, 2))
    assert mul(quantum_integer(3), LaurentQ.one()) == quantum_integer(3)
    assert qh * qh == q


def test_eval_q1():
    diff = qh - q_power(Fraction(-1, 2))
    num = q_power(Fraction(5, 2)) - q_power(Fraction(-5, 2))
    assert eval_q1(num.divmod_exact(diff)) == 5
    assert eval_q1(quantum_integer(5)) == 5
    assert eval_q1(quantum_integer(2)) == 2
    assert eval_q1(LaurentQ.zero()) == 0


def test_bar():
    assert bar(q_power(Fraction(5, 4))) == q_power(Fraction(-5, 4))
    for n in range(-5, 6):
        assert bar(quantum_integer(n)) == quantum_integer(n)
    x = parse_laurent("3*q^{7/3} - q^{-1}")
    assert bar(bar(x)) == x


def test_h_jet():
    assert h_jet(q_power(Fraction(1, 3))) == HJet(1, Fraction(1, 3))
    assert h_jet(LaurentQ.one()) == HJet(1, 0)
    assert h_jet(q - q_power(-1)) == HJet(0, 2)


def test_quantum_integer():
    assert quantum_integer(2) == qh + q_power(Fraction(-1, 2))
    assert quantum_integer(0) == 0
    assert quantum_integer(3) == q + 1 + q_power(-1)
    assert quantum_integer(-4) == -quantum_integer(4)


def test_quantum_integer_recurrence():
    two = quantum_integer(2)
    for n in range(-50, 51):
        assert quantum_integer(n + 1) + quantum_integer(n - 1) == two * quantum_integer(n)


def test_exact_division():
    a = parse_laurent("q^{3/2} - 2*q^{-1/2} + 1")
    b = quantum_integer(3)
    assert (a * b).divmod_exact(b) == a
    assert (a * b) / b == a
    with pytest.raises(ArithmeticError):
        a.divmod_exact(quantum_integer(2))
    with pytest.raises(ZeroDivisionError):
        a.divmod_exact(LaurentQ.zero())


def test_powers():
    assert qh ** 4 == q ** 2
    assert (2 * q) ** -2 == LaurentQ({-2: Fraction(1, 4)})
    assert quantum_integer(2) ** 0 == 1
    with pytest.raises(ArithmeticError):
        quantum_integer(2) ** -1


def test_rendering():
    x = q_power(Fraction(3, 2)) - 2 * q_power(Fraction(-1, 2))
    assert str(x) == "q^{3/2} - 2*q^{-1/2}"
    assert str(LaurentQ.zero()) == "0"
    assert str(q + 1) == "q + 1"
    assert str(Fraction(-1, 3) * q_power(-2)) == "-1/3*q^{-2}"


def test_degree_valuation_coefficient():
    x = parse_laurent("q^{5/4} + 2 - q^{-3/2}")
    assert x.degree() == Fraction(5, 4)
    assert x.valuation() == Fraction(-3, 2)
    assert x.coefficient(0) == 2
    assert x.coefficient(7) == 0
    assert list(x.items())[0] == (Fraction(5, 4), 1)


@given(laurents())
def test_parse_roundtrip(x):
    assert parse_laurent(str(x)) == x


@given(laurents(), laurents(), laurents())
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + y == y + x
    assert x - x == 0


@given(laurents(), laurents())
def test_h_jet_homomorphism(x, y):
    a, b = h_jet(x), h_jet(y)
    assert h_jet(x * y) == HJet(a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0)
    assert h_jet(x + y) == a + b
    assert h_jet(x * y) == a * b
    assert a.c0 == eval_q1(x)


@given(laurents(), laurents())
def test_bar_is_involutive_ring_map(x, y):
    assert bar(x * y) == bar(x) * bar(y)
    assert bar(x + y) == bar(x) + bar(y)
    assert bar(bar(x)) == x
    assert eval_q1(bar(x)) == eval_q1(x)


@given(laurents(), laurents(max_terms=3).filter(bool))
def test_division_inverts_multiplication(x, y):
    assert (x * y).divmod_exact(y) == x


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_quantum_integers_at_q1(m, n):
    assert eval_q1(quantum_integer(m) * quantum_integer(n)) == m * n


def test_hash_consistency():
    assert hash(LaurentQ({Fraction(2, 2): 1})) == hash(q)
    assert hash(LaurentQ.const(3)) == hash(LaurentQ({0: 3}))
    assert len({q, LaurentQ({1: 1}), qh}) == 2
