import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qweyl.algebra import CommPoly, epsilon, parse_comm, poisson, tau_lift
from qweyl.charvariety import TorusTrace, compare_brackets, goldman_bracket, tau_poly
from qweyl.rootdata import RootData, build, parse_algebra

SL2, SL3, SP4 = build("sl", 2), build("sl", 3), build("sp", 2)
ALL = [parse_algebra(n) for n in ("sl2", "sl3", "sl4", "sp4", "so4", "so5", "so6", "so7")]


def test_tau_poly_examples():
    assert tau_poly(SL2, 1, 0) == parse_comm(SL2, "E + E^{-1}")
    for rd in ALL:
        n = rd.n
        assert tau_poly(rd, 0, 0) == CommPoly.one(rd) * (n if rd.is_sl else 2 * n)


def test_tau_poly_sl3_power_sums():
    # tau_{1,0} tau_{-1,0} = sum_i x_i * sum_j x_j^{-1} = 3 + sum_{i != j} x_i / x_j
    rd = SL3
    prod = tau_poly(rd, 1, 0) * tau_poly(rd, -1, 0)
    expected = CommPoly.one(rd) * 3
    for i in range(3):
        for j in range(3):
            if i != j:
                w = rd.add(rd.unit(i), rd.neg(rd.unit(j)))
                expected = expected + CommPoly(rd, {(rd.zero(), w): 1})
    assert prod == expected
    # with x_1 x_2 x_3 = 1 the second elementary symmetric function is tau_{-1,0}
    e2 = CommPoly.zero(rd)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        e2 = e2 + CommPoly(rd, {(rd.zero(), rd.add(rd.unit(i), rd.unit(j))): 1})
    assert e2 == tau_poly(rd, -1, 0)


@pytest.mark.parametrize("rd", ALL, ids=lambda r: r.name)
def test_tau_poly_is_invariant_and_theta_compatible(rd):
    for a in range(-4, 5):
        for b in range(-4, 5):
            t = tau_poly(rd, a, b)
            assert t.is_invariant()
            assert t == epsilon(tau_lift(rd, a, b))


@pytest.mark.parametrize("rd", [r for r in ALL if not r.is_sl] + [SL2], ids=lambda r: r.name)
def test_tau_inverse_symmetry(rd):
    for a, b in ((1, 0), (2, -3), (0, 4)):
        assert tau_poly(rd, a, b) == tau_poly(rd, -a, -b)


def test_goldman_examples():
    for rd in ALL:
        assert not goldman_bracket(rd, TorusTrace(2, 1), TorusTrace(2, 1))
        assert not goldman_bracket(rd, (1, 2), (2, 4))
    expected = tau_poly(SL2, 1, 1) - tau_poly(SL2, 1, 0) * tau_poly(SL2, 0, 1) / 2
    assert goldman_bracket(SL2, TorusTrace(1, 0), TorusTrace(0, 1)) == expected
    assert goldman_bracket(SP4, (1, 0), (0, 1)) == tau_poly(SP4, 1, 1) - tau_poly(SP4, 1, -1)
    so5 = parse_algebra("so5")
    assert goldman_bracket(so5, (2, 1), (1, 1)) == tau_poly(so5, 3, 2) - tau_poly(so5, 1, 0)


def test_goldman_rational_coefficients():
    g = goldman_bracket(SL3, (1, 0), (0, 1))
    assert Fraction(-1, 3) in set(g.terms.values())


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(ALL), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_goldman_antisymmetric(rd, v):
    a, b, c, d = v
    assert goldman_bracket(rd, (a, b), (c, d)) == -goldman_bracket(rd, (c, d), (a, b))


@pytest.mark.parametrize("name, r", [("sl2", 2), ("sl3", 1), ("sp4", 1), ("so4", 1), ("so6", 1), ("so7", 1)])
def test_compare_brackets_small(name, r):
    rep = compare_brackets(parse_algebra(name), r)
    assert rep.passed
    assert rep.checked == (2 * r + 1) ** 4


def test_compare_brackets_range_zero():
    rep = compare_brackets(SL2, 0)
    assert rep.passed and rep.checked == 1


def test_negative_control_perturbed_pairing():
    rd = RootData("sl", 2, perturb=Fraction(1, 2))
    rep = compare_brackets(rd, 1)
    assert not rep.passed
    w = rep.failures[0]
    assert set(w) == {"a", "b", "c", "d", "lhs", "rhs"}
    assert w["lhs"] != w["rhs"]


def test_report_json():
    rep = compare_brackets(SP4, 1)
    data = json.loads(rep.to_json())
    assert data == {"algebra": "sp4", "range": 1, "checked": 81, "failures": []}


def test_parallel_matches_serial():
    rd = RootData("sl", 3, perturb=Fraction(1, 3))
    a = compare_brackets(rd, 1)
    b = compare_brackets(rd, 1, parallel=3)
    assert a.to_json() == b.to_json()
    assert not a.passed


def test_poisson_jacobi_on_traces():
    rng = random.Random(2)
    for rd in (SL2, SP4):
        for _ in range(5):
            x, y, z = (tau_poly(rd, rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(3))
            jac = (poisson(x, poisson(y, z)) + poisson(y, poisson(z, x)) + poisson(z, poisson(x, y)))
            assert not jac
