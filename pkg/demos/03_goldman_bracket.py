"""
Torus Goldman bracket from the quantum torus
============================================

The first order commutator of two trace lifts agrees with the Goldman
bracket of the corresponding curves on the torus.
"""
from qweyl import build, compare_brackets, goldman_bracket, parse_algebra
from qweyl.algebra import poisson, tau_lift
from qweyl.rootdata import RootData

sl2 = build("sl", 2)
lhs = poisson(tau_lift(sl2, 1, 0), tau_lift(sl2, 0, 1))
rhs = goldman_bracket(sl2, (1, 0), (0, 1))
print("{tau_10, tau_01} =", lhs)
print("Goldman          =", rhs)

###############################################################################
# A full sweep over small curves, one algebra at a time.
for name, r in (("sl3", 2), ("sp4", 1), ("so5", 1)):
    rep = compare_brackets(parse_algebra(name), r)
    print(name, "checked", rep.checked, "failures", len(rep.failures))

###############################################################################
# Perturbing the pairing breaks the identity, as it should.
bad = compare_brackets(RootData("sl", 2, perturb=1), 1)
print("perturbed sl2 failures:", len(bad.failures))
print("first witness:", bad.failures[0])
