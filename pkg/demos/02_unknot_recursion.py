"""
The unknot and its recursion
============================

The unknot function is the Weyl character quotient evaluated on the shifted
weight lattice.  Operators act by ``E_b f(l) = f(l + b)`` and
``Q_a f(l) = q^{(a,l)} f(l)``.
"""
from qweyl import build, parse_element, unknot_J, unknot_preset
from qweyl.knotdata import annihilation_check, rec_unknot_sln

sl2 = build("sl", 2)
J = unknot_J(sl2)

###############################################################################
# For ``sl(2)`` the values are the quantum integers.
for n in range(1, 5):
    print(f"J({n}) =", J(sl2.rank1(n)))

###############################################################################
# Both built-in generators kill ``J`` on a window around the origin.
gens = unknot_preset().generators
for g in gens:
    print(g)
print("annihilates:", bool(annihilation_check(gens, J, 30)))

###############################################################################
# A wrong operator is caught with a witness.
rep = annihilation_check([parse_element(sl2, "E - 1")], J, 5)
print("E - 1 annihilates:", rep.passed, "witness", rep.witness)

###############################################################################
# In ``sl(n)`` the sum of the shifts ``E_{alpha_i}`` minus ``[n]`` is a recursion.
for n in (3, 4):
    rd = build("sl", n)
    print(rd.name, bool(annihilation_check([rec_unknot_sln(rd)], unknot_J(rd), 3)))
