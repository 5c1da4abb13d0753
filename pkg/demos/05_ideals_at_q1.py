"""
Ideals at q = 1
===============

At ``q = 1`` the recursion ideal of the trefoil lands in the Laurent ring
``Q[E^{+-1}, Q^{+-1}]``.  Gröbner bases decide membership and radical
membership there.
"""
from qweyl import a_ideal_preset, eps_ideal_listed, member, parse_comm, point_probe, radical_member
from qweyl.ideals import SL2, w_trefoil

eps = eps_ideal_listed("trefoil-left")
A = a_ideal_preset("trefoil-left")
w = w_trefoil()

for g in A.generators:
    print(g)
    print("   square in ideal:", member(g * g, eps), "  in radical:", radical_member(g, eps))

###############################################################################
# The ideal is not radical: ``w (Q - Q^{-1})`` is missing from it.
print("w(Q - Q^-1) in ideal:", member(w * parse_comm(SL2, "Q - Q^{-1}"), eps))

###############################################################################
# The point ``(E, Q) = (1, -1)`` lies on the zero set, while ``Q - 1`` does not vanish there.
print("probe:", point_probe(eps.generators, (1, -1)), point_probe([parse_comm(SL2, "Q - 1")], (1, -1)))
