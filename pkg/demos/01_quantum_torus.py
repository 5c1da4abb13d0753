"""
Arithmetic in the quantum Weyl algebra
======================================

Elements are sums of ``Q_a E_b`` with Laurent coefficients in a fractional
power of ``q``.  Products are brought back to normal order (Q first) using
``E_a Q_b = q^{(a,b)} Q_b E_a``.
"""
from qweyl import build, epsilon, parse_element, poisson, tau_lift

sl2 = build("sl", 2)

###############################################################################
# In ``sl(2)`` the generator of the lattice pairs with itself to ``1/2``, so
# moving ``E`` past ``Q`` costs ``q^{1/2}``.
x = parse_element(sl2, "E Q")
print("E Q       =", x)
print("Q E       =", parse_element(sl2, "Q E"))

###############################################################################
# Setting ``q = 1`` lands in a commutative ring.  The commutator vanishes
# there; its first order term in ``h`` (with ``q = e^h``) is the Poisson bracket.
comm = parse_element(sl2, "E Q - Q E")
print("[E, Q]    =", comm)
print("at q = 1  =", epsilon(comm))
print("{E, Q}    =", poisson(parse_element(sl2, "E"), parse_element(sl2, "Q")))

###############################################################################
# Trace functions lift to Weyl invariant elements.  For ``sl(3)`` the lift of
# ``tau_{1,1}`` picks up the factor ``q^{(a,a)} = q^{2/3}`` on each term.
sl3 = build("sl", 3)
print("tau_{1,1} =", tau_lift(sl3, 1, 1))
