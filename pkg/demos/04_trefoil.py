"""
Recursion generators of the trefoil
===================================

The trefoil generators are assembled from torus curves in the skein algebra,
with ``t = q^{1/4}``.  An independent colored Jones oracle (the Adams
operation expansion for ``(2, p)`` torus knots) confirms that they annihilate
the colored Jones function.
"""
from fractions import Fraction

from qweyl import build, trefoil_colored_jones_oracle, trefoil_presets
from qweyl.knotdata import printed_trefoil_generators, resolve_trefoil

sl2 = build("sl", 2)
J = trefoil_colored_jones_oracle("left")
for n in range(1, 4):
    print(f"J({n}) =", J(sl2.rank1(n)))

###############################################################################
# Search the framing and the exponent in the garbled slot of the second
# generator.  Exactly one pair works.
found = resolve_trefoil(lambda e: trefoil_presets("left", e).generators, radius=15)
print("solutions (framing, exponent):", found)

###############################################################################
# Taken literally, with E written before Q throughout, the printed generators
# admit no solution at all.
cands = (Fraction(1, 3), Fraction(1, 2), Fraction(3, 2), Fraction(5, 2), Fraction(3))
print("literal print:", resolve_trefoil(printed_trefoil_generators, radius=10, candidates=cands))

###############################################################################
# The right-handed trefoil uses the mirror generators.
right = resolve_trefoil(lambda e: trefoil_presets("right", e).generators, radius=15, chirality="right")
print("right-handed solutions:", right)
