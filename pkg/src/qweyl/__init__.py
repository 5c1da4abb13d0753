"""Exact computation in quantum Weyl algebras of weight lattices.

Modules:

* :mod:`qweyl.qlaurent` -- Laurent polynomials in fractional powers of ``q``.
* :mod:`qweyl.rootdata` -- weight lattices, pairings and Weyl groups.
* :mod:`qweyl.algebra` -- the algebra ``A_g``, its ``q = 1`` image and Poisson bracket.
* :mod:`qweyl.knotdata` -- lattice functions, the operator action and knot presets.
* :mod:`qweyl.charvariety` -- trace functions and the torus Goldman bracket.
* :mod:`qweyl.ideals` -- Gröbner bases and ideal membership over ``Q[E^{+-1}, Q^{+-1}]``.
* :mod:`qweyl.cli` -- the ``qweyl`` command.
"""
from .algebra import (AlgebraElement, CommPoly, E, Q, epsilon, is_invariant, mirror, monomial, mul,
                      parse_comm, parse_element, poisson, symmetrize, tau_lift, weyl_act)
from .charvariety import TorusTrace, compare_brackets, goldman_bracket, tau_poly
from .ideals import (LaurentIdeal, a_ideal_preset, curve_element, eps_ideal_listed, groebner, member,
                     point_probe, radical_member)
from .knotdata import (LatticeFunction, apply, trefoil_colored_jones_oracle, trefoil_presets, unknot_J,
                       unknot_preset)
from .qlaurent import HJet, LaurentQ, bar, eval_q1, h_jet, parse_laurent, quantum_integer
from .rootdata import RootData, WeylGroupElement, build, parse_algebra

__all__ = [
    "AlgebraElement",
    "CommPoly",
    "E",
    "HJet",
    "LatticeFunction",
    "LaurentIdeal",
    "LaurentQ",
    "Q",
    "RootData",
    "TorusTrace",
    "WeylGroupElement",
    "a_ideal_preset",
    "apply",
    "bar",
    "build",
    "compare_brackets",
    "curve_element",
    "eps_ideal_listed",
    "epsilon",
    "eval_q1",
    "goldman_bracket",
    "groebner",
    "h_jet",
    "is_invariant",
    "member",
    "mirror",
    "monomial",
    "mul",
    "parse_algebra",
    "parse_comm",
    "parse_element",
    "parse_laurent",
    "point_probe",
    "poisson",
    "quantum_integer",
    "radical_member",
    "symmetrize",
    "tau_lift",
    "tau_poly",
    "trefoil_colored_jones_oracle",
    "trefoil_presets",
    "unknot_J",
    "unknot_preset",
    "weyl_act",
]

__version__ = "0.1.0"
