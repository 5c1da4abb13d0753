"""Ideals of the rank-one Laurent ring ``Q[E^{+-1}, Q^{+-1}]``.

A Laurent polynomial ``sum c E^a Q^b`` is encoded in ``Q[e, eb, u, ub]``
(``eb``/``ub`` standing for the inverses) and every ideal is taken together
with the unit relations ``e*eb - 1`` and ``u*ub - 1``.  Radical membership
uses one more variable ``t`` (the Rabinowitsch trick).

Also here: the A-ideal presets of the unknot and the trefoils, and the
torus-curve elements of ``A_{sl(2)}`` built with Chebyshev polynomials.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import AlgebraElement, CommPoly, E, Q, parse_comm
from .groebner import (GroebnerExceeded, Limits, Poly, groebner_basis, is_unit_ideal,
                       normal_form)
from .qlaurent import LaurentQ
from .rootdata import build

SL2 = build("sl", 2)

_NVARS = 5  # e, eb, u, ub, t


def _k(w) -> int:
    return w[0] - w[1]


def encode(p: CommPoly) -> Poly:
    """Encode an ``sl(2)`` :class:`CommPoly` as a polynomial in ``e, eb, u, ub, t``."""
    if p.rd != SL2:
        raise ValueError("ideals are implemented for the sl(2) lattice only")
    out: Poly = {}
    for (qa, eb), c in p.terms.items():
        a, b = _k(eb), _k(qa)  # E^a Q^b
        m = (max(a, 0), max(-a, 0), max(b, 0), max(-b, 0), 0)
        out[m] = out.get(m, 0) + c
    return {m: c for m, c in out.items() if c}


def decode(poly: Poly) -> CommPoly:
    terms: Dict[Tuple, Fraction] = {}
    for (e, eb, u, ub, t), c in poly.items():
        if t:
            raise ValueError("cannot decode a polynomial involving t")
        key = (SL2.rank1(u - ub), SL2.rank1(e - eb))
        terms[key] = terms.get(key, 0) + c
    return CommPoly(SL2, terms)


_RELATIONS: List[Poly] = [
    {(1, 1, 0, 0, 0): Fraction(1), (0, 0, 0, 0, 0): Fraction(-1)},
    {(0, 0, 1, 1, 0): Fraction(1), (0, 0, 0, 0, 0): Fraction(-1)},
]


@dataclass
class LaurentIdeal:
    generators: List[CommPoly]
    basis: Optional[List[Poly]] = field(default=None, repr=False)
    status: str = "pending"

    def __post_init__(self):
        self.generators = [g for g in self.generators]

    @classmethod
    def from_strings(cls, gens: Sequence[str]) -> "LaurentIdeal":
        return cls([parse_comm(SL2, g) for g in gens])

    def encoded(self) -> List[Poly]:
        return [encode(g) for g in self.generators if g] + [dict(r) for r in _RELATIONS]

    @property
    def basis_size(self) -> int:
        return len(self.basis) if self.basis is not None else 0

    def is_trivial(self) -> bool:
        return is_unit_ideal(groebner(self).basis)

    def report(self, queries: Sequence[CommPoly] = ()) -> str:
        groebner(self)
        return json.dumps({
            "schema": 1,
            "generators": [str(g) for g in self.generators],
            "basis_size": self.basis_size,
            "status": self.status,
            "queries": [{"poly": str(p), "member": member(p, self),
                         "radical_member": radical_member(p, self)} for p in queries],
        }, indent=2)


def groebner(I: LaurentIdeal, limits: Optional[Limits] = None) -> LaurentIdeal:
    """Compute (once) and attach the reduced Gröbner basis of ``I``."""
    if I.basis is None:
        try:
            I.basis = groebner_basis(I.encoded(), limits)
            I.status = "ok"
        except GroebnerExceeded:
            I.status = "exceeded"
            raise
    return I


def member(p: CommPoly, I: LaurentIdeal) -> bool:
    if not p:
        return True
    groebner(I)
    return not normal_form(encode(p), I.basis)


def radical_member(p: CommPoly, I: LaurentIdeal, limits: Optional[Limits] = None) -> bool:
    """``p`` lies in the radical iff ``1`` lies in ``I + <1 - t p>``."""
    if not p:
        return True
    rab: Poly = {(0, 0, 0, 0, 0): Fraction(1)}
    for m, c in encode(p).items():
        k = m[:4] + (1,)
        rab[k] = rab.get(k, 0) - c
    basis = groebner_basis(I.encoded() + [rab], limits)
    return is_unit_ideal(basis)


def same_ideal(I: LaurentIdeal, J: LaurentIdeal) -> bool:
    return all(member(g, J) for g in I.generators) and all(member(g, I) for g in J.generators)


def point_probe(gens: Sequence[CommPoly], pt: Tuple) -> List[Fraction]:
    """Evaluate each generator at ``(E, Q) = pt``; both coordinates must be nonzero."""
    ev, qv = (Fraction(x) for x in pt)
    if ev == 0 or qv == 0:
        raise ZeroDivisionError("Laurent polynomials have a pole at zero coordinates")
    return [_eval_sl2(g, ev, qv) for g in gens]


def _eval_sl2(g: CommPoly, ev: Fraction, qv: Fraction) -> Fraction:
    total = Fraction(0)
    for (qa, eb), c in g.terms.items():
        total += c * ev ** _k(eb) * qv ** _k(qa)
    return total


# -- presets ------------------------------------------------------------------------

W_TREFOIL = "E^{-1}Q^3(E-1)(E Q^{-6}+1)"

_A_IDEALS = {
    "unknot": ["E+E^{-1}-2", "E Q+E^{-1}Q^{-1}-Q-Q^{-1}"],
    "trefoil-left": [f"({W_TREFOIL})(Q-Q^{{-1}})", f"({W_TREFOIL})(E-E^{{-1}})",
                     f"({W_TREFOIL})(E Q^{{-1}}-E^{{-1}}Q)"],
}

# listed images at q = 1 of the invariant recursion ideals
_EPS_IDEALS = {
    "unknot": ["E+E^{-1}-2", "E Q+E^{-1}Q^{-1}-Q-Q^{-1}"],
    "trefoil-left": [f"({W_TREFOIL})(Q^2-Q^{{-2}})", f"({W_TREFOIL})^2",
                     f"({W_TREFOIL})(E Q^4-E^{{-1}}Q^{{-4}})"],
}

# image at q = 1 computed directly from the trefoil generators
EPS_TREFOIL_COMPUTED = [f"({W_TREFOIL})(Q^2-Q^{{-2}})", f"({W_TREFOIL})(1-E^{{-1}})(E Q^{{-3}}+Q^3)",
                        f"({W_TREFOIL})(E Q^4-E^{{-1}}Q^{{-4}})"]


def invert_q(p: CommPoly) -> CommPoly:
    """``Q -> Q^{-1}``."""
    rd = p.rd
    return CommPoly(rd, {(rd.neg(a), b): c for (a, b), c in p.terms.items()})


def w_trefoil(knot: str = "trefoil-left") -> CommPoly:
    w = parse_comm(SL2, W_TREFOIL)
    return invert_q(w) if knot == "trefoil-right" else w


def _preset(table, knot: str) -> List[CommPoly]:
    if knot == "trefoil-right":
        return [invert_q(g) for g in _preset(table, "trefoil-left")]
    if knot not in table:
        raise KeyError(f"unknown knot {knot!r}; expected unknot, trefoil-left or trefoil-right")
    return [parse_comm(SL2, g) for g in table[knot]]


def a_ideal_preset(knot: str) -> LaurentIdeal:
    """Generators of the A-ideal of ``knot`` in ``Q[E^{+-1}, Q^{+-1}]``."""
    return LaurentIdeal(_preset(_A_IDEALS, knot))


def eps_ideal_listed(knot: str) -> LaurentIdeal:
    """The listed q = 1 image of the invariant recursion ideal of ``knot``."""
    return LaurentIdeal(_preset(_EPS_IDEALS, knot))


# -- torus curves ---------------------------------------------------------------------


def curve_element(p: int, q: int) -> AlgebraElement:
    """The ``(p, q)`` torus curve as an element of ``A_{sl(2)}``.

    For coprime ``p, q`` this is ``(-1)^{p+q} q^{-pq/4} (E^p Q^q + E^{-p} Q^{-q})``
    (products in written order); for ``gcd = g > 1`` it is ``T_g`` of the
    primitive curve with ``T_0 = 2``, ``T_1 = x``, ``T_{n+1} = x T_n - T_{n-1}``.
    """
    if p == 0 and q == 0:
        raise ValueError("(0, 0) is not a curve")
    rd = SL2
    g = gcd(p, q)
    if g > 1:
        x = curve_element(p // g, q // g)
        prev, cur = AlgebraElement.one(rd) * 2, x
        for _ in range(g - 1):
            prev, cur = cur, x * cur - prev
        return cur
    sign = -1 if (p + q) % 2 else 1
    body = E(rd, rd.rank1(p)) * Q(rd, rd.rank1(q)) + E(rd, rd.rank1(-p)) * Q(rd, rd.rank1(-q))
    return body * LaurentQ({Fraction(-p * q, 4): sign})


def unknot_x(k: int) -> CommPoly:
    """``x_k = E Q^k + E^{-1} Q^{-k} - (Q^k + Q^{-k})``; ``x_0`` and ``x_1`` generate the unknot ideal."""
    return parse_comm(SL2, f"E Q^{{{k}}}+E^{{-1}}Q^{{{-k}}}-Q^{{{k}}}-Q^{{{-k}}}")


def iota(p: CommPoly) -> CommPoly:
    """``E -> E^{-1}``, ``Q -> Q^{-1}``."""
    rd = p.rd
    return CommPoly(rd, {(rd.neg(a), rd.neg(b)): c for (a, b), c in p.terms.items()})


def iota_symmetrize(p: CommPoly) -> CommPoly:
    return (p + iota(p)) / 2
