"""Functions on the weight lattice and the action of ``A_g`` on them.

``E_b f(l) = f(l + b)`` and ``Q_a f(l) = q^{(a,l)} f(l)``, so the normal
ordered monomial acts by ``(c Q_a E_b) f (l) = c q^{(a,l)} f(l + b)``.

This module also holds the unknot function given by the Weyl character
quotient, a colored Jones oracle for the trefoil, and the built-in
generators of invariant recursion ideals for the unknot and the trefoils.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from .algebra import AlgebraElement, E, is_invariant, mirror, parse_element
from .qlaurent import LaurentQ, q_power, quantum_integer
from .rootdata import RootData, Weight, build


class LatticeFunction:
    """A function ``Lambda -> LaurentQ`` evaluated on demand and memoised."""

    def __init__(self, rd: RootData, rule: Callable[[Weight], LaurentQ], name: str = "f"):
        self.rd = rd
        self.rule = rule
        self.name = name
        self._cache: Dict[Weight, LaurentQ] = {}
        self._lock = threading.Lock()

    def __call__(self, lam: Sequence[int]) -> LaurentQ:
        lam = self.rd.canon(tuple(lam))
        v = self._cache.get(lam)
        if v is None:
            v = self.rule(lam)
            # idempotent: concurrent writers store equal values
            with self._lock:
                self._cache.setdefault(lam, v)
        return v

    def __repr__(self):
        return f"LatticeFunction({self.rd.name}, {self.name})"


def zero_function(rd: RootData) -> LatticeFunction:
    return LatticeFunction(rd, lambda lam: LaurentQ.zero(), "zero")


def delta(rd: RootData, mu: Sequence[int]) -> LatticeFunction:
    mu = rd.canon(tuple(mu))
    one = LaurentQ.one()
    zero = LaurentQ.zero()
    return LatticeFunction(rd, lambda lam: one if lam == mu else zero, f"delta{list(mu)}")


def apply(x: AlgebraElement, f: LatticeFunction, lam: Sequence[int]) -> LaurentQ:
    """Value of ``(x f)`` at ``lam``."""
    rd = x.rd
    lam = rd.canon(tuple(lam))
    total = LaurentQ.zero()
    for (a, b), c in x.terms.items():
        v = f(rd.add(lam, b))
        if v:
            total = total + c * v.shift(rd.pair(a, lam))
    return total


def apply_function(x: AlgebraElement, f: LatticeFunction) -> LatticeFunction:
    """The lattice function ``x f``."""
    return LatticeFunction(f.rd, lambda lam: apply(x, f, lam), f"({x}){f.name}")


# -- unknot -------------------------------------------------------------------------


def unknot_J(rd: RootData) -> LatticeFunction:
    """``sum_w sgn(w) q^{(l, w rho)} / sum_w sgn(w) q^{(rho, w rho)}``."""
    rho = rd.rho
    orbit = []
    for w in rd.weyl_elements():
        orbit.append((w.sgn(), w.raw_act(rho)))
    denom = LaurentQ.zero()
    for s, wr in orbit:
        denom = denom + LaurentQ({rd.pair(rho, wr): s})

    def rule(lam):
        acc: Dict[Fraction, Fraction] = {}
        for s, wr in orbit:
            e = rd.pair(lam, wr)
            acc[e] = acc.get(e, 0) + s
        num = LaurentQ(acc)
        try:
            return num.divmod_exact(denom)
        except ArithmeticError as exc:
            raise ArithmeticError(f"Weyl character quotient not exact at {lam} for {rd.name}") from exc

    return LatticeFunction(rd, rule, "unknot")


# -- reports ------------------------------------------------------------------------


@dataclass
class CheckReport:
    passed: bool
    checked: int
    witness: Optional[dict] = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed


def equivariance_check(f: LatticeFunction, radius: int) -> CheckReport:
    """Check ``f(w l) = sgn(w) f(l)`` for every ``w`` and ``l`` in the window."""
    rd = f.rd
    elems = list(rd.weyl_elements())
    checked = 0
    for lam in rd.window(radius):
        v = f(lam)
        for w in elems:
            checked += 1
            wl = rd.act(w, lam)
            lhs = f(wl)
            rhs = v if w.sgn() > 0 else -v
            if lhs != rhs:
                return CheckReport(False, checked, {
                    "lambda": list(lam), "w": {"perm": list(w.perm), "signs": list(w.signs)},
                    "f(w.lambda)": str(lhs), "sgn(w)f(lambda)": str(rhs)})
    return CheckReport(True, checked)


def annihilation_check(gens: Iterable[AlgebraElement], f: LatticeFunction, radius: int,
                       window: Optional[Iterable[Weight]] = None) -> CheckReport:
    """Check ``P f = 0`` at every point of the window for each generator ``P``."""
    gens = list(gens)
    points = list(window) if window is not None else list(f.rd.window(radius))
    checked = 0
    for idx, P in enumerate(gens):
        for lam in points:
            checked += 1
            v = apply(P, f, lam)
            if v:
                return CheckReport(False, checked, {
                    "generator": idx, "lambda": list(lam), "value": str(v)})
    return CheckReport(True, checked)


# -- colored Jones oracle for (2, p) torus knots -----------------------------------------


def _twist(dim: int) -> Fraction:
    # ribbon twist on the irreducible of dimension ``dim``: q^{(dim^2-1)/4}
    return Fraction(dim * dim - 1, 4)


def torus_2p_colored_jones(p: int, d: int) -> LaurentQ:
    """Zero-framed colored Jones of the ``(2, p)`` torus knot, unknot value ``[d]``.

    Uses the Adams-operation (Rosso-Jones) expansion
    ``psi^2 V_d = sum_k (-1)^k V_{2d-1-2k}``::

        J(d) = theta_d^{-2p} sum_{k<d} (-1)^k theta_{2d-1-2k}^{p/2} [2d-1-2k]
    """
    if d < 0:
        return -torus_2p_colored_jones(p, -d)
    if d == 0:
        return LaurentQ.zero()
    total = LaurentQ.zero()
    for k in range(d):
        j = 2 * d - 1 - 2 * k
        term = quantum_integer(j).shift(_twist(j) * Fraction(p, 2))
        total = total + (term if k % 2 == 0 else -term)
    return total.shift(-2 * p * _twist(d))


# Chirality of the (2, p) torus braid closure matched to the left-handed
# trefoil of the built-in recursion generators (see trefoil_presets).
LEFT_TREFOIL_P = -3


def trefoil_colored_jones_oracle(chirality: str = "left", framing_shift: int = 0) -> LatticeFunction:
    """Colored Jones function of the trefoil on the ``sl(2)`` weight lattice.

    ``J(n)`` for ``n >= 1`` is the ``n``-colored invariant (``J(1) = 1``,
    ``J(2)`` the unnormalised Jones polynomial), multiplied by the framing
    factor ``q^{framing_shift (n^2-1)/4}``, and extended by ``J(-n) = -J(n)``.
    """
    if chirality not in ("left", "right"):
        raise ValueError("chirality must be 'left' or 'right'")
    p = LEFT_TREFOIL_P if chirality == "left" else -LEFT_TREFOIL_P
    rd = build("sl", 2)

    def rule(lam):
        n = lam[0] - lam[1]
        m = abs(n)
        v = torus_2p_colored_jones(p, m).shift(framing_shift * _twist(m))
        # d = 1 must give exactly 1 for every framing
        return v if n >= 0 else -v

    return LatticeFunction(rd, rule, f"trefoil-{chirality}[f={framing_shift}]")


# -- built-in invariant recursion generators ---------------------------------------------


@dataclass
class KnotPreset:
    name: str
    algebra: str
    generators: List[AlgebraElement]
    provenance: str = ""

    def check_invariant(self) -> bool:
        return all(is_invariant(g) for g in self.generators)


UNKNOT_SL2 = ["E+E^{-1}-(q^{1/2}+q^{-1/2})", "E Q+E^{-1}Q^{-1}-q(Q+Q^{-1})"]

# Peripheral ideal of the left-handed trefoil in the Kauffman bracket skein
# algebra of the torus: each generator is a list of (coefficient in t,
# curve) with t = q^{1/4}; ``None`` marks the empty curve.
_T = Fraction(1, 4)
TREFOIL_LEFT_CURVES = [
    [({0: 1}, (1, -5)), ({-8: -1}, (1, -1)), ({-3: 1}, (0, 5)), ({1: -1}, (0, 1))],
    [({0: 1}, (2, -6)), ({6: -1, -6: -1}, (1, 0)), ({4: 1, -4: 1}, (1, -6)), ({0: 1}, (0, 6)),
     ({4: -2, -4: -2}, None)],
    [({0: 1}, (2, -7)), ({-5: 1}, (1, -7)), ({-5: 1, -1: -1}, (1, -3)), ({5: -1}, (1, -1)),
     ({2: 1, -2: -1}, (0, 3)), ({-6: -1}, (0, 1))],
]

# Generators as printed in Laurent form; ``{e}`` is the garbled exponent slot.
# The first is written with E before Q.  The third and the slot term of the
# second carry the coefficients of the Q-before-E normal order instead.
TREFOIL_LEFT_PRINTED = [
    "q^{5/4}(E Q^{-5}+E^{-1}Q^5)-q^{-7/4}(E Q^{-1}+E^{-1}Q)-q^{-3/4}(Q^5+Q^{-5})+q^{1/4}(Q+Q^{-1})",
    "q^3(E^2Q^{-6}+E^{-2}Q^6)+(q^{3/2}+q^{-3/2})(E+E^{-1})-(q^{e}+q^{-5/2})(E Q^{-6}+E^{-1}Q^6)"
    "+(Q^6+Q^{-6})-2(q+q^{-1})",
    "-q^{-7/2}(E^2Q^{-7}+E^{-2}Q^7)+q^{-3}(E Q^{-7}+E^{-1}Q^7)+(q^{-2}-q^{-1})(E Q^{-3}+E^{-1}Q^3)"
    "-q(E Q^{-1}+E^{-1}Q)-(q^{1/2}-q^{-1/2})(Q^3+Q^{-3})+q^{-3/2}(Q+Q^{-1})",
]

TYPO_CANDIDATES = (Fraction(1, 2), Fraction(3, 2), Fraction(5, 2), Fraction(3))
_TYPO_SLOT = "E Q^{-6}+E^{-1}Q^6"


def _sl2() -> RootData:
    return build("sl", 2)


def skein_to_algebra(terms) -> AlgebraElement:
    from .ideals import curve_element

    rd = _sl2()
    total = AlgebraElement.zero(rd)
    for coeff, curve in terms:
        c = LaurentQ({k * _T: v for k, v in coeff.items()})
        x = AlgebraElement.one(rd) if curve is None else curve_element(*curve)
        total = total + x * c
    return total


def printed_trefoil_generators(e=Fraction(1, 3)) -> List[AlgebraElement]:
    """The left-trefoil generators exactly as printed, with ``q^{e}`` in the garbled slot."""
    rd = _sl2()
    texts = [t.replace("{e}", "{" + str(Fraction(e)) + "}") for t in TREFOIL_LEFT_PRINTED]
    return [parse_element(rd, t) for t in texts]


def unknot_preset() -> KnotPreset:
    rd = _sl2()
    return KnotPreset("unknot", "sl2", [parse_element(rd, t) for t in UNKNOT_SL2],
                      "invariant recursion ideal of the unknot for sl(2)")


def trefoil_presets(chirality: str = "left", typo_exponent=None) -> KnotPreset:
    """Invariant recursion generators of the trefoil.

    The left-handed generators are obtained from the skein-level peripheral
    generators via :func:`skein_to_algebra`.  Written with E before Q, the
    second generator contains ``-(q^{1/2} + q^{5/2})(E Q^{-6} + E^{-1} Q^6)``;
    ``typo_exponent`` replaces the ``1/2`` there, the slot whose printed
    exponent is garbled.  The right-handed generators are the images under
    :func:`mirror`.
    """
    if chirality not in ("left", "right"):
        raise ValueError("chirality must be 'left' or 'right'")
    gens = [skein_to_algebra(t) for t in TREFOIL_LEFT_CURVES]
    if typo_exponent is not None:
        rd = _sl2()
        slot = parse_element(rd, _TYPO_SLOT)
        gens[1] = gens[1] + slot * (q_power(Fraction(1, 2)) - q_power(Fraction(typo_exponent)))
    name = "trefoil-left"
    if chirality == "right":
        gens = [mirror(g) for g in gens]
        name = "trefoil-right"
    return KnotPreset(name, "sl2", gens, "skein peripheral ideal of the left-handed trefoil, t = q^{1/4}")


def rec_unknot_sln(rd: RootData) -> AlgebraElement:
    """``sum_i E_{alpha_i} - [n]`` for ``sl(n)``."""
    total = AlgebraElement.zero(rd)
    for i in range(rd.n):
        total = total + E(rd, rd.unit(i))
    return total - quantum_integer(rd.n)


PRESETS = {
    "unknot": unknot_preset,
    "trefoil-left": lambda: trefoil_presets("left"),
    "trefoil-right": lambda: trefoil_presets("right"),
}


def preset(name: str) -> KnotPreset:
    try:
        return PRESETS[name]()
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None


def oracle_for(name: str, framing_shift: int = 0) -> LatticeFunction:
    if name == "unknot":
        return unknot_J(_sl2())
    if name in ("trefoil-left", "trefoil-right"):
        return trefoil_colored_jones_oracle(name.split("-")[1], framing_shift)
    raise KeyError(f"unknown knot {name!r}")


def resolve_trefoil(gens_for, radius: int = 15, framings=range(-6, 7),
                    candidates=TYPO_CANDIDATES, chirality: str = "left") -> List[tuple]:
    """All ``(framing, exponent)`` pairs for which every generator annihilates the oracle.

    ``gens_for(e)`` returns the generator list for the slot exponent ``e``;
    the window is ``1 <= lambda <= radius``.
    """
    rd = _sl2()
    window = [rd.rank1(k) for k in range(1, radius + 1)]
    found = []
    gen_cache = {e: gens_for(e) for e in candidates}
    for f in framings:
        J = trefoil_colored_jones_oracle(chirality, f)
        for e in candidates:
            if annihilation_check(gen_cache[e], J, 0, window=window):
                found.append((f, e))
    return found


def export_oracle(f: LatticeFunction, lambdas: Iterable[int]) -> str:
    """JSON array of ``[lambda, "polynomial"]`` pairs for a rank-one function."""
    import json

    rd = f.rd
    return json.dumps([[k, str(f(rd.rank1(k)))] for k in lambdas])
