"""Buchberger's algorithm over the rationals.

Polynomials are dicts ``{exponent tuple: Fraction}``; the monomial order is
graded reverse lexicographic.  Resource guards stop the computation with
:class:`GroebnerExceeded` rather than ever returning a partial basis.
"""
from __future__ import annotations

import os
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

Monomial = Tuple[int, ...]
Poly = Dict[Monomial, Fraction]

DEFAULT_MAX_BASIS = 20000
DEFAULT_MAX_DEGREE = 200
DEFAULT_MAX_STEPS = 200000


class GroebnerExceeded(RuntimeError):
    """A resource guard was hit; no answer is available."""


def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-x for x in reversed(m)))


def leading(p: Poly) -> Monomial:
    return max(p, key=_grevlex_key)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monic(p: Poly) -> Poly:
    if not p:
        return p
    c = p[leading(p)]
    if c == 1:
        return p
    return {m: v / c for m, v in p.items()}


def _axpy(target: Poly, coef: Fraction, shift: Monomial, p: Poly) -> None:
    # target -= coef * x^shift * p
    for m, c in p.items():
        k = tuple(x + y for x, y in zip(m, shift))
        v = target.get(k, 0) - coef * c
        if v:
            target[k] = v
        else:
            target.pop(k, None)


def normal_form(p: Poly, basis: Sequence[Poly], leads: Optional[Sequence[Monomial]] = None) -> Poly:
    """Full reduction of ``p`` modulo ``basis`` (all terms reduced)."""
    if leads is None:
        leads = [leading(g) for g in basis]
    p = dict(p)
    rem: Poly = {}
    while p:
        m = leading(p)
        c = p[m]
        for g, lm in zip(basis, leads):
            if _divides(lm, m):
                _axpy(p, c / g[lm], _sub(m, lm), g)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


class Limits:
    def __init__(self, max_basis: int = DEFAULT_MAX_BASIS, max_degree: int = DEFAULT_MAX_DEGREE,
                 max_steps: Optional[int] = None):
        if max_steps is None:
            max_steps = int(os.environ.get("QWEYL_GUARD_STEPS", DEFAULT_MAX_STEPS))
        self.max_basis = max_basis
        self.max_degree = max_degree
        self.max_steps = max_steps


def groebner_basis(polys: Sequence[Poly], limits: Optional[Limits] = None) -> List[Poly]:
    """Reduced Gröbner basis (monic, sorted by leading monomial) of ``polys``."""
    limits = limits or Limits()
    basis: List[Poly] = []
    leads: List[Monomial] = []
    pairs: List[Tuple[int, int]] = []
    steps = 0

    def add(h: Poly):
        h = monic(h)
        lm = leading(h)
        if sum(lm) > limits.max_degree:
            raise GroebnerExceeded(f"degree {sum(lm)} exceeds limit {limits.max_degree}")
        basis.append(h)
        leads.append(lm)
        if len(basis) > limits.max_basis:
            raise GroebnerExceeded(f"basis size exceeds {limits.max_basis}")
        j = len(basis) - 1
        for i in range(j):
            pairs.append((i, j))

    for p in polys:
        h = normal_form(p, basis, leads)
        if h:
            add(h)
    while pairs:
        # normal selection strategy
        best = min(range(len(pairs)), key=lambda t: _grevlex_key(_lcm(leads[pairs[t][0]], leads[pairs[t][1]])))
        i, j = pairs.pop(best)
        if basis[i] is None or basis[j] is None:
            continue
        li, lj = leads[i], leads[j]
        lcm = _lcm(li, lj)
        # product criterion
        if all(min(x, y) == 0 for x, y in zip(li, lj)):
            continue
        # chain criterion
        if any(
            k not in (i, j) and basis[k] is not None and _divides(leads[k], lcm)
            and (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        steps += 1
        if steps > limits.max_steps:
            raise GroebnerExceeded(f"step limit {limits.max_steps} exceeded")
        s: Poly = {}
        _axpy(s, Fraction(-1), _sub(lcm, li), basis[i])
        _axpy(s, Fraction(1), _sub(lcm, lj), basis[j])
        active = [(g, lm) for g, lm in zip(basis, leads) if g is not None]
        h = normal_form(s, [g for g, _ in active], [lm for _, lm in active])
        if h:
            add(h)
            if leads[-1] == tuple(0 for _ in leads[-1]):
                return [{leads[-1]: Fraction(1)}]
    return reduce_basis([g for g in basis if g is not None])


def reduce_basis(basis: Sequence[Poly]) -> List[Poly]:
    """Minimal, then interreduced, monic basis."""
    gs = [monic(g) for g in basis if g]
    gs.sort(key=lambda g: _grevlex_key(leading(g)))
    minimal: List[Poly] = []
    for g in gs:
        lm = leading(g)
        if not any(_divides(leading(h), lm) for h in minimal):
            minimal = [h for h in minimal if not _divides(lm, leading(h))]
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        out.append(monic(normal_form(g, others)))
    out.sort(key=lambda g: _grevlex_key(leading(g)))
    return out


def is_unit_ideal(basis: Sequence[Poly]) -> bool:
    return any(set(g) == {tuple(0 for _ in next(iter(g)))} for g in basis)
