"""Trace functions on the torus character variety and the Goldman bracket.

``tau_poly(rd, a, b)`` is the trace function of ``L^a M^b`` written in the
commutative ring ``C[Lambda x Lambda]^W``.  For ``sl(n)`` it is
``sum_i x_i^a y_i^b`` and for the symplectic and orthogonal families it is
``sum_i (x_i^a y_i^b + x_i^{-a} y_i^{-b})``.

The torus Goldman bracket is::

    sl(n):   {t_{a,b}, t_{c,d}} = det * (t_{a+c,b+d} - t_{a,b} t_{c,d} / n)
    sp, so:  {t_{a,b}, t_{c,d}} = det * (t_{a+c,b+d} - t_{a-c,b-d})

with ``det = ad - bc``.  :func:`compare_brackets` checks it against the
first order commutator of the lifts ``tau_lift``.
"""
from __future__ import annotations

import builtins
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .algebra import CommPoly, epsilon, poisson, tau_lift
from .rootdata import RootData


@dataclass(frozen=True)
class TorusTrace:
    """The trace function ``tau_{a,b}``."""

    a: int
    b: int

    def __iter__(self):
        return iter((self.a, self.b))

    def __str__(self):
        return f"tau[{self.a},{self.b}]"


def _pair(t) -> Tuple[int, int]:
    a, b = t
    return int(a), int(b)


def tau_poly(rd: RootData, a: int, b: int) -> CommPoly:
    """``tau_{a,b}`` as an element of ``C[Lambda x Lambda]``; equals ``epsilon(tau_lift)``."""
    return epsilon(tau_lift(rd, a, b))


def goldman_bracket(rd: RootData, t1, t2) -> CommPoly:
    a, b = _pair(t1)
    c, d = _pair(t2)
    det = a * d - b * c
    if det == 0:
        return CommPoly.zero(rd)
    if rd.is_sl:
        body = tau_poly(rd, a + c, b + d) - tau_poly(rd, a, b) * tau_poly(rd, c, d) / rd.n
    else:
        body = tau_poly(rd, a + c, b + d) - tau_poly(rd, a - c, b - d)
    return body * det


def _quadruple(rd: RootData, quad) -> Optional[dict]:
    a, b, c, d = quad
    lhs = poisson(tau_lift(rd, a, b), tau_lift(rd, c, d))
    rhs = goldman_bracket(rd, (a, b), (c, d))
    if lhs == rhs:
        return None
    return {"a": a, "b": b, "c": c, "d": d, "lhs": str(lhs), "rhs": str(rhs)}


def _chunk(args):
    rd, quads = args
    return [_quadruple(rd, q) for q in quads]


@dataclass
class BracketReport:
    algebra: str
    range: int
    checked: int
    failures: List[dict]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"algebra": self.algebra, "range": self.range, "checked": self.checked,
                "failures": self.failures}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def compare_brackets(rd: RootData, range: int, parallel: int = 1,
                     max_failures: Optional[int] = None) -> BracketReport:
    """Compare ``poisson(tau_lift, tau_lift)`` with :func:`goldman_bracket`.

    Every quadruple with ``|a|, |b|, |c|, |d| <= range`` is checked; the
    failures are listed in the lexicographic order of the quadruples
    whatever the number of workers.
    """
    r = int(range)
    if r < 0:
        raise ValueError("range must be non-negative")
    span = builtins.range(-r, r + 1)  # ``range`` is shadowed by the parameter
    quads = list(itertools.product(span, repeat=4))
    if parallel > 1 and len(quads) > 1:
        size = -(-len(quads) // (4 * parallel))
        chunks = [(rd, quads[i:i + size]) for i in builtins.range(0, len(quads), size)]
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = [x for part in pool.map(_chunk, chunks) for x in part]
    else:
        results = [_quadruple(rd, q) for q in quads]
    failures = [f for f in results if f is not None]
    if max_failures is not None:
        failures = failures[:max_failures]
    return BracketReport(rd.name, r, len(quads), failures)
