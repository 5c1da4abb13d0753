"""The quantum Weyl algebra ``A_g`` of a weight lattice.

Elements are finite sums ``sum c_{a,b} Q_a E_b`` kept in normal order (all
``Q`` to the left of all ``E``), with coefficients in :class:`LaurentQ`.  The
defining relations are

    E_a E_b = E_{a+b},   Q_a Q_b = Q_{a+b},   E_a Q_b = q^{(a,b)} Q_b E_a,

so ``(Q_a E_b)(Q_c E_d) = q^{(b,c)} Q_{a+c} E_{b+d}``.

:class:`CommPoly` is the commutative group algebra of ``Lambda x Lambda``,
the image of evaluation at ``q = 1``.  Its monomials use the same key layout
``(Q-weight, E-weight)`` as :class:`AlgebraElement`.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from .qlaurent import LaurentQ, bar, eval_q1, h_jet
from .rootdata import RootData, RootDataError, Weight, WeylGroupElement

Key = Tuple[Weight, Weight]
Scalar = Union[int, Fraction, LaurentQ]


class AlgebraError(ValueError):
    """Mismatched root data or malformed input."""


class PoissonDegeneracyError(ArithmeticError):
    """A commutator coefficient did not vanish at ``q = 1``."""


@lru_cache(maxsize=1 << 18)
def _qpair(rd: RootData, a: Weight, b: Weight) -> LaurentQ:
    return LaurentQ({rd.pair(a, b): 1})


def _check_same(x, y):
    if x.rd != y.rd:
        raise AlgebraError(f"root data mismatch: {x.rd.name} vs {y.rd.name}")


class AlgebraElement:
    """Normal-ordered element ``sum c_{a,b} Q_a E_b`` of ``A_g``."""

    __slots__ = ("rd", "_terms", "_hash")

    def __init__(self, rd: RootData, terms: Optional[Mapping[Key, Scalar]] = None):
        self.rd = rd
        out: Dict[Key, LaurentQ] = {}
        for (a, b), c in (terms or {}).items():
            k = (rd.canon(a), rd.canon(b))
            c = LaurentQ.coerce(c)
            v = out[k] + c if k in out else c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        self._terms = out
        self._hash = None

    @classmethod
    def _raw(cls, rd: RootData, terms: Dict[Key, LaurentQ]) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj.rd = rd
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, rd: RootData) -> "AlgebraElement":
        return cls._raw(rd, {})

    @classmethod
    def one(cls, rd: RootData) -> "AlgebraElement":
        z = rd.zero()
        return cls._raw(rd, {(z, z): LaurentQ.one()})

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> Dict[Key, LaurentQ]:
        return dict(self._terms)

    def coefficient(self, a: Iterable[int], b: Iterable[int]) -> LaurentQ:
        return self._terms.get((self.rd.canon(tuple(a)), self.rd.canon(tuple(b))), LaurentQ.zero())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def e_support(self):
        return {b for (_, b) in self._terms}

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            _check_same(self, other)
            return other
        if isinstance(other, (int, Fraction, LaurentQ)):
            return AlgebraElement.one(self.rd) * other
        raise TypeError(f"cannot combine AlgebraElement with {type(other).__name__}")

    def __add__(self, other) -> "AlgebraElement":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out[k] + c if k in out else c
            if v:
                out[k] = v
            else:
                del out[k]
        return AlgebraElement._raw(self.rd, out)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._raw(self.rd, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "AlgebraElement":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "AlgebraElement":
        return (-self) + other

    def scale(self, c: Scalar) -> "AlgebraElement":
        c = LaurentQ.coerce(c)
        if not c:
            return AlgebraElement.zero(self.rd)
        return AlgebraElement._raw(self.rd, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction, LaurentQ)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        _check_same(self, other)
        rd = self.rd
        out: Dict[Key, LaurentQ] = {}
        for (a, b), c1 in self._terms.items():
            for (c, d), c2 in other._terms.items():
                k = (rd.add(a, c), rd.add(b, d))
                v = c1 * c2 * _qpair(rd, b, c)
                if k in out:
                    v = out[k] + v
                    if v:
                        out[k] = v
                    else:
                        del out[k]
                else:
                    out[k] = v
        return AlgebraElement._raw(rd, out)

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction, LaurentQ)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            if len(self._terms) != 1:
                raise AlgebraError("only monomials can be inverted")
            return monomial_inverse(self) ** (-n)
        result = AlgebraElement.one(self.rd)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def commutator(self, other: "AlgebraElement") -> "AlgebraElement":
        return self * other - other * self

    # -- comparison -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentQ)):
            other = AlgebraElement.one(self.rd) * other
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.rd == other.rd and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rd, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return render_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.rd.name}, '{self}')"


def monomial_inverse(x: AlgebraElement) -> AlgebraElement:
    """Inverse of ``c Q_a E_b`` for a monomial coefficient ``c``."""
    ((a, b), c), = x._terms.items()
    rd = x.rd
    # (Q_a E_b)^{-1} = E_{-b} Q_{-a} = q^{(b,a)} Q_{-a} E_{-b}
    return AlgebraElement._raw(rd, {(rd.neg(a), rd.neg(b)): c ** -1 * _qpair(rd, b, a)})


class CommPoly:
    """Element of the group algebra ``Q[Lambda x Lambda]`` with rational coefficients."""

    __slots__ = ("rd", "_terms", "_hash")

    def __init__(self, rd: RootData, terms: Optional[Mapping[Key, Union[int, Fraction]]] = None):
        self.rd = rd
        out: Dict[Key, Fraction] = {}
        for (a, b), c in (terms or {}).items():
            k = (rd.canon(a), rd.canon(b))
            v = out.get(k, Fraction(0)) + Fraction(c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        self._terms = out
        self._hash = None

    @classmethod
    def _raw(cls, rd, terms):
        obj = cls.__new__(cls)
        obj.rd = rd
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, rd):
        return cls._raw(rd, {})

    @classmethod
    def one(cls, rd):
        z = rd.zero()
        return cls._raw(rd, {(z, z): Fraction(1)})

    @property
    def terms(self) -> Dict[Key, Fraction]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _coerce(self, other) -> "CommPoly":
        if isinstance(other, CommPoly):
            _check_same(self, other)
            return other
        if isinstance(other, (int, Fraction)):
            return CommPoly.one(self.rd) * other
        raise TypeError

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return CommPoly._raw(self.rd, out)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly._raw(self.rd, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CommPoly.zero(self.rd)
            return CommPoly._raw(self.rd, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, CommPoly):
            return NotImplemented
        _check_same(self, other)
        rd = self.rd
        out: Dict[Key, Fraction] = {}
        for (a, b), c1 in self._terms.items():
            for (c, d), c2 in other._terms.items():
                k = (rd.add(a, c), rd.add(b, d))
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return CommPoly._raw(rd, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative powers of CommPoly are not supported")
        r = CommPoly.one(self.rd)
        for _ in range(n):
            r = r * self
        return r

    def __truediv__(self, k):
        return self * (1 / Fraction(k))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly.one(self.rd) * other
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.rd == other.rd and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rd, frozenset(self._terms.items())))
        return self._hash

    def weyl_act(self, w: WeylGroupElement) -> "CommPoly":
        rd = self.rd
        return CommPoly._raw(rd, {(rd.act(w, a), rd.act(w, b)): c for (a, b), c in self._terms.items()})

    def is_invariant(self) -> bool:
        return all(self.weyl_act(w) == self for w in self.rd.weyl_generators())

    def lift(self) -> AlgebraElement:
        """The element ``sum c_{a,b} Q_a E_b`` of ``A_g``."""
        return AlgebraElement._raw(self.rd, {k: LaurentQ.const(c) for k, c in self._terms.items()})

    def evaluate(self, e_values, q_values) -> Fraction:
        """Evaluate at a point of the torus: ``E_{a} -> prod e_i^{a_i}``, likewise ``Q``."""
        total = Fraction(0)
        for (a, b), c in self._terms.items():
            t = Fraction(c)
            for x, k in zip(q_values, a):
                t *= Fraction(x) ** k
            for x, k in zip(e_values, b):
                t *= Fraction(x) ** k
            total += t
        return total

    def __str__(self):
        return render_comm(self)

    def __repr__(self):
        return f"CommPoly({self.rd.name}, '{self}')"


# -- constructors and operations ------------------------------------------------


def monomial(rd: RootData, a, b, c: Scalar = 1) -> AlgebraElement:
    """``c * Q_a E_b``."""
    try:
        a, b = rd.canon(tuple(a)), rd.canon(tuple(b))
    except RootDataError as exc:
        raise AlgebraError(str(exc)) from exc
    c = LaurentQ.coerce(c)
    return AlgebraElement._raw(rd, {(a, b): c} if c else {})


def E(rd: RootData, a) -> AlgebraElement:
    return monomial(rd, rd.zero(), a)


def Q(rd: RootData, a) -> AlgebraElement:
    return monomial(rd, a, rd.zero())


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def weyl_act(w: WeylGroupElement, x: AlgebraElement) -> AlgebraElement:
    """Apply ``w`` to ``Q_a E_b -> Q_{wa} E_{wb}`` (an algebra automorphism)."""
    rd = x.rd
    rd.check_element(w)
    return AlgebraElement._raw(rd, {(rd.act(w, a), rd.act(w, b)): c for (a, b), c in x._terms.items()})


def symmetrize(x: AlgebraElement) -> AlgebraElement:
    """``sum_{w in W} w . x``."""
    total = AlgebraElement.zero(x.rd)
    for w in x.rd.weyl_elements():
        total = total + weyl_act(w, x)
    return total


def is_invariant(x: AlgebraElement) -> bool:
    return all(weyl_act(w, x) == x for w in x.rd.weyl_generators())


def epsilon(x: AlgebraElement) -> CommPoly:
    """Evaluation at ``q = 1``."""
    out = {}
    for k, c in x._terms.items():
        v = eval_q1(c)
        if v:
            out[k] = v
    return CommPoly._raw(x.rd, out)


def _as_element(x) -> AlgebraElement:
    if isinstance(x, CommPoly):
        return x.lift()
    return x


def poisson(x, y) -> CommPoly:
    """First-order bracket ``(xy - yx)/h mod h`` with ``q = e^h``.

    Accepts :class:`AlgebraElement` or :class:`CommPoly` arguments (the
    latter are lifted monomial-wise).  The result depends only on the
    images of ``x`` and ``y`` at ``q = 1``.
    """
    x, y = _as_element(x), _as_element(y)
    _check_same(x, y)
    comm = x * y - y * x
    out = {}
    for k, c in comm._terms.items():
        jet = h_jet(c)
        if jet.c0:
            raise PoissonDegeneracyError(
                f"commutator coefficient {c} of {k} does not vanish at q=1"
            )
        if jet.c1:
            out[k] = jet.c1
    return CommPoly._raw(x.rd, out)


def tau_lift(rd: RootData, a: int, b: int) -> AlgebraElement:
    """Normal-ordered preimage of the trace function ``tau_{a,b}``.

    ``sum_i E_i^a Q_i^b`` for ``sl(n)`` and
    ``sum_i (E_i^a Q_i^b + E_i^{-a} Q_i^{-b})`` for the other families, with
    the products taken in the written order.
    """
    total = AlgebraElement.zero(rd)
    for i in range(rd.n):
        u = rd.unit(i)
        total = total + E(rd, rd.scale(a, u)) * Q(rd, rd.scale(b, u))
        if not rd.is_sl:
            total = total + E(rd, rd.scale(-a, u)) * Q(rd, rd.scale(-b, u))
    return total


def mirror(x: AlgebraElement) -> AlgebraElement:
    """The semilinear automorphism ``Q -> Q^{-1}``, ``q -> q^{-1}``.

    It maps the normal-ordered monomial ``c Q_a E_b`` to ``bar(c) Q_{-a} E_b``,
    which is again normal-ordered.
    """
    rd = x.rd
    return AlgebraElement._raw(rd, {(rd.neg(a), b): bar(c) for (a, b), c in x._terms.items()})


# -- text form ------------------------------------------------------------------


def _fmt_weight(rd: RootData, w: Weight) -> str:
    return "[" + ",".join(str(v) for v in w) + "]"


def _fmt_coeff(c: LaurentQ, is_unit_monomial: bool) -> Tuple[str, str]:
    """Return (sign, body) for a coefficient."""
    if len(c) == 1:
        ((e, v),) = c.items()
        sign = "-" if v < 0 else "+"
        mag = str(-c) if v < 0 else str(c)
        if is_unit_monomial:
            return sign, mag
        if mag == "1":
            return sign, ""
        return sign, mag + "*"
    body = f"({c})"
    return "+", body if is_unit_monomial else body + "*"


def render_element(x: AlgebraElement) -> str:
    if not x._terms:
        return "0"
    rd = x.rd
    z = rd.zero()
    parts = []
    for (a, b) in sorted(x._terms, key=lambda k: (k[1], k[0]), reverse=True):
        c = x._terms[(a, b)]
        mono = ""
        if a != z:
            mono += "Q" + _fmt_weight(rd, a)
        if b != z:
            mono += "E" + _fmt_weight(rd, b)
        sign, body = _fmt_coeff(c, not mono)
        parts.append((sign, body + mono))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def render_comm(p: CommPoly) -> str:
    if not p._terms:
        return "0"
    rd = p.rd
    z = rd.zero()
    parts = []
    for (a, b) in sorted(p._terms, key=lambda k: (k[1], k[0]), reverse=True):
        c = p._terms[(a, b)]
        mono = ""
        if a != z:
            mono += "Q" + _fmt_weight(rd, a)
        if b != z:
            mono += "E" + _fmt_weight(rd, b)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        magstr = str(mag)
        if not mono:
            body = magstr
        elif mag == 1:
            body = mono
        else:
            body = f"{magstr}*{mono}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<q>q)|(?P<gen>[EQ])|(?P<op>[-+*^()\[\]{},_]))"
)


class ParseError(AlgebraError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class _Parser:
    """Recursive-descent parser for operator expressions.

    Grammar (products are taken in written order and normal-ordered)::

        expr   := ['-'|'+'] term (('+'|'-') term)*
        term   := factor (['*'] factor)*
        factor := atom ['^' exponent]
        atom   := number | 'q' | 'E' [index] | 'Q' [index] | '(' expr ')'
        index  := '[' int (',' int)* ']' | '_' int
        exponent := int | '{' rational '}' | '(' rational ')'

    Bare ``E``/``Q`` are ``E_{alpha_1}``/``Q_{alpha_1}`` (the lattice
    generator for ``sl(2)``); ``E_i`` is ``E_{alpha_i}`` (1-based).
    """

    def __init__(self, rd: RootData, text: str, commutative: bool = False):
        self.rd = rd
        self.text = text
        self.toks = []
        pos = 0
        text_s = text.rstrip()
        while pos < len(text_s):
            m = _TOKEN.match(text_s, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text_s[pos]!r}", pos)
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self, value=None):
        tok = self.peek()
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r}", tok[2])
        if tok[0] is None:
            raise ParseError("unexpected end of input", tok[2])
        self.i += 1
        return tok

    def parse(self) -> AlgebraElement:
        if not self.toks:
            raise ParseError("empty expression", 0)
        x = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"unexpected token {self.peek()[1]!r}", self.peek()[2])
        return x

    def expr(self):
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        x = self.term()
        if sign < 0:
            x = -x
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            y = self.term()
            x = x + y if op == "+" else x - y
        return x

    def term(self):
        x = self.factor()
        while True:
            kind, val, _ = self.peek()
            if val == "*":
                self.take()
                x = x * self.factor()
            elif kind in ("num", "q", "gen") or val == "(":
                x = x * self.factor()
            else:
                return x

    def _int(self) -> int:
        sign = 1
        if self.peek()[1] in ("-", "+"):
            sign = -1 if self.take()[1] == "-" else 1
        kind, val, pos = self.take()
        if kind != "num" or "/" in val:
            raise ParseError("expected integer", pos)
        return sign * int(val)

    def _rational(self) -> Fraction:
        sign = 1
        if self.peek()[1] in ("-", "+"):
            sign = -1 if self.take()[1] == "-" else 1
        kind, val, pos = self.take()
        if kind != "num":
            raise ParseError("expected number", pos)
        return sign * Fraction(val)

    def exponent(self) -> Fraction:
        if self.peek()[1] == "{":
            self.take()
            e = self._rational()
            self.take("}")
            return e
        if self.peek()[1] == "(":
            self.take()
            e = self._rational()
            self.take(")")
            return e
        return Fraction(self._int())

    def factor(self):
        kind, val, pos = self.peek()
        base_is_q = kind == "q"
        x = self.atom()
        if self.peek()[1] == "^":
            self.take()
            e = self.exponent()
            if base_is_q:
                return AlgebraElement.one(self.rd) * LaurentQ({e: 1})
            if e.denominator != 1:
                raise ParseError("fractional power of an operator", pos)
            if isinstance(x, tuple):
                gen, w = x
                return self._gen(gen, self.rd.scale(int(e), w))
            return x ** int(e)
        if isinstance(x, tuple):
            return self._gen(*x)
        if base_is_q:
            return AlgebraElement.one(self.rd) * LaurentQ({1: 1})
        return x

    def _gen(self, gen, w):
        return E(self.rd, w) if gen == "E" else Q(self.rd, w)

    def atom(self):
        kind, val, pos = self.take()
        rd = self.rd
        if kind == "num":
            return AlgebraElement.one(rd) * Fraction(val)
        if kind == "q":
            return None
        if kind == "gen":
            nxt = self.peek()[1]
            if nxt == "[":
                self.take()
                coords = [self._int()]
                while self.peek()[1] == ",":
                    self.take()
                    coords.append(self._int())
                self.take("]")
                if len(coords) != rd.n:
                    raise ParseError(f"weight needs {rd.n} coordinates", pos)
                return (val, rd.canon(tuple(coords)))
            if nxt == "_":
                self.take()
                i = self._int()
                if not 1 <= i <= rd.n:
                    raise ParseError(f"index {i} out of range", pos)
                return (val, rd.unit(i - 1))
            return (val, rd.unit(0))
        if val == "(":
            x = self.expr()
            self.take(")")
            return x
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_element(rd: RootData, text: str) -> AlgebraElement:
    """Parse an operator expression such as ``"q^{3/2}*Q[1,0]E[0,1] + E^{-1}"``."""
    return _Parser(rd, text).parse()


def parse_comm(rd: RootData, text: str) -> CommPoly:
    """Parse a commutative expression (any ``q`` is set to ``1``)."""
    return epsilon(parse_element(rd, text))
