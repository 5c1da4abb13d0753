"""Exact Laurent polynomials in fractional powers of ``q``.

A :class:`LaurentQ` is a finite sum ``sum_e c_e q^e`` where every exponent
``e`` is a rational number and every coefficient ``c_e`` is a nonzero
:class:`fractions.Fraction`.  Internally the exponents are stored as integer
numerators over a common denominator ``denom`` which is kept minimal, so two
equal values always have identical internal state.

The module also provides the first-order jet :class:`HJet` obtained by
substituting ``q = e^h`` and truncating modulo ``h^2``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Dict, Iterator, Mapping, NamedTuple, Tuple, Union

Number = Union[int, Fraction]

__all__ = [
    "LaurentQ",
    "HJet",
    "q_power",
    "quantum_integer",
    "add",
    "mul",
    "eval_q1",
    "bar",
    "h_jet",
    "parse_laurent",
]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class HJet(NamedTuple):
    """``c0 + c1*h`` modulo ``h^2``; multiplication is that of dual numbers."""

    c0: Fraction
    c1: Fraction

    def __add__(self, other):
        return HJet(self.c0 + other.c0, self.c1 + other.c1)

    def __mul__(self, other):
        return HJet(self.c0 * other.c0, self.c0 * other.c1 + self.c1 * other.c0)


class LaurentQ:
    """Immutable Laurent polynomial in ``q^(1/denom)`` with rational coefficients."""

    __slots__ = ("_denom", "_terms", "_hash")

    def __init__(self, terms: Mapping[Number, Number] | None = None):
        # Public constructor: keys are exponents (int, Fraction or "a/b" str).
        acc: Dict[Fraction, Fraction] = {}
        for e, c in (terms or {}).items():
            e = Fraction(e)
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        denom = 1
        for e in acc:
            denom = _lcm(denom, e.denominator)
        raw = {}
        for e, c in acc.items():
            if c:
                raw[int(e * denom)] = c
        self._set(denom, raw)

    @classmethod
    def _raw(cls, denom: int, terms: Dict[int, Fraction]) -> "LaurentQ":
        # ``terms`` must already be free of zero coefficients.
        obj = cls.__new__(cls)
        obj._set(denom, terms)
        return obj

    def _set(self, denom: int, terms: Dict[int, Fraction]) -> None:
        g = denom
        for k in terms:
            g = gcd(g, k)
            if g == 1:
                break
        if not terms:
            g = denom
        if g > 1:
            denom //= g
            terms = {k // g: c for k, c in terms.items()}
        self._denom = denom
        self._terms = terms
        self._hash = None

    # -- construction helpers -------------------------------------------
    @classmethod
    def zero(cls) -> "LaurentQ":
        return cls._raw(1, {})

    @classmethod
    def one(cls) -> "LaurentQ":
        return cls._raw(1, {0: Fraction(1)})

    @classmethod
    def const(cls, c: Number) -> "LaurentQ":
        c = Fraction(c)
        return cls._raw(1, {0: c} if c else {})

    @classmethod
    def coerce(cls, x) -> "LaurentQ":
        if isinstance(x, LaurentQ):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, str):
            return parse_laurent(x)
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")

    # -- inspection -------------------------------------------------------
    @property
    def denom(self) -> int:
        return self._denom

    def terms(self) -> Dict[Fraction, Fraction]:
        """Mapping exponent -> coefficient (a fresh dict)."""
        d = self._denom
        return {Fraction(k, d): c for k, c in self._terms.items()}

    def items(self) -> Iterator[Tuple[Fraction, Fraction]]:
        d = self._denom
        for k in sorted(self._terms, reverse=True):
            yield Fraction(k, d), self._terms[k]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, e: Number) -> Fraction:
        e = Fraction(e) * self._denom
        if e.denominator != 1:
            return Fraction(0)
        return self._terms.get(int(e), Fraction(0))

    def degree(self) -> Fraction:
        if not self._terms:
            raise ValueError("degree of zero")
        return Fraction(max(self._terms), self._denom)

    def valuation(self) -> Fraction:
        if not self._terms:
            raise ValueError("valuation of zero")
        return Fraction(min(self._terms), self._denom)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    # -- arithmetic -------------------------------------------------------
    def _rescaled(self, denom: int) -> Dict[int, Fraction]:
        f = denom // self._denom
        if f == 1:
            return self._terms
        return {k * f: c for k, c in self._terms.items()}

    def __add__(self, other) -> "LaurentQ":
        if not isinstance(other, LaurentQ):
            try:
                other = LaurentQ.coerce(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        d = _lcm(self._denom, other._denom)
        out = dict(self._rescaled(d))
        for k, c in other._rescaled(d).items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v += c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return LaurentQ._raw(d, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQ":
        return LaurentQ._raw(self._denom, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentQ":
        if not isinstance(other, LaurentQ):
            try:
                other = LaurentQ.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentQ":
        return (-self) + other

    def __mul__(self, other) -> "LaurentQ":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentQ.zero()
            return LaurentQ._raw(self._denom, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentQ):
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentQ.zero()
        d = _lcm(self._denom, other._denom)
        a, b = self._rescaled(d), other._rescaled(d)
        out: Dict[int, Fraction] = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentQ._raw(d, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentQ":
        if n < 0:
            if len(self._terms) != 1:
                raise ArithmeticError("only monomials are invertible")
            (k, c), = self._terms.items()
            return LaurentQ._raw(self._denom, {k * n: Fraction(c) ** n})
        result = LaurentQ.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e: Number) -> "LaurentQ":
        """Multiply by ``q^e``."""
        e = Fraction(e)
        d = _lcm(self._denom, e.denominator)
        s = int(e * d)
        return LaurentQ._raw(d, {k + s: c for k, c in self._rescaled(d).items()})

    def divmod_exact(self, other: "LaurentQ") -> "LaurentQ":
        """Exact quotient ``self / other``; raises ``ArithmeticError`` if it is not a Laurent polynomial."""
        if not other._terms:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self._terms:
            return LaurentQ.zero()
        d = _lcm(self._denom, other._denom)
        num = dict(self._rescaled(d))
        den = other._rescaled(d)
        dtop = max(den)
        dlow = min(den)
        lead = den[dtop]
        quot: Dict[int, Fraction] = {}
        # Long division from the top; the support of the remainder shrinks
        # below ``min(num) + (dtop - dlow)`` only if the division fails.
        floor = min(num) - dlow
        while num:
            top = max(num)
            k = top - dtop
            if k < floor:
                raise ArithmeticError("Laurent division is not exact")
            c = num[top] / lead
            quot[k] = c
            for j, cj in den.items():
                t = j + k
                v = num.get(t, 0) - c * cj
                if v:
                    num[t] = v
                else:
                    num.pop(t, None)
        return LaurentQ._raw(d, quot)

    def __truediv__(self, other) -> "LaurentQ":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self.divmod_exact(LaurentQ.coerce(other))

    def substitute_power(self, k: Number) -> "LaurentQ":
        """Substitute ``q -> q^k`` (``k = -1`` is :func:`bar`)."""
        k = Fraction(k)
        return LaurentQ({e * k: c for e, c in self.terms().items()})

    # -- comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentQ.const(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self._denom == other._denom and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._denom, frozenset(self._terms.items())))
        return self._hash

    # -- rendering --------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = _fmt_frac(a)
            else:
                mono = "q" if e == 1 else f"q^{{{_fmt_frac(e)}}}"
                body = mono if a == 1 else f"{_fmt_frac(a)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentQ('{self}')"


def _fmt_frac(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def q_power(e: Number, c: Number = 1) -> LaurentQ:
    """The monomial ``c*q^e``."""
    return LaurentQ({Fraction(e): c})


def quantum_integer(n: int) -> LaurentQ:
    """``[n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2))``; odd in ``n``."""
    if n < 0:
        return -quantum_integer(-n)
    # [n] = q^((n-1)/2) + q^((n-3)/2) + ... + q^(-(n-1)/2)
    return LaurentQ._raw(2, {n - 1 - 2 * i: Fraction(1) for i in range(n)})


def add(x: LaurentQ, y: LaurentQ) -> LaurentQ:
    return x + y


def mul(x: LaurentQ, y: LaurentQ) -> LaurentQ:
    return x * y


def eval_q1(x: LaurentQ) -> Fraction:
    """Value at ``q = 1``."""
    return sum(x._terms.values(), Fraction(0))


def bar(x: LaurentQ) -> LaurentQ:
    """The involution ``q -> q^{-1}``."""
    return LaurentQ._raw(x._denom, {-k: c for k, c in x._terms.items()})


def h_jet(x: LaurentQ) -> HJet:
    """Expand ``x(e^h)`` to first order: ``q^e = 1 + e*h mod h^2``."""
    d = x._denom
    c0 = Fraction(0)
    c1 = Fraction(0)
    for k, c in x._terms.items():
        c0 += c
        c1 += c * k
    return HJet(c0, c1 / d)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?
        (?P<q>q(?:\s*\^\s*(?:\{\s*(?P<eb>-?\d+(?:/\d+)?)\s*\}|(?P<e>-?\d+(?:/\d+)?)))?)?
        \s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentQ:
    """Parse the rendering produced by ``str(LaurentQ)``.

    Accepts sums of terms ``c``, ``q``, ``c*q^{e}``, ``q^e`` with rational
    ``c`` and ``e``, for example ``q^{3/2} - 2*q^{-1/2} + 1``.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty Laurent polynomial")
    pos = 0
    acc: Dict[Fraction, Fraction] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group("coef") is None and m.group("q") is None):
            raise ValueError(f"cannot parse Laurent polynomial at position {pos}: {text!r}")
        if m.group("sign") is None and not first:
            raise ValueError(f"missing operator at position {pos}: {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("q"):
            e = m.group("eb") or m.group("e")
            exp = Fraction(e) if e is not None else Fraction(1)
        else:
            exp = Fraction(0)
        acc[exp] = acc.get(exp, Fraction(0)) + sign * coef
        pos = m.end()
        first = False
    return LaurentQ(acc)
