"""Weight lattices, dual Killing forms and Weyl groups of classical Lie algebras.

Conventions
-----------
``sl(n)``
    Weights are integer vectors of length ``n`` in the redundant basis
    ``alpha_1, ..., alpha_n`` of the weights of the defining representation,
    subject to ``alpha_1 + ... + alpha_n = 0``.  The canonical representative
    of a class is the vector whose minimum coordinate is ``0``.  The pairing is
    ``(x, y) = sum x_i y_i - (sum x)(sum y)/n``.
``sp(2n)``, ``so(2n)``, ``so(2n+1)``
    Weights are integer vectors of length ``n`` in the basis dual to the
    diagonal Cartan elements ``H_i = E_ii - E_{n+i,n+i}``; the pairing is the
    standard dot product.

Weyl group elements are signed permutations ``w = (perm, signs)`` acting by
``(w.x)[perm[i]] = signs[i] * x[i]``.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

Weight = Tuple[int, ...]

FAMILIES = ("sl", "sp", "so_even", "so_odd")
WEYL_GUARD = 10 ** 6


class RootDataError(ValueError):
    """Unsupported family/parameter or incompatible weights."""


@dataclass(frozen=True)
class WeylGroupElement:
    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))) or len(self.signs) != len(self.perm):
            raise RootDataError(f"not a signed permutation: {self.perm}, {self.signs}")

    @classmethod
    def identity(cls, n: int) -> "WeylGroupElement":
        return cls(tuple(range(n)), (1,) * n)

    def raw_act(self, x: Sequence) -> tuple:
        out = [0] * len(self.perm)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * x[i]
        return tuple(out)

    def __mul__(self, other: "WeylGroupElement") -> "WeylGroupElement":
        # (self * other).x == self.(other.x)
        n = len(self.perm)
        perm = tuple(self.perm[other.perm[i]] for i in range(n))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(n))
        return WeylGroupElement(perm, signs)

    def inverse(self) -> "WeylGroupElement":
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i, p in enumerate(self.perm):
            perm[p] = i
            signs[p] = self.signs[i]
        return WeylGroupElement(tuple(perm), tuple(signs))

    def sgn(self) -> int:
        """Determinant of the signed permutation matrix."""
        return _perm_sign(self.perm) * math.prod(self.signs)


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _d_of(family: str, n: int) -> int:
    # D(g): smallest D with all pairing values of the weight lattice in Z/D
    if family == "sl":
        return n
    if family == "sp":
        return 1
    m = 2 * n if family == "so_even" else 2 * n + 1
    return {0: 2, 1: 1, 2: 4, 3: 2}[m % 4]


@dataclass(frozen=True)
class RootData:
    """Rank, pairing, ``rho`` and Weyl group of a classical Lie algebra.

    ``n`` is the family parameter: ``sl(n)``, ``sp(2n)``, ``so(2n)``,
    ``so(2n+1)``.  ``dim`` is the length of weight vectors (``n`` for every
    family; for ``sl(n)`` the rank is ``n - 1``).
    """

    family: str
    n: int
    perturb: Fraction = field(default=Fraction(0), compare=True)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RootDataError(f"unsupported family {self.family!r}")
        low = {"sl": 2, "sp": 1, "so_odd": 1, "so_even": 2}[self.family]
        if not isinstance(self.n, int) or self.n < low:
            raise RootDataError(f"{self.family}: parameter must be >= {low}, got {self.n!r}")

    # -- basic data -----------------------------------------------------------
    @property
    def name(self) -> str:
        if self.family == "sl":
            return f"sl{self.n}"
        if self.family == "sp":
            return f"sp{2 * self.n}"
        if self.family == "so_even":
            return f"so{2 * self.n}"
        return f"so{2 * self.n + 1}"

    @property
    def dim(self) -> int:
        return self.n

    @property
    def rank(self) -> int:
        return self.n - 1 if self.family == "sl" else self.n

    @property
    def D(self) -> int:
        return _d_of(self.family, self.n)

    @property
    def is_sl(self) -> bool:
        return self.family == "sl"

    @property
    def pairing(self) -> List[List[Fraction]]:
        """Gram matrix of the pairing on the coordinate basis vectors."""
        n = self.n
        return [[self.pair(self.unit(i), self.unit(j)) for j in range(n)] for i in range(n)]

    @property
    def rho(self) -> Tuple[Fraction, ...]:
        """Half-sum of positive roots in coordinates (may be half-integral)."""
        n = self.n
        if self.family == "sl":
            # (n-1)/2, (n-3)/2, ... shifted by a multiple of (1,...,1)
            return tuple(Fraction(n - 1 - i) for i in range(n))
        if self.family == "sp":
            return tuple(Fraction(n - i) for i in range(n))
        if self.family == "so_even":
            return tuple(Fraction(n - 1 - i) for i in range(n))
        return tuple(Fraction(2 * (n - i) - 1, 2) for i in range(n))

    # -- weights ----------------------------------------------------------------
    def canon(self, x: Sequence[int]) -> Weight:
        if len(x) != self.n:
            raise RootDataError(f"weight {tuple(x)} has length {len(x)}, expected {self.n}")
        if self.family == "sl":
            m = min(x)
            if m:
                return tuple(v - m for v in x)
        return tuple(x)

    def zero(self) -> Weight:
        return (0,) * self.n

    def unit(self, i: int) -> Weight:
        """The basis weight ``alpha_{i+1}`` (0-based ``i``)."""
        v = [0] * self.n
        v[i] = 1
        return self.canon(v)

    def add(self, a: Sequence[int], b: Sequence[int]) -> Weight:
        return self.canon(tuple(x + y for x, y in zip(a, b)))

    def neg(self, a: Sequence[int]) -> Weight:
        return self.canon(tuple(-x for x in a))

    def scale(self, k: int, a: Sequence[int]) -> Weight:
        return self.canon(tuple(k * x for x in a))

    def rank1(self, k: int) -> Weight:
        """``k * alpha_1``; for ``sl(2)`` and rank-one families this is the integer ``k``."""
        return self.scale(k, self.unit(0))

    def pair(self, a: Sequence, b: Sequence) -> Fraction:
        if len(a) != self.n or len(b) != self.n:
            raise RootDataError("rank mismatch in pairing")
        dot = sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))
        if self.family == "sl":
            dot -= Fraction(sum(a)) * sum(b) / self.n
        if self.perturb:
            # negative control only: breaks the invariance of the form
            dot += self.perturb * a[0] * b[0]
        return dot

    def window(self, radius: int) -> Iterator[Weight]:
        """Weights with coordinates in ``[-radius, radius]`` in a lattice basis.

        For ``sl(n)`` the basis is ``alpha_1..alpha_{n-1}``, otherwise the
        coordinate basis.
        """
        r = range(-radius, radius + 1)
        if self.family == "sl":
            for c in itertools.product(r, repeat=self.n - 1):
                yield self.canon(c + (0,))
        else:
            for c in itertools.product(r, repeat=self.n):
                yield c

    # -- Weyl group -------------------------------------------------------------
    def weyl_order(self) -> int:
        n = self.n
        if self.family == "sl":
            return math.factorial(n)
        if self.family == "so_even":
            return 2 ** (n - 1) * math.factorial(n)
        return 2 ** n * math.factorial(n)

    def weyl_elements(self) -> Iterator[WeylGroupElement]:
        if self.weyl_order() > WEYL_GUARD:
            raise RootDataError(f"Weyl group of {self.name} too large to enumerate")
        n = self.n
        sign_sets: List[Tuple[int, ...]]
        if self.family == "sl":
            sign_sets = [(1,) * n]
        else:
            sign_sets = list(itertools.product((1, -1), repeat=n))
            if self.family == "so_even":
                sign_sets = [s for s in sign_sets if math.prod(s) == 1]
        for perm in itertools.permutations(range(n)):
            for s in sign_sets:
                yield WeylGroupElement(perm, s)

    def weyl_generators(self) -> List[WeylGroupElement]:
        """Simple reflections."""
        n = self.n
        gens = []
        for i in range(n - 1):
            p = list(range(n))
            p[i], p[i + 1] = p[i + 1], p[i]
            gens.append(WeylGroupElement(tuple(p), (1,) * n))
        if self.family in ("sp", "so_odd"):
            gens.append(WeylGroupElement(tuple(range(n)), (1,) * (n - 1) + (-1,)))
        elif self.family == "so_even":
            p = list(range(n))
            p[n - 2], p[n - 1] = p[n - 1], p[n - 2]
            gens.append(WeylGroupElement(tuple(p), (1,) * (n - 2) + (-1, -1)))
        return gens

    def check_element(self, w: WeylGroupElement) -> None:
        if len(w.perm) != self.n:
            raise RootDataError("rank mismatch between Weyl element and root data")
        if self.family == "sl" and any(s != 1 for s in w.signs):
            raise RootDataError("sign changes are not in the Weyl group of sl(n)")
        if self.family == "so_even" and math.prod(w.signs) != 1:
            raise RootDataError("so(2n) Weyl group has only even sign changes")

    def act(self, w: WeylGroupElement, a: Sequence[int]) -> Weight:
        self.check_element(w)
        if len(a) != self.n:
            raise RootDataError("rank mismatch in Weyl action")
        return self.canon(w.raw_act(a))

    def reflection_fixes(self, a: Sequence[int]) -> bool:
        """True when ``a`` is fixed by a reflection, i.e. lies on a chamber wall."""
        roots = self.positive_roots()
        return any(self.pair(a, r) == 0 for r in roots)

    def positive_roots(self) -> List[Tuple[int, ...]]:
        n = self.n
        roots = []

        def e(i, s=1):
            v = [0] * n
            v[i] = s
            return v

        for i in range(n):
            for j in range(i + 1, n):
                roots.append(tuple(x - y for x, y in zip(e(i), e(j))))
                if self.family != "sl":
                    roots.append(tuple(x + y for x, y in zip(e(i), e(j))))
        if self.family == "sp":
            roots += [tuple(2 * x for x in e(i)) for i in range(n)]
        elif self.family == "so_odd":
            roots += [tuple(e(i)) for i in range(n)]
        return roots


def act(w: WeylGroupElement, a: Sequence[int]) -> tuple:
    return w.raw_act(a)


def sgn(w: WeylGroupElement) -> int:
    return w.sgn()


def pair(rd: RootData, a: Sequence, b: Sequence) -> Fraction:
    return rd.pair(a, b)


def weyl_elements(rd: RootData) -> Iterator[WeylGroupElement]:
    return rd.weyl_elements()


_FAMILIES = frozenset({"sl", "sp", "so_even", "so_odd"})


def build(family: str, n: int) -> RootData:
    """Root data for ``family`` with family parameter ``n``.

    ``build("sl", 3)`` is sl(3); ``build("sp", 2)`` is sp(4);
    ``build("so_even", 3)`` is so(6); ``build("so_odd", 2)`` is so(5).
    """
    if family not in _FAMILIES:
        raise RootDataError(f"unsupported family {family!r}")
    return RootData(family, n)


_NAME = re.compile(r"^\s*(sl|sp|so)\s*\(?\s*(\d+)\s*\)?\s*$", re.IGNORECASE)


def parse_algebra(name: str) -> RootData:
    """Parse names such as ``sl2``, ``sp4``, ``so5``, ``so(8)``."""
    m = _NAME.match(name)
    if not m:
        raise RootDataError(f"cannot parse algebra name {name!r}")
    kind, m_ = m.group(1).lower(), int(m.group(2))
    if kind == "sl":
        return build("sl", m_)
    if kind == "sp":
        if m_ % 2:
            raise RootDataError("sp(m) needs even m")
        return build("sp", m_ // 2)
    if m_ < 3:
        raise RootDataError(f"so({m_}) is not supported")
    if m_ % 2:
        return build("so_odd", m_ // 2)
    return build("so_even", m_ // 2)
