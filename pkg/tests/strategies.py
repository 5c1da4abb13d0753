"""Hypothesis strategies shared by the test modules."""
from fractions import Fraction

from hypothesis import strategies as st

from qweyl.algebra import AlgebraElement
from qweyl.qlaurent import LaurentQ

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def laurents(draw, denoms=(1, 2, 3, 4), max_terms=4, span=8):
    d = draw(st.sampled_from(denoms))
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = Fraction(draw(st.integers(-span, span)), d)
        terms[e] = draw(small_fracs)
    return LaurentQ(terms)


@st.composite
def weights(draw, rd, span=2):
    return rd.canon(tuple(draw(st.integers(-span, span)) for _ in range(rd.dim)))


@st.composite
def elements(draw, rd, max_terms=3, span=2):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        key = (draw(weights(rd, span)), draw(weights(rd, span)))
        terms[key] = draw(laurents(denoms=(1, rd.D), max_terms=2, span=4))
    return AlgebraElement(rd, terms)
