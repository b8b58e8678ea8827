"""Hypothesis strategies for monomial-class objects."""
from hypothesis import strategies as st

from shilov.core import Polynomial
from shilov.monomial import MonomialIdeal
from shilov.seminorms import TateData
from shilov.star import FractionalMonomialIdeal


def exponents(n, lo=0, hi=6):
    return st.tuples(*[st.integers(lo, hi)] * n)


@st.composite
def ideals(draw, nvars=None, emax=6, max_gens=4):
    n = draw(st.integers(1, 3)) if nvars is None else nvars
    gens = draw(st.lists(exponents(n, 0, emax).filter(any), min_size=1, max_size=max_gens))
    return MonomialIdeal(tuple(gens), n)


@st.composite
def polynomials(draw, n, emax=6, max_terms=3, lo=0):
    terms = draw(st.dictionaries(exponents(n, lo, emax), st.integers(-3, 3).filter(bool), min_size=0, max_size=max_terms))
    return Polynomial(terms, n)


@st.composite
def tates(draw, max_vars=3, amax=4):
    n = draw(st.integers(1, max_vars))
    a = draw(exponents(n, 0, amax).filter(any))
    return TateData(n, a)


@st.composite
def ideal_with_poly(draw):
    I = draw(ideals())
    f = draw(polynomials(I.nvars))
    return I, f


@st.composite
def fractionals(draw, omega, emax=4):
    n = len(omega)
    k = draw(st.integers(1, 2))
    gens = [tuple(k * a for a in omega)]
    gens += draw(st.lists(exponents(n, 0, emax), max_size=2))
    shift = draw(st.integers(-1, 2))
    return FractionalMonomialIdeal(tuple(omega), shift, MonomialIdeal(tuple(gens), n))
