from fractions import Fraction

import sympy
from hypothesis import settings, strategies as st

from tautring import CharClass, MultiPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def polys(draw, n=None, max_deg=4, max_terms=5):
    if n is None:
        n = draw(st.integers(1, 3))
    exps = st.tuples(*[st.integers(0, max_deg) for _ in range(n)])
    terms = draw(st.dictionaries(exps, small_rationals, max_size=max_terms))
    return MultiPoly(n, terms)


@st.composite
def classes(draw, n=None, max_exp=2, max_terms=4):
    if n is None:
        n = draw(st.integers(1, 4))
    keys = st.tuples(st.integers(0, 1), st.tuples(*[st.integers(0, max_exp) for _ in range(n)]))
    terms = draw(st.dictionaries(keys, small_rationals, max_size=max_terms))
    return CharClass(n, terms)


def to_sympy(f: MultiPoly, symbols):
    expr = sympy.Integer(0)
    for exp, c in f.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(symbols, exp):
            term *= s ** k
        expr += term
    return expr


def from_sympy(expr, symbols) -> MultiPoly:
    poly = sympy.Poly(sympy.expand(expr), *symbols)
    return MultiPoly(len(symbols), {
        tuple(exp): Fraction(int(c.p), int(c.q)) for exp, c in poly.terms()
    })
