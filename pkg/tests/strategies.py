"""Hypothesis strategies for polynomials and terms."""

from fractions import Fraction

from hypothesis import strategies as st

from centroidal import GF, QQ, Poly

fields = st.sampled_from([QQ, GF(2), GF(3), GF(5)])


def scalars(field):
    if field.is_finite:
        return st.integers(0, field.p - 1).map(field)
    return st.fractions(min_value=-10, max_value=10, max_denominator=10).map(field)


@st.composite
def polys(draw, nvars, field=QQ, max_deg=4, max_terms=6):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = draw(st.lists(st.integers(0, max_deg), min_size=nvars, max_size=nvars))
        while sum(exps) > max_deg:
            k = exps.index(max(exps))
            exps[k] -= 1
        terms[tuple(exps)] = draw(scalars(field))
    return Poly(nvars, terms, field)


@st.composite
def poly_triples(draw, field=QQ):
    nvars = 2 * draw(st.integers(1, 3))
    return tuple(draw(polys(nvars, field)) for _ in range(3))


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=10)
