"""Hypothesis strategies for small polynomials and rational functions."""

from hypothesis import strategies as st

from qverify.congruence import RatFunc, rf_make  # noqa: F401
from qverify.polyring import MPoly

coeffs = st.integers(min_value=-6, max_value=6)


def polys(max_q=5, max_a=0, max_b=0, max_terms=5, nonzero=False):
    key = st.tuples(st.integers(0, max_q), st.integers(0, max_a), st.integers(0, max_b))
    terms = st.dictionaries(key, coeffs.filter(bool), min_size=1 if nonzero else 0,
                            max_size=max_terms)
    return terms.map(MPoly)


@st.composite
def ratfuncs(draw, max_q=4, max_a=0, nonzero=False):
    num = draw(polys(max_q=max_q, max_a=max_a, max_terms=4, nonzero=nonzero))
    den = draw(polys(max_q=max_q, max_a=max_a, max_terms=3, nonzero=True))
    return rf_make(num, den)


def nonzero_ratfuncs(**kw):
    return ratfuncs(nonzero=True, **kw)


__all__ = ["RatFunc", "nonzero_ratfuncs", "polys", "ratfuncs"]
