"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from cordring.braid import BraidWord
from cordring.cords import FreeWord
from cordring.ncalg import NcPoly


@st.composite
def braid_words(draw, strands=st.integers(2, 4), max_len=6):
    n = draw(strands)
    letters = draw(
        st.lists(
            st.integers(1, n - 1).flatmap(lambda k: st.sampled_from((k, -k))),
            max_size=max_len,
        )
    )
    return BraidWord(n, tuple(letters))


@st.composite
def nc_polys(draw, n=3, max_terms=4, max_len=3):
    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    terms = draw(
        st.dictionaries(
            st.lists(st.sampled_from(gens), max_size=max_len).map(tuple),
            st.integers(-5, 5).filter(bool),
            max_size=max_terms,
        )
    )
    return NcPoly(terms)


@st.composite
def free_words(draw, n=3, max_len=5):
    letters = draw(
        st.lists(st.tuples(st.integers(1, n), st.sampled_from((1, -1))), max_size=max_len)
    )
    return FreeWord(n, tuple(letters))
