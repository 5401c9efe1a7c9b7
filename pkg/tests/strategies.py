from __future__ import annotations

from hypothesis import strategies as st

from fano3.poly import GF, QQ, Grading, Polynomial

GRADING = Grading.standard(("x", "y", "z"))
FIELDS = (QQ, GF(101))

exponents = st.tuples(*(st.integers(0, 3) for _ in range(3)))


@st.composite
def polynomials(draw, field=QQ, grading=GRADING, max_terms=5):
    terms = draw(st.dictionaries(exponents, st.integers(-20, 20), max_size=max_terms))
    if field.characteristic:
        terms = {e: c % field.characteristic for e, c in terms.items()}
    return Polynomial(grading, field, {e: c for e, c in terms.items() if c})


fields = st.sampled_from(FIELDS)
