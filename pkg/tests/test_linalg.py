from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from fano3.linalg import nullspace, rank, rref
from fano3.poly import GF, QQ

matrices = st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=5)


def test_rank_examples():
    assert rank([[1, 2], [2, 4]], QQ) == 1
    assert rank([[1, 2], [3, 4]], QQ) == 2
    assert rank([[1, 2], [3, 4]], GF(2)) == 1


def test_rref_pivots():
    red, piv = rref([[0, 2, 4], [1, 1, 1]], QQ)
    assert piv == [0, 1]
    assert red[1] == [0, 1, 2]


@settings(max_examples=50, deadline=None)
@given(matrices)
def test_rank_nullity(rows):
    kernel = nullspace(rows, 4, QQ)
    assert rank(rows, QQ) + len(kernel) == 4
    for v in kernel:
        for r in rows:
            assert sum(Fraction(a) * b for a, b in zip(r, v)) == 0
