from __future__ import annotations

import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fano3.catalog.constructions import height22_lqq_ideal, height22_minor_ideal
from fano3.poly import GF, QQ, Grading, change_grading, polyring, random_form
from fano3.zerodim import (MonomialOrder, NotZeroDimensionalError, UnstableDegreeWarning,
                           buchberger, degree_samples, is_reduced, modal, normal_form,
                           projective_degree, quotient_dimension, s_polynomials_reduce_to_zero)

F7 = GF(7)
P = GF(32003)
P3 = Grading.standard(("y0", "y1", "y2", "y3"))


def test_coordinate_ideal():
    _, (x, y) = polyring("x,y", F7)
    gb = buchberger([x, y])
    assert set(gb.basis) == {x, y}
    assert quotient_dimension(gb) == 1


def test_two_point_ideal():
    _, (x, y) = polyring("x,y", F7)
    gb = buchberger([x * x - 1, x * y - 1])
    assert quotient_dimension(gb) == 2
    assert s_polynomials_reduce_to_zero(gb) and is_reduced(gb)
    assert normal_form(x * x * y - x, gb).is_zero()
    assert normal_form(x ** 0, gb) == x ** 0
    for g in (x * x - 1, x * y - 1):
        assert normal_form(g, gb).is_zero()


def test_lex_order_agrees_on_dimension():
    _, (x, y) = polyring("x,y", F7)
    gb = buchberger([x * x - 1, x * y - 1], MonomialOrder("lex"))
    assert quotient_dimension(gb) == 2


def test_errors():
    _, (x, y) = polyring("x,y", QQ)
    with pytest.raises(ValueError):
        buchberger([x])
    with pytest.raises(ValueError):
        buchberger([])
    _, (u, v) = polyring("u,v", F7)
    with pytest.raises(NotZeroDimensionalError):
        quotient_dimension(buchberger([u * v]))


@pytest.mark.parametrize("d", [1, 3, 5])
def test_univariate(d):
    g, (x,) = polyring("x", P)
    f = random_form(g, (d,), P, d) + 1
    assert quotient_dimension(buchberger([f])) == d


def test_two_affine_conics():
    g = Grading.standard(("x", "y", "w"))
    plane = Grading.standard(("x", "y"))
    a, b = (change_grading(random_form(g, (2,), P, s).evaluate({"w": 1}), plane) for s in (1, 2))
    assert quotient_dimension(buchberger([a, b])) == 4


@pytest.mark.parametrize("degrees", [(2, 2, 2), (1, 2, 2), (1, 1, 4)])
def test_bezout_oracle(degrees):
    gens = [random_form(P3, (d,), P, 10 + i) for i, d in enumerate(degrees)]
    n = 1
    for d in degrees:
        n *= d
    assert projective_degree(gens, seed=3) == n


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_bases_satisfy_s_polynomial_property(seed):
    gens = [random_form(P3, (2,), P, seed + i) for i in range(3)]
    gb = buchberger([f.evaluate({"y3": 1}) for f in gens])
    assert s_polynomials_reduce_to_zero(gb) and is_reduced(gb)
    assert all(normal_form(f.evaluate({"y3": 1}), gb).is_zero() for f in gens)


def test_height22_point_counts():
    assert projective_degree(height22_minor_ideal(P, 0), seed=0) == 32
    assert projective_degree(height22_lqq_ideal(P, 0), seed=0) == 4


def test_projective_degree_input_checks():
    g, (x, y, z) = polyring("x,y,z", P)
    with pytest.raises(ValueError):
        projective_degree([x * x + y])
    assert projective_degree([x * y, z]) == 2
    with pytest.raises(NotZeroDimensionalError):
        projective_degree([x * y])


def test_modal_and_instability_warning(monkeypatch):
    assert modal([4, 4, 3]) == 4 and modal([None, 2]) == 2 and modal([None]) is None
    import fano3.zerodim as zd
    values = iter([8, 7, 8])
    monkeypatch.setattr(zd, "degree_samples", lambda gens, seed, trials, check=False:
                        [next(values) for _ in range(trials)])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert zd.projective_degree([], seed=0, trials=3) == 8
    assert any(issubclass(w.category, UnstableDegreeWarning) for w in caught)


def test_samples_are_deterministic():
    gens = height22_lqq_ideal(P, 5)
    assert degree_samples(gens, 1, 2) == degree_samples(gens, 1, 2)
