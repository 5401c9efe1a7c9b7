from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fano3.poly import (GF, QQ, Grading, Polynomial, PolynomialMatrix, coefficients_in, compose,
                        derive_seed, determinant, discriminant_binary_quadratic,
                        equal_up_to_scalar, exact_divide, generic_forms, is_prime,
                        monomial_basis, multidegree_of, partial_derivative, polyring,
                        random_form, resultant_univariate, ring_ops)

from strategies import GRADING, fields, polynomials


def test_binomial_square():
    _, (x, y) = polyring("x,y")
    assert (x - y) * (x - y) == x * x - (x * y).scale(2) + y * y


def test_ring_ops_dispatch_and_errors():
    _, (x, y) = polyring("x,y")
    assert ring_ops(x, y, "add") == x + y
    assert ring_ops(x, 3, "pow") == x ** 3
    with pytest.raises(ValueError):
        ring_ops(x, -1, "pow")
    with pytest.raises(ValueError):
        ring_ops(x, y, "div")
    _, (u,) = polyring("u")
    with pytest.raises(ValueError):
        ring_ops(x, u, "add")
    _, (xp, _) = polyring("x,y", GF(7))
    with pytest.raises(ValueError):
        x + xp


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_ring_axioms(data):
    field = data.draw(fields)
    f, g, h = (data.draw(polynomials(field)) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f + g == g + f
    assert f - f == Polynomial.zero(GRADING, field)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_exact_divide_inverts_multiplication(data):
    field = data.draw(fields)
    f = data.draw(polynomials(field))
    g = data.draw(polynomials(field))
    if g.is_zero():
        return
    assert exact_divide(ring_ops(f, g, "mul"), g) == f


def test_exact_divide_errors():
    _, (x,) = polyring("x")
    with pytest.raises(ArithmeticError):
        exact_divide(x * x + 1, x)
    with pytest.raises(ZeroDivisionError):
        exact_divide(x, x - x)


def test_multidegree():
    g, (x, y) = polyring("x,y", weights=[(1, 0), (0, 1)])
    assert multidegree_of(x * x * y) == (2, 1)
    with pytest.raises(ValueError):
        multidegree_of(x * x + y)
    with pytest.raises(ValueError):
        multidegree_of(x - x)


def test_two_by_two_symmetric_determinant_has_bidegree_four_four():
    g = Grading.from_groups([("b0", "b1"), ("c0", "c1")])
    a, b, c = (random_form(g, (2, 2), QQ, s) for s in range(3))
    assert multidegree_of(determinant(PolynomialMatrix.from_rows([[a, b], [b, c]]))) == (4, 4)


def test_determinant_small_cases():
    _, (l0, l1, q0, q1) = polyring("l0,l1,q0,q1")
    d = determinant(PolynomialMatrix.from_rows([[l0, l1], [q0, q1]]))
    assert d == l0 * q1 - l1 * q0
    assert equal_up_to_scalar(d, l1 * q0 - l0 * q1) == -1
    assert determinant(PolynomialMatrix.from_rows([[l0, l1], [l0, l1]])).is_zero()
    with pytest.raises(ValueError):
        determinant(PolynomialMatrix.from_rows([[l0, l1]]))


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_determinant_alternating(data):
    field = data.draw(fields)
    rows = [[data.draw(polynomials(field, max_terms=3)) for _ in range(3)] for _ in range(3)]
    d = determinant(PolynomialMatrix.from_rows(rows))
    swapped = determinant(PolynomialMatrix.from_rows([rows[1], rows[0], rows[2]]))
    assert swapped == -d
    assert determinant(PolynomialMatrix.from_rows([rows[0], rows[0], rows[2]])).is_zero()


def test_resultant_examples():
    _, (z, a, b, p, l, bb) = polyring("z,a,b,p,l,bb")
    assert equal_up_to_scalar(resultant_univariate(z - a, z - b, "z"), a - b) is not None
    r = resultant_univariate(z * z - p, l * z - bb, "z")
    assert equal_up_to_scalar(r, bb * bb - p * l * l) is not None
    with pytest.raises(ValueError):
        resultant_univariate(a, z - b, "z")


@pytest.mark.parametrize("shared", [True, False])
def test_resultant_vanishes_iff_common_root(shared):
    _, (z,) = polyring("z")
    f = (z - 3) * (z + 5)
    g = (z - 3) * (z - 7) if shared else (z - 2) * (z - 7)
    assert resultant_univariate(f, g, "z").is_zero() is shared


def test_discriminant_convention():
    _, (l, m) = polyring("l,m")
    one = l ** 0
    assert discriminant_binary_quadratic(one, one - one, one) == -one
    assert discriminant_binary_quadratic(l * l, l * m, m * m).is_zero()


def test_partial_derivative_and_euler():
    g, (x, y) = polyring("x,y")
    assert partial_derivative(x * x * y, "x") == (x * y).scale(2)
    with pytest.raises(KeyError):
        partial_derivative(x, "w")
    _, (t,) = polyring("t", GF(5))
    assert partial_derivative(t ** 5, "t").is_zero()


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 4), fields)
def test_euler_relation(seed, d, field):
    f = random_form(GRADING, (d,), field, seed)
    total = sum((Polynomial.variable(GRADING, field, v) * partial_derivative(f, v)
                 for v in GRADING.variables), Polynomial.zero(GRADING, field))
    assert total == f.scale(d)


def test_random_form_determinism_and_degree():
    f = random_form(GRADING, (3,), GF(101), 7)
    assert f == random_form(GRADING, (3,), GF(101), 7)
    assert multidegree_of(f) == (3,)
    assert len(f.terms) == len(monomial_basis(GRADING, (3,)))
    distinct = {random_form(GRADING, (2,), GF(101), derive_seed(0, k)) for k in range(100)}
    assert len(distinct) == 100


def test_monomial_basis_counts():
    g = Grading.from_groups([("a0", "a1"), ("b0", "b1"), ("c0", "c1")])
    assert len(monomial_basis(g, (2, 2, 2))) == 27
    assert len(monomial_basis(Grading.standard([f"x{i}" for i in range(4)]), (4,))) == 35


def test_field_coercion():
    assert QQ.coerce(Fraction(4, 2)) == 2
    assert GF(7).coerce(Fraction(1, 2)) == 4
    with pytest.raises(ValueError):
        GF(6)
    assert is_prime(32003) and is_prime(31991) and not is_prime(1)


def test_compose_and_serialization():
    g, (x, y) = polyring("x,y")
    h, (s, t) = polyring("s,t")
    f = x * x - y
    assert compose(f, {"x": s + t, "y": s * t}) == s * s + t * t + s * t
    assert Polynomial.from_dict(f.to_dict()) == f


def test_coefficients_in():
    _, (x, y) = polyring("x,y")
    f = x * x * y + x + 3
    c = coefficients_in(f, "x")
    assert c[0] == 3 + 0 * x and c[1] == x ** 0 and c[2] == y


def test_generic_forms_are_symbolic():
    g, forms = generic_forms(["y0", "y1"], [("L", 1)])
    assert len(forms["L"].terms) == 2
    assert forms["L"].variables_used() == {"y0", "y1", "L_10", "L_01"}
