from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fano3.birat import (LinearConditionSet, ProductSpace, SingularAlong, constrained_form_space,
                         constrained_form_space_dim, cremona_product, identity_map,
                         model_transfer_solvable, nodal_quartic_conditions, pullback,
                         pullback_kernel_dim, pullback_matrix_rank, satisfies, trilinear_map,
                         two_line_conditions, two_point_projection)
from fano3.poly import QQ, derive_seed, random_form

SEEDS = range(5)


def test_identity_pullback():
    space = ProductSpace.of("x0,x1,x2")
    m = identity_map(space)
    f = random_form(space.grading, (3,), QQ, 1)
    assert pullback(m, f) == f
    assert pullback_kernel_dim(m, (1,)) == 0


def test_flag_equation_pulls_back_to_zero():
    m = two_point_projection()
    t = m.target.coordinates()
    assert pullback(m, t["u2"] * t["v3"] - t["u3"] * t["v2"]).is_zero()
    assert pullback_kernel_dim(m, (1, 1)) == 1
    assert pullback_kernel_dim(m, (2, 2)) == 9


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_pullback_is_a_ring_homomorphism(seed):
    m = trilinear_map()
    g = m.target.grading
    f1 = random_form(g, (1, 0, 1), QQ, seed)
    f2 = random_form(g, (1, 0, 1), QQ, seed + 1)
    f3 = random_form(g, (0, 1, 1), QQ, seed + 2)
    assert pullback(m, f1 + f2) == pullback(m, f1) + pullback(m, f2)
    assert pullback(m, f1 * f3) == pullback(m, f1) * pullback(m, f3)


def test_pullback_rejects_foreign_forms():
    m = trilinear_map()
    with pytest.raises(ValueError):
        pullback(m, random_form(m.source.grading, (2,), QQ, 0))


def test_kernel_dims():
    assert pullback_kernel_dim(trilinear_map(), (2, 2, 2)) == 0
    assert pullback_matrix_rank(cremona_product(), (2, 2, 2)) == (27, 27)


def test_constrained_spaces():
    assert constrained_form_space_dim(nodal_quartic_conditions([0, 1, 2]))[0] == 23
    assert constrained_form_space_dim(nodal_quartic_conditions([0, 1]))[0] == 27
    assert constrained_form_space_dim(two_line_conditions())[0] == 27
    free = LinearConditionSet(ProductSpace.of("x0,x1,x2,x3"), (4,))
    assert constrained_form_space_dim(free)[0] == 35
    dim, sample = constrained_form_space_dim(nodal_quartic_conditions([0]), seed=3)
    assert dim == 31 and satisfies(sample, nodal_quartic_conditions([0]))
    assert sample == constrained_form_space_dim(nodal_quartic_conditions([0]), seed=3)[1]


def test_cremona_pullbacks_are_singular_along_both_lines():
    m = cremona_product()
    cond = two_line_conditions()
    for k in range(5):
        f = random_form(m.target.grading, (2, 2, 2), QQ, k)
        assert satisfies(pullback(m, f), cond)
    plain = random_form(m.source.grading, (2, 4), QQ, 0)
    assert not satisfies(plain, cond)


@pytest.mark.parametrize("k", SEEDS)
def test_two_nodal_quartic_transfer(k):
    m = two_point_projection()
    q = constrained_form_space(nodal_quartic_conditions([0, 1])).sample(derive_seed(0, k))
    assert model_transfer_solvable(m, (2, 2), q)
    smooth = random_form(m.source.grading, (4,), QQ, derive_seed(1, k))
    assert not model_transfer_solvable(m, (2, 2), smooth)


@pytest.mark.parametrize("k", SEEDS)
def test_three_nodal_quartic_trilinear_transfer(k):
    m = trilinear_map()
    q = constrained_form_space(nodal_quartic_conditions([0, 1, 2])).sample(derive_seed(2, k))
    assert model_transfer_solvable(m, (2, 2, 2), q, (2,))
    smooth = random_form(m.source.grading, (4,), QQ, derive_seed(3, k))
    assert not model_transfer_solvable(m, (2, 2, 2), smooth, (2,))


def test_degree_mismatch_is_an_error():
    m = trilinear_map()
    q = random_form(m.source.grading, (4,), QQ, 0)
    with pytest.raises(ValueError):
        model_transfer_solvable(m, (2, 2, 2), q)


def test_singular_along_builder():
    assert SingularAlong.at(y=0, x=1).fixed == (("x", 1), ("y", 0))
