"""Pullbacks of linear systems along explicit maps between products of projective spaces.

Every question here reduces to the rank of a coefficient matrix: forms of a
fixed multidegree are coefficient vectors over the monomial basis, and
pullback, multiplication by a fixed form and vanishing conditions are all
linear in those coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .poly import (QQ, CoefficientField, Grading, Polynomial, compose, monomial_basis,
                   multidegree_of, partial_derivative)


@dataclass(frozen=True)
class ProductSpace:
    """``P^{n_1} x ... x P^{n_k}`` with named homogeneous coordinates per factor."""

    factors: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        if not self.factors or any(len(f) < 2 for f in self.factors):
            raise ValueError("each factor needs at least two coordinates")

    @classmethod
    def of(cls, *factors: str | Sequence[str]) -> ProductSpace:
        out = []
        for f in factors:
            out.append(tuple(s.strip() for s in f.split(",")) if isinstance(f, str) else tuple(f))
        return cls(tuple(out))

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(f) - 1 for f in self.factors)

    @property
    def grading(self) -> Grading:
        return Grading.from_groups(self.factors)

    def coordinates(self, field: CoefficientField = QQ) -> dict[str, Polynomial]:
        g = self.grading
        return {v: Polynomial.variable(g, field, v) for v in g.variables}

    def to_dict(self) -> dict:
        return {"factors": [list(f) for f in self.factors]}


@dataclass(frozen=True)
class RationalMapSpec:
    """``components[j]`` lists the forms giving the coordinates of target factor ``j``."""

    source: ProductSpace
    target: ProductSpace
    components: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self) -> None:
        comps = tuple(tuple(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != len(self.target.factors):
            raise ValueError("one tuple of forms per target factor")
        sg = self.source.grading
        for forms, names in zip(comps, self.target.factors):
            if len(forms) != len(names):
                raise ValueError("wrong number of forms for a target factor")
            if all(f.is_zero() for f in forms):
                raise ValueError("component forms of a factor are all zero")
            degs = set()
            for f in forms:
                if f.grading != sg:
                    raise ValueError("component forms must live on the source")
                if not f.is_zero():
                    degs.add(multidegree_of(f))
            if len(degs) != 1:
                raise ValueError("component forms of a factor must share one multidegree")

    @property
    def field(self) -> CoefficientField:
        return self.components[0][0].field

    def component_degrees(self) -> list[tuple[int, ...]]:
        return [multidegree_of(next(f for f in forms if f)) for forms in self.components]

    def induced_degree(self, d: Sequence[int]) -> tuple[int, ...]:
        out = [0] * len(self.source.factors)
        for dj, cd in zip(d, self.component_degrees()):
            out = [a + dj * b for a, b in zip(out, cd)]
        return tuple(out)

    def images(self) -> dict[str, Polynomial]:
        return {name: form for names, forms in zip(self.target.factors, self.components)
                for name, form in zip(names, forms)}

    def to_dict(self) -> dict:
        return {"source": self.source.to_dict(), "target": self.target.to_dict(),
                "components": [[f.to_dict()["terms"] for f in forms] for forms in self.components]}


def pullback(m: RationalMapSpec, f: Polynomial) -> Polynomial:
    if f.grading != m.target.grading:
        raise ValueError("form does not live on the target")
    if f.is_zero():
        return Polynomial.zero(m.source.grading, m.field)
    d = multidegree_of(f)
    out = compose(f, m.images())
    if out and multidegree_of(out) != m.induced_degree(d):
        raise AssertionError("pullback has unexpected multidegree")
    return out


def _coefficient_matrix(polys: Sequence[Polynomial]) -> tuple[list[list], list]:
    """Columns are coefficient vectors of ``polys`` over their joint support."""
    support = sorted({e for f in polys for e in f.terms}, reverse=True)
    index = {e: i for i, e in enumerate(support)}
    rows = [[0] * len(polys) for _ in support]
    for j, f in enumerate(polys):
        for e, c in f.terms.items():
            rows[index[e]][j] = c
    return rows, support


def _basis_forms(space_grading: Grading, d: Sequence[int], field: CoefficientField) -> list[Polynomial]:
    basis = monomial_basis(space_grading, d)
    if not basis:
        raise ValueError(f"no forms of multidegree {tuple(d)}")
    return [Polynomial.monomial(space_grading, field, e) for e in basis]


def pullback_matrix_rank(m: RationalMapSpec, d: Sequence[int]) -> tuple[int, int]:
    """``(rank, number of basis forms)`` of the pullback on forms of multidegree ``d``."""
    forms = _basis_forms(m.target.grading, d, m.field)
    rows, _ = _coefficient_matrix([pullback(m, f) for f in forms])
    return linalg.rank(rows, m.field), len(forms)


def pullback_kernel_dim(m: RationalMapSpec, d: Sequence[int]) -> int:
    r, n = pullback_matrix_rank(m, d)
    return n - r


def model_transfer_solvable(m: RationalMapSpec, target_degree: Sequence[int], q: Polynomial,
                            cofactor_degree: Sequence[int] | None = None) -> bool:
    """Is there ``F != 0`` of ``target_degree`` and ``K != 0`` with ``pullback(F) == q*K``?

    ``F = 0`` forces ``K = 0``, so nonzero solutions exist exactly when the
    solution space of ``[P | -qK]`` is bigger than the kernel of ``P`` alone.
    """
    if q.grading != m.source.grading:
        raise ValueError("q does not live on the source")
    sg = m.source.grading
    dq = multidegree_of(q)
    dk = tuple(cofactor_degree) if cofactor_degree is not None else (0,) * len(dq)
    if m.induced_degree(target_degree) != tuple(a + b for a, b in zip(dq, dk)):
        raise ValueError(f"degree mismatch: pullback has degree {m.induced_degree(target_degree)}, "
                         f"q*K has degree {tuple(a + b for a, b in zip(dq, dk))}")
    fforms = [pullback(m, f) for f in _basis_forms(m.target.grading, target_degree, m.field)]
    if cofactor_degree is None:
        kforms = [q]
    else:
        kforms = [q * k for k in _basis_forms(sg, dk, m.field)]
    rows, _ = _coefficient_matrix(fforms + [-k for k in kforms])
    solutions = len(fforms) + len(kforms) - linalg.rank(rows, m.field)
    rows_p, _ = _coefficient_matrix(fforms)
    pull_kernel = len(fforms) - linalg.rank(rows_p, m.field)
    return solutions > pull_kernel


@dataclass(frozen=True)
class SingularAlong:
    """Form and all first partials vanish identically where ``fixed`` holds.

    ``fixed`` assigns values to the coordinates of some factors (a point in
    each of them); the remaining factors stay free, so the condition means
    "singular along {point} x (other factors)".
    """

    fixed: tuple[tuple[str, int], ...]

    @classmethod
    def at(cls, **values: int) -> SingularAlong:
        return cls(tuple(sorted(values.items())))


@dataclass(frozen=True)
class LinearConditionSet:
    ambient: ProductSpace
    multidegree: tuple[int, ...]
    conditions: tuple[SingularAlong, ...] = ()

    def to_dict(self) -> dict:
        return {"ambient": self.ambient.to_dict(), "multidegree": list(self.multidegree),
                "conditions": [dict(c.fixed) for c in self.conditions]}


def condition_rows(cond: LinearConditionSet, forms: Sequence[Polynomial]) -> list[list]:
    """One row per scalar linear condition, one column per form."""
    g = cond.ambient.grading
    rows: list[list] = []
    for c in cond.conditions:
        values = dict(c.fixed)
        derived = [list(forms)] + [[partial_derivative(f, v) for f in forms] for v in g.variables]
        for polys in derived:
            evaluated = [f.evaluate(values) for f in polys]
            r, _ = _coefficient_matrix(evaluated)
            rows.extend(r)
    return rows


@dataclass(frozen=True)
class ConstrainedSpace:
    dimension: int
    basis: tuple[Polynomial, ...]

    def sample(self, seed: int, bound: int = 50) -> Polynomial:
        """Seeded random combination of the basis; raises if the space is zero."""
        if not self.basis:
            raise ValueError("empty space: no nonzero form satisfies the conditions")
        rng = random.Random(seed)
        while True:
            out = self.basis[0].scale(0)
            for b in self.basis:
                out = out + b.scale(rng.randint(-bound, bound))
            if out:
                return out


def constrained_form_space(cond: LinearConditionSet, field: CoefficientField = QQ) -> ConstrainedSpace:
    forms = _basis_forms(cond.ambient.grading, cond.multidegree, field)
    rows = condition_rows(cond, forms)
    kernel = linalg.nullspace(rows, len(forms), field)
    basis = []
    for vec in kernel:
        f = forms[0].scale(0)
        for c, m in zip(vec, forms):
            if c:
                f = f + m.scale(c)
        basis.append(f)
    return ConstrainedSpace(len(kernel), tuple(basis))


def constrained_form_space_dim(cond: LinearConditionSet, seed: int | None = None,
                               field: CoefficientField = QQ) -> tuple[int, Polynomial | None]:
    """Dimension of the constrained space plus a seeded sample (``None`` if no seed or empty)."""
    space = constrained_form_space(cond, field)
    sample = space.sample(seed) if seed is not None and space.dimension else None
    return space.dimension, sample


def satisfies(f: Polynomial, cond: LinearConditionSet) -> bool:
    return not any(any(row) for row in condition_rows(cond, [f]))


# -- catalog maps ---------------------------------------------------------------------

def two_point_projection(field: CoefficientField = QQ) -> RationalMapSpec:
    """Projection of P^3 from [1:0:0:0] and [0:1:0:0] into P^2 x P^2."""
    src = ProductSpace.of("x0,x1,x2,x3")
    tgt = ProductSpace.of("u1,u2,u3", "v1,v2,v3")
    x = src.coordinates(field)
    return RationalMapSpec(src, tgt, ((x["x1"], x["x2"], x["x3"]), (x["x0"], x["x2"], x["x3"])))


def trilinear_map(field: CoefficientField = QQ) -> RationalMapSpec:
    """P^3 to (P^1)^3 via the pencils of planes through pairs of coordinate points e0, e1, e2."""
    src = ProductSpace.of("x0,x1,x2,x3")
    tgt = ProductSpace.of("a0,a1", "b0,b1", "c0,c1")
    x = src.coordinates(field)
    return RationalMapSpec(src, tgt, ((x["x2"], x["x3"]), (x["x1"], x["x3"]), (x["x0"], x["x3"])))


def cremona_product(field: CoefficientField = QQ) -> RationalMapSpec:
    """id x (P^2 to P^1 x P^1): (s,t; x,y,z) to ([s:t], [x:z], [y:z])."""
    src = ProductSpace.of("s,t", "x,y,z")
    tgt = ProductSpace.of("a0,a1", "b0,b1", "c0,c1")
    v = src.coordinates(field)
    return RationalMapSpec(src, tgt, ((v["s"], v["t"]), (v["x"], v["z"]), (v["y"], v["z"])))


def identity_map(space: ProductSpace, field: CoefficientField = QQ) -> RationalMapSpec:
    x = space.coordinates(field)
    return RationalMapSpec(space, space, tuple(tuple(x[n] for n in f) for f in space.factors))


def coordinate_point(names: Sequence[str], i: int) -> dict[str, int]:
    return {n: int(j == i) for j, n in enumerate(names)}


def nodal_quartic_conditions(nodes: Sequence[int]) -> LinearConditionSet:
    """Quartics on P^3 singular at the listed coordinate points."""
    amb = ProductSpace.of("x0,x1,x2,x3")
    names = amb.factors[0]
    return LinearConditionSet(amb, (4,), tuple(SingularAlong(tuple(sorted(
        coordinate_point(names, i).items()))) for i in nodes))


def two_line_conditions() -> LinearConditionSet:
    """(2,4) forms on P^1 x P^2 singular along P^1 x {[1:0:0]} and P^1 x {[0:1:0]}."""
    amb = ProductSpace.of("s,t", "x,y,z")
    return LinearConditionSet(amb, (2, 4), (SingularAlong.at(x=1, y=0, z=0),
                                             SingularAlong.at(x=0, y=1, z=0)))
