"""Polynomial data behind the symbolic and point-count claims."""

from __future__ import annotations

from fractions import Fraction

from ..poly import (QQ, CoefficientField, Grading, Polynomial, PolynomialMatrix, coefficients_in,
                    derive_seed, determinant, discriminant_binary_quadratic, equal_up_to_scalar,
                    exact_divide, generic_forms, multidegree_of, partial_derivative, random_form,
                    resultant_univariate)
from ..zerodim import buchberger, normal_form

H22_VARS = ("y0", "y1", "y2", "y3")


def _forms(names: tuple[str, ...], shapes: list[tuple[str, int]], field: CoefficientField,
           seed: int) -> dict[str, Polynomial]:
    g = Grading.standard(names)
    return {name: random_form(g, (d,), field, derive_seed(seed, name)) for name, d in shapes}


# -- height 22 ------------------------------------------------------------------------

def height22_forms(field: CoefficientField, seed: int) -> dict[str, Polynomial]:
    """Random L (linear), Q0, Q1, Q00, Q01, Q11 (quadrics) in y0..y3."""
    return _forms(H22_VARS, [("L", 1), ("Q0", 2), ("Q1", 2), ("Q00", 2), ("Q01", 2), ("Q11", 2)],
                  field, seed)


def height22_matrix(f: dict[str, Polynomial], corner: str = "Q1") -> PolynomialMatrix:
    """Symmetric 3x3 matrix; ``corner`` is the (3,1) entry."""
    return PolynomialMatrix.from_rows([
        [f["L"] * f["L"], f["Q0"], f["Q1"]],
        [f["Q0"], f["Q00"], f["Q01"]],
        [f[corner], f["Q01"], f["Q11"]],
    ])


def height22_minor_ideal(field: CoefficientField, seed: int) -> list[Polynomial]:
    m = height22_matrix(height22_forms(field, seed))
    out: list[Polynomial] = []
    for g in m.minors(2):
        if g and all(equal_up_to_scalar(g, h) is None for h in out):
            out.append(g)
    return out


def height22_lqq_ideal(field: CoefficientField, seed: int) -> list[Polynomial]:
    f = height22_forms(field, seed)
    return [f["L"], f["Q0"], f["Q1"]]


def height22_jacobian_ideal(field: CoefficientField, seed: int) -> list[Polynomial]:
    det = determinant(height22_matrix(height22_forms(field, seed)))
    return [partial_derivative(det, v) for v in H22_VARS]


def height22_symbolic() -> dict:
    """Elimination chain with fully generic coefficients over QQ.

    The double cover ``z^2 = Q00 x0^2 + 2 Q01 x0 x1 + Q11 x1^2`` meets the
    plane ``z L = Q0 x0 + Q1 x1``; eliminating z gives a binary quadratic in
    (x0, x1) whose discriminant, divided by ``-L^2``, should be ``det M``.
    """
    ys = list(H22_VARS)
    weights = {v: (1, 0) for v in ys}
    g, P = generic_forms(ys, [("L", 1), ("Q0", 2), ("Q1", 2), ("Q00", 2), ("Q01", 2), ("Q11", 2)],
                         extra=[("x0", (0, 1)), ("x1", (0, 1)), ("z", (1, 1))], weights=weights)
    L, Q0, Q1, A, B, C = (P[k] for k in ("L", "Q0", "Q1", "Q00", "Q01", "Q11"))
    x0, x1, z = P["x0"], P["x1"], P["z"]
    quad = z * z - (A * x0 * x0 + B.scale(2) * x0 * x1 + C * x1 * x1)
    plane = z * L - (Q0 * x0 + Q1 * x1)
    res = resultant_univariate(quad, plane, "z")
    displayed = (x0 * x0 * (A * L * L - Q0 * Q0) + (x0 * x1).scale(2) * (B * L * L - Q0 * Q1)
                 + x1 * x1 * (C * L * L - Q1 * Q1))
    by_x0 = coefficients_in(res, "x0")
    a = coefficients_in(by_x0[2], "x1")[0]
    b = coefficients_in(by_x0[1], "x1")[1].scale(Fraction(1, 2))
    c = coefficients_in(by_x0[0], "x1")[2]
    # normalize the resultant's sign so a, b, c match the displayed coefficients
    s = equal_up_to_scalar(res, displayed)
    if s is not None:
        a, b, c = (t.scale(Fraction(1) / s) for t in (a, b, c))
    disc = discriminant_binary_quadratic(a, b, c)
    disc_displayed = (L ** 4 * (B * B - A * C)
                      + L * L * (-(Q0 * Q1 * B).scale(2) + A * Q1 * Q1 + C * Q0 * Q0))
    quotient = exact_divide(disc, -(L * L))
    det = determinant(height22_matrix(P))
    printed = determinant(height22_matrix(P, corner="Q0"))
    det_md = multidegree_of(det)
    return {
        "resultant ~ displayed binary form": s is not None,
        "discriminant == displayed expansion": disc == disc_displayed,
        "discriminant / (-L^2) ~ det M": equal_up_to_scalar(quotient, det) is not None,
        "det M multidegree in y": det_md[0],
        "det M with (3,1) entry Q0 ~ quotient": equal_up_to_scalar(quotient, printed) is not None,
    }


# -- d = 6 and d = 8 ------------------------------------------------------------------

P5_VARS = tuple(f"x{i}" for i in range(6))
P6_VARS = tuple(f"x{i}" for i in range(7))


def d6_forms(field: CoefficientField, seed: int) -> dict[str, Polynomial]:
    return _forms(P5_VARS, [("L0", 1), ("L1", 1), ("Q0", 2), ("Q1", 2), ("Q", 2)], field, seed)


def d6_node_ideal(field: CoefficientField, seed: int) -> list[Polynomial]:
    f = d6_forms(field, seed)
    return [f[k] for k in ("L0", "L1", "Q0", "Q1", "Q")]


def d8_forms(field: CoefficientField, seed: int) -> dict[str, Polynomial]:
    return _forms(P6_VARS, [("L0", 1), ("L1", 1), ("M0", 1), ("M1", 1), ("Q0", 2), ("Q1", 2)],
                  field, seed)


def d8_node_ideal(field: CoefficientField, seed: int) -> list[Polynomial]:
    f = d8_forms(field, seed)
    return [f[k] for k in ("L0", "L1", "M0", "M1", "Q0", "Q1")]


def pencil_elimination(variables: tuple[str, ...], first: tuple[str, int],
                       second: tuple[str, int]) -> dict:
    """Eliminate [s:t] from ``s A0 + t A1 = s B0 + t B1 = 0`` with generic coefficients."""
    (na, da), (nb, db) = first, second
    weights = {v: (1, 0) for v in variables}
    g, P = generic_forms(variables, [(na + "0", da), (na + "1", da), (nb + "0", db), (nb + "1", db)],
                         extra=[("s", (0, 1))], weights=weights)
    a0, a1, b0, b1, s = P[na + "0"], P[na + "1"], P[nb + "0"], P[nb + "1"], P["s"]
    res = resultant_univariate(s * a0 + a1, s * b0 + b1, "s")
    displayed = a1 * b0 - a0 * b1
    det = determinant(PolynomialMatrix.from_rows([[a0, a1], [b0, b1]]))
    scalar = equal_up_to_scalar(res, displayed)
    return {
        "resultant ~ displayed": scalar is not None,
        "det ~ displayed": equal_up_to_scalar(det, displayed) is not None,
        "degree": multidegree_of(det)[0],
    }


def singular_along(field: CoefficientField, w: Polynomial, ideal: list[Polynomial]) -> bool:
    """All first partials of ``w`` (and ``w`` itself) lie in the ideal."""
    gb = buchberger(ideal)
    polys = [w] + [partial_derivative(w, v) for v in w.grading.variables]
    return all(not normal_form(f, gb) for f in polys)


def d6_singular_along_curve(field: CoefficientField, seed: int) -> bool:
    f = d6_forms(field, seed)
    w = f["L1"] * f["Q0"] - f["L0"] * f["Q1"]
    return bool(w) and singular_along(field, w, [f["L0"], f["L1"], f["Q0"], f["Q1"]])


def d8_singular_along_plane(field: CoefficientField, seed: int) -> bool:
    f = d8_forms(field, seed)
    w = f["L1"] * f["M0"] - f["L0"] * f["M1"]
    return bool(w) and singular_along(field, w, [f["L0"], f["L1"], f["M0"], f["M1"]])


# -- discriminant curves of conic bundles ---------------------------------------------

def hessian_matrix(f: Polynomial, variables: tuple[str, ...]) -> PolynomialMatrix:
    """Second partials; twice the symmetric matrix of a quadratic form."""
    first = [partial_derivative(f, v) for v in variables]
    return PolynomialMatrix.from_rows([[partial_derivative(d, v) for v in variables]
                                       for d in first])


def net_of_quadrics_discriminant(seed: int) -> Polynomial:
    """det(l A + m B + n C) for three random quadrics in P^6, as a plane curve in [l:m:n]."""
    g = Grading.standard(P6_VARS + ("l", "m", "n"))
    qs = [random_form(Grading.standard(P6_VARS), (2,), QQ, derive_seed(seed, "net", i), bound=9)
          for i in range(3)]
    lifted = [Polynomial(g, QQ, {e + (0, 0, 0): c for e, c in q.terms.items()}) for q in qs]
    l, m, n = (Polynomial.variable(g, QQ, v) for v in ("l", "m", "n"))
    net = l * lifted[0] + m * lifted[1] + n * lifted[2]
    return determinant(hessian_matrix(net, P6_VARS))


def bidegree22_discriminant(seed: int, fiber: str = "y") -> Polynomial:
    """Discriminant of a random (2,2) divisor of P^2_x x P^2_y over the other factor."""
    xs, ys = ("x0", "x1", "x2"), ("y0", "y1", "y2")
    g = Grading.from_groups([xs, ys])
    f = random_form(g, (2, 2), QQ, derive_seed(seed, "p22"), bound=9)
    return determinant(hessian_matrix(f, ys if fiber == "y" else xs))


TRIPLE_P1 = (("a0", "a1"), ("b0", "b1"), ("c0", "c1"))


def triple_p1_discriminant(seed: int) -> dict:
    """Discriminant over the (b, c) factors of a random (2,2,2) form, plus the 2x2 template."""
    g = Grading.from_groups(TRIPLE_P1)
    f = random_form(g, (2, 2, 2), QQ, derive_seed(seed, "v222"), bound=9)
    by_a0 = coefficients_in(f, "a0")
    a = by_a0[2]
    b = by_a0[1].evaluate({"a1": 1}).scale(Fraction(1, 2))
    c = by_a0[0].evaluate({"a1": 1})
    disc = discriminant_binary_quadratic(a, b, c)
    det = determinant(PolynomialMatrix.from_rows([[a, b], [b, c]]))
    md = multidegree_of(disc)
    # template: random (2,2) entries directly
    gb = Grading.from_groups(TRIPLE_P1[1:])
    e = [random_form(gb, (2, 2), QQ, derive_seed(seed, "v222", k), bound=9) for k in range(3)]
    tmpl = determinant(PolynomialMatrix.from_rows([[e[0], e[1]], [e[1], e[2]]]))
    return {
        "discriminant bidegree": [md[1], md[2]],
        "degree in fiber coordinates": md[0],
        "det [[a,b],[b,c]] ~ discriminant": equal_up_to_scalar(det, disc) is not None,
        "2x2 template bidegree": list(multidegree_of(tmpl)),
    }
