"""Finitely presented Chow rings, degree maps and adjunction genus.

A :class:`RingPresentation` is a graded ring ``ZZ[g_1..g_k] / (relations)``
whose relations have rewriting shape ``g^k -> lower terms``; reduction
rewrites any monomial divisible by a relation's pure-power head.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .poly import QQ, Grading, Polynomial, compose


@dataclass(frozen=True)
class ChowClass:
    presentation: RingPresentation
    poly: Polynomial

    def _other(self, other: object) -> ChowClass:
        if isinstance(other, ChowClass):
            if other.presentation != self.presentation:
                raise ValueError("classes live in different presentations")
            return other
        if isinstance(other, (int, Fraction)):
            return self.presentation.cls(Polynomial.constant(self.poly.grading, QQ, other))
        return NotImplemented

    def __add__(self, other: object) -> ChowClass:
        o = self._other(other)
        return self.presentation.cls(self.poly + o.poly)

    __radd__ = __add__

    def __sub__(self, other: object) -> ChowClass:
        o = self._other(other)
        return self.presentation.cls(self.poly - o.poly)

    def __rsub__(self, other: object) -> ChowClass:
        o = self._other(other)
        return self.presentation.cls(o.poly - self.poly)

    def __neg__(self) -> ChowClass:
        return self.presentation.cls(-self.poly)

    def __mul__(self, other: object) -> ChowClass:
        if isinstance(other, (int, Fraction)):
            return self.presentation.cls(self.poly.scale(other))
        o = self._other(other)
        return self.presentation.cls(self.poly * o.poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> ChowClass:
        return self.presentation.cls(self.poly ** n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._other(other)
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.presentation == other.presentation and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.presentation.name, self.poly))

    @property
    def codimension(self) -> int:
        if self.poly.is_zero():
            raise ValueError("zero class has no codimension")
        degs = self.poly.multidegrees()
        if len(degs) != 1:
            raise ValueError("class is not homogeneous")
        return next(iter(degs))[0]

    def __repr__(self) -> str:
        return f"[{self.poly!r}]"


class RingPresentation:
    """Graded ring with pure-power rewriting relations, point class and K."""

    def __init__(self, name: str, generators: Sequence[tuple[str, int]],
                 relations: Sequence[Polynomial | str], dimension: int,
                 point_class: Mapping[str, int], canonical_class: Mapping[str, int]) -> None:
        self.name = name
        self.generators = tuple((g, int(c)) for g, c in generators)
        if any(c <= 0 for _, c in self.generators):
            raise ValueError("generator codimensions must be positive")
        self.grading = Grading(tuple(g for g, _ in self.generators),
                               tuple((c,) for _, c in self.generators))
        self.dimension = int(dimension)
        self.relations = tuple(self._parse(r) for r in relations)
        self._rules = [self._rule(r) for r in self.relations]
        self.point_exps = tuple(int(point_class.get(g, 0)) for g in self.grading.variables)
        self.canonical_coeffs = {g: int(c) for g, c in canonical_class.items() if c}
        for g in self.canonical_coeffs:
            self.grading.index(g)
        if self.grading.weight_of(self.point_exps)[0] != self.dimension:
            raise ValueError("point class does not have top codimension")

    # -- construction helpers ---------------------------------------------------
    def _parse(self, r: Polynomial | str) -> Polynomial:
        if isinstance(r, Polynomial):
            if r.grading != self.grading:
                raise ValueError("relation lives in another ring")
            return r
        return parse_class_polynomial(r, self.grading)

    def _rule(self, r: Polynomial) -> tuple[tuple[int, ...], Polynomial]:
        heads = [(e, c) for e, c in r.terms.items() if sum(1 for x in e if x) == 1]
        heads = [(e, c) for e, c in heads if c in (1, -1)]
        if not heads:
            raise ValueError(f"relation {r!r} has no pure-power head with unit coefficient")
        e, c = max(heads, key=lambda t: max(t[0]))
        if sum(1 for h, _ in heads if max(h) == max(e)) > 1:
            raise ValueError(f"relation {r!r} has an ambiguous head")
        lhs = Polynomial._raw(self.grading, QQ, {e: c})
        rhs = (lhs - r).scale(c)   # head -> rhs
        return e, rhs

    def gens(self) -> tuple[ChowClass, ...]:
        return tuple(self.cls(Polynomial.variable(self.grading, QQ, g))
                     for g in self.grading.variables)

    def __getitem__(self, name: str) -> ChowClass:
        return self.cls(Polynomial.variable(self.grading, QQ, name))

    def cls(self, f: Polynomial | str | int) -> ChowClass:
        if isinstance(f, str):
            f = parse_class_polynomial(f, self.grading)
        elif isinstance(f, int):
            f = Polynomial.constant(self.grading, QQ, f)
        return ChowClass(self, self.reduce(f))

    @property
    def point_class(self) -> ChowClass:
        return self.cls(Polynomial.monomial(self.grading, QQ, self.point_exps))

    @property
    def canonical_class(self) -> ChowClass:
        f = Polynomial.zero(self.grading, QQ)
        for g, c in self.canonical_coeffs.items():
            f = f + Polynomial.variable(self.grading, QQ, g).scale(c)
        return self.cls(f)

    # -- reduction -------------------------------------------------------------
    def reduce(self, f: Polynomial, max_steps: int = 100_000) -> Polynomial:
        """Normal form: rewrite until no term is divisible by a relation head."""
        if f.grading != self.grading:
            raise ValueError("polynomial lives in another ring")
        terms = dict(f.terms)
        done: dict = {}
        steps = 0
        while terms:
            e, c = terms.popitem()
            for head, rhs in self._rules:
                if all(a >= b for a, b in zip(e, head)):
                    shift = tuple(a - b for a, b in zip(e, head))
                    for te, tc in rhs.terms.items():
                        ne = tuple(a + b for a, b in zip(te, shift))
                        v = terms.get(ne, 0) + done.pop(ne, 0) + c * tc
                        if v:
                            terms[ne] = v
                        else:
                            terms.pop(ne, None)
                    break
            else:
                v = done.get(e, 0) + c
                if v:
                    done[e] = v
                else:
                    done.pop(e, None)
            steps += 1
            if steps > max_steps:
                raise RuntimeError("reduction did not terminate")
        return Polynomial(self.grading, QQ, done)

    # -- serialization -----------------------------------------------------------
    def to_dict(self) -> dict:
        def terms(f: Polynomial) -> list:
            return [[str(c), list(e)] for e, c in f.sorted_terms()]

        return {
            "name": self.name,
            "dimension": self.dimension,
            "generators": [{"name": g, "codim": c} for g, c in self.generators],
            "relations": [terms(r) for r in self.relations],
            "point_class": list(self.point_exps),
            "canonical_class": dict(sorted(self.canonical_coeffs.items())),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, data: Mapping) -> RingPresentation:
        gens = [(g["name"], g["codim"]) for g in data["generators"]]
        grading = Grading(tuple(g for g, _ in gens), tuple((c,) for _, c in gens))
        rels = [Polynomial(grading, QQ, {tuple(e): Fraction(c) for c, e in r})
                for r in data["relations"]]
        point = dict(zip(grading.variables, data["point_class"]))
        return cls(data["name"], gens, rels, data["dimension"], point, data["canonical_class"])

    @classmethod
    def from_json(cls, text: str) -> RingPresentation:
        return cls.from_dict(json.loads(text))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingPresentation):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"RingPresentation({self.name!r}, dim={self.dimension})"


_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")


def parse_class_polynomial(text: str, grading: Grading) -> Polynomial:
    """Parse ``"xi^5 - 4*xi^4*h"`` style input over QQ."""
    terms: dict[tuple[int, ...], Fraction] = {}
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or not m.group(2).strip():
            raise ValueError(f"cannot parse {text!r}")
        pos = m.end()
        coeff = Fraction(-1 if m.group(1) == "-" else 1)
        exps = [0] * grading.nvars
        for factor in m.group(2).split("*"):
            factor = factor.strip()
            base, _, power = factor.partition("^")
            base = base.strip()
            k = int(power) if power else 1
            if base in grading.variables:
                exps[grading.index(base)] += k
            else:
                try:
                    coeff *= Fraction(base) ** k
                except ValueError:
                    raise ValueError(f"unknown symbol {base!r} in {text!r}") from None
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return Polynomial(grading, QQ, terms)


# -- operations ---------------------------------------------------------------

def degree(pres: RingPresentation, c: ChowClass) -> int:
    """Coefficient of the point class in the normal form of a top-codimension class."""
    if c.presentation != pres:
        raise ValueError("class belongs to another presentation")
    f = pres.reduce(c.poly)
    if f.is_zero():
        return 0
    if c.codimension != pres.dimension:
        raise ValueError(f"class has codimension {c.codimension}, expected {pres.dimension}")
    pt = pres.reduce(Polynomial.monomial(pres.grading, QQ, pres.point_exps))
    if len(pt.terms) != 1:
        raise ValueError("point class does not reduce to a single monomial")
    (pe, pc), = pt.terms.items()
    if set(f.terms) != {pe}:
        raise ValueError(f"class {f!r} does not reduce to a multiple of the point class")
    value = Fraction(f.terms[pe]) / pc
    if value.denominator != 1:
        raise ValueError("non-integral degree")
    return int(value)


def intersection_number(surface: RingPresentation, a: ChowClass, b: ChowClass) -> int:
    if surface.dimension != 2:
        raise ValueError("intersection_number needs a surface")
    if a.codimension != 1 or b.codimension != 1:
        raise ValueError("intersection_number needs two curve classes")
    return degree(surface, a * b)


def adjunction_genus(surface: RingPresentation, d: ChowClass) -> int:
    """Arithmetic genus ``1 + (D^2 + D.K)/2``."""
    if surface.dimension != 2:
        raise ValueError("adjunction_genus needs a surface")
    k = surface.canonical_class
    twice = intersection_number(surface, d, d) + intersection_number(surface, d, k)
    if twice % 2:
        raise ValueError(f"D.(D+K) = {twice} is odd; no integral genus")
    return 1 + twice // 2


def pull_back(cls: ChowClass, target: RingPresentation, images: Mapping[str, ChowClass]) -> ChowClass:
    """Pull a class back along a map given by the images of generators."""
    polys = {g: images[g].poly for g in cls.presentation.grading.variables}
    return target.cls(compose(cls.poly, polys))


# -- catalog presentations ----------------------------------------------------------

def height22_bundle() -> RingPresentation:
    """P(V*) over P^1 for V = O + O(1)^4; xi = O(1), h = fiber class."""
    return RingPresentation(
        "height22", [("xi", 1), ("h", 1)], ["h^2", "xi^5 - 4*xi^4*h"], 5,
        {"xi": 4, "h": 1}, {"xi": -5, "h": 2})


def hirzebruch_f1() -> RingPresentation:
    """F_1 with xi the (-1)-curve and f a fiber."""
    return RingPresentation(
        "F1", [("xi", 1), ("f", 1)], ["xi^2 + xi*f", "f^2"], 2,
        {"xi": 1, "f": 1}, {"xi": -2, "f": -3})


def p1xp1() -> RingPresentation:
    """F_0 = P^1 x P^1; bidegree (a, b) is a*h1 + b*h2."""
    return RingPresentation(
        "P1xP1", [("h1", 1), ("h2", 1)], ["h1^2", "h2^2"], 2,
        {"h1": 1, "h2": 1}, {"h1": -2, "h2": -2})


def projective_space(n: int) -> RingPresentation:
    return RingPresentation(
        f"P{n}", [("H", 1)], [f"H^{n + 1}"], n, {"H": n}, {"H": -(n + 1)})


def veronese_cone_blowup() -> RingPresentation:
    """P(O + O(-2)) over P^2, the blowup of the Veronese cone at its vertex."""
    return RingPresentation(
        "P(O+O(-2))/P2", [("xi", 1), ("h", 1)], ["h^3", "xi^2 - 2*xi*h"], 3,
        {"xi": 1, "h": 2}, {"xi": -2, "h": -1})


def catalog_presentations() -> dict[str, RingPresentation]:
    out = [height22_bundle(), hirzebruch_f1(), p1xp1(), projective_space(2),
           projective_space(3), veronese_cone_blowup()]
    return {p.name: p for p in out}
