"""Exact sparse multivariate polynomials over QQ and prime fields.

A :class:`Polynomial` is an immutable map from exponent vectors to nonzero
coefficients, tied to a :class:`Grading` (ordered variables plus one integer
weight vector per variable) and a :class:`CoefficientField`.  Rational
coefficients are kept as ``int`` whenever the denominator is one and as
``Fraction`` otherwise; prime-field coefficients are ints in ``[0, p)``.

Example:
    >>> g, (x, y) = polyring("x,y")
    >>> (x - y) ** 2
    x^2 - 2*x*y + y^2
"""

from __future__ import annotations

import hashlib
import heapq
import operator
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Mapping, Sequence, Union

Coefficient = Union[int, Fraction]
Exponent = tuple[int, ...]
Multidegree = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def derive_seed(seed: int, *labels: object) -> int:
    """Stable 63-bit sub-seed; independent of ``PYTHONHASHSEED``."""
    text = "|".join([str(seed), *map(str, labels)])
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big") >> 1


@dataclass(frozen=True)
class CoefficientField:
    """``characteristic == 0`` means QQ, otherwise the prime field GF(p)."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p != 0 and not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def coerce(self, c: object) -> Coefficient:
        p = self.characteristic
        if isinstance(c, bool):
            c = int(c)
        if p:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, p) % p
            if isinstance(c, int):
                return c % p
            raise TypeError(f"cannot coerce {c!r} into GF({p})")
        if isinstance(c, int):
            return c
        if isinstance(c, Fraction):
            return c.numerator if c.denominator == 1 else c
        if isinstance(c, str):
            return self.coerce(Fraction(c))
        raise TypeError(f"cannot coerce {c!r} into QQ")

    def inverse(self, c: Coefficient) -> Coefficient:
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p:
            return pow(int(c), -1, p)
        return self.coerce(Fraction(1) / c)

    def __str__(self) -> str:
        return f"GF({self.characteristic})" if self.characteristic else "QQ"


QQ = CoefficientField(0)


def GF(p: int) -> CoefficientField:
    return CoefficientField(p)


@dataclass(frozen=True)
class Grading:
    """Ordered variables, each carrying a non-negative weight vector."""

    variables: tuple[str, ...]
    weights: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.variables) != len(self.weights):
            raise ValueError("every variable needs exactly one weight vector")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        axes = {len(w) for w in self.weights}
        if len(axes) > 1:
            raise ValueError("weight vectors have inconsistent lengths")
        if any(x < 0 for w in self.weights for x in w):
            raise ValueError("weights must be non-negative")

    @classmethod
    def standard(cls, variables: Iterable[str]) -> Grading:
        names = tuple(variables)
        return cls(names, tuple((1,) for _ in names))

    @classmethod
    def from_groups(cls, groups: Sequence[Sequence[str]]) -> Grading:
        """One grading axis per group; variables of group ``i`` get weight ``e_i``."""
        names: list[str] = []
        weights: list[tuple[int, ...]] = []
        for i, group in enumerate(groups):
            for name in group:
                names.append(name)
                weights.append(tuple(int(j == i) for j in range(len(groups))))
        return cls(tuple(names), tuple(weights))

    @property
    def axes(self) -> int:
        return len(self.weights[0]) if self.weights else 0

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def weight_of(self, exps: Exponent) -> Multidegree:
        deg = [0] * self.axes
        for e, w in zip(exps, self.weights):
            if e:
                for a, x in enumerate(w):
                    deg[a] += e * x
        return tuple(deg)

    def extend(self, variables: Iterable[str], weights: Iterable[Sequence[int]]) -> Grading:
        return Grading(self.variables + tuple(variables),
                       self.weights + tuple(tuple(w) for w in weights))

    def without(self, name: str) -> Grading:
        i = self.index(name)
        return Grading(self.variables[:i] + self.variables[i + 1:],
                       self.weights[:i] + self.weights[i + 1:])


def monomial_basis(grading: Grading, d: Sequence[int]) -> list[Exponent]:
    """All exponent vectors of multidegree ``d``, in descending lex order."""
    d = tuple(d)
    if len(d) != grading.axes:
        raise ValueError(f"multidegree {d} has wrong length for {grading.axes} axes")
    if any(x < 0 for x in d):
        raise ValueError("negative multidegree")
    n = grading.nvars
    for name, w in zip(grading.variables, grading.weights):
        if not any(w):
            raise ValueError(f"variable {name!r} has zero weight; basis is infinite")
    out: list[Exponent] = []

    def rec(i: int, remaining: list[int], prefix: list[int]) -> None:
        if i == n:
            if not any(remaining):
                out.append(tuple(prefix))
            return
        w = grading.weights[i]
        top = min(remaining[a] // x for a, x in enumerate(w) if x)
        for e in range(top, -1, -1):
            prefix.append(e)
            rec(i + 1, [r - e * x for r, x in zip(remaining, w)], prefix)
            prefix.pop()

    rec(0, list(d), [])
    return out


class Polynomial:
    """Immutable sparse polynomial; see module docstring."""

    __slots__ = ("grading", "field", "terms", "_hash")

    def __init__(self, grading: Grading, field: CoefficientField,
                 terms: Mapping[Exponent, object] | None = None) -> None:
        clean: dict[Exponent, Coefficient] = {}
        n = grading.nvars
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent {exps} has length {len(exps)}, expected {n}")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = field.coerce(c)
            if c:
                clean[exps] = field.coerce(clean.get(exps, 0) + c)
                if not clean[exps]:
                    del clean[exps]
        self.grading = grading
        self.field = field
        self.terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, grading: Grading, field: CoefficientField,
             terms: dict[Exponent, Coefficient]) -> Polynomial:
        # Trusted constructor: caller guarantees canonical, nonzero coefficients.
        obj = cls.__new__(cls)
        obj.grading = grading
        obj.field = field
        obj.terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, grading: Grading, field: CoefficientField = QQ) -> Polynomial:
        return cls._raw(grading, field, {})

    @classmethod
    def constant(cls, grading: Grading, field: CoefficientField, c: object) -> Polynomial:
        return cls(grading, field, {(0,) * grading.nvars: c})

    @classmethod
    def variable(cls, grading: Grading, field: CoefficientField, name: str) -> Polynomial:
        i = grading.index(name)
        exps = tuple(int(j == i) for j in range(grading.nvars))
        return cls._raw(grading, field, {exps: 1})

    @classmethod
    def monomial(cls, grading: Grading, field: CoefficientField, exps: Exponent,
                 c: object = 1) -> Polynomial:
        return cls(grading, field, {tuple(exps): c})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(Polynomial.variable(self.grading, self.field, v)
                     for v in self.grading.variables)

    # -- basic queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Exponent, Coefficient]]:
        return iter(self.terms.items())

    def coefficient(self, exps: Sequence[int]) -> Coefficient:
        return self.terms.get(tuple(exps), 0)

    def constant_term(self) -> Coefficient:
        return self.terms.get((0,) * self.grading.nvars, 0)

    def is_constant(self) -> bool:
        zero = (0,) * self.grading.nvars
        return all(e == zero for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        i = self.grading.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def variables_used(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(v for v, x in zip(self.grading.variables, e) if x)
        return used

    def multidegrees(self) -> set[Multidegree]:
        return {self.grading.weight_of(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.multidegrees()) <= 1

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: Polynomial) -> None:
        if self.grading != other.grading:
            raise ValueError("grading mismatch")
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def _lift(self, other: object) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.grading, self.field, other)
        return NotImplemented

    def _combine(self, other: Polynomial, sign: int) -> Polynomial:
        p = self.field.characteristic
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + sign * c
            if p:
                v %= p
            elif isinstance(v, Fraction) and v.denominator == 1:
                v = v.numerator
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.grading, self.field, out)

    def __add__(self, other: object) -> Polynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: object) -> Polynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other: object) -> Polynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other._combine(self, -1)

    def __neg__(self) -> Polynomial:
        return self.scale(-1)

    def scale(self, c: object) -> Polynomial:
        c = self.field.coerce(c)
        if not c:
            return Polynomial.zero(self.grading, self.field)
        p = self.field.characteristic
        if p:
            out = {e: v * c % p for e, v in self.terms.items()}
        else:
            out = {e: self.field.coerce(v * c) for e, v in self.terms.items()}
        return Polynomial._raw(self.grading, self.field, out)

    def __mul__(self, other: object) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        p = self.field.characteristic
        add = operator.add
        out: dict[Exponent, Coefficient] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        if p:
            out = {e: v % p for e, v in out.items() if v % p}
        else:
            out = {e: (v.numerator if isinstance(v, Fraction) and v.denominator == 1 else v)
                   for e, v in out.items() if v}
        return Polynomial._raw(self.grading, self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("exponent must be an int")
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.grading, self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.grading, self.field, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.grading == other.grading and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.grading, self.field, frozenset(self.terms.items())))
        return self._hash

    # -- substitution --------------------------------------------------------
    def evaluate(self, values: Mapping[str, object]) -> Polynomial:
        """Substitute field elements for some variables (result keeps the grading)."""
        idx = {self.grading.index(k): self.field.coerce(v) for k, v in values.items()}
        p = self.field.characteristic
        out: dict[Exponent, Coefficient] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i, v in idx.items():
                if e[i]:
                    c = c * v ** e[i]
                    e2[i] = 0
            if c:
                k = tuple(e2)
                out[k] = out.get(k, 0) + c
        return Polynomial(self.grading, self.field,
                          {e: (v % p if p else v) for e, v in out.items()})

    def sorted_terms(self) -> list[tuple[Exponent, Coefficient]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = self.grading.variables
        parts: list[str] = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
            neg = not self.field.characteristic and c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    # -- serialization -------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "variables": list(self.grading.variables),
            "weights": [list(w) for w in self.grading.weights],
            "characteristic": self.field.characteristic,
            "terms": [[str(c), list(e)] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> Polynomial:
        grading = Grading(tuple(data["variables"]), tuple(tuple(w) for w in data["weights"]))
        field = CoefficientField(int(data["characteristic"]))
        return cls(grading, field, {tuple(e): Fraction(c) for c, e in data["terms"]})


def polyring(names: str | Sequence[str], field: CoefficientField = QQ,
             weights: Sequence[Sequence[int]] | None = None
             ) -> tuple[Grading, tuple[Polynomial, ...]]:
    """Return ``(grading, generators)``; ``names`` may be ``"x,y,z"``."""
    if isinstance(names, str):
        names = [s.strip() for s in names.split(",") if s.strip()]
    names = tuple(names)
    if weights is None:
        grading = Grading.standard(names)
    else:
        grading = Grading(names, tuple(tuple(w) for w in weights))
    return grading, tuple(Polynomial.variable(grading, field, n) for n in names)


# -- operations ---------------------------------------------------------------

def ring_ops(f: Polynomial, g: Polynomial | int, op: str) -> Polynomial:
    if op == "pow":
        if not isinstance(g, int):
            raise TypeError("pow takes an integer exponent")
        return f ** g
    if not isinstance(g, Polynomial):
        raise TypeError(f"{op} takes two polynomials")
    f._check(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def multidegree_of(f: Polynomial) -> Multidegree:
    if f.is_zero():
        raise ValueError("zero polynomial has no multidegree")
    degs = f.multidegrees()
    if len(degs) != 1:
        raise ValueError(f"polynomial is not homogeneous: multidegrees {sorted(degs)}")
    return next(iter(degs))


def equal_up_to_scalar(f: Polynomial, g: Polynomial) -> Coefficient | None:
    """Return ``c != 0`` with ``f == c*g``, or None."""
    f._check(g)
    if f.is_zero() or g.is_zero():
        return 1 if f.is_zero() and g.is_zero() else None
    if f.terms.keys() != g.terms.keys():
        return None
    e0 = next(iter(g.terms))
    c = f.field.coerce(Fraction(f.terms[e0]) / g.terms[e0]) if f.field.is_rational \
        else f.terms[e0] * f.field.inverse(g.terms[e0]) % f.field.characteristic
    return c if g.scale(c) == f else None


@dataclass(frozen=True)
class PolynomialMatrix:
    rows: int
    cols: int
    entries: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows*cols")
        g, k = self.entries[0].grading, self.entries[0].field
        if any(e.grading != g or e.field != k for e in self.entries):
            raise ValueError("all entries must share one grading and field")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]]) -> PolynomialMatrix:
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(e for r in rows for e in r))

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Polynomial, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def minors(self, k: int) -> list[Polynomial]:
        """All ``k x k`` minors (rows and columns in lexicographic order)."""
        from itertools import combinations
        out = []
        for rs in combinations(range(self.rows), k):
            for cs in combinations(range(self.cols), k):
                sub = PolynomialMatrix.from_rows([[self[i, j] for j in cs] for i in rs])
                out.append(determinant(sub))
        return out


def determinant(m: PolynomialMatrix) -> Polynomial:
    """Cofactor expansion along the first row, memoized over column subsets."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    memo: dict[tuple[int, int], Polynomial] = {}

    # minor(r, cols): determinant of rows r..n-1 restricted to the column bitmask
    def minor(r: int, mask: int) -> Polynomial:
        if r == n:
            return Polynomial.constant(m.entries[0].grading, m.entries[0].field, 1)
        key = (r, mask)
        if key in memo:
            return memo[key]
        total = Polynomial.zero(m.entries[0].grading, m.entries[0].field)
        sign = 1
        for j in range(n):
            if mask >> j & 1:
                a = m[r, j]
                if a:
                    term = a * minor(r + 1, mask & ~(1 << j))
                    total = total + term if sign > 0 else total - term
                sign = -sign
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


def coefficients_in(f: Polynomial, var: str) -> list[Polynomial]:
    """``[c_0, c_1, ...]`` with ``f = sum c_k var^k`` and ``c_k`` free of ``var``."""
    i = f.grading.index(var)
    buckets: dict[int, dict[Exponent, Coefficient]] = {}
    for e, c in f.terms.items():
        k = e[i]
        buckets.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
    top = max(buckets, default=-1)
    return [Polynomial._raw(f.grading, f.field, buckets.get(k, {})) for k in range(top + 1)]


def resultant_univariate(f: Polynomial, g: Polynomial, var: str) -> Polynomial:
    """Sylvester resultant with respect to ``var``."""
    f._check(g)
    cf, cg = coefficients_in(f, var), coefficients_in(g, var)
    m, n = len(cf) - 1, len(cg) - 1
    if m < 1 or n < 1:
        raise ValueError(f"both polynomials must have positive degree in {var}")
    zero = Polynomial.zero(f.grading, f.field)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + cf[::-1] + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + cg[::-1] + [zero] * (size - n - 1 - i))
    return determinant(PolynomialMatrix.from_rows(rows))


def discriminant_binary_quadratic(a: Polynomial, b: Polynomial, c: Polynomial) -> Polynomial:
    """``b^2 - a*c`` for the form ``a*x0^2 + 2*b*x0*x1 + c*x1^2``."""
    a._check(b)
    a._check(c)
    return b * b - a * c


def _lex_key(e: Exponent) -> tuple[int, ...]:
    return tuple(-x for x in e)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return ``q`` with ``f == q*g``; raise ``ArithmeticError`` if ``g`` does not divide ``f``."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    field = f.field
    p = field.characteristic
    lead = max(g.terms)  # lex-leading exponent
    inv_lc = field.inverse(g.terms[lead])
    tail = [(e, c) for e, c in g.terms.items() if e != lead]
    rem = dict(f.terms)
    heap = [_lex_key(e) for e in rem]
    heapq.heapify(heap)
    quotient: dict[Exponent, Coefficient] = {}
    sub, add = operator.sub, operator.add
    while heap:
        e = tuple(-x for x in heapq.heappop(heap))
        c = rem.pop(e, 0)
        if not c:
            continue
        shift = tuple(map(sub, e, lead))
        if min(shift) < 0:
            raise ArithmeticError("divisor does not divide dividend")
        qc = field.coerce(c * inv_lc)
        quotient[shift] = qc
        for te, tc in tail:
            ne = tuple(map(add, te, shift))
            if ne in rem:
                rem[ne] = rem[ne] - qc * tc
                if p:
                    rem[ne] %= p
            else:
                v = -qc * tc
                rem[ne] = v % p if p else v
                heapq.heappush(heap, _lex_key(ne))
    return Polynomial(f.grading, field, quotient)


def partial_derivative(f: Polynomial, var: str) -> Polynomial:
    i = f.grading.index(var)
    p = f.field.characteristic
    out: dict[Exponent, Coefficient] = {}
    for e, c in f.terms.items():
        k = e[i]
        if k:
            v = c * k
            if p:
                v %= p
            if v:
                out[e[:i] + (k - 1,) + e[i + 1:]] = v
    return Polynomial._raw(f.grading, f.field, out)


def random_form(grading: Grading, d: Sequence[int], field: CoefficientField, seed: int,
                bound: int = 100) -> Polynomial:
    """Dense form of multidegree ``d`` with seeded nonzero coefficients.

    Over GF(p) coefficients are uniform in ``1..p-1``; over QQ they are
    nonzero integers in ``[-bound, bound]``.
    """
    basis = monomial_basis(grading, d)
    if not basis:
        raise ValueError(f"no monomials of multidegree {tuple(d)}")
    rng = random.Random(seed)
    p = field.characteristic
    terms = {}
    for e in basis:
        if p:
            terms[e] = rng.randrange(1, p)
        else:
            c = rng.randint(1, bound)
            terms[e] = c if rng.random() < 0.5 else -c
    return Polynomial(grading, field, terms)


def compose(f: Polynomial, images: Mapping[str, Polynomial]) -> Polynomial:
    """Substitute ``images[v]`` for every variable ``v`` of ``f``.

    All images share one target grading and field; every variable of ``f``
    that occurs in a term must have an image.
    """
    if not images:
        raise ValueError("no images given")
    first = next(iter(images.values()))
    tg, tf = first.grading, first.field
    if tf != f.field:
        raise ValueError("field mismatch")
    for v in images.values():
        if v.grading != tg or v.field != tf:
            raise ValueError("images must share one grading and field")
    names = f.grading.variables
    powers: dict[tuple[int, int], Polynomial] = {}
    one = Polynomial.constant(tg, tf, 1)

    def power(i: int, k: int) -> Polynomial:
        if k == 0:
            return one
        key = (i, k)
        if key not in powers:
            try:
                img = images[names[i]]
            except KeyError:
                raise KeyError(f"no image for variable {names[i]!r}") from None
            powers[key] = img if k == 1 else power(i, k - 1) * img
        return powers[key]

    out: dict[Exponent, Coefficient] = {}
    p = tf.characteristic
    for e, c in f.terms.items():
        term = reduce(operator.mul, (power(i, k) for i, k in enumerate(e) if k), one)
        for te, tc in term.terms.items():
            out[te] = out.get(te, 0) + c * tc
    return Polynomial(tg, tf, {e: (v % p if p else v) for e, v in out.items()})


def change_grading(f: Polynomial, grading: Grading) -> Polynomial:
    """Re-express ``f`` in a grading containing all variables that occur in ``f``."""
    pos = [grading.index(v) if v in grading.variables else -1 for v in f.grading.variables]
    out = {}
    for e, c in f.terms.items():
        ne = [0] * grading.nvars
        for i, k in enumerate(e):
            if k:
                if pos[i] < 0:
                    raise ValueError(f"variable {f.grading.variables[i]!r} missing from grading")
                ne[pos[i]] = k
        out[tuple(ne)] = c
    return Polynomial._raw(grading, f.field, out)


def generic_forms(variables: Sequence[str], forms: Sequence[tuple[str, int]],
                  extra: Sequence[tuple[str, Sequence[int]]] = (),
                  weights: Mapping[str, Sequence[int]] | None = None
                  ) -> tuple[Grading, dict[str, Polynomial]]:
    """Forms whose coefficients are fresh indeterminates.

    ``forms`` lists ``(name, degree)`` pairs of forms in ``variables``; each
    coefficient becomes a variable named ``name_<exponents>`` of weight zero.
    ``extra`` adds further variables with explicit weights.  The returned
    dict maps each form name, each ``variables`` name and each ``extra``
    name to its polynomial.
    """
    axes = len(next(iter(weights.values()))) if weights else 1
    base_weights = [tuple(weights[v]) if weights else (1,) for v in variables]
    base = Grading(tuple(variables), tuple(base_weights))
    std = Grading.standard(variables)
    coeff_names: list[str] = []
    per_form: list[tuple[str, list[tuple[Exponent, str]]]] = []
    for name, deg in forms:
        mons = monomial_basis(std, (deg,))
        entries = [(e, f"{name}_{''.join(map(str, e))}") for e in mons]
        coeff_names.extend(n for _, n in entries)
        per_form.append((name, entries))
    grading = base.extend([n for n, _ in extra], [w for _, w in extra])
    grading = grading.extend(coeff_names, [(0,) * axes] * len(coeff_names))
    nb = len(variables)
    out: dict[str, Polynomial] = {}
    for v in grading.variables[:nb + len(extra)]:
        out[v] = Polynomial.variable(grading, QQ, v)
    for name, entries in per_form:
        terms = {}
        for e, cname in entries:
            exps = [0] * grading.nvars
            exps[:nb] = e
            exps[grading.index(cname)] = 1
            terms[tuple(exps)] = 1
        out[name] = Polynomial._raw(grading, QQ, terms)
    return grading, out
