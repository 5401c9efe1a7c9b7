"""Buchberger's algorithm over prime fields and degree counts of finite schemes.

Internally monomials are packed into Python ints so that monomial
multiplication is integer addition and the monomial order is integer
comparison.  A packed key is ``(order_part << LOW_BITS) | plain_part`` where
``plain_part`` holds the raw exponents (for divisibility tests) and
``order_part`` holds either the exponents (lex) or their prefix sums
(degrevlex).  Both parts are linear in the exponent vector.
"""

from __future__ import annotations

import random
import warnings
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from . import linalg
from .poly import CoefficientField, Grading, Polynomial, compose, derive_seed

_W = 16  # bits per exponent field; exponents stay below 2**15


class NotZeroDimensionalError(ValueError):
    """The ideal has an infinite staircase."""


class UnstableDegreeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "degrevlex"
    variables: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("degrevlex", "lex"):
            raise ValueError(f"unsupported monomial order {self.kind!r}")


class _Packer:
    def __init__(self, grading: Grading, order: MonomialOrder) -> None:
        names = order.variables or grading.variables
        if sorted(names) != sorted(grading.variables):
            raise ValueError("monomial order must list exactly the ring variables")
        self.n = n = grading.nvars
        self.perm = [grading.index(v) for v in names]
        self.kind = order.kind
        self.low_bits = _W * n
        self.low_mask = (1 << self.low_bits) - 1
        self.guard = sum(1 << (_W * j + _W - 1) for j in range(n))
        self._unpacked: dict[int, tuple[int, ...]] = {}

    def pack(self, exps: Sequence[int]) -> int:
        e = [exps[i] for i in self.perm]
        plain = 0
        for j, x in enumerate(e):
            plain |= x << (_W * j)
        order = 0
        if self.kind == "lex":
            fields = e
        else:
            # prefix sums S_{n-1}, ..., S_0 from the top field down
            sums = []
            s = 0
            for x in e:
                s += x
                sums.append(s)
            fields = sums[::-1]
        for x in fields:
            order = (order << _W) | x
        return (order << self.low_bits) | plain

    def exps(self, key: int) -> tuple[int, ...]:
        """Exponents in the packer's variable order."""
        cached = self._unpacked.get(key)
        if cached is None:
            plain = key & self.low_mask
            m = (1 << _W) - 1
            cached = tuple((plain >> (_W * j)) & m for j in range(self.n))
            self._unpacked[key] = cached
        return cached

    def unpack(self, key: int) -> tuple[int, ...]:
        """Exponents in grading order."""
        e = self.exps(key)
        out = [0] * self.n
        for j, i in enumerate(self.perm):
            out[i] = e[j]
        return tuple(out)

    def divides(self, a: int, b: int) -> bool:
        lo = self.low_mask
        g = self.guard
        return (((b & lo) | g) - (a & lo)) & g == g

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.exps(a), self.exps(b)
        out = [0] * self.n
        for j, i in enumerate(self.perm):
            out[i] = max(ea[j], eb[j])
        return self.pack(out)

    def coprime(self, a: int, b: int) -> bool:
        return (a & self.low_mask) & (b & self.low_mask) == 0 and \
            all(x == 0 or y == 0 for x, y in zip(self.exps(a), self.exps(b)))


# An internal polynomial is a list of (key, coeff) pairs sorted by key descending.
_Poly = list


def _to_internal(f: Polynomial, packer: _Packer) -> _Poly:
    return sorted(((packer.pack(e), c) for e, c in f.terms.items()), reverse=True)


def _monic(f: _Poly, p: int) -> _Poly:
    inv = pow(f[0][1], -1, p)
    return [(m, c * inv % p) for m, c in f]


def _reduce(f: dict[int, int], basis: list[_Poly], packer: _Packer, p: int) -> _Poly:
    """Full reduction of ``f`` (consumed) modulo monic polynomials ``basis``."""
    import heapq

    heap = [-m for m in f]
    heapq.heapify(heap)
    result: _Poly = []
    lead = [(g[0][0], g) for g in basis]
    lo, guard = packer.low_mask, packer.guard
    while heap:
        m = -heapq.heappop(heap)
        c = f.pop(m, 0)
        if not c:
            continue
        mb = (m & lo) | guard
        for lm, g in lead:
            if (mb - (lm & lo)) & guard == guard:
                shift = m - lm
                for gm, gc in g[1:]:
                    nm = gm + shift
                    old = f.get(nm)
                    if old is None:
                        f[nm] = -c * gc % p
                        heapq.heappush(heap, -nm)
                    else:
                        f[nm] = (old - c * gc) % p
                break
        else:
            result.append((m, c))
    return result


def _spoly(f: _Poly, g: _Poly, lcm: int, p: int) -> dict[int, int]:
    sf, sg = lcm - f[0][0], lcm - g[0][0]
    out: dict[int, int] = {}
    for m, c in f[1:]:
        out[m + sf] = c
    for m, c in g[1:]:
        k = m + sg
        out[k] = (out.get(k, 0) - c) % p
    return {k: v for k, v in out.items() if v}


def _buchberger(gens: list[_Poly], packer: _Packer, p: int) -> list[_Poly]:
    polys: list[_Poly] = []
    active: list[int] = []
    pairs: list[tuple[int, int, int]] = []

    def update(h: int) -> None:
        nonlocal active, pairs
        lh = polys[h][0][0]
        cands = list(active)
        kept: list[int] = []
        while cands:
            g1 = cands.pop()
            lg1 = polys[g1][0][0]
            l1 = packer.lcm(lh, lg1)
            if packer.coprime(lh, lg1) or not any(
                    packer.divides(packer.lcm(lh, polys[g2][0][0]), l1)
                    for g2 in cands + kept):
                kept.append(g1)
        new_pairs = [(packer.lcm(lh, polys[g][0][0]), g, h) for g in kept
                     if not packer.coprime(lh, polys[g][0][0])]
        survivors = []
        for l12, g1, g2 in pairs:
            if (packer.divides(lh, l12)
                    and packer.lcm(polys[g1][0][0], lh) != l12
                    and packer.lcm(lh, polys[g2][0][0]) != l12):
                continue
            survivors.append((l12, g1, g2))
        pairs = survivors + new_pairs
        active = [g for g in active if not packer.divides(lh, polys[g][0][0])] + [h]

    for f in sorted(gens, key=lambda f: f[0][0]):
        r = _reduce(dict(f), [polys[i] for i in active], packer, p)
        if r:
            polys.append(_monic(r, p))
            update(len(polys) - 1)

    while pairs:
        best = min(range(len(pairs)), key=lambda i: pairs[i][0])
        l12, i, j = pairs.pop(best)
        s = _spoly(polys[i], polys[j], l12, p)
        r = _reduce(s, [polys[k] for k in active], packer, p)
        if r:
            polys.append(_monic(r, p))
            update(len(polys) - 1)

    basis = [polys[i] for i in active]
    basis.sort(key=lambda f: f[0][0])
    minimal = [f for k, f in enumerate(basis)
               if not any(packer.divides(g[0][0], f[0][0]) for g in basis[:k])]
    reduced = []
    for k, f in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = _reduce(dict(f[1:]), others, packer, p)
        reduced.append([f[0]] + tail)
    return reduced


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    field: CoefficientField
    grading: Grading
    basis: tuple[Polynomial, ...]
    _packer: _Packer = dc_field(repr=False, compare=False)
    _internal: tuple = dc_field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.basis)

    def leading_exponents(self) -> list[tuple[int, ...]]:
        return [self._packer.unpack(f[0][0]) for f in self._internal]

    def is_unit_ideal(self) -> bool:
        return any(not any(e) for e in self.leading_exponents())


def _from_internal(f: _Poly, grading: Grading, fld: CoefficientField,
                   packer: _Packer) -> Polynomial:
    return Polynomial._raw(grading, fld, {packer.unpack(m): c for m, c in f})


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis over GF(p), deterministic for given input."""
    if not gens:
        raise ValueError("empty generator list")
    order = order or MonomialOrder()
    grading, fld = gens[0].grading, gens[0].field
    for g in gens:
        if g.grading != grading or g.field != fld:
            raise ValueError("generators must share one grading and field")
    if fld.is_rational:
        raise ValueError("Groebner bases are only supported over prime fields")
    p = fld.characteristic
    packer = _Packer(grading, order)
    internal = [_to_internal(g, packer) for g in gens if g]
    reduced = _buchberger(internal, packer, p) if internal else []
    basis = tuple(_from_internal(f, grading, fld, packer) for f in reduced)
    return GroebnerBasis(order, fld, grading, basis, packer, tuple(reduced))


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if f.grading != gb.grading or f.field != gb.field:
        raise ValueError("polynomial and basis live in different rings")
    packer = gb._packer
    r = _reduce({packer.pack(e): c for e, c in f.terms.items()}, list(gb._internal),
                packer, gb.field.characteristic)
    return _from_internal(r, gb.grading, gb.field, packer)


def s_polynomials_reduce_to_zero(gb: GroebnerBasis) -> bool:
    """Defining property: every S-polynomial of basis pairs reduces to 0."""
    packer, p = gb._packer, gb.field.characteristic
    polys = list(gb._internal)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            l12 = packer.lcm(polys[i][0][0], polys[j][0][0])
            if _reduce(_spoly(polys[i], polys[j], l12, p), polys, packer, p):
                return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    packer = gb._packer
    polys = gb._internal
    for i, f in enumerate(polys):
        if f[0][1] != 1:
            return False
        for j, g in enumerate(polys):
            if i != j and any(packer.divides(g[0][0], m) for m, _ in f):
                return False
    return True


def quotient_dimension(gb: GroebnerBasis) -> int:
    """Number of standard monomials (affine scheme degree with multiplicity)."""
    packer = gb._packer
    leads = [packer.exps(f[0][0]) for f in gb._internal]
    n = packer.n
    if any(not any(e) for e in leads):
        return 0
    for j in range(n):
        if not any(e[j] and sum(e) == e[j] for e in leads):
            raise NotZeroDimensionalError(f"no pure power of variable {j} among leading terms")

    def standard(e: list[int]) -> bool:
        return not any(all(a <= b for a, b in zip(l, e)) for l in leads)

    count = 0
    e = [0] * n

    def rec(j: int) -> None:
        nonlocal count
        if j == n:
            count += 1
            return
        while standard(e):
            rec(j + 1)
            e[j] += 1
        e[j] = 0

    rec(0)
    return count


def _random_invertible(n: int, p: int, rng: random.Random) -> list[list[int]]:
    fld = CoefficientField(p)
    while True:
        a = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        if linalg.rank(a, fld) == n:
            return a


def _check_standard_homogeneous(gens: Sequence[Polynomial]) -> None:
    if not gens:
        raise ValueError("empty generator list")
    g = gens[0].grading
    if g.axes != 1 or any(w != (1,) for w in g.weights):
        raise ValueError("projective_degree needs a standard-graded ring")
    for f in gens:
        if f.grading != g or f.field != gens[0].field:
            raise ValueError("generators must share one grading and field")
        if not f.is_homogeneous():
            raise ValueError("generators must be homogeneous")
    if gens[0].field.is_rational:
        raise ValueError("projective_degree needs a prime field")


def affine_degree_after_change(gens: Sequence[Polynomial], seed: int,
                               order: MonomialOrder | None = None,
                               check: bool = False) -> int:
    """One trial: random linear change of coordinates, last variable set to 1.

    Raises ``NotZeroDimensionalError`` when the affine ideal is not finite.
    With ``check=True`` the basis is also verified by S-polynomial reduction
    (``AssertionError`` on failure).
    """
    grading, fld = gens[0].grading, gens[0].field
    p = fld.characteristic
    n = grading.nvars
    rng = random.Random(seed)
    a = _random_invertible(n, p, rng)
    affine = Grading.standard(grading.variables[:-1])
    ys = [Polynomial.variable(affine, fld, v) for v in affine.variables]
    images = {}
    for i, v in enumerate(grading.variables):
        img = Polynomial.constant(affine, fld, a[i][n - 1])
        for j in range(n - 1):
            img = img + ys[j].scale(a[i][j])
        images[v] = img
    affine_gens = [compose(f, images) for f in gens]
    gb = buchberger(affine_gens, order)
    if check and not s_polynomials_reduce_to_zero(gb):
        raise AssertionError("Buchberger output failed the S-polynomial check")
    return quotient_dimension(gb)


def degree_samples(gens: Sequence[Polynomial], seed: int, trials: int,
                   check: bool = False) -> list[int | None]:
    """Per-trial affine degrees; ``None`` marks a trial that was not zero-dimensional."""
    _check_standard_homogeneous(gens)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    out: list[int | None] = []
    for t in range(trials):
        try:
            out.append(affine_degree_after_change(gens, derive_seed(seed, "chart", t),
                                                  check=check))
        except NotZeroDimensionalError:
            out.append(None)
    return out


def modal(values: Iterable[int | None]) -> int | None:
    counts = Counter(v for v in values if v is not None)
    if not counts:
        return None
    best = max(counts.values())
    return min(v for v, k in counts.items() if k == best)


def projective_degree(gens: Sequence[Polynomial], seed: int = 0, trials: int = 3) -> int:
    """Degree of the finite projective scheme cut out by homogeneous ``gens``.

    Each trial applies a seeded random invertible change of coordinates,
    dehomogenizes by setting the last variable to 1 and counts standard
    monomials.  Returns the modal value and warns (``UnstableDegreeWarning``)
    if the trials disagree.
    """
    values = degree_samples(gens, seed, trials)
    m = modal(values)
    if m is None:
        raise NotZeroDimensionalError("no trial produced a zero-dimensional ideal")
    if len(set(values)) > 1:
        warnings.warn(f"projective degree unstable across trials: {values}",
                      UnstableDegreeWarning, stacklevel=2)
    return m
