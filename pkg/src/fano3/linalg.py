"""Row reduction over QQ (exact ``Fraction``) and prime fields."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import CoefficientField

Matrix = list[list]


def _prepare(rows: Sequence[Sequence], field: CoefficientField) -> Matrix:
    if field.characteristic:
        return [[field.coerce(x) for x in r] for r in rows]
    return [[Fraction(x) for x in r] for r in rows]


def rref(rows: Sequence[Sequence], field: CoefficientField) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = _prepare(rows, field)
    if not a:
        return a, []
    ncols = len(a[0])
    p = field.characteristic
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][col], -1, p) if p else 1 / a[r][col]
        a[r] = [(x * inv) % p if p else x * inv for x in a[r]]
        row = a[r]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                if p:
                    a[i] = [(x - f * y) % p for x, y in zip(a[i], row)]
                else:
                    a[i] = [x - f * y for x, y in zip(a[i], row)]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence], field: CoefficientField) -> int:
    return len(rref(rows, field)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, field: CoefficientField) -> Matrix:
    """Basis of ``{v : A v = 0}`` as a list of vectors of length ``ncols``."""
    if not rows:
        one = 1 if field.characteristic else Fraction(1)
        return [[one if j == i else 0 * one for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, field)
    p = field.characteristic
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for fj in free:
        v = [0] * ncols if p else [Fraction(0)] * ncols
        v[fj] = 1 if p else Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = (-row[fj]) % p if p else -row[fj]
        basis.append(v)
    return basis
