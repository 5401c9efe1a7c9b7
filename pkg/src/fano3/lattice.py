"""Integer lattices given by Gram matrices, and maps between them."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Mapping, Sequence

Vector = tuple[int, ...]

DEFAULT_SEARCH_CEILING = 10 ** 8


@dataclass(frozen=True)
class IntegerLattice:
    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if n == 0 or any(len(r) != n for r in g):
            raise ValueError("Gram matrix must be square and non-empty")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix must be symmetric")
        labels = tuple(self.labels) or tuple(f"e{i + 1}" for i in range(n))
        if len(labels) != n:
            raise ValueError("one label per basis vector")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def diagonal(cls, entries: Sequence[int], labels: Sequence[str] = ()) -> IntegerLattice:
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)),
                   tuple(labels))

    @property
    def rank(self) -> int:
        return len(self.gram)

    def vector(self, **coords: int) -> Vector:
        """Vector from label coordinates, e.g. ``lat.vector(h=1, R1=-1)``."""
        v = [0] * self.rank
        for k, x in coords.items():
            v[self.labels.index(k)] = x
        return tuple(v)

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "gram": [list(r) for r in self.gram]}

    @classmethod
    def from_dict(cls, data: Mapping) -> IntegerLattice:
        return cls(tuple(tuple(r) for r in data["gram"]), tuple(data["labels"]))


@dataclass(frozen=True)
class LatticeMap:
    """``columns[i]`` is the image of the i-th source basis vector."""

    source: IntegerLattice
    target: IntegerLattice
    columns: tuple[Vector, ...]

    def __post_init__(self) -> None:
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if len(cols) != self.source.rank or any(len(c) != self.target.rank for c in cols):
            raise ValueError("map matrix has incompatible dimensions")

    def to_dict(self) -> dict:
        return {"source": self.source.to_dict(), "target": self.target.to_dict(),
                "columns": [list(c) for c in self.columns]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Mapping) -> LatticeMap:
        return cls(IntegerLattice.from_dict(data["source"]), IntegerLattice.from_dict(data["target"]),
                   tuple(tuple(c) for c in data["columns"]))


def gram_product(lat: IntegerLattice, v: Sequence[int], w: Sequence[int]) -> int:
    if len(v) != lat.rank or len(w) != lat.rank:
        raise ValueError(f"vectors must have length {lat.rank}")
    return sum(v[i] * lat.gram[i][j] * w[j] for i in range(lat.rank) for j in range(lat.rank)
               if v[i] and w[j])


def verify_embedding(m: LatticeMap) -> bool:
    """True iff the map is an isometry onto its image: ``A^T G_tgt A == G_src``."""
    cols = m.columns
    return all(gram_product(m.target, cols[i], cols[j]) == m.source.gram[i][j]
               for i in range(len(cols)) for j in range(i, len(cols)))


def search_embeddings(src: IntegerLattice, tgt: IntegerLattice, bound: int,
                      ceiling: int = DEFAULT_SEARCH_CEILING) -> list[LatticeMap]:
    """All isometric maps with entries in ``[-bound, bound]``, lexicographically ordered.

    Columns are chosen in order and pruned as soon as a pairing with an
    earlier column fails; the result equals filtering every candidate matrix
    through :func:`verify_embedding`.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if src.rank > tgt.rank:
        raise ValueError("source rank exceeds target rank")
    space = (2 * bound + 1) ** (src.rank * tgt.rank)
    if space > ceiling:
        raise ValueError(f"search space {space} exceeds ceiling {ceiling}")
    box = list(itertools.product(range(-bound, bound + 1), repeat=tgt.rank))
    by_norm: dict[int, list[Vector]] = {}
    for v in box:
        by_norm.setdefault(gram_product(tgt, v, v), []).append(v)
    found: list[LatticeMap] = []

    def rec(chosen: list[Vector]) -> None:
        k = len(chosen)
        if k == src.rank:
            found.append(LatticeMap(src, tgt, tuple(chosen)))
            return
        for v in by_norm.get(src.gram[k][k], []):
            if all(gram_product(tgt, chosen[i], v) == src.gram[i][k] for i in range(k)):
                chosen.append(v)
                rec(chosen)
                chosen.pop()

    rec([])
    return found


def class_identity(lat: IntegerLattice, lhs: Sequence[int], rhs: Sequence[int]) -> bool:
    if len(lhs) != lat.rank or len(rhs) != lat.rank:
        raise ValueError(f"vectors must have length {lat.rank}")
    return tuple(lhs) == tuple(rhs)


def compose_maps(outer: LatticeMap, inner: LatticeMap) -> LatticeMap:
    if inner.target != outer.source:
        raise ValueError("maps are not composable")
    cols = []
    for c in inner.columns:
        img = [0] * outer.target.rank
        for coeff, oc in zip(c, outer.columns):
            for t in range(len(img)):
                img[t] += coeff * oc[t]
        cols.append(tuple(img))
    return LatticeMap(inner.source, outer.target, tuple(cols))


def change_of_basis(lat: IntegerLattice, columns: Sequence[Sequence[int]]) -> LatticeMap:
    """Map from the lattice in the new basis ``columns`` into ``lat``."""
    cols = tuple(tuple(c) for c in columns)
    n = len(cols)
    gram = tuple(tuple(gram_product(lat, cols[i], cols[j]) for j in range(n)) for i in range(n))
    return LatticeMap(IntegerLattice(gram), lat, cols)


def add(*vs: Sequence[int]) -> Vector:
    return tuple(map(sum, zip(*vs)))


def scale(k: int, v: Sequence[int]) -> Vector:
    return tuple(k * x for x in v)


# -- catalog lattices ------------------------------------------------------------

def phi_lattice() -> IntegerLattice:
    """Polarization of the (1,1) cap (2,2) K3 surface in P^2 x P^2."""
    return IntegerLattice(((2, 4), (4, 2)), ("f1", "f2"))


def pi_lattice() -> IntegerLattice:
    """Picard lattice of the K3 double cover of P^1 x P^1 from a (2,2,2) divisor."""
    return IntegerLattice(((0, 2, 2), (2, 0, 2), (2, 2, 0)), ("E1", "E2", "E3"))


def nodal_quartic_lattice(nodes: int) -> IntegerLattice:
    """``<4> + <-2>^nodes``: hyperplane class and exceptional curves of a nodal quartic."""
    return IntegerLattice.diagonal([4] + [-2] * nodes, ["h"] + [f"R{i + 1}" for i in range(nodes)])


def phi_embedding() -> LatticeMap:
    tgt = nodal_quartic_lattice(2)
    return LatticeMap(phi_lattice(), tgt, (tgt.vector(h=1, R1=-1), tgt.vector(h=1, R2=-1)))


def pi_embedding() -> LatticeMap:
    tgt = nodal_quartic_lattice(3)
    return LatticeMap(pi_lattice(), tgt, (tgt.vector(h=1, R2=-1, R3=-1),
                                          tgt.vector(h=1, R1=-1, R3=-1),
                                          tgt.vector(h=1, R1=-1, R2=-1)))
