"""Symmetric Cartan data and the weight lattice.

A weight is stored as a pair ``(d, v)`` meaning ``sum d_i w_i - sum v_i a_i``
(fundamental weights ``w_i``, simple roots ``a_i``).  For affine types the
Cartan matrix is singular, so the two coordinate systems are never merged.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .errors import InvalidGraph


@dataclass(frozen=True)
class DynkinGraph:
    vertices: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertices < 1:
            raise InvalidGraph("graph needs at least one vertex")
        edges = tuple(tuple(sorted((int(a), int(b)))) for a, b in self.edges)
        for a, b in edges:
            if a == b:
                raise InvalidGraph(f"loop at vertex {a}")
            if not (0 <= a < self.vertices and 0 <= b < self.vertices):
                raise InvalidGraph(f"edge {(a, b)} out of range")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_json(cls, data) -> DynkinGraph:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["vertices"]), tuple(tuple(e) for e in data.get("edges", [])))

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class CartanMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise InvalidGraph("Cartan matrix must be square")
            if row[i] != 2:
                raise InvalidGraph("diagonal entries must be 2")
            for j, c in enumerate(row):
                if i != j and (c > 0 or c != self.rows[j][i]):
                    raise InvalidGraph("off-diagonal entries must be symmetric and <= 0")

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def apply(self, v) -> tuple[int, ...]:
        """Return ``C v``."""
        return tuple(sum(c * x for c, x in zip(row, v)) for row in self.rows)


@dataclass(frozen=True)
class Weight:
    d: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        if len(self.d) != len(self.v):
            raise ValueError("d and v must have the same length")


def cartan_from_graph(g: DynkinGraph) -> CartanMatrix:
    mult = Counter(g.edges)
    rows = []
    for i in range(g.vertices):
        row = []
        for j in range(g.vertices):
            if i == j:
                row.append(2)
            else:
                row.append(-mult[tuple(sorted((i, j)))])
        rows.append(tuple(row))
    return CartanMatrix(tuple(rows))


def _check_vertex(C: CartanMatrix, i: int):
    if not 0 <= i < C.rank:
        raise IndexError(f"vertex {i} out of range for rank {C.rank}")


def pairing(C: CartanMatrix, mu: Weight, i: int) -> int:
    """``<mu, a_i^vee> = d_i - (C v)_i``."""
    _check_vertex(C, i)
    if len(mu.d) != C.rank:
        raise ValueError("weight dimension does not match Cartan matrix")
    return mu.d[i] - sum(C[i, j] * mu.v[j] for j in range(C.rank))


def simple_reflection(C: CartanMatrix, i: int, mu: Weight) -> Weight:
    c = pairing(C, mu, i)
    if c == 0:
        return mu
    v = list(mu.v)
    v[i] += c
    return Weight(mu.d, tuple(v))


def highest_weight(d) -> Weight:
    d = tuple(d)
    return Weight(d, (0,) * len(d))


# Named graphs used throughout the tests and the CLI.

def sl2_affine() -> DynkinGraph:
    return DynkinGraph(2, ((0, 1), (0, 1)))


def a2_affine() -> DynkinGraph:
    return DynkinGraph(3, ((0, 1), (1, 2), (0, 2)))


def d4_star() -> DynkinGraph:
    return DynkinGraph(4, ((0, 1), (0, 2), (0, 3)))


def a2() -> DynkinGraph:
    return DynkinGraph(2, ((0, 1),))
