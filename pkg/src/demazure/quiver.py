"""Doubled quivers and framed representations over the rationals.

Arrow ``2k`` runs along edge ``k`` from its smaller to its larger endpoint and
arrow ``2k + 1`` is its reverse, so ``bar(h) == h ^ 1``.  A map ``x_h`` is a
``v[inc(h)] x v[out(h)]`` matrix; a framing ``t_i`` is ``d[i] x v[i]``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .cartan import CartanMatrix, DynkinGraph, cartan_from_graph, highest_weight
from .errors import InvalidGraph, NotAVarietyPoint, ShapeMismatch
from .weyl import act_on_weight, elements_up_to_length, reduce_word


@dataclass(frozen=True)
class DoubledQuiver:
    graph: DynkinGraph
    orientation: frozenset = None

    def __post_init__(self):
        n = 2 * len(self.graph.edges)
        omega = frozenset(range(0, n, 2)) if self.orientation is None else frozenset(int(h) for h in self.orientation)
        for k in range(len(self.graph.edges)):
            if (2 * k in omega) == (2 * k + 1 in omega):
                raise InvalidGraph(f"orientation must contain exactly one arrow of edge {k}")
        if not omega <= set(range(n)):
            raise InvalidGraph("orientation names an unknown arrow")
        object.__setattr__(self, "orientation", omega)

    @property
    def arrows(self) -> range:
        return range(2 * len(self.graph.edges))

    @property
    def vertices(self) -> int:
        return self.graph.vertices

    def out(self, h: int) -> int:
        a, b = self.graph.edges[h // 2]
        return a if h % 2 == 0 else b

    def inc(self, h: int) -> int:
        a, b = self.graph.edges[h // 2]
        return b if h % 2 == 0 else a

    @staticmethod
    def bar(h: int) -> int:
        return h ^ 1

    def eps(self, h: int) -> int:
        return 1 if h in self.orientation else -1

    def cartan(self) -> CartanMatrix:
        return cartan_from_graph(self.graph)


@dataclass(frozen=True)
class QuiverRep:
    quiver: DoubledQuiver
    v: tuple
    d: tuple
    x: dict = field(default_factory=dict)
    t: dict = field(default_factory=dict)

    def __post_init__(self):
        q = self.quiver
        v = tuple(int(a) for a in self.v)
        d = tuple(int(a) for a in self.d) if self.d is not None else (0,) * q.vertices
        if len(v) != q.vertices or len(d) != q.vertices:
            raise ShapeMismatch("v and d must have one entry per vertex")
        if any(a < 0 for a in v + d):
            raise ShapeMismatch("dimensions must be non-negative")
        x = {}
        for h in q.arrows:
            rows, cols = v[q.inc(h)], v[q.out(h)]
            x[h] = _checked(self.x.get(h), rows, cols, f"x[{h}]")
        if set(self.x) - set(q.arrows):
            raise ShapeMismatch("x names an unknown arrow")
        t = {}
        for i in range(q.vertices):
            t[i] = _checked(self.t.get(i), d[i], v[i], f"t[{i}]")
        if set(self.t) - set(range(q.vertices)):
            raise ShapeMismatch("t names an unknown vertex")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "t", t)

    @classmethod
    def from_json(cls, data) -> QuiverRep:
        if isinstance(data, str):
            data = json.loads(data)
        graph = DynkinGraph.from_json(data["graph"])
        q = DoubledQuiver(graph, data.get("orientation"))
        x = {int(h): m for h, m in data.get("x", {}).items()}
        t = {int(i): m for i, m in data.get("t", {}).items()}
        return cls(q, tuple(data["v"]), tuple(data.get("d", [0] * graph.vertices)), x, t)

    def to_json(self) -> dict:
        def enc(m):
            return [[str(a) for a in row] for row in m]

        return {
            "graph": self.quiver.graph.to_json(),
            "orientation": sorted(self.quiver.orientation),
            "v": list(self.v),
            "d": list(self.d),
            "x": {str(h): enc(m) for h, m in self.x.items()},
            "t": {str(i): enc(m) for i, m in self.t.items()},
        }

    def base_change(self, g: dict) -> QuiverRep:
        """Act by ``g = (g_i)`` in ``GL(V)``: ``x_h -> g_inc x_h g_out^-1``, ``t_i -> t_i g_i^-1``."""
        q = self.quiver
        ginv = {i: linalg.inverse(g[i]) if self.v[i] else [] for i in range(q.vertices)}
        x = {}
        for h, m in self.x.items():
            a, b = q.inc(h), q.out(h)
            x[h] = linalg.matmul(linalg.matmul(g[a], m, self.v[a], self.v[b]), ginv[b], self.v[b], self.v[b])
        t = {i: linalg.matmul(m, ginv[i], self.v[i], self.v[i]) for i, m in self.t.items()}
        return QuiverRep(q, self.v, self.d, x, t)


def _checked(m, rows: int, cols: int, name: str):
    if m is None:
        return linalg.zeros(rows, cols)
    try:
        out = linalg.matrix(m, rows)
    except (ValueError, ZeroDivisionError) as exc:
        raise ShapeMismatch(f"{name}: {exc}") from None
    if rows and any(len(r) != cols for r in out):
        raise ShapeMismatch(f"{name}: expected shape {rows}x{cols}")
    return out


def moment_residual(rep: QuiverRep) -> dict:
    """``psi_i = sum over h with inc(h) = i of eps(h) x_h x_bar(h)``."""
    q = rep.quiver
    psi = {i: linalg.zeros(rep.v[i], rep.v[i]) for i in range(q.vertices)}
    for h in q.arrows:
        i = q.inc(h)
        prod = linalg.matmul(rep.x[h], rep.x[q.bar(h)], rep.v[q.out(h)], rep.v[i])
        e = q.eps(h)
        psi[i] = [[a + e * b for a, b in zip(ra, rb)] for ra, rb in zip(psi[i], prod)]
    return psi


def satisfies_moment_map(rep: QuiverRep) -> bool:
    return all(linalg.is_zero(m) for m in moment_residual(rep).values())


def _span_images(rep: QuiverRep, spaces: dict) -> dict:
    """Per vertex, the span of all ``x_h u`` with ``u`` in the space at ``out(h)``."""
    q = rep.quiver
    gens = {i: [] for i in range(q.vertices)}
    for h in q.arrows:
        a, b = q.inc(h), q.out(h)
        if not rep.v[a]:
            continue
        for u in spaces[b]:
            gens[a].append([sum((row[k] * u[k] for k in range(rep.v[b])), Fraction(0)) for row in rep.x[h]])
    return {i: linalg.row_space(gens[i], rep.v[i]) for i in gens}


def nilpotency_order(rep: QuiverRep) -> int | None:
    """Smallest ``n >= 1`` with every length-``n`` path composition zero, or None.

    Tracks the image of all length-``n`` paths as a subspace at each vertex;
    the span is taken over individual compositions, so distinct paths cannot
    cancel.  The images form a decreasing chain, so they vanish within
    ``dim V`` steps or stabilise at a nonzero space.
    """
    spaces = {i: linalg.identity(rep.v[i]) for i in range(rep.quiver.vertices)}
    prev = sum(rep.v)
    n = 0
    while True:
        spaces = _span_images(rep, spaces)
        n += 1
        total = sum(len(s) for s in spaces.values())
        if total == 0:
            return n
        if total == prev:
            return None
        prev = total


def is_nilpotent(rep: QuiverRep) -> bool:
    return nilpotency_order(rep) is not None


def stable_core_dims(rep: QuiverRep) -> tuple[int, ...]:
    """Dimensions of the largest x-stable graded subspace inside ``ker t``."""
    q = rep.quiver
    # S_i is stored as ker(cons[i]); start from ker t_i
    cons = {i: linalg.row_space(rep.t[i], rep.v[i]) for i in range(q.vertices)}
    while True:
        new = {}
        for i in range(q.vertices):
            rows = list(cons[i])
            for h in q.arrows:
                if q.out(h) == i:
                    a = q.inc(h)
                    rows += linalg.matmul(cons[a], rep.x[h], rep.v[a], rep.v[i])
            new[i] = linalg.row_space(rows, rep.v[i])
        if all(len(new[i]) == len(cons[i]) for i in cons):
            return tuple(rep.v[i] - len(cons[i]) for i in range(q.vertices))
        cons = new


def is_stable(rep: QuiverRep) -> bool:
    return not any(stable_core_dims(rep))


def nakajima_dim(C: CartanMatrix, v, d) -> Fraction:
    """``(1/2) v^T (2d - C v)``."""
    v, d = tuple(v), tuple(d)
    if len(v) != C.rank or len(d) != C.rank:
        raise ValueError("dimension vectors do not match Cartan matrix")
    cv = C.apply(v)
    return Fraction(sum(a * (2 * b - c) for a, b, c in zip(v, d, cv)), 2)


def extremal_dim_vector(C: CartanMatrix, d, word) -> tuple[int, ...]:
    """``v_w`` with ``lambda_d - alpha_{v_w} = w lambda_d``."""
    return act_on_weight(C, reduce_word(C, word), highest_weight(d)).v


def find_extremal(C: CartanMatrix, d, v, max_length: int):
    v = tuple(v)
    for w in elements_up_to_length(C, max_length):
        if extremal_dim_vector(C, d, w) == v:
            return w
    return None


def classify_sl2_word(word) -> tuple[int, str | None]:
    """Return ``(n, sign)`` for a word equal to ``w_n^sign``; sign is None for the identity."""
    from .cartan import sl2_affine

    w = reduce_word(cartan_from_graph(sl2_affine()), word)
    if not w:
        return 0, None
    return len(w), "+" if w[-1] == 0 else "-"


def check_sl2_demazure_membership(rep: QuiverRep, word) -> bool:
    """Whether the point ``[x, t]`` satisfies ``x^m = 0`` for ``m = m_bound(d, w)``."""
    from .sl2 import m_bound

    q = rep.quiver
    if q.cartan().rows != ((2, -2), (-2, 2)):
        raise InvalidGraph("membership criterion needs the affine sl2 quiver")
    if not satisfies_moment_map(rep):
        raise NotAVarietyPoint("moment map residual is nonzero")
    if not is_stable(rep):
        raise NotAVarietyPoint("representation is not stable")
    n, sign = classify_sl2_word(word)
    m = 0 if sign is None else m_bound(rep.d[0], rep.d[1], n, sign)
    if m <= 0:
        # x^0 is the identity on V
        return sum(rep.v) == 0
    return nilpotency_order(rep) <= m
