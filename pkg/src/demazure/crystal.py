"""Model-independent crystal engine.

A model supplies elements implementing :class:`CrystalElement`; this module
does BFS generation, Demazure closure, characters and graph export.
"""
from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field

from .cartan import CartanMatrix, Weight
from .errors import ReducedWordRequired
from .weyl import is_reduced


class CrystalElement:
    """Contract for crystal elements; ``f``/``e`` return None in place of 0."""

    index_set: tuple[int, ...] = ()

    @property
    def cartan(self) -> CartanMatrix:
        raise NotImplementedError

    def weight(self) -> Weight:
        raise NotImplementedError

    def f(self, i: int):
        raise NotImplementedError

    def e(self, i: int):
        raise NotImplementedError

    def key(self):
        """Hashable canonical form; equal keys mean equal elements."""
        raise NotImplementedError

    def key_string(self) -> str:
        return repr(self.key())

    def epsilon(self, i: int) -> int:
        k, b = 0, self.e(i)
        while b is not None:
            k, b = k + 1, b.e(i)
        return k

    def phi(self, i: int) -> int:
        k, b = 0, self.f(i)
        while b is not None:
            k, b = k + 1, b.f(i)
        return k

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        return isinstance(other, CrystalElement) and self.key() == other.key()


@dataclass
class CrystalGraph:
    elements: dict = field(default_factory=dict)  # key -> element
    edges: list = field(default_factory=list)  # (from key, to key, i)

    def __len__(self):
        return len(self.elements)

    def weight_of(self, key) -> Weight:
        return self.elements[key].weight()


def generate(b0: CrystalElement, block_bound: int, accept=None) -> CrystalGraph:
    """BFS closure of ``{b0}`` under all ``f_i`` up to depth ``block_bound``.

    ``accept`` optionally prunes elements (and everything reached only through
    them); it must be closed under taking f-predecessors to be exact.
    """
    g = CrystalGraph()
    g.elements[b0.key()] = b0
    frontier = deque([(b0, 0)])
    while frontier:
        b, depth = frontier.popleft()
        if depth >= block_bound:
            continue
        for i in b.index_set:
            c = b.f(i)
            if c is None or (accept is not None and not accept(c)):
                continue
            k = c.key()
            g.edges.append((b.key(), k, i))
            if k not in g.elements:
                g.elements[k] = c
                frontier.append((c, depth + 1))
    return g


def induced_graph(elements) -> CrystalGraph:
    """The crystal graph on a finite set of elements, keeping f-edges inside it."""
    g = CrystalGraph()
    for b in elements:
        g.elements[b.key()] = b
    for k, b in g.elements.items():
        for i in b.index_set:
            c = b.f(i)
            if c is not None and c.key() in g.elements:
                g.edges.append((k, c.key(), i))
    return g


@dataclass(frozen=True)
class DemazureSet:
    elements: dict  # key -> element
    word: tuple
    top: object  # key of the highest-weight element

    def __len__(self):
        return len(self.elements)

    def keys(self) -> frozenset:
        return frozenset(self.elements)

    def __contains__(self, b) -> bool:
        return b.key() in self.elements


def demazure_subset(b0: CrystalElement, word, C: CartanMatrix | None = None) -> DemazureSet:
    """``B_w`` as the closure of ``{b0}`` under ``f_{i_1}^*``, then ``f_{i_2}^*``, ...

    The word is in product order, so its rightmost letter ``i_1`` is used first.
    """
    word = tuple(word)
    C = b0.cartan if C is None else C
    if not is_reduced(C, word):
        raise ReducedWordRequired(f"word {list(word)} is not reduced")
    current = {b0.key(): b0}
    for i in reversed(word):
        grown = dict(current)
        for b in current.values():
            c = b.f(i)
            while c is not None:
                grown[c.key()] = c
                c = c.f(i)
        current = grown
    return DemazureSet(current, word, b0.key())


def character(elements) -> Counter:
    """Weight multiplicities of a set of elements (a DemazureSet, graph, or iterable)."""
    if isinstance(elements, (DemazureSet, CrystalGraph)):
        elements = elements.elements.values()
    return Counter(b.weight() for b in elements)


def character_rows(char: Counter) -> list[tuple[tuple, tuple, int]]:
    """Character as ``(d, v, multiplicity)`` rows sorted lexicographically by v."""
    return sorted(((w.d, w.v, m) for w, m in char.items()), key=lambda r: (r[1], r[0]))


def export_graph(g: CrystalGraph, fmt: str = "json") -> str:
    names = {k: b.key_string() for k, b in g.elements.items()}
    order = sorted(g.elements, key=lambda k: names[k])
    edges = sorted({(names[a], names[b], i) for a, b, i in g.edges})
    if fmt == "json":
        nodes = [
            {"key": names[k], "d": list(g.elements[k].weight().d), "v": list(g.elements[k].weight().v)}
            for k in order
        ]
        return json.dumps(
            {"nodes": nodes, "edges": [{"from": a, "to": b, "i": i} for a, b, i in edges]},
            indent=2,
        ) + "\n"
    if fmt == "dot":
        ids = {names[k]: f"n{n}" for n, k in enumerate(order)}
        lines = ["digraph crystal {"]
        for k in order:
            wt = g.elements[k].weight()
            label = f"{names[k]}\\nv={list(wt.v)}".replace('"', '\\"')
            lines.append(f'  {ids[names[k]]} [label="{label}"];')
        for a, b, i in edges:
            lines.append(f'  {ids[a]} -> {ids[b]} [label={i}];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def import_graph_json(text: str) -> tuple[dict, set]:
    """Parse exported JSON into ``({key: Weight}, {(from, to, i)})``."""
    data = json.loads(text)
    nodes = {n["key"]: Weight(tuple(n["d"]), tuple(n["v"])) for n in data["nodes"]}
    edges = {(e["from"], e["to"], int(e["i"])) for e in data["edges"]}
    return nodes, edges
