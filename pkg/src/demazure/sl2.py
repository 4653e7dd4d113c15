"""Young walls and Young pyramids for affine sl2.

Level-1 walls
-------------
A wall sits on ground ``L0`` (first slot in column 1) or ``L1`` (first slot in
column 0).  Stack heights strictly decrease eastward and the block at column
``j``, level ``k`` has color ``(j + k + 1) % 2``.  The ``i``-signature lists,
west to east, a ``-`` for every stack whose top block has color ``i`` and is
taller than its east neighbour, and a ``+`` for every stack whose next slot
has color ``i`` and is shorter than its west neighbour (the first stack always
qualifies).  After cancelling ``(+, -)`` pairs, ``f_i`` grows the stack of the
leftmost ``+`` and ``e_i`` shrinks that of the rightmost ``-``.  Signs are
taken from all addable/removable blocks, not only those keeping the wall
strict; the surviving sign never breaks strictness.

Pyramids
--------
A pyramid of level ``(s, t)`` is a tuple of ``s`` L0-walls and ``t`` L1-walls
acted on by the tensor signature rule.  Two reading orders are used:

* frame ``"-"`` (the ordinary ground state): L0-walls are read first.
* frame ``"+"`` (the modified ground state, colors swapped): L1-walls are read
  first, and columns are renumbered so the L0-walls start in column 0.

Both frames realize the same crystal; frame ``"-"`` is the one whose stacks
describe Demazure crystals of ``w_n^-`` and frame ``"+"`` those of ``w_n^+``.
Slots in column ``j`` sit ``j - west`` levels above the westernmost column, and
stack height below means the elevation of the top block above that base.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .cartan import CartanMatrix, Weight, cartan_from_graph, sl2_affine
from .crystal import CrystalElement, generate
from .errors import InvalidLevel

L0, L1 = 0, 1
_SL2 = cartan_from_graph(sl2_affine())


def block_color(column: int, level: int) -> int:
    return (column + level + 1) % 2


def _reduce(signs):
    kept = []
    for s in signs:
        if s[-1] < 0 and kept and kept[-1][-1] > 0:
            kept.pop()
        else:
            kept.append(s)
    return kept


@dataclass(frozen=True)
class Wall:
    ground: int
    heights: tuple[int, ...] = ()

    def __post_init__(self):
        if self.ground not in (L0, L1):
            raise ValueError("ground must be 0 or 1")
        h = tuple(int(x) for x in self.heights)
        while h and h[-1] == 0:
            h = h[:-1]
        if any(x < 0 for x in h):
            raise ValueError("heights must be non-negative")
        object.__setattr__(self, "heights", h)

    @property
    def start(self) -> int:
        return 1 if self.ground == L0 else 0

    def is_valid(self) -> bool:
        h = self.heights
        return all(x > 0 for x in h) and all(a > b for a, b in zip(h, h[1:]))

    def height(self, k: int) -> int:
        return self.heights[k] if k < len(self.heights) else 0

    def signature(self, i: int) -> list[tuple[int, int]]:
        """``(local column, +1 | -1)`` pairs, west to east, before cancellation."""
        h, out = self.heights, []
        for k in range(len(h) + 1):
            hk, col = self.height(k), self.start + k
            if hk and block_color(col, hk - 1) == i and self.height(k + 1) < hk:
                out.append((k, -1))
            if block_color(col, hk) == i and (k == 0 or h[k - 1] > hk):
                out.append((k, 1))
        return out

    def grow(self, k: int, delta: int) -> Wall:
        h = list(self.heights) + [0] * (k + 1 - len(self.heights))
        h[k] += delta
        return Wall(self.ground, tuple(h))

    def blocks(self):
        """Yield ``(column, level, color)`` for every block."""
        for k, hk in enumerate(self.heights):
            for level in range(hk):
                yield self.start + k, level, block_color(self.start + k, level)

    def to_json(self) -> dict:
        return {"ground": self.ground, "heights": list(self.heights)}


def wall_f(wall: Wall, i: int) -> Wall | None:
    plus = [k for k, s in _reduce(wall.signature(i)) if s > 0]
    return wall.grow(plus[0], 1) if plus else None


def wall_e(wall: Wall, i: int) -> Wall | None:
    minus = [k for k, s in _reduce(wall.signature(i)) if s < 0]
    return wall.grow(minus[-1], -1) if minus else None


def _check_frame(frame: str):
    if frame not in ("+", "-"):
        raise ValueError("frame must be '+' or '-'")


def _reading_order(frame: str) -> tuple[int, int]:
    return (L1, L0) if frame == "+" else (L0, L1)


@dataclass(frozen=True, eq=False)
class Pyramid(CrystalElement):
    s: int
    t: int
    walls: tuple[Wall, ...]
    frame: str = "-"

    index_set = (0, 1)

    def __post_init__(self):
        _check_frame(self.frame)
        first, second = _reading_order(self.frame)
        grounds = tuple(w.ground for w in self.walls)
        count = {L0: self.s, L1: self.t}
        if grounds != (first,) * count[first] + (second,) * count[second]:
            raise ValueError("walls must list the first-read ground, then the other")

    @property
    def cartan(self) -> CartanMatrix:
        return _SL2

    @property
    def first_letter(self) -> int:
        """Color of the westernmost slots: the first reflection applied by ``w_n^frame``."""
        return 0 if self.frame == "+" else 1

    def column_offset(self, wall: Wall) -> int:
        return 0 if wall.ground == self.first_letter else 1

    @property
    def west(self) -> int:
        primary = self.t if self.frame == "-" else self.s
        return 0 if primary else 1

    def _signs(self, i: int):
        signs = []
        for n, w in enumerate(self.walls):
            signs.extend((n, k, s) for k, s in w.signature(i))
        return _reduce(signs)

    def _replace(self, n: int, wall: Wall) -> Pyramid:
        walls = list(self.walls)
        walls[n] = wall
        return Pyramid(self.s, self.t, tuple(walls), self.frame)

    def f(self, i: int) -> Pyramid | None:
        plus = [(n, k) for n, k, s in self._signs(i) if s > 0]
        if not plus:
            return None
        n, k = plus[0]
        return self._replace(n, self.walls[n].grow(k, 1))

    def e(self, i: int) -> Pyramid | None:
        minus = [(n, k) for n, k, s in self._signs(i) if s < 0]
        if not minus:
            return None
        n, k = minus[-1]
        return self._replace(n, self.walls[n].grow(k, -1))

    def weight(self) -> Weight:
        return pyramid_weight(self)

    @cached_property
    def _key(self):
        return (self.frame, self.s, self.t, tuple(sorted((w.ground, w.heights) for w in self.walls)))

    def key(self):
        return self._key

    def key_string(self) -> str:
        walls = ";".join(f"{g}:{','.join(map(str, h))}" for g, h in self._key[3])
        return f"{self.frame}({self.s},{self.t})[{walls}]"

    def stacks(self):
        """Yield ``(column, height, wall index)`` for every slot in frame coordinates."""
        for n, w in enumerate(self.walls):
            off = self.column_offset(w)
            last = max(len(w.heights), 1)
            for k in range(last):
                yield k + off, w.height(k), n

    def to_json(self) -> dict:
        return {"s": self.s, "t": self.t, "frame": self.frame, "walls": [w.to_json() for w in self.walls]}

    @classmethod
    def from_json(cls, data) -> Pyramid:
        if isinstance(data, str):
            data = json.loads(data)
        walls = tuple(Wall(int(w["ground"]), tuple(w["heights"])) for w in data["walls"])
        return cls(int(data["s"]), int(data["t"]), walls, data.get("frame", "-"))

    def __repr__(self):
        return f"Pyramid{self.key_string()}"


def ground_state(s: int, t: int, frame: str = "-") -> Pyramid:
    if s < 0 or t < 0 or s + t < 1:
        raise InvalidLevel(f"level (s, t) = ({s}, {t}) needs s, t >= 0 and s + t >= 1")
    _check_frame(frame)
    first, second = _reading_order(frame)
    count = {L0: s, L1: t}
    walls = tuple(Wall(first) for _ in range(count[first])) + tuple(Wall(second) for _ in range(count[second]))
    return Pyramid(s, t, walls, frame)


def column_slots(p: Pyramid, column: int) -> list[int]:
    """Colors of the ground-state slots in a column (frame coordinates)."""
    out = []
    for w in p.walls:
        k = column - p.column_offset(w)
        if k >= 0:
            out.append(block_color(w.start + k, 0))
    return out


def pyramid_f(p: Pyramid, i: int) -> Pyramid | None:
    return p.f(i)


def pyramid_e(p: Pyramid, i: int) -> Pyramid | None:
    return p.e(i)


def pyramid_weight(p: Pyramid) -> Weight:
    v = [0, 0]
    for w in p.walls:
        for _, _, c in w.blocks():
            v[c] += 1
    return Weight((p.s, p.t), tuple(v))


def extremal_pyramid(s: int, t: int, n: int, sign: str) -> Pyramid:
    """The pyramid of weight ``w_n^sign lambda``: stacks of height ``n - j`` in column ``j``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = ground_state(s, t, sign)
    walls = []
    for w in p.walls:
        top = n - p.column_offset(w)
        walls.append(Wall(w.ground, tuple(range(top, 0, -1))))
    return Pyramid(s, t, tuple(walls), sign)


def is_subpyramid(p: Pyramid, q: Pyramid) -> bool:
    if (p.s, p.t, p.frame) != (q.s, q.t, q.frame):
        return False
    for a, b in zip(p.walls, q.walls):
        if any(a.height(k) > b.height(k) for k in range(len(a.heights))):
            return False
    return True


def max_stack_height(p: Pyramid) -> int:
    """Highest top-of-stack elevation, measured from the westernmost column's base."""
    best = 0
    for col, h, _ in p.stacks():
        if h:
            best = max(best, h + col - p.west)
    return best


def m_bound(s: int, t: int, n: int, sign: str) -> int:
    if sign == "-":
        return n if t != 0 else n - 1
    if sign == "+":
        return n if s != 0 else n - 1
    raise ValueError("sign must be '+' or '-'")


def enumerate_by_height(s: int, t: int, m: int, frame: str = "-") -> dict:
    """All crystal elements whose stacks all have height at most ``m``, keyed canonically.

    Blocks are only ever added along f-arrows, so every f-ancestor of such an
    element also satisfies the bound and the pruned BFS reaches all of them.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    g = generate(
        ground_state(s, t, frame),
        block_bound=(s + t) * m * (m + 1) // 2,
        accept=lambda p: max_stack_height(p) <= m,
    )
    return g.elements


def demazure_dimension(s: int, t: int, n: int, sign: str) -> int:
    if n < 1:
        raise ValueError("closed form holds for n >= 1")
    if sign == "+":
        return (s + 1) * (s + t + 1) ** (n - 1)
    if sign == "-":
        return (t + 1) * (s + t + 1) ** (n - 1)
    raise ValueError("sign must be '+' or '-'")


def render(p: Pyramid) -> str:
    """ASCII picture of the stacks, grouped by column and drawn from the slot up.

    Each cell is a block color; ``=`` marks an occupied slot and ``.`` an empty
    one; the last line carries the column numbers.
    """
    last = max([k + p.column_offset(w) for w in p.walls for k in range(len(w.heights))] + [p.west])
    cols = range(p.west, last + 2)
    slots = {c: [(n, c - p.column_offset(w)) for n, w in enumerate(p.walls) if c >= p.column_offset(w)] for c in cols}
    top = max([w.height(0) for w in p.walls] + [0])
    lines = []
    for level in range(top - 1, -1, -1):
        row = []
        for c in cols:
            cells = ""
            for n, k in slots[c]:
                w = p.walls[n]
                cells += str(block_color(w.start + k, level)) if w.height(k) > level else " "
            row.append(cells)
        lines.append("|".join(row).rstrip())
    lines.append("|".join("".join("=" if p.walls[n].height(k) else "." for n, k in slots[c]) for c in cols))
    lines.append("|".join(str(c)[: len(slots[c])].ljust(len(slots[c])) for c in cols))
    return "\n".join(lines)
