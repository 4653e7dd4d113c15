"""Self-verification suite shared by ``pytest`` and ``demazure verify``."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg, sl2
from .cartan import a2, a2_affine, cartan_from_graph, d4_star, sl2_affine
from .crystal import character, demazure_subset, generate
from .quiver import (
    DoubledQuiver,
    QuiverRep,
    extremal_dim_vector,
    find_extremal,
    is_stable,
    moment_residual,
    nakajima_dim,
    nilpotency_order,
)
from .weyl import bruhat_leq, elements_up_to_length, wn

GRID = ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2))
NS = (1, 2, 3, 4)
SIGNS = ("+", "-")
SL2 = cartan_from_graph(sl2_affine())


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] {self.number}. {self.name} ({self.seconds:.2f}s) {self.detail}".rstrip()


@lru_cache(maxsize=None)
def demazure_pyramids(s: int, t: int, n: int, sign: str):
    """Demazure set of ``w_n^sign`` computed in the matching frame."""
    return demazure_subset(sl2.ground_state(s, t, sign), wn(n, sign))


def _grid_cases():
    for s, t in GRID:
        for n in NS:
            for sign in SIGNS:
                yield s, t, n, sign


def check_dimension_formulas() -> tuple[bool, str]:
    bad = []
    for s, t, n, sign in _grid_cases():
        got = len(demazure_pyramids(s, t, n, sign))
        want = sl2.demazure_dimension(s, t, n, sign)
        if got != want:
            bad.append(f"(s,t,n,{sign})=({s},{t},{n}): {got} != {want}")
    return not bad, "; ".join(bad[:3]) or f"{len(GRID) * len(NS) * 2} cases"


def check_height_corollary(m_bound=sl2.m_bound) -> tuple[bool, str]:
    bad = []
    for s, t, n, sign in _grid_cases():
        want = set(demazure_pyramids(s, t, n, sign).keys())
        got = set(sl2.enumerate_by_height(s, t, m_bound(s, t, n, sign), frame=sign))
        if got != want:
            bad.append(f"({s},{t},{n},{sign}): |height set|={len(got)} |B_w|={len(want)}")
    return not bad, "; ".join(bad[:3]) or "all sets equal"


def check_subpyramid_theorem() -> tuple[bool, str]:
    bad = []
    for s, t, n, sign in _grid_cases():
        dset = demazure_pyramids(s, t, n, sign)
        top = sl2.extremal_pyramid(s, t, n, sign)
        # subpyramids are closed under f-predecessors, so pruning by the test is exact
        reach = generate(
            sl2.ground_state(s, t, sign),
            block_bound=(s + t) * n * (n + 1) // 2,
            accept=lambda p, top=top: sl2.is_subpyramid(p, top),
        ).elements
        if set(reach) != set(dset.keys()):
            bad.append(f"({s},{t},{n},{sign}): |subpyramids|={len(reach)} |B_w|={len(dset)}")
    return not bad, "; ".join(bad[:3]) or "all sets equal"


def check_extremal_weight_criterion() -> tuple[bool, str]:
    from itertools import product

    bad = []
    checked = 0
    for graph in (sl2_affine(), a2_affine(), d4_star(), a2()):
        C = cartan_from_graph(graph)
        words = elements_up_to_length(C, 6)
        for d in product(range(3), repeat=C.rank):
            for w in words:
                v = extremal_dim_vector(C, d, w)
                checked += 1
                if nakajima_dim(C, v, d) != 0:
                    bad.append(f"{graph.vertices}-vertex d={d} w={w}")
    d = (1, 1)
    missed = []
    for v0 in range(7):
        for v1 in range(7 - v0):
            if nakajima_dim(SL2, (v0, v1), d) == 0 and find_extremal(SL2, d, (v0, v1), 8) is None:
                missed.append((v0, v1))
    ok = not bad and not missed
    detail = f"{checked} (C,d,w) triples" if ok else f"nonzero dims {bad[:3]}; unmatched v {missed[:3]}"
    return ok, detail


def check_extremal_pyramid_weights() -> tuple[bool, str]:
    bad = []
    for s, t in GRID:
        for n in range(0, 9):
            for sign in SIGNS:
                block_count = sl2.pyramid_weight(sl2.extremal_pyramid(s, t, n, sign)).v
                reflected = extremal_dim_vector(SL2, (s, t), wn(n, sign))
                if block_count != reflected:
                    bad.append(f"({s},{t},{n},{sign}): {block_count} != {reflected}")
    return not bad, "; ".join(bad[:3]) or "n = 0..8"


def partitions_brute_force(k: int) -> int:
    """Count partitions of ``k`` by enumerating non-increasing sequences."""

    def count(rest, largest):
        if rest == 0:
            return 1
        return sum(count(rest - part, part) for part in range(min(rest, largest), 0, -1))

    return count(k, k)


def check_level1_multiplicities(kmax: int = 6) -> tuple[bool, str]:
    bad = []
    for s, t in ((1, 0), (0, 1)):
        g = generate(sl2.ground_state(s, t), block_bound=2 * kmax)
        char = character(g)
        for k in range(kmax + 1):
            got = sum(m for wt, m in char.items() if wt.v == (k, k))
            if got != partitions_brute_force(k):
                bad.append(f"({s},{t}) k={k}: {got} != p(k)={partitions_brute_force(k)}")
    return not bad, "; ".join(bad[:3]) or "p(k) = " + ",".join(str(partitions_brute_force(k)) for k in range(kmax + 1))


def check_bruhat_monotonicity() -> tuple[bool, str]:
    words = elements_up_to_length(SL2, 4)
    pairs = [(u, w) for u in words for w in words if bruhat_leq(SL2, u, w)]
    bad = []
    for s, t in ((1, 1), (2, 1)):
        b0 = sl2.ground_state(s, t)
        sets = {w: demazure_subset(b0, w).keys() for w in words}
        for u, w in pairs:
            if not sets[u] <= sets[w]:
                bad.append(f"({s},{t}) {u} <= {w}")
    return not bad, "; ".join(bad[:3]) or f"{len(pairs)} comparable pairs"


def check_extremal_uniqueness() -> tuple[bool, str]:
    bad = []
    for s, t, n, sign in _grid_cases():
        v = extremal_dim_vector(SL2, (s, t), wn(n, sign))
        hits = [b for b in demazure_pyramids(s, t, n, sign).elements.values() if b.weight().v == v]
        if len(hits) != 1:
            bad.append(f"({s},{t},{n},{sign}): {len(hits)} elements of weight w lambda")
    return not bad, "; ".join(bad[:3]) or "one extremal element per set"


def sl2_quiver() -> DoubledQuiver:
    return DoubledQuiver(sl2_affine())


def sl2_rep(v, d=(0, 0), a=0, b=0, c=0, dd=0, t=None) -> QuiverRep:
    """Affine sl2 rep with v = (1, 1)-style scalar maps.

    ``a``, ``b`` are the two arrows 0 -> 1 (the orientation), ``c``, ``dd`` their
    reverses 1 -> 0.  Scalars are only meaningful when ``v == (1, 1)``.
    """
    q = sl2_quiver()
    x = {}
    if tuple(v) == (1, 1):
        x = {0: [[a]], 2: [[b]], 1: [[c]], 3: [[dd]]}
    return QuiverRep(q, tuple(v), tuple(d), x, t or {})


def _random_invertible(rng: random.Random, n: int):
    while True:
        g = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
        if linalg.rank(g, n) == n:
            return g


def quiver_worked_examples() -> list[tuple[str, bool]]:
    zero = sl2_rep((1, 1))
    flat = sl2_rep((1, 1), a=1, b=1, c=1, dd=-1)
    bent = sl2_rep((1, 1), a=1, b=1, c=1, dd=1)
    single = sl2_rep((1, 1), a=1)
    cycle = sl2_rep((1, 1), a=1, c=1)

    def zero_psi(rep):
        return all(linalg.is_zero(m) for m in moment_residual(rep).values())

    return [
        ("zero rep has zero moment residual", zero_psi(zero)),
        ("c=1, d=-1 satisfies the preprojective relation", zero_psi(flat)),
        ("c=d=1 gives psi_1 = 2", moment_residual(bent)[1] == [[2]]),
        ("zero rep has nilpotency order 1", nilpotency_order(zero) == 1),
        ("single arrow has nilpotency order 2", nilpotency_order(single) == 2),
        ("0 -> 1 -> 0 cycle is not nilpotent", nilpotency_order(cycle) is None),
        ("v = 0 is stable", is_stable(sl2_rep((0, 0)))),
        ("unframed nonzero rep is unstable", not is_stable(sl2_rep((1, 1)))),
        ("framed example is stable", is_stable(sl2_rep((1, 1), d=(0, 1), a=1, t={1: [[1]]}))),
    ]


def stability_examples() -> list[QuiverRep]:
    return [
        sl2_rep((1, 1)),
        sl2_rep((1, 1), d=(0, 1), a=1, t={1: [[1]]}),
        sl2_rep((1, 1), d=(1, 0), c=1, t={0: [[1]]}),
        sl2_rep((1, 1), d=(0, 1), c=1, t={1: [[1]]}),
        QuiverRep(sl2_quiver(), (2, 1), (0, 1), {0: [[1, 0]], 1: [[0], [1]]}, {1: [[1]]}),
        QuiverRep(sl2_quiver(), (2, 1), (0, 1), {0: [[1, 1]], 2: [[-1, -1]]}, {1: [[1]]}),
    ]


def check_quiver_suite(trials: int = 20, seed: int = 20260116) -> tuple[bool, str]:
    failures = [name for name, ok in quiver_worked_examples() if not ok]
    rng = random.Random(seed)
    drift = 0
    for rep in stability_examples():
        base = is_stable(rep)
        for _ in range(trials):
            g = {i: _random_invertible(rng, rep.v[i]) for i in range(2)}
            if is_stable(rep.base_change(g)) != base:
                drift += 1
    ok = not failures and drift == 0
    detail = "worked examples + base-change invariance" if ok else f"failed: {failures}; {drift} invariance breaks"
    return ok, detail


CRITERIA = [
    (1, "Demazure dimension formulas", check_dimension_formulas),
    (2, "Height-bound set equality", check_height_corollary),
    (3, "Subpyramid set equality", check_subpyramid_theorem),
    (4, "Extremal weight criterion", check_extremal_weight_criterion),
    (5, "Extremal pyramid weights", check_extremal_pyramid_weights),
    (6, "Level-1 multiplicities", check_level1_multiplicities),
    (7, "Bruhat monotonicity", check_bruhat_monotonicity),
    (8, "Extremal uniqueness", check_extremal_uniqueness),
    (9, "Quiver exact-arithmetic suite", check_quiver_suite),
]


def run_criterion(number: int) -> CriterionResult:
    _, name, fn = CRITERIA[number - 1]
    t0 = time.perf_counter()
    ok, detail = fn()
    return CriterionResult(number, name, ok, detail, time.perf_counter() - t0)


def run_all() -> list[CriterionResult]:
    return [run_criterion(n) for n, _, _ in CRITERIA]
