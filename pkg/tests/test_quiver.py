import json
import random
from fractions import Fraction
from itertools import product

import pytest

from demazure import linalg
from demazure.acceptance import sl2_quiver, sl2_rep, stability_examples
from demazure.cartan import DynkinGraph, a2, a2_affine, cartan_from_graph, d4_star, sl2_affine
from demazure.errors import NotAVarietyPoint, ShapeMismatch
from demazure.quiver import (
    DoubledQuiver,
    QuiverRep,
    check_sl2_demazure_membership,
    extremal_dim_vector,
    find_extremal,
    is_nilpotent,
    is_stable,
    moment_residual,
    nakajima_dim,
    nilpotency_order,
)
from demazure.weyl import elements_up_to_length, wn

SL2 = cartan_from_graph(sl2_affine())


def test_doubled_quiver_signs():
    for graph in (sl2_affine(), a2_affine(), d4_star()):
        q = DoubledQuiver(graph)
        for h in q.arrows:
            assert q.eps(q.bar(h)) == -q.eps(h)
            assert q.out(q.bar(h)) == q.inc(h)
        assert len(q.orientation) * 2 == len(q.arrows)


def test_moment_residual_examples():
    assert all(linalg.is_zero(m) for m in moment_residual(sl2_rep((1, 1))).values())
    psi = moment_residual(sl2_rep((1, 1), a=1, b=1, c=1, dd=-1))
    assert psi == {0: [[0]], 1: [[0]]}
    psi = moment_residual(sl2_rep((1, 1), a=1, b=1, c=1, dd=1))
    assert psi[1] == [[2]] and psi[0] == [[-2]]


def test_moment_residual_shapes_with_empty_vertex():
    psi = moment_residual(QuiverRep(sl2_quiver(), (2, 0), (0, 0)))
    assert psi[0] == [[0, 0], [0, 0]] and psi[1] == []


def brute_force_order(rep, limit):
    """Smallest n <= limit with every composable length-n product zero, by path enumeration."""
    q = rep.quiver
    for n in range(1, limit + 1):
        all_zero = True
        for path in product(q.arrows, repeat=n):
            if any(q.inc(path[k]) != q.out(path[k + 1]) for k in range(n - 1)):
                continue
            dim0 = rep.v[q.out(path[0])]
            m = linalg.identity(dim0)
            for h in path:
                m = linalg.matmul(rep.x[h], m, rep.v[q.out(h)], dim0)
            if not linalg.is_zero(m):
                all_zero = False
                break
        if all_zero:
            return n
    return None


def test_nilpotency_examples():
    assert nilpotency_order(sl2_rep((1, 1))) == 1
    assert nilpotency_order(sl2_rep((1, 1), a=1)) == 2
    assert nilpotency_order(sl2_rep((1, 1), a=1, c=1)) is None
    assert not is_nilpotent(sl2_rep((1, 1), a=1, c=1))
    assert is_nilpotent(sl2_rep((0, 0)))


def random_rep(rng, v, entries=(-1, 0, 0, 1)):
    q = sl2_quiver()
    x = {h: [[rng.choice(entries) for _ in range(v[q.out(h)])] for _ in range(v[q.inc(h)])] for h in q.arrows}
    return QuiverRep(q, v, (0, 0), x)


def test_nilpotency_order_against_path_enumeration():
    rng = random.Random(3)
    for _ in range(150):
        v = (rng.randint(0, 2), rng.randint(0, 2))
        rep = random_rep(rng, v, entries=(0, 0, 0, 1, -1))
        n = nilpotency_order(rep)
        # a nilpotent rep dies within dim V + 1 steps
        assert n == brute_force_order(rep, sum(v) + 1)
        if n is not None and n > 1:
            assert brute_force_order(rep, n - 1) is None


def path_kernel_stable(rep):
    """Stable iff no nonzero u has t(p u) = 0 for every path p of length < dim V."""
    q = rep.quiver
    total = sum(rep.v)
    if total == 0:
        return True
    # per start vertex, collect all maps V_start -> D_end of the form t_end * path
    for start in range(q.vertices):
        if not rep.v[start]:
            continue
        maps = {start: [linalg.identity(rep.v[start])]}
        rows = list(rep.t[start])
        frontier = maps
        for _ in range(total):
            nxt = {}
            for j, ms in frontier.items():
                for h in q.arrows:
                    if q.out(h) != j:
                        continue
                    for m in ms:
                        nxt.setdefault(q.inc(h), []).append(linalg.matmul(rep.x[h], m, rep.v[j], rep.v[start]))
            for j, ms in nxt.items():
                for m in ms:
                    rows += linalg.matmul(rep.t[j], m, rep.v[j], rep.v[start])
            frontier = nxt
        if linalg.rank(rows, rep.v[start]) < rep.v[start]:
            # some u at start is killed by t along every path; it spans a stable subspace
            return False
    return True


def test_stability_examples():
    assert is_stable(sl2_rep((0, 0)))
    assert not is_stable(sl2_rep((1, 1)))
    assert is_stable(sl2_rep((1, 1), d=(0, 1), a=1, t={1: [[1]]}))


def test_stability_against_path_kernel_oracle():
    rng = random.Random(11)
    q = sl2_quiver()
    for _ in range(120):
        v = (rng.randint(0, 2), rng.randint(0, 2))
        d = (rng.randint(0, 1), rng.randint(0, 1))
        rep = random_rep(rng, v)
        t = {i: [[rng.choice((0, 1)) for _ in range(v[i])] for _ in range(d[i])] for i in range(2)}
        rep = QuiverRep(q, v, d, rep.x, t)
        assert is_stable(rep) == path_kernel_stable(rep)


def random_invertible(rng, n):
    while True:
        g = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        if linalg.rank(g, n) == n:
            return g


@pytest.mark.parametrize("index", range(len(stability_examples())))
def test_stability_base_change_invariant(index):
    rep = stability_examples()[index]
    rng = random.Random(index)
    base = is_stable(rep)
    for _ in range(20):
        g = {i: random_invertible(rng, rep.v[i]) for i in range(2)}
        moved = rep.base_change(g)
        assert is_stable(moved) == base
        assert nilpotency_order(moved) == nilpotency_order(rep)


def test_nakajima_dim_examples():
    assert nakajima_dim(SL2, (0, 0), (1, 1)) == 0
    assert nakajima_dim(SL2, (1, 0), (1, 1)) == 0
    assert nakajima_dim(SL2, (1, 1), (1, 1)) == 2
    assert nakajima_dim(SL2, (1, 0), (1, 0)) == Fraction(0)


def test_extremal_dim_vector_examples():
    assert extremal_dim_vector(SL2, (1, 1), ()) == (0, 0)
    assert extremal_dim_vector(SL2, (1, 1), wn(2, "-")) == (3, 1)
    v = extremal_dim_vector(SL2, (0, 1), (1,))
    assert v == (0, 1) and nakajima_dim(SL2, v, (0, 1)) == 0
    # non-reduced input is reduced first
    assert extremal_dim_vector(SL2, (1, 1), (1, 1, 0, 1)) == (3, 1)


@pytest.mark.parametrize("graph", [sl2_affine(), a2_affine(), d4_star(), a2()])
def test_extremal_vectors_are_points(graph):
    C = cartan_from_graph(graph)
    words = elements_up_to_length(C, 6)
    for d in product(range(3), repeat=C.rank):
        for w in words:
            assert nakajima_dim(C, extremal_dim_vector(C, d, w), d) == 0


def test_find_extremal():
    assert find_extremal(SL2, (1, 1), (0, 0), 0) == ()
    assert find_extremal(SL2, (1, 1), (3, 1), 4) == wn(2, "-")
    assert find_extremal(SL2, (1, 1), (1, 1), 6) is None
    for v0 in range(7):
        for v1 in range(7 - v0):
            if nakajima_dim(SL2, (v0, v1), (1, 1)) == 0:
                assert find_extremal(SL2, (1, 1), (v0, v1), 8) is not None


def test_membership_examples():
    q = sl2_quiver()
    zero = QuiverRep(q, (1, 1), (1, 1), {}, {0: [[1]], 1: [[1]]})
    for n in range(1, 5):
        for sign in "+-":
            assert check_sl2_demazure_membership(zero, wn(n, sign))
    rep = QuiverRep(q, (0, 1), (0, 1), {}, {1: [[1]]})
    assert check_sl2_demazure_membership(rep, wn(1, "-"))
    assert not check_sl2_demazure_membership(rep, wn(1, "+"))


def test_membership_uses_nilpotency_bound():
    q = sl2_quiver()
    # V_0 -> V_1 by a single arrow, framed at vertex 1: order 2, d = (0, 1)
    rep = QuiverRep(q, (1, 1), (0, 1), {0: [[1]]}, {1: [[1]]})
    assert nilpotency_order(rep) == 2
    assert check_sl2_demazure_membership(rep, wn(2, "-"))  # m = 2
    assert not check_sl2_demazure_membership(rep, wn(1, "-"))  # m = 1
    assert not check_sl2_demazure_membership(rep, wn(2, "+"))  # s = 0 so m = 1


def test_membership_rejects_non_points():
    q = sl2_quiver()
    bent = QuiverRep(q, (1, 1), (1, 1), {0: [[1]], 2: [[1]], 1: [[1]], 3: [[1]]}, {0: [[1]], 1: [[1]]})
    with pytest.raises(NotAVarietyPoint):
        check_sl2_demazure_membership(bent, wn(1, "-"))
    unstable = QuiverRep(q, (1, 0), (0, 0))
    with pytest.raises(NotAVarietyPoint):
        check_sl2_demazure_membership(unstable, wn(1, "-"))


def test_rep_json_roundtrip():
    data = {
        "graph": {"vertices": 2, "edges": [[0, 1], [0, 1]]},
        "orientation": [0, 2],
        "v": [2, 1],
        "d": [0, 1],
        "x": {"0": [["1/2", "-3"]], "1": [["2"], ["0"]]},
        "t": {"1": [["1"]]},
    }
    rep = QuiverRep.from_json(json.dumps(data))
    assert rep.x[0] == [[Fraction(1, 2), Fraction(-3)]]
    assert rep.x[2] == [[0, 0]]
    again = QuiverRep.from_json(rep.to_json())
    assert again == rep


def test_shape_errors():
    q = sl2_quiver()
    with pytest.raises(ShapeMismatch):
        QuiverRep(q, (1, 1), (0, 0), {0: [[1, 2]]})
    with pytest.raises(ShapeMismatch):
        QuiverRep(q, (1,), (0,))
    with pytest.raises(TypeError):
        QuiverRep(q, (1, 1), (0, 0), {0: [[0.5]]})


def test_orientation_must_split_edges():
    from demazure.errors import InvalidGraph

    with pytest.raises(InvalidGraph):
        DoubledQuiver(DynkinGraph(2, ((0, 1),)), [0, 1])
