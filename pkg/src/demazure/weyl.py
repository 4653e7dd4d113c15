"""Weyl group elements as words in simple reflections.

A word ``(i_l, ..., i_2, i_1)`` is written in product order, i.e. it stands for
``r_{i_l} ... r_{i_1}`` and acts on weights rightmost letter first.  So the
word ``(0, 1)`` is ``r_0 r_1`` and applies ``r_1`` before ``r_0``.
"""
from __future__ import annotations

from collections import deque

from .cartan import CartanMatrix, Weight, highest_weight, simple_reflection

Word = tuple[int, ...]

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)


def _reflect_root(C: CartanMatrix, i: int, beta) -> tuple[int, ...]:
    # r_i(beta) = beta - <beta, a_i^vee> a_i, with <a_j, a_i^vee> = C[j][i]
    c = sum(b * C[j, i] for j, b in enumerate(beta))
    if c == 0:
        return tuple(beta)
    out = list(beta)
    out[i] -= c
    return tuple(out)


def simple_root(C: CartanMatrix, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(C.rank))


def is_positive(beta) -> bool:
    return any(beta) and all(b >= 0 for b in beta)


def is_negative(beta) -> bool:
    return any(beta) and all(b <= 0 for b in beta)


def act_on_root(C: CartanMatrix, word, beta) -> tuple[int, ...]:
    beta = tuple(beta)
    if len(beta) != C.rank:
        raise ValueError("root dimension does not match Cartan matrix")
    for i in reversed(tuple(word)):
        beta = _reflect_root(C, i, beta)
    return beta


def act_on_weight(C: CartanMatrix, word, mu: Weight) -> Weight:
    for i in reversed(tuple(word)):
        mu = simple_reflection(C, i, mu)
    return mu


def _check_letters(C: CartanMatrix, word):
    for i in word:
        if not 0 <= i < C.rank:
            raise IndexError(f"letter {i} out of range for rank {C.rank}")


def is_reduced(C: CartanMatrix, word) -> bool:
    """Inversion criterion: for ``s_1 ... s_l`` every ``s_l ... s_{k+1}(a_k)`` is positive."""
    word = tuple(word)
    _check_letters(C, word)
    for k, i in enumerate(word):
        beta = act_on_root(C, tuple(reversed(word[k + 1:])), simple_root(C, i))
        if not is_positive(beta):
            return False
    return True


def reduce_word(C: CartanMatrix, word) -> Word:
    """A reduced word for the same group element.

    Letters are multiplied on the right one at a time; when a letter would
    lower the length, the exchange property names the letter to delete.
    """
    word = tuple(word)
    _check_letters(C, word)
    out: list[int] = []
    for i in word:
        # w a_i < 0 iff w s_i is shorter
        if is_positive(act_on_root(C, out, simple_root(C, i))):
            out.append(i)
            continue
        beta = simple_root(C, i)
        for k in range(len(out) - 1, -1, -1):
            if beta == simple_root(C, out[k]):
                del out[k]
                break
            beta = _reflect_root(C, out[k], beta)
        else:  # pragma: no cover - exchange property guarantees a hit
            raise AssertionError("exchange property failed")
    return tuple(out)


def length(C: CartanMatrix, word) -> int:
    return len(reduce_word(C, word))


def generic_weight(C: CartanMatrix) -> Weight:
    return highest_weight(_PRIMES[: C.rank])


def element_key(C: CartanMatrix, word) -> tuple[int, ...]:
    """Group-element identity: the v-part of ``w`` applied to a regular dominant weight."""
    return act_on_weight(C, word, generic_weight(C)).v


def same_element(C: CartanMatrix, u, w) -> bool:
    return element_key(C, u) == element_key(C, w)


def bruhat_interval_keys(C: CartanMatrix, word) -> set:
    """Keys of all elements ``u <= w``: products of subwords of a reduced word of ``w``."""
    mu0 = generic_weight(C)
    states = {mu0.v}
    for i in reversed(reduce_word(C, word)):
        states |= {simple_reflection(C, i, Weight(mu0.d, v)).v for v in states}
    return states


def bruhat_leq(C: CartanMatrix, u, w) -> bool:
    return element_key(C, u) in bruhat_interval_keys(C, w)


def elements_up_to_length(C: CartanMatrix, max_length: int) -> list[Word]:
    """One reduced word per element of length <= ``max_length``, in BFS order."""
    seen = {element_key(C, ())}
    out: list[Word] = [()]
    frontier = deque([()])
    while frontier:
        w = frontier.popleft()
        if len(w) >= max_length:
            continue
        for i in range(C.rank):
            if not is_positive(act_on_root(C, w, simple_root(C, i))):
                continue
            nw = w + (i,)
            key = element_key(C, nw)
            if key not in seen:
                seen.add(key)
                out.append(nw)
                frontier.append(nw)
    return out


def wn(n: int, sign: str) -> Word:
    """The affine sl2 element of length ``n`` whose first applied letter is 0 (``+``) or 1 (``-``)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    first = {"+": 0, "-": 1}[sign]
    applied = [(first + j) % 2 for j in range(n)]
    return tuple(reversed(applied))


def format_word(word) -> str:
    return " ".join(f"r_{i}" for i in word) if word else "id"
