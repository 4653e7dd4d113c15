"""Exact linear algebra over ``Fraction`` on lists of rows."""
from __future__ import annotations

from fractions import Fraction


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or 'p/q' strings")
    return Fraction(x)


def matrix(rows, nrows: int | None = None, ncols: int | None = None) -> list[list[Fraction]]:
    out = [[to_fraction(x) for x in row] for row in rows]
    if nrows is not None and len(out) != nrows:
        raise ValueError(f"expected {nrows} rows, got {len(out)}")
    if ncols is not None and any(len(r) != ncols for r in out):
        raise ValueError(f"expected {ncols} columns")
    return out


def zeros(m: int, n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b, inner: int | None = None, cols: int | None = None) -> list[list[Fraction]]:
    """Product of an m x k and a k x n matrix.

    ``inner`` (k) and ``cols`` (n) must be given when they cannot be read off
    the operands, i.e. when ``b`` has no rows.
    """
    k = inner if inner is not None else len(b)
    n = cols if cols is not None else (len(b[0]) if b else 0)
    return [[sum((row[t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(n)] for row in a]


def is_zero(a) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(a, ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Row-reduced echelon form; returns the nonzero rows and pivot columns."""
    rows = [list(r) for r in a]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(a, ncols: int) -> int:
    return len(rref(a, ncols)[1])


def nullspace(a, ncols: int) -> list[list[Fraction]]:
    """Basis (as rows) of ``{u : a u = 0}`` for an m x ``ncols`` matrix."""
    rows, pivots = rref(a, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        u = [Fraction(0)] * ncols
        u[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            u[p] = -row[f]
        basis.append(u)
    return basis


def row_space(a, ncols: int) -> list[list[Fraction]]:
    return rref(a, ncols)[0]


def transpose(a, ncols: int) -> list[list[Fraction]]:
    return [[row[j] for row in a] for j in range(ncols)]


def inverse(a) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    rows, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows]
