"""Exact integer matrices: Smith normal form and lattice membership."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def det(m: Matrix) -> int:
    """Bareiss fraction-free determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass
class SmithForm:
    diagonal: list[int]
    U: Matrix
    V: Matrix
    D: Matrix


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithForm:
    """Return U, V unimodular and D = U m V diagonal with d1 | d2 | ...

    Pivot rule: smallest nonzero absolute value in the active block, rows
    cleared before columns.
    """
    a = [list(map(int, r)) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    U, V = identity(rows), identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    v = a[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty |= a[i][t] != 0
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty |= a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if best is None:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
    diag = [a[i][i] for i in range(min(rows, cols))]
    return SmithForm(diag, U, V, a)


def in_row_lattice(vec: Sequence[int], m: Sequence[Sequence[int]], snf: SmithForm | None = None) -> bool:
    """True iff ``vec`` is an integer combination of the rows of ``m``."""
    if not m:
        return all(v == 0 for v in vec)
    snf = snf or smith_normal_form(m)
    y = [sum(vec[k] * snf.V[k][j] for k in range(len(vec))) for j in range(len(vec))]
    for j, yj in enumerate(y):
        d = snf.diagonal[j] if j < len(snf.diagonal) else 0
        if d == 0:
            if yj:
                return False
        elif yj % d:
            return False
    return True


def minors_gcd(m: Sequence[Sequence[int]], k: int) -> int:
    """gcd of all k x k minors (brute force; used as an independent check)."""
    from itertools import combinations

    rows, cols = len(m), len(m[0]) if m else 0
    g = 0
    for rs in combinations(range(rows), k):
        for cs in combinations(range(cols), k):
            g = gcd(g, det([[m[r][c] for c in cs] for r in rs]))
    return abs(g)
