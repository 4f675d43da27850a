"""Exact integer linear algebra on Python ints."""
from __future__ import annotations

from typing import Sequence


def column_hermite(A: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Column-style echelon form H = A U with U unimodular.

    Returns ``(H, U, pivots)`` where ``pivots[k]`` is the row whose leading
    entry sits in column ``k``; every row above it is zero from column ``k`` on,
    and pivot entries are positive.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(map(int, row)) for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_swap(a, b):
        for M_ in (H, U):
            for row in M_:
                row[a], row[b] = row[b], row[a]

    def col_sub(dst, src, q):
        # column dst -= q * column src
        for M_ in (H, U):
            for row in M_:
                row[dst] -= q * row[src]

    pivots: list[int] = []
    k = 0
    for i in range(m):
        if k == n:
            break
        row = H[i]
        while True:
            nz = [j for j in range(k, n) if row[j] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(row[j]))
            if j0 != k:
                col_swap(j0, k)
            if len(nz) == 1:
                break
            for j in range(k + 1, n):
                if row[j]:
                    col_sub(j, k, row[j] // row[k])
        if any(row[j] for j in range(k, n)):
            if row[k] < 0:
                for M_ in (H, U):
                    for r in M_:
                        r[k] = -r[k]
            pivots.append(i)
            k += 1
    return H, U, pivots


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """One integer solution of A x = b, or None if there is none."""
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    H, U, pivots = column_hermite(A)
    y = [0] * n
    pivot_col = {row: col for col, row in enumerate(pivots)}
    for i in range(m):
        k = pivot_col.get(i)
        known = sum(H[i][j] * y[j] for j in range(k if k is not None else len(pivots)))
        rest = int(b[i]) - known
        if k is None:
            if rest != 0:
                return None
        else:
            q, r = divmod(rest, H[i][k])
            if r:
                return None
            y[k] = q
    return [sum(U[i][j] * y[j] for j in range(n)) for i in range(n)]
