"""Gaussian elimination over a prime field F_p.

Matrices are plain lists of integer rows; every routine reduces its input
mod ``p`` and never mutates the caller's rows.  Pivot rule throughout: the
smallest row index holding a nonzero entry in the pivot column.
"""

from __future__ import annotations

from typing import Sequence

Rows = list[list[int]]


def _copy(rows: Sequence[Sequence[int]], p: int) -> Rows:
    return [[x % p for x in r] for r in rows]


def rref(rows: Sequence[Sequence[int]], p: int, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots, E)`` with ``E @ rows == R`` (mod p), ``E`` invertible
    and ``pivots`` the pivot column of each nonzero row of ``R``.
    """
    A = _copy(rows, p)
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    E = [[int(i == j) for j in range(m)] for i in range(m)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        E[r], E[piv] = E[piv], E[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        E[r] = [x * inv % p for x in E[r]]
        for i in range(m):
            f = A[i][c]
            if i != r and f:
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
                E[i] = [(a - f * b) % p for a, b in zip(E[i], E[r])]
        pivots.append(c)
        r += 1
    return A, pivots, E


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> Rows:
    """Basis of ``{x : rows @ x = 0}``, one vector per free column, in column order."""
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    R, pivots, _ = rref(rows, p, n)
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        x = [0] * n
        x[free] = 1
        for i, pc in enumerate(pivots):
            x[pc] = -R[i][free] % p
        basis.append(x)
    return basis


def solve(rows: Sequence[Sequence[int]], rhs: Sequence[int], p: int,
          ncols: int | None = None) -> list[int] | None:
    """One solution of ``rows @ x = rhs`` (free variables set to 0), or None."""
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots, _ = rref(aug, p, n + 1)
    if n in pivots:
        return None
    x = [0] * n
    for i, pc in enumerate(pivots):
        x[pc] = R[i][n]
    return x


def inverse(rows: Sequence[Sequence[int]], p: int) -> Rows | None:
    """Inverse of a square matrix, or None when singular."""
    n = len(rows)
    R, pivots, E = rref(rows, p, n)
    if len(pivots) < n:
        return None
    return E


def det(rows: Sequence[Sequence[int]], p: int) -> int:
    A = _copy(rows, p)
    n = len(A)
    d = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = -d
        d = d * A[c][c] % p
        inv = pow(A[c][c], -1, p)
        for i in range(c + 1, n):
            f = A[i][c] * inv % p
            if f:
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[c])]
    return d % p


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], p: int,
           inner: int | None = None) -> Rows:
    k = inner if inner is not None else len(B)
    ncols = len(B[0]) if B else 0
    return [[sum(A[i][t] * B[t][j] for t in range(k)) % p for j in range(ncols)]
            for i in range(len(A))]
