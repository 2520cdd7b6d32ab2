"""Exact integer linear algebra: fraction-free ranks, diagonalization, lattice solving.

Everything operates on plain Python ints (arbitrary precision), so there is
no overflow and no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix, by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            f = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col, ncols):
                row_i[j] = (row_i[j] * p - f * row_r[j]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _identity(k: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def integer_diagonalize(a: Sequence[Sequence[int]]):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (D, U, V) with U*A*V = D, D diagonal (zero diagonal entries,
    if any, trailing), U and V unimodular.  No divisibility chain is
    enforced on the diagonal; a diagonal form is all that integer solving
    and kernel extraction need.
    """
    d = [list(r) for r in a]
    nr = len(d)
    nc = len(d[0]) if d else 0
    u = _identity(nr)
    v = _identity(nc)
    t = 0
    while t < min(nr, nc):
        # locate a nonzero entry of minimal absolute value in the submatrix
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                e = d[i][j]
                if e and (best is None or abs(e) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            d[t], d[bi] = d[bi], d[t]
            u[t], u[bi] = u[bi], u[t]
        if bj != t:
            for row in d:
                row[t], row[bj] = row[bj], row[t]
            for row in v:
                row[t], row[bj] = row[bj], row[t]
        while True:
            # clear column t with row operations
            dirty = False
            for i in range(t + 1, nr):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    if q:
                        for j in range(nc):
                            d[i][j] -= q * d[t][j]
                        for j in range(nr):
                            u[i][j] -= q * u[t][j]
                    if d[i][t]:  # remainder became the new smallest pivot
                        d[t], d[i] = d[i], d[t]
                        u[t], u[i] = u[i], u[t]
                        dirty = True
            # clear row t with column operations
            for j in range(t + 1, nc):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    if q:
                        for row in d:
                            row[j] -= q * row[t]
                        for row in v:
                            row[j] -= q * row[t]
                    if d[t][j]:
                        for row in d:
                            row[t], row[j] = row[j], row[t]
                        for row in v:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty and all(d[i][t] == 0 for i in range(t + 1, nr)) \
                    and all(d[t][j] == 0 for j in range(t + 1, nc)):
                break
        if d[t][t] < 0:
            for j in range(nc):
                d[t][j] = -d[t][j]
            for j in range(nr):
                u[t][j] = -u[t][j]
        t += 1
    return d, u, v


def _mat_vec(m: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(mi * xi for mi, xi in zip(row, x)) for row in m]


@dataclass
class DiagonalizedSystem:
    """A diagonalized integer matrix, reusable for many right-hand sides.

    Solves A x = b over the integers and exposes a lattice basis of ker A.
    """

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        a = [list(r) for r in self.matrix]
        self.nrows = len(a)
        self.ncols = len(a[0]) if a else 0
        self.d, self.u, self.v = integer_diagonalize(a)

    def solve(self, b: Sequence[int]) -> list[int] | None:
        """One integer solution of A x = b, or None when none exists."""
        if len(b) != self.nrows:
            raise ValueError("right-hand side has wrong length")
        c = _mat_vec(self.u, b)
        z = [0] * self.ncols
        for i in range(self.nrows):
            dii = self.d[i][i] if i < self.ncols else 0
            if dii:
                if c[i] % dii:
                    return None
                z[i] = c[i] // dii
            elif c[i]:
                return None
        return _mat_vec(self.v, z)

    def kernel_basis(self) -> list[list[int]]:
        """Lattice basis of the integer kernel of A (columns of V past the rank)."""
        basis = []
        for j in range(self.ncols):
            djj = self.d[j][j] if j < self.nrows else 0
            if djj == 0:
                basis.append([self.v[i][j] for i in range(self.ncols)])
        return basis
