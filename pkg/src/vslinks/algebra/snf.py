"""Smith normal form over Z and the lattice computations built on it.

Matrices are plain lists of lists of Python ints (arbitrary precision).
"""

from __future__ import annotations

import math
from typing import Sequence

IntMatrix = list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> IntMatrix:
    return [[0] * n for _ in range(m)]


def matmul(a: IntMatrix, b: IntMatrix, inner: int | None = None) -> IntMatrix:
    if inner is None:
        inner = len(b)
    ncols = len(b[0]) if b else 0
    out = zeros(len(a), ncols)
    for i, row in enumerate(a):
        out_row = out[i]
        for k in range(inner):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(ncols):
                    if brow[j]:
                        out_row[j] += x * brow[j]
    return out


def transpose(a: IntMatrix, ncols: int | None = None) -> IntMatrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def determinant(a: IntMatrix) -> int:
    """Bareiss fraction-free elimination; exact for integer input."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(matrix: Sequence[Sequence[int]], ncols: int | None = None,
                      transforms: bool = True):
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    U and V are unimodular and D is diagonal with nonnegative entries
    forming a divisibility chain.  ``ncols`` is needed only when the
    matrix has no rows.  With ``transforms=False`` U and V are None.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    u = identity(m) if transforms else None
    v = identity(n) if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        ra, rs = a[dst], a[src]
        for j in range(n):
            if rs[j]:
                ra[j] += k * rs[j]
        if u is not None:
            ua, us = u[dst], u[src]
            for j in range(m):
                if us[j]:
                    ua[j] += k * us[j]

    def add_col(dst, src, k):
        for row in a:
            if row[src]:
                row[dst] += k * row[src]
        if v is not None:
            for row in v:
                if row[src]:
                    row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            # leftover remainders are smaller than |p|: promote the smallest
            cand = None
            for i in range(t + 1, m):
                if a[i][t] and (cand is None or abs(a[i][t]) < cand[0]):
                    cand = (abs(a[i][t]), "r", i)
            for j in range(t + 1, n):
                if a[t][j] and (cand is None or abs(a[t][j]) < cand[0]):
                    cand = (abs(a[t][j]), "c", j)
            if cand is not None:
                if cand[1] == "r":
                    swap_rows(t, cand[2])
                else:
                    swap_cols(t, cand[2])
                continue
            bad = None
            for i in range(t + 1, m):
                row = a[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v


def diagonal(d: IntMatrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def rank(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    _, d, _ = smith_normal_form(matrix, ncols, transforms=False)
    return sum(1 for x in diagonal(d) if x)


def row_reduce(matrix: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Echelon rows spanning the same lattice as the rows of ``matrix``.

    At most ``ncols`` rows come back, which makes later SNF work cheap
    for tall systems.
    """
    rows = [[int(x) for x in r] for r in matrix if any(r)]
    out = []
    for col in range(ncols):
        live = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            pivot = live[0]
            reduced = []
            for r in live[1:]:
                q = r[col] // pivot[col]
                r = [x - q * y for x, y in zip(r, pivot)]
                if r[col]:
                    reduced.append(r)
                elif any(r):
                    rest.append(r)
            live = [pivot] + reduced
        if live:
            out.append(live[0])
        rows = rest
    return out


def integer_kernel(matrix: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Z-basis of ``{x in Z^ncols : A x = 0}`` as a list of vectors."""
    reduced = row_reduce(matrix, ncols)
    _, d, v = smith_normal_form(reduced, ncols)
    r = sum(1 for x in diagonal(d) if x) if d else 0
    return [[v[i][j] for i in range(ncols)] for j in range(r, ncols)]


def kernel_mod(matrix: Sequence[Sequence[int]], ncols: int, m: int) -> list[list[int]]:
    """Generators of ``{x in Z^ncols : A x = 0 mod m}`` (this lattice contains m Z^ncols)."""
    reduced = row_reduce(matrix, ncols)
    _, d, v = smith_normal_form(reduced, ncols)
    diag = diagonal(d) if d else []
    out = []
    for j in range(ncols):
        dj = diag[j] if j < len(diag) else 0
        scale = m // math.gcd(dj, m) if dj else 1
        out.append([scale * v[i][j] for i in range(ncols)])
    return out


class IntegerSolver:
    """Solve ``A x = b`` over Z for many right-hand sides (one SNF)."""

    def __init__(self, matrix: Sequence[Sequence[int]], nrows: int, ncols: int):
        self.nrows, self.ncols = nrows, ncols
        self.u, d, self.v = smith_normal_form(matrix if nrows else [], ncols)
        self.diag = diagonal(d) if nrows and ncols else []
        self.rank = sum(1 for x in self.diag if x)

    def solve(self, b: Sequence[int]) -> list[int] | None:
        if len(b) != self.nrows:
            raise ValueError("right-hand side has wrong length")
        if self.nrows == 0:
            return [0] * self.ncols
        ub = [sum(x * y for x, y in zip(row, b) if x and y) for row in self.u]
        y = [0] * self.ncols
        for i, c in enumerate(ub):
            if i < self.rank:
                if c % self.diag[i]:
                    return None
                y[i] = c // self.diag[i]
            elif c:
                return None
        return [sum(self.v[i][j] * y[j] for j in range(self.ncols) if y[j]) for i in range(self.ncols)]


def solve_integer(matrix, b, ncols: int) -> list[int] | None:
    return IntegerSolver(matrix, len(b), ncols).solve(b)


def lattice_quotient(sub_gens: list[list[int]], super_gens: list[list[int]], dim: int):
    """Structure of ``L / K`` for lattices ``K <= L <= Z^dim``.

    Both lattices are given by generating vectors; K must lie inside L.
    Returns ``(free_rank, torsion)`` with torsion the invariant factors
    greater than one.
    """
    if not super_gens:
        return 0, []
    # basis of L: columns of U^-1 scaled by the SNF diagonal
    cols = transpose(super_gens)
    u, d, _ = smith_normal_form(cols, len(super_gens))
    diag = diagonal(d)
    r = sum(1 for x in diag if x)
    if r == 0:
        return 0, []
    if not sub_gens:
        return r, []
    # coordinates of each K generator in the basis (d_i * U^-1 e_i)
    coords = []
    for g in sub_gens:
        ug = [sum(x * y for x, y in zip(row, g) if x and y) for row in u]
        if any(ug[i] for i in range(r, dim)) or any(ug[i] % diag[i] for i in range(r)):
            raise ValueError("sub-lattice is not contained in the super-lattice")
        coords.append([ug[i] // diag[i] for i in range(r)])
    _, dk, _ = smith_normal_form(transpose(coords), len(coords))
    dd = [x for x in diagonal(dk) if x]
    return r - len(dd), [x for x in dd if x > 1]
