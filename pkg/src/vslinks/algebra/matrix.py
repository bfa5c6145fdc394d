"""Small immutable square/rectangular matrices over an exact ring.

The ring is any class offering ``zero()``, ``one()`` and ``coerce()``
(``DualInt``, ``LaurentPoly``); entries only need ``+``, ``-``, ``*``.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .dual import DualInt, format_dual


class Matrix:
    __slots__ = ("ring", "rows")

    def __init__(self, rows: Sequence[Sequence], ring=DualInt):
        self.ring = ring
        self.rows = tuple(tuple(ring.coerce(x) for x in row) for row in rows)
        if len({len(r) for r in self.rows}) > 1:
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int, ring=DualInt) -> Matrix:
        one, zero = ring.one(), ring.zero()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], ring)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, ring=DualInt) -> Matrix:
        return cls([[ring.zero()] * ncols for _ in range(nrows)], ring)

    @classmethod
    def block(cls, n: int, i: int, block2, ring=DualInt) -> Matrix:
        """``I_i + block2 + I_{n-i-2}`` with the 2x2 block at 0-based lanes i, i+1."""
        rows = [list(r) for r in cls.identity(n, ring).rows]
        for a in range(2):
            for b in range(2):
                rows[i + a][i + b] = ring.coerce(block2[a][b])
        return cls(rows, ring)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> Matrix:
        return Matrix(list(zip(*self.rows)), self.ring)

    T = property(transpose)

    def map(self, f: Callable, ring=None) -> Matrix:
        ring = ring or self.ring
        return Matrix([[f(x) for x in row] for row in self.rows], ring)

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"dimension mismatch: {self.shape} @ {other.shape}")
        zero = self.ring.zero()
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(out, self.ring)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def row_sums(self) -> list:
        zero = self.ring.zero()
        return [sum(row, zero) for row in self.rows]

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]!r})"

    def __str__(self):
        fmt = format_dual if self.ring is DualInt else str
        return "[" + ", ".join("[" + ", ".join(fmt(x) for x in row) + "]" for row in self.rows) + "]"


def dual_mul(x, y) -> DualInt:
    return DualInt.coerce(x) * DualInt.coerce(y)


def dual_matmul(x: Matrix, y: Matrix) -> Matrix:
    return x @ y


def dual_matrix(rows) -> Matrix:
    """Build a dual matrix from ints, DualInts or strings like ``"1-s"``."""
    from .dual import parse_dual

    return Matrix([[parse_dual(x) if isinstance(x, str) else x for x in row] for row in rows])
