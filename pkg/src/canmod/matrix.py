"""Matrices of polynomials, stored column by column."""

from __future__ import annotations

from .core import Poly, PolyRing
from .errors import RingMismatchError


class Matrix:
    """An ``nrows x ncols`` matrix over a polynomial ring.

    As a presentation matrix its columns are relations in the free module
    of rank ``nrows``.
    """

    def __init__(self, ring: PolyRing, nrows: int, cols=()):
        self.ring = ring
        self.nrows = nrows
        out = []
        for c in cols:
            c = tuple(ring(e) if not isinstance(e, Poly) else e for e in c)
            if len(c) != nrows:
                raise RingMismatchError(f"column of length {len(c)} in a matrix with {nrows} rows")
            out.append(c)
        self.cols = out

    @classmethod
    def from_rows(cls, ring: PolyRing, rows, ncols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        cols = [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]
        return cls(ring, len(rows), cols)

    @classmethod
    def identity(cls, ring: PolyRing, n: int) -> "Matrix":
        one, zero = ring.one(), ring.zero()
        return cls(ring, n, [[one if i == j else zero for i in range(n)] for j in range(n)])

    @classmethod
    def zero(cls, ring: PolyRing, nrows: int, ncols: int) -> "Matrix":
        z = ring.zero()
        return cls(ring, nrows, [[z] * nrows for _ in range(ncols)])

    @property
    def ncols(self) -> int:
        return len(self.cols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Poly:
        return self.cols[j][i]

    def __getitem__(self, ij):
        i, j = ij
        return self.cols[j][i]

    def rows(self):
        return [[c[i] for c in self.cols] for i in range(self.nrows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, self.ncols, [list(r) for r in self.rows()])

    T = property(transpose)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise RingMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        z = self.ring.zero()
        cols = []
        for oc in other.cols:
            col = [z] * self.nrows
            for k, a in enumerate(oc):
                if not a:
                    continue
                for i, b in enumerate(self.cols[k]):
                    if b:
                        col[i] = col[i] + b * a
            cols.append(col)
        return Matrix(self.ring, self.nrows, cols)

    def hstack(self, other: "Matrix") -> "Matrix":
        if other.nrows != self.nrows:
            raise RingMismatchError("row counts differ")
        return Matrix(self.ring, self.nrows, self.cols + other.cols)

    def submatrix(self, rows, cols) -> "Matrix":
        return Matrix(self.ring, len(rows), [[self.cols[j][i] for i in rows] for j in cols])

    def is_zero(self) -> bool:
        return all(not e for c in self.cols for e in c)

    def map_entries(self, fn) -> "Matrix":
        return Matrix(self.ring, self.nrows, [[fn(e) for e in c] for c in self.cols])

    def nonzero_columns(self) -> "Matrix":
        return Matrix(self.ring, self.nrows, [c for c in self.cols if any(c)])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.nrows == other.nrows
            and self.cols == other.cols
        )

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"

    def __str__(self):
        rows = self.rows()
        if not rows or not self.cols:
            return f"[{self.nrows}x{self.ncols} empty]"
        cells = [[str(e) for e in r] for r in rows]
        w = [max(len(cells[i][j]) for i in range(len(cells))) for j in range(self.ncols)]
        return "\n".join("[" + "  ".join(c.rjust(w[j]) for j, c in enumerate(r)) + "]" for r in cells)


PresentationMatrix = Matrix


def minors(M: Matrix, k: int) -> list[Poly]:
    """All ``k x k`` minors (Laplace expansion along rows with memoisation)."""
    ring = M.ring
    if k <= 0:
        return [ring.one()]
    if k > M.nrows or k > M.ncols:
        return []
    rows = M.rows()
    from itertools import combinations

    memo = {}

    def det(rsel, csel):
        # rsel: tuple of row indices, csel: tuple of column indices, same length
        key = (rsel, csel)
        if key in memo:
            return memo[key]
        if len(rsel) == 1:
            val = rows[rsel[0]][csel[0]]
        else:
            r0 = rsel[0]
            rest = rsel[1:]
            val = ring.zero()
            for idx, c in enumerate(csel):
                a = rows[r0][c]
                if not a:
                    continue
                sub = det(rest, csel[:idx] + csel[idx + 1:])
                if not sub:
                    continue
                term = a * sub
                val = val + term if idx % 2 == 0 else val - term
        memo[key] = val
        return val

    out = []
    for rs in combinations(range(M.nrows), k):
        for cs in combinations(range(M.ncols), k):
            d = det(rs, cs)
            if d:
                out.append(d)
    return out
