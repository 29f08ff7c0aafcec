"""Dense rational matrices and fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from ..errors import InputError

Vector = tuple[Fraction, ...]


class RationalMatrix:
    """Immutable ``rows x cols`` grid of Fractions.

    When used as a linear map, column ``j`` is the image of basis vector ``e_j``.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None) -> None:
        grid = tuple(tuple(Fraction(v) for v in row) for row in entries)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if any(len(row) != cols for row in grid):
            raise InputError("ragged matrix rows")
        self.rows = len(grid)
        self.cols = cols
        self.entries: tuple[Vector, ...] = grid

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "RationalMatrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls([[col[i] for col in columns] for i in range(rows)], len(columns))

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.columns(), self.rows)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self == RationalMatrix.identity(self.rows) if self.is_square() else False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"RationalMatrix([{body}])"

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise InputError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = other.columns()
        return RationalMatrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in ocols] for row in self.entries],
            other.cols,
        )

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("shape mismatch in matrix sum")
        return RationalMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)], self.cols
        )

    def scale(self, s) -> "RationalMatrix":
        return RationalMatrix([[s * v for v in row] for row in self.entries], self.cols)

    def apply(self, vec: Sequence[Fraction]) -> Vector:
        if len(vec) != self.cols:
            raise InputError(f"vector length {len(vec)} does not match {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(row, vec) if b), Fraction(0)) for row in self.entries)

    def power(self, n: int) -> "RationalMatrix":
        if not self.is_square():
            raise InputError("power of a non-square matrix")
        if n < 0:
            raise InputError("negative matrix power")
        result = RationalMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        """Kronecker product; row/column index (i, j) maps to i * other.dim + j."""
        out = []
        for row in self.entries:
            for orow in other.entries:
                out.append([a * b for a in row for b in orow])
        return RationalMatrix(out, self.cols * other.cols)

    def block_diag(self, other: "RationalMatrix") -> "RationalMatrix":
        out = [list(row) + [0] * other.cols for row in self.entries]
        out += [[0] * self.cols + list(row) for row in other.entries]
        return RationalMatrix(out, self.cols + other.cols)

    def rank(self) -> int:
        return len(_bareiss_echelon(self.entries, self.cols)[1])

    def det(self) -> Fraction:
        if not self.is_square():
            raise InputError("determinant of a non-square matrix")
        return bareiss_det(self.entries)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def nullspace(self) -> list[Vector]:
        return nullspace(self)


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; the row space is unchanged."""
    out = []
    for row in rows:
        m = 1
        for v in row:
            m = lcm(m, Fraction(v).denominator)
        out.append([int(Fraction(v) * m) for v in row])
    return out


def _bareiss_echelon(rows: Sequence[Sequence[Fraction]], cols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form; returns the integer rows and pivot columns.

    Every division in the Bareiss update is exact, so entries stay integral and
    bounded by minors of the input.
    """
    a = _integer_rows(rows)
    nrows = len(a)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(cols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            if f == 0:
                if prev != piv:
                    # keep the Bareiss invariant: scale untouched rows as well
                    a[i] = [(piv * v) // prev for v in ai]
                continue
            ar = a[r]
            a[i] = [(piv * ai[k] - f * ar[k]) // prev for k in range(cols)]
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def bareiss_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    scale = Fraction(1)
    ints = []
    for row in rows:
        m = 1
        for v in row:
            m = lcm(m, Fraction(v).denominator)
        scale /= m
        ints.append([int(Fraction(v) * m) for v in row])
    a = ints
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    if n == 0:
        return Fraction(1)
    return Fraction(sign * a[n - 1][n - 1]) * scale


def nullspace(m: RationalMatrix) -> list[Vector]:
    """Basis of ``{v : m v = 0}``, one vector per free column with that coordinate set to 1."""
    echelon, pivots = _bareiss_echelon(m.entries, m.cols)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = echelon[r]
            s = sum((row[k] * v[k] for k in range(pc + 1, m.cols) if row[k] and v[k]), Fraction(0))
            v[pc] = -s / row[pc]
        basis.append(tuple(v))
    return basis


def in_span(vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> bool:
    """Whether ``target`` is a linear combination of ``vectors`` (rank test)."""
    if not vectors:
        return all(v == 0 for v in target)
    cols = len(target)
    base = _bareiss_echelon([list(v) for v in vectors], cols)[1]
    ext = _bareiss_echelon([list(v) for v in vectors] + [list(target)], cols)[1]
    return len(base) == len(ext)
