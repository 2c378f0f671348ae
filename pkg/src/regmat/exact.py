"""Exact rational matrices and the handful of linear-algebra routines the rest
of the package needs (rank, nullspace, determinants, linear solves).

Everything is done with :class:`fractions.Fraction` or plain ``int``; there is
no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix of exact rationals.

    ``cols`` is stored explicitly so that matrices with zero rows (the
    representation of a rank-0 matroid) still know their width.
    """

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for i, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> "ExactMatrix":
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if cols is None:
            if not data:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(len(rows), len(cols),
                           tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def columns(self, cols: Sequence[int]) -> "ExactMatrix":
        return self.submatrix(range(self.rows), cols)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           tuple(tuple(self.entries[i][j] for i in range(self.rows))
                                 for j in range(self.cols)))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def to_int_rows(self) -> list[list[int]]:
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return [[int(x) for x in row] for row in self.entries]

    def rank(self) -> int:
        return rank([list(r) for r in self.entries], self.cols)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def _row_echelon(m: list[list[Fraction]], ncols: int) -> list[int]:
    """Reduced row echelon form in place; returns the pivot columns."""
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    return len(_row_echelon(m, ncols if ncols is not None else len(m[0])))


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel {x : A x = 0}, one vector per free column."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = _row_echelon(m, ncols) if m else []
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis.append(v)
    return basis


def solve_left(basis: Sequence[Sequence], v: Sequence) -> list[Fraction] | None:
    """Coefficients c with sum_i c[i] * basis[i] == v, or None if v is outside
    the rational row span. ``basis`` rows must be linearly independent."""
    k = len(basis)
    n = len(v)
    if k == 0:
        return [] if all(x == 0 for x in v) else None
    # columns of the augmented system are the basis rows; unknowns are c
    aug = [[Fraction(basis[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(n)]
    pivots = _row_echelon(aug, k + 1)
    if k in pivots:
        return None
    c = [Fraction(0)] * k
    for i, p in enumerate(pivots):
        c[p] = aug[i][k]
    return c


def det(rows: Sequence[Sequence]) -> int | Fraction:
    """Determinant of a square matrix.

    Integer input goes through fraction-free Bareiss elimination, so the
    result is an ``int``; anything else falls back to rational elimination.
    """
    n = len(rows)
    if n == 0:
        return 1
    if all(isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
           for row in rows for x in row):
        return _bareiss([[int(x) for x in row] for row in rows])
    m = [[Fraction(x) for x in row] for row in rows]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def _bareiss(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def gf2_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the two-element field, rows packed into integer bitmasks."""
    vecs = []
    for row in rows:
        x = 0
        for j, a in enumerate(row):
            if a % 2:
                x |= 1 << j
        vecs.append(x)
    r = 0
    basis: dict[int, int] = {}
    for x in vecs:
        while x:
            h = x.bit_length() - 1
            if h in basis:
                x ^= basis[h]
            else:
                basis[h] = x
                r += 1
                break
    return r


def inverse(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    pivots = _row_echelon(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in aug]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    inner = len(b)
    width = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(width)] for i in range(len(a))]
