"""Integer lattices in Z^n: Hermite and Smith normal forms, membership,
dual lattices and invariant factors of quotients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Sequence

from .exact import ExactMatrix, det, inverse, matmul, rank, solve_left
from .signed import SignedSubset


def _int_rows(M) -> list[list[int]]:
    if isinstance(M, ExactMatrix):
        return M.to_int_rows()
    rows = []
    for row in M:
        out = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"non-integer entry {x}")
                x = x.numerator
            out.append(int(x))
        rows.append(out)
    return rows


def hnf(M, ncols: int | None = None) -> list[list[int]]:
    """Row-style Hermite normal form with zero rows dropped.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    The integer row span is unchanged.
    """
    A = _int_rows(M)
    if ncols is None:
        ncols = len(A[0]) if A else 0
    m = len(A)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[k] = A[k], A[r]
            p = A[r][c]
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if not A[r][c]:
            continue
        if A[r][c] < 0:
            A[r] = [-a for a in A[r]]
        p = A[r][c]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        r += 1
    return [row for row in A[:r]]


def snf(M) -> list[int]:
    """Nonzero Smith invariants d1 | d2 | ... of an integer matrix (length = rank)."""
    A = _int_rows(M)
    m = len(A)
    n = len(A[0]) if A else 0
    t = 0
    while t < min(m, n):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            changed = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        changed = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    for row in A:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        changed = True
            if not changed:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
                if bad is None:
                    break
                # fold the offending row in so the next pass lowers the pivot
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
            entries = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            entries += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, pi, pj = min(entries)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        t += 1
    return [abs(A[i][i]) for i in range(t)]


@dataclass(frozen=True)
class IntegerLattice:
    """Sublattice of Z^n, stored as its row Hermite normal form.

    Equal lattices have identical ``basis`` tuples, so dataclass equality and
    hashing are set equality.
    """

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ambient_dim: int) -> "IntegerLattice":
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError(f"vector of length {len(r)} in Z^{ambient_dim}")
        return cls(ambient_dim, tuple(tuple(r) for r in hnf(rows, ambient_dim)))

    @classmethod
    def full(cls, n: int) -> "IntegerLattice":
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("length mismatch")
        v = [int(x) for x in v]
        for row in self.basis:
            c = next(j for j, a in enumerate(row) if a)
            if v[c] % row[c]:
                return False
            q = v[c] // row[c]
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def gram(self) -> list[list[int]]:
        return [[sum(a * b for a, b in zip(x, y)) for y in self.basis] for x in self.basis]

    def __add__(self, other: "IntegerLattice") -> "IntegerLattice":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return IntegerLattice.from_rows(list(self.basis) + list(other.basis), self.ambient_dim)


def _vector(v) -> list[int]:
    if isinstance(v, SignedSubset):
        return list(v.vector())
    return [int(x) for x in v]


def lattice_from_vectors(vectors: Iterable, ambient_dim: int) -> IntegerLattice:
    return IntegerLattice.from_rows([_vector(v) for v in vectors], ambient_dim)


def lattice_rank(L: IntegerLattice) -> int:
    return L.rank


def lattice_equals(L1: IntegerLattice, L2: IntegerLattice) -> bool:
    if L1.ambient_dim != L2.ambient_dim:
        raise ValueError("dimension mismatch")
    return L1.basis == L2.basis


def lattice_contains(L: IntegerLattice, v) -> bool:
    return L.contains(_vector(v))


def dual_lattice(L) -> ExactMatrix:
    """Basis of the dual lattice inside the rational span of ``L``: the rows of
    Gram^-1 times the basis. Accepts an IntegerLattice or any rational basis."""
    if isinstance(L, IntegerLattice):
        rows, n = [list(r) for r in L.basis], L.ambient_dim
    else:
        rows = [list(r) for r in (L.entries if isinstance(L, ExactMatrix) else L)]
        n = L.cols if isinstance(L, ExactMatrix) else (len(rows[0]) if rows else 0)
    if not rows:
        return ExactMatrix(0, n, ())
    rows = [[Fraction(x) for x in r] for r in rows]
    gram = [[sum(a * b for a, b in zip(x, y)) for y in rows] for x in rows]
    return ExactMatrix.from_rows(matmul(inverse(gram), rows), cols=n)


@dataclass(frozen=True)
class QuotientInvariants:
    """Finitely generated abelian group Z^free_rank + sum Z/d_i, d_1 | d_2 | ..."""

    invariant_factors: tuple[int, ...]
    free_rank: int = 0

    def __post_init__(self):
        fs = self.invariant_factors
        if any(d < 1 for d in fs):
            raise ValueError("invariant factors must be positive")
        if any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise ValueError(f"{fs} is not a divisibility chain")

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int], free_rank: int = 0) -> "QuotientInvariants":
        orders = list(orders)
        diag = [[int(i == j) * d for j in range(len(orders))] for i, d in enumerate(orders)]
        return cls(tuple(snf(diag)), free_rank)

    @property
    def finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        return prod(self.invariant_factors) if self.finite else None

    def nontrivial_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d != 1)

    def __str__(self):
        parts = [f"Z/{d}" for d in self.nontrivial_factors()] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def quotient_invariants(super_lattice, sub: IntegerLattice) -> QuotientInvariants:
    """Invariants of ``super_lattice / sub``.

    ``super_lattice`` is an IntegerLattice, a rational basis (ExactMatrix or
    row list, e.g. from :func:`dual_lattice`), or None for the whole of Z^n.
    """
    if super_lattice is None:
        super_rows = [list(r) for r in IntegerLattice.full(sub.ambient_dim).basis]
    elif isinstance(super_lattice, IntegerLattice):
        super_rows = [list(r) for r in super_lattice.basis]
    elif isinstance(super_lattice, ExactMatrix):
        super_rows = [list(r) for r in super_lattice.entries]
    else:
        super_rows = [list(r) for r in super_lattice]
    if super_rows and rank(super_rows) != len(super_rows):
        raise ValueError("super lattice basis is not linearly independent")
    coords = []
    for v in sub.basis:
        c = solve_left(super_rows, v)
        if c is None or any(x.denominator != 1 for x in c):
            raise ValueError(f"sub lattice vector {list(v)} is not in the super lattice")
        coords.append([int(x) for x in c])
    factors = snf(coords) if coords else []
    return QuotientInvariants(tuple(factors), len(super_rows) - len(factors))


def gram_determinant(L: IntegerLattice) -> int:
    return det(L.gram())
