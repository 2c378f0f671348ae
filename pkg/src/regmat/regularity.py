"""Regularity of oriented matroids, decided four independent ways, plus the
irregularity parameter rho(M) = rank(circuit lattice) - corank(M).

The four deciders:

* ``lattice``: every basis' fundamental circuits span the full circuit lattice;
* ``rank``: the circuit lattice has rank equal to the corank;
* ``tu``: the [I | D] matrix built from one basis' fundamental circuits is
  totally unimodular and realizes exactly the circuits of M;
* ``binary``: the same construction over GF(2) has the same circuit supports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .exact import ExactMatrix, det, gf2_rank, rank
from .ingest import from_matrix
from .lattice import IntegerLattice, lattice_from_vectors
from .matroid import OrientedMatroid
from .signed import SignedSubset

METHODS = ("lattice_equality", "lattice_rank", "tu_construction", "binary_oracle")
METHOD_ALIASES = {"lattice": "lattice_equality", "rank": "lattice_rank",
                  "tu": "tu_construction", "binary": "binary_oracle"}


class InconsistencyError(RuntimeError):
    """Deciders that must agree returned different verdicts."""


def circuit_lattice(M: OrientedMatroid) -> IntegerLattice:
    return lattice_from_vectors(M.circuits, M.ground_size)


def basis_circuit_lattice(M: OrientedMatroid, B) -> IntegerLattice:
    return lattice_from_vectors(M.fundamental_circuits(B), M.ground_size)


def rho(M: OrientedMatroid) -> int:
    return circuit_lattice(M).rank - M.corank


def extend_to_basis(M: OrientedMatroid, independent) -> tuple[int, ...]:
    chosen = set(independent)
    for e in M.elements:
        if e not in chosen and M.is_independent(chosen | {e}):
            chosen.add(e)
    return tuple(sorted(chosen))


@dataclass
class LatticeWitness:
    """``circuit`` lies outside the lattice of ``basis`` but is a fundamental
    circuit of ``other_basis``, so the two per-basis lattices differ."""

    basis: tuple[int, ...]
    other_basis: tuple[int, ...]
    circuit: SignedSubset


def is_regular_by_lattice_equality(M: OrientedMatroid) -> tuple[bool, LatticeWitness | None]:
    full = circuit_lattice(M)
    for B in M.bases:
        lam = basis_circuit_lattice(M, B)
        if not all(full.contains(v) for v in lam.basis):
            raise InconsistencyError(f"lattice of basis {B} is not inside the circuit lattice")
        if lam == full:
            continue
        c = next(c for c in M.circuits if not lam.contains(c.vector()))
        e = max(c.support)
        other = extend_to_basis(M, c.support - {e})
        return False, LatticeWitness(B, other, c)
    return True, None


def independent_circuit_set(M: OrientedMatroid) -> list[SignedSubset]:
    """A linearly independent set of circuits of maximum size, grown from the
    fundamental circuits of the first basis."""
    chosen = list(M.fundamental_circuits(M.bases[0])) if M.bases else []
    r = rank([c.vector() for c in chosen], M.ground_size) if chosen else 0
    for c in M.circuits:
        trial = [x.vector() for x in chosen] + [c.vector()]
        r2 = rank(trial, M.ground_size)
        if r2 > r:
            chosen.append(c)
            r = r2
    return chosen


def is_regular_by_rank(M: OrientedMatroid) -> bool:
    return rho(M) == 0


def build_candidate_matrix(M: OrientedMatroid, B0) -> ExactMatrix:
    """The r x n matrix [I | D] of a basis: identity on the basis columns, and
    for e outside the basis the column -C(B0, e) restricted to the basis."""
    B0 = M._require_basis(B0)
    pos = {b: i for i, b in enumerate(B0)}
    r, n = len(B0), M.ground_size
    rows = [[0] * n for _ in range(r)]
    for b, i in pos.items():
        rows[i][b - 1] = 1
    for e in M.elements:
        if e in pos:
            continue
        c = M.fundamental_circuit(B0, e)
        for b in c.support - {e}:
            rows[pos[b]][e - 1] = -c(b)
    return ExactMatrix.from_rows(rows, cols=n)


@dataclass
class MinorViolation:
    """A square submatrix (1-based rows/columns) whose determinant is not 0 or +-1."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    determinant: int


def is_totally_unimodular(A) -> tuple[bool, MinorViolation | None]:
    """Exhaustive check of every square minor, smallest first. The witness is
    the first violation in (size, rows, cols) lexicographic order."""
    if not isinstance(A, ExactMatrix):
        A = ExactMatrix.from_rows(A)
    rows = A.to_int_rows()
    m, n = A.rows, A.cols
    for k in range(1, min(m, n) + 1):
        for R in combinations(range(m), k):
            for C in combinations(range(n), k):
                d = det([[rows[i][j] for j in C] for i in R])
                if d not in (-1, 0, 1):
                    return False, MinorViolation(tuple(i + 1 for i in R), tuple(j + 1 for j in C), d)
    return True, None


@dataclass
class TUResult:
    regular: bool
    basis: tuple[int, ...]
    matrix: ExactMatrix
    totally_unimodular: bool
    violation: MinorViolation | None
    circuits_match: bool
    missing_circuits: list[SignedSubset] = field(default_factory=list)
    extra_circuits: list[SignedSubset] = field(default_factory=list)


def tu_construction(M: OrientedMatroid, B0=None) -> TUResult:
    B0 = M.bases[0] if B0 is None else M._require_basis(B0)
    A = build_candidate_matrix(M, B0)
    tu, violation = is_totally_unimodular(A)
    realized = set(from_matrix(A).circuits)
    own = set(M.circuits)
    return TUResult(
        regular=tu and realized == own,
        basis=B0, matrix=A, totally_unimodular=tu, violation=violation,
        circuits_match=realized == own,
        missing_circuits=sorted(own - realized, key=SignedSubset.sort_key),
        extra_circuits=sorted(realized - own, key=SignedSubset.sort_key),
    )


def is_regular_by_tu(M: OrientedMatroid, B0=None) -> bool:
    return tu_construction(M, B0).regular


def binary_circuit_supports(M: OrientedMatroid, B0=None) -> set[frozenset]:
    """Circuit supports of the GF(2) matrix [I | D] whose D-columns are the
    supports of the fundamental circuits of B0."""
    B0 = M.bases[0] if B0 is None else M._require_basis(B0)
    pos = {b: i for i, b in enumerate(B0)}
    cols = {}
    for e in M.elements:
        if e in pos:
            cols[e] = [int(i == pos[e]) for i in range(len(B0))]
        else:
            sup = M.fundamental_circuit(B0, e).support - {e}
            cols[e] = [int(b in sup) for b in B0]
    found: list[frozenset] = []
    for k in range(1, min(len(B0) + 1, M.ground_size) + 1):
        for S in combinations(M.elements, k):
            s = frozenset(S)
            if any(f <= s for f in found):
                continue
            if gf2_rank([cols[e] for e in S]) < k:
                found.append(s)
    return set(found)


def is_binary_and_orientable(M: OrientedMatroid, B0=None) -> bool:
    return binary_circuit_supports(M, B0) == M.circuit_supports()


@dataclass
class RegularityReport:
    rank: int
    corank: int
    rho: int
    verdicts: dict[str, bool]
    lattice_witness: LatticeWitness | None = None
    independent_circuits: list[SignedSubset] | None = None
    tu: TUResult | None = None

    @property
    def regular(self) -> bool:
        return all(self.verdicts.values())


def analyze(M: OrientedMatroid, methods=METHODS, check_agreement: bool = True) -> RegularityReport:
    """Run the requested deciders and rho. With all four methods and
    ``check_agreement`` set, any disagreement raises InconsistencyError."""
    methods = [METHOD_ALIASES.get(m, m) for m in methods]
    unknown = set(methods) - set(METHODS)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}")
    r = rho(M)
    report = RegularityReport(rank=M.rank, corank=M.corank, rho=r, verdicts={})
    if "lattice_equality" in methods:
        ok, report.lattice_witness = is_regular_by_lattice_equality(M)
        report.verdicts["lattice_equality"] = ok
    if "lattice_rank" in methods:
        report.verdicts["lattice_rank"] = r == 0
        if r > 0:
            report.independent_circuits = independent_circuit_set(M)
    if "tu_construction" in methods:
        report.tu = tu_construction(M)
        report.verdicts["tu_construction"] = report.tu.regular
    if "binary_oracle" in methods:
        report.verdicts["binary_oracle"] = is_binary_and_orientable(M)

    if r < 0:
        raise InconsistencyError(f"rho = {r} < 0")
    if check_agreement and len(report.verdicts) > 1:
        values = set(report.verdicts.values())
        if len(values) > 1:
            raise InconsistencyError(f"regularity deciders disagree: {report.verdicts}")
    return report


@dataclass
class MinorRow:
    element: int
    rho: int
    rho_deleted: int
    rho_contracted: int

    @property
    def ok(self) -> bool:
        return self.rho_deleted <= self.rho and self.rho_contracted <= self.rho


@dataclass
class MinorSweep:
    rows: list[MinorRow]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)


def minors_sweep(M: OrientedMatroid) -> MinorSweep:
    base = rho(M)
    rows = [MinorRow(e, base, rho(M.delete(e)), rho(M.contract(e))) for e in M.elements]
    return MinorSweep(rows)
