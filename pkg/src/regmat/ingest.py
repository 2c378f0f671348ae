"""Constructors: oriented matroids from rational matrices, directed graphs,
signed-circuit files and a small named catalog."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exact import ExactMatrix, det, nullspace, rank
from .matroid import MatroidError, OrientedMatroid
from .signed import SignedSubset, CircuitFormatError, parse_circuits, verify_circuit_axioms


class InputFormatError(ValueError):
    pass


@dataclass(frozen=True)
class DirectedGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        for t, h in self.edges:
            if not (1 <= t <= self.vertex_count and 1 <= h <= self.vertex_count):
                raise ValueError(f"edge ({t},{h}) has an endpoint outside 1..{self.vertex_count}")

    def incidence_matrix(self) -> ExactMatrix:
        """Signed vertex-edge incidence: +1 at the tail, -1 at the head."""
        rows = [[0] * len(self.edges) for _ in range(self.vertex_count)]
        for j, (t, h) in enumerate(self.edges):
            if t != h:
                rows[t - 1][j] += 1
                rows[h - 1][j] -= 1
        return ExactMatrix.from_rows(rows, cols=len(self.edges))

    def component_count(self) -> int:
        parent = list(range(self.vertex_count + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t, h in self.edges:
            parent[find(t)] = find(h)
        return len({find(v) for v in range(1, self.vertex_count + 1)})


def _as_matrix(A) -> ExactMatrix:
    if isinstance(A, ExactMatrix):
        return A
    return ExactMatrix.from_rows(A)


def minimal_dependent_sets(A: ExactMatrix) -> list[tuple[tuple[int, ...], list[Fraction]]]:
    """Minimal dependent column sets of ``A`` (1-based), each with a kernel
    vector supported exactly on it, enumerated by increasing size."""
    r = A.rank()
    cols = range(1, A.cols + 1)
    found: list[tuple[tuple[int, ...], list[Fraction]]] = []
    masks: list[int] = []
    for k in range(1, min(r + 1, A.cols) + 1):
        for S in combinations(cols, k):
            m = sum(1 << (e - 1) for e in S)
            if any(c & ~m == 0 for c in masks):
                continue
            sub = A.columns([e - 1 for e in S])
            if rank(sub.entries, k) == k:
                continue
            kernel = nullspace(sub.entries, k)
            assert len(kernel) == 1, "minimal dependent set must have a 1-dimensional kernel"
            vec = [Fraction(0)] * A.cols
            for e, x in zip(S, kernel[0]):
                vec[e - 1] = x
            found.append((S, vec))
            masks.append(m)
    return found


def from_matrix(A) -> OrientedMatroid:
    """Oriented matroid of the column vectors of an exact rational matrix."""
    A = _as_matrix(A)
    if A.cols < 1:
        raise ValueError("matrix needs at least one column")
    circuits = [SignedSubset.from_vector(vec) for _, vec in minimal_dependent_sets(A)]
    return OrientedMatroid(A.cols, circuits, check=False)


def from_graph(G: DirectedGraph) -> OrientedMatroid:
    if not G.edges:
        raise ValueError("graph needs at least one edge")
    return from_matrix(G.incidence_matrix())


def _circuit_file_collection(circuits: list[SignedSubset]) -> set[SignedSubset]:
    # A file that lists some circuit together with its negation is read as the
    # full collection; otherwise negations are implied.
    listed = set(circuits)
    if any(-c in listed for c in listed):
        return listed
    return listed | {-c for c in listed}


def read_circuit_collection(text: str) -> tuple[int, set[SignedSubset]]:
    n, circuits = parse_circuits(text)
    return n, _circuit_file_collection(circuits)


def from_circuit_file(text: str) -> OrientedMatroid:
    n, collection = read_circuit_collection(text)
    report = verify_circuit_axioms(collection)
    if not report.passed:
        raise MatroidError("circuit axioms violated", report)
    return OrientedMatroid(n, collection, check=True)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield lineno, s


def _header(lines, what: str) -> tuple[int, int]:
    if not lines:
        raise InputFormatError(f"{what} file: missing header")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise InputFormatError(f"{what} file line {lineno}: header must be two nonnegative integers")
    return int(parts[0]), int(parts[1])


def parse_matrix(text: str) -> ExactMatrix:
    lines = list(_content_lines(text))
    r, n = _header(lines, "matrix")
    body = lines[1:]
    if len(body) != r:
        raise InputFormatError(f"matrix file: header announces {r} rows, found {len(body)}")
    rows = []
    for lineno, line in body:
        toks = line.split()
        if len(toks) != n:
            raise InputFormatError(f"matrix file line {lineno}: expected {n} entries, found {len(toks)}")
        try:
            rows.append([Fraction(t) for t in toks])
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"matrix file line {lineno}: {exc}") from None
    return ExactMatrix.from_rows(rows, cols=n)


def parse_graph(text: str) -> DirectedGraph:
    lines = list(_content_lines(text))
    v, m = _header(lines, "graph")
    body = lines[1:]
    if len(body) != m:
        raise InputFormatError(f"graph file: header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, line in body:
        toks = line.split()
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise InputFormatError(f"graph file line {lineno}: expected 'tail head'")
        edges.append((int(toks[0]), int(toks[1])))
    try:
        return DirectedGraph(v, tuple(edges))
    except ValueError as exc:
        raise InputFormatError(f"graph file: {exc}") from None


U24_MATRIX = ((1, 0, 1, 1), (0, 1, 1, 2))


def _complete_graph(k: int) -> DirectedGraph:
    return DirectedGraph(k, tuple(combinations(range(1, k + 1), 2)))


def _u24() -> OrientedMatroid:
    A = ExactMatrix.from_rows(U24_MATRIX)
    for cols in combinations(range(4), 2):
        if det(A.columns(cols).entries) == 0:
            raise AssertionError(f"U24 realization has a singular minor at columns {cols}")
    return from_matrix(A)


CATALOG = {
    "U24": _u24,
    "U13": lambda: from_matrix([[1, 1, 1]]),
    "U12": lambda: from_matrix([[1, 1]]),
    "U23": lambda: from_matrix([[1, 0, 1], [0, 1, 1]]),
    "K3": lambda: from_graph(_complete_graph(3)),
    "K4": lambda: from_graph(_complete_graph(4)),
    "loop": lambda: from_matrix(ExactMatrix(1, 1, ((Fraction(0),),))),
    "coloop": lambda: from_matrix([[1]]),
}


def named(name: str) -> OrientedMatroid:
    try:
        build = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown matroid {name!r}; catalog: {', '.join(CATALOG)}") from None
    return build()


def load(path_or_text: str, fmt: str, *, is_text: bool = False) -> OrientedMatroid:
    """Read a matroid in one of the file formats ``matrix``, ``graph`` or ``circuits``."""
    if is_text:
        text = path_or_text
    else:
        with open(path_or_text, encoding="ascii") as fh:
            text = fh.read()
    if fmt == "matrix":
        return from_matrix(parse_matrix(text))
    if fmt == "graph":
        return from_graph(parse_graph(text))
    if fmt == "circuits":
        return from_circuit_file(text)
    raise ValueError(f"unknown format {fmt!r}")


__all__ = [
    "CircuitFormatError", "DirectedGraph", "InputFormatError", "from_circuit_file", "from_graph",
    "from_matrix", "load", "minimal_dependent_sets", "named", "parse_graph", "parse_matrix",
]
