"""Signed subsets of a finite ground set and the oriented-matroid circuit axioms.

Ground elements are 1-based integers ``1..size`` throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


@dataclass(frozen=True, order=False)
class SignedSubset:
    size: int
    positives: frozenset = field(default_factory=frozenset)
    negatives: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "positives", frozenset(self.positives))
        object.__setattr__(self, "negatives", frozenset(self.negatives))
        if self.size < 1:
            raise ValueError("ground set size must be positive")
        if self.positives & self.negatives:
            raise ValueError(f"elements {sorted(self.positives & self.negatives)} are both + and -")
        for e in self.positives | self.negatives:
            if not 1 <= e <= self.size:
                raise ValueError(f"element {e} outside 1..{self.size}")

    @classmethod
    def from_vector(cls, vec: Iterable) -> "SignedSubset":
        """Sign pattern of a numeric vector (index 0 is element 1)."""
        vec = list(vec)
        return cls(len(vec),
                   frozenset(i + 1 for i, x in enumerate(vec) if x > 0),
                   frozenset(i + 1 for i, x in enumerate(vec) if x < 0))

    @classmethod
    def from_signs(cls, size: int, signs: Mapping[int, int]) -> "SignedSubset":
        return cls(size,
                   frozenset(e for e, s in signs.items() if s > 0),
                   frozenset(e for e, s in signs.items() if s < 0))

    @property
    def support(self) -> frozenset:
        return self.positives | self.negatives

    def __call__(self, e: int) -> int:
        if e in self.positives:
            return 1
        if e in self.negatives:
            return -1
        return 0

    def __neg__(self) -> "SignedSubset":
        return SignedSubset(self.size, self.negatives, self.positives)

    def is_zero(self) -> bool:
        return not self.positives and not self.negatives

    def vector(self) -> tuple[int, ...]:
        return tuple(self(e) for e in range(1, self.size + 1))

    def canonical(self) -> "SignedSubset":
        """Representative of the pair {X, -X} whose lowest support element is +."""
        if self.is_zero():
            return self
        return self if min(self.support) in self.positives else -self

    def sort_key(self) -> tuple:
        return (len(self.support), tuple(sorted(self.support)), self.vector())

    def masks(self) -> tuple[int, int]:
        pos = 0
        for e in self.positives:
            pos |= 1 << (e - 1)
        neg = 0
        for e in self.negatives:
            neg |= 1 << (e - 1)
        return pos, neg

    def __str__(self):
        if self.is_zero():
            return "0"
        return " ".join(f"{'+' if self(e) > 0 else '-'}{e}" for e in sorted(self.support))

    def __repr__(self):
        return f"SignedSubset({self.size}, [{self}])"


def support(x: SignedSubset) -> frozenset:
    return x.support


def negate(x: SignedSubset) -> SignedSubset:
    return -x


def restrict(x: SignedSubset, keep: Iterable[int], renumber: Mapping[int, int]) -> SignedSubset:
    """Drop signs outside ``keep`` and relabel the rest through ``renumber``,
    which must be a bijection from ``keep`` onto ``1..len(keep)``."""
    keep = frozenset(keep)
    if set(renumber) != keep or sorted(renumber.values()) != list(range(1, len(keep) + 1)):
        raise ValueError("renumber must be a bijection from keep onto 1..|keep|")
    size = max(len(keep), 1)
    return SignedSubset(size,
                        frozenset(renumber[e] for e in x.positives & keep),
                        frozenset(renumber[e] for e in x.negatives & keep))


def _check_sizes(x: SignedSubset, y: SignedSubset):
    if x.size != y.size:
        raise ValueError(f"size mismatch: {x.size} vs {y.size}")


def sign_orthogonal(x: SignedSubset, y: SignedSubset) -> bool:
    """Combinatorial orthogonality: the two agree in sign somewhere iff they
    disagree somewhere. Disjoint supports count as orthogonal."""
    _check_sizes(x, y)
    agree = bool(x.positives & y.positives or x.negatives & y.negatives)
    disagree = bool(x.positives & y.negatives or x.negatives & y.positives)
    return agree == disagree


def dot(x: SignedSubset, y: SignedSubset) -> int:
    _check_sizes(x, y)
    return (len(x.positives & y.positives) + len(x.negatives & y.negatives)
            - len(x.positives & y.negatives) - len(x.negatives & y.positives))


@dataclass
class AxiomReport:
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def axioms_failed(self) -> list[int]:
        return [a for a, _ in self.violations]

    def __str__(self):
        if self.passed:
            return "circuit axioms: passed"
        lines = ["circuit axioms: FAILED"]
        for axiom, witness in self.violations:
            parts = ", ".join(str(w) if not isinstance(w, SignedSubset) else f"({w})" for w in witness)
            lines.append(f"  axiom {axiom}: {parts}")
        return "\n".join(lines)


def _bits(mask: int):
    e = 1
    while mask:
        if mask & 1:
            yield e
        mask >>= 1
        e += 1


def verify_circuit_axioms(circuits: Iterable[SignedSubset]) -> AxiomReport:
    """Brute-force check of the four circuit axioms on a full (negation-closed)
    collection. At most one witness is reported per failed axiom: the first
    one met when the circuits are scanned in sorted order.

    Axiom 1 is read as "no circuit has empty support", so a collection with
    no circuits at all (a free matroid) passes.

    Witness shapes: axiom 1 and 2 ``(C,)``; axiom 3 ``(C1, C2)``;
    axiom 4 ``(C1, C2, e, f)``.
    """
    circuits = sorted(set(circuits), key=SignedSubset.sort_key)
    sizes = {c.size for c in circuits}
    if len(sizes) > 1:
        raise ValueError(f"circuits live on different ground sets: {sorted(sizes)}")
    if sizes and min(sizes) < 1:
        raise ValueError("empty ground set")
    report = AxiomReport()
    for c in circuits:
        if c.is_zero():
            report.violations.append((1, (c,)))
            break

    present = set(circuits)
    for c in circuits:
        if -c not in present:
            report.violations.append((2, (c,)))
            break

    masks = [c.masks() for c in circuits]
    supports = [p | n for p, n in masks]
    found3 = False
    for i, c1 in enumerate(circuits):
        for j, c2 in enumerate(circuits):
            if i != j and supports[i] & ~supports[j] == 0 and c1 != -c2:
                report.violations.append((3, (c1, c2)))
                found3 = True
                break
        if found3:
            break

    for i, (p1, n1) in enumerate(masks):
        for j, (p2, n2) in enumerate(masks):
            common = p1 & n2
            if not common:
                continue
            f_choices = (p1 & ~n2) | (n1 & ~p2)
            for e in _bits(common):
                ebit = 1 << (e - 1)
                allowed_pos = (p1 | p2) & ~ebit
                allowed_neg = (n1 | n2) & ~ebit
                for f in _bits(f_choices):
                    fbit = 1 << (f - 1)
                    if not any(p3 & ~allowed_pos == 0 and n3 & ~allowed_neg == 0 and (p3 | n3) & fbit
                               for p3, n3 in masks):
                        report.violations.append((4, (circuits[i], circuits[j], e, f)))
                        return report
    return report


def expand_negations(circuits: Iterable[SignedSubset]) -> set[SignedSubset]:
    out = set()
    for c in circuits:
        out.add(c)
        out.add(-c)
    return out


class CircuitFormatError(ValueError):
    def __init__(self, message: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(f"{where}: {message}")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def parse_circuits(text: str) -> tuple[int, list[SignedSubset]]:
    """Parse the signed-circuit text format.

    Returns the ground size and the circuits exactly as listed; whether
    negations are implied is decided by the caller.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise CircuitFormatError("missing header 'n m'", 1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise CircuitFormatError("header must be two nonnegative integers 'n m'", lineno, 1)
    n, m = int(parts[0]), int(parts[1])
    if n < 1:
        raise CircuitFormatError("ground set size must be positive", lineno, 1)
    body = lines[1:]
    if len(body) != m:
        raise CircuitFormatError(f"header announces {m} circuits, found {len(body)}",
                                 body[-1][0] if body else lineno)
    circuits = []
    for lineno, raw in body:
        signs: dict[int, int] = {}
        col = 0
        for tok in raw.split():
            col = raw.index(tok, col) + 1
            if len(tok) < 2 or tok[0] not in "+-" or not tok[1:].isdigit():
                raise CircuitFormatError(f"bad token {tok!r}; expected +k or -k", lineno, col)
            e = int(tok[1:])
            if not 1 <= e <= n:
                raise CircuitFormatError(f"element {e} outside 1..{n}", lineno, col)
            if e in signs:
                raise CircuitFormatError(f"element {e} repeated", lineno, col)
            signs[e] = 1 if tok[0] == "+" else -1
            col += len(tok) - 1
        if not signs:
            raise CircuitFormatError("empty circuit", lineno)
        circuits.append(SignedSubset.from_signs(n, signs))
    return n, circuits


def format_circuits(size: int, circuits: Iterable[SignedSubset]) -> str:
    circuits = sorted(circuits, key=SignedSubset.sort_key)
    lines = [f"{size} {len(circuits)}"] + [str(c) for c in circuits]
    return "\n".join(lines) + "\n"
