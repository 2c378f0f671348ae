"""The oriented matroid aggregate: independence, bases, fundamental circuits,
cocircuits, duality and minors."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations, product
from typing import Iterable

from .signed import SignedSubset, AxiomReport, expand_negations, sign_orthogonal, verify_circuit_axioms


class MatroidError(ValueError):
    """Input does not describe a valid oriented matroid."""

    def __init__(self, message: str, report: AxiomReport | None = None):
        self.report = report
        if report is not None and not report.passed:
            message = f"{message}\n{report}"
        super().__init__(message)


def _mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def _elements(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


class OrientedMatroid:
    """An oriented matroid on ``{1..ground_size}`` given by its signed circuits.

    Circuits are stored once per +/- pair, as the canonical representative
    (lowest support element positive), sorted by (support size, support).
    With ``check=True`` the negation-closed collection is run through the
    circuit axiom checker and the equicardinality of maximal independent sets
    is confirmed.
    """

    def __init__(self, ground_size: int, circuits: Iterable[SignedSubset] = (), check: bool = True):
        if ground_size < 0:
            raise ValueError("ground size must be nonnegative")
        canon = {}
        for c in circuits:
            if c.size != ground_size:
                raise MatroidError(f"circuit ({c}) has size {c.size}, expected {ground_size}")
            if c.is_zero():
                raise MatroidError("the zero signed subset is never a circuit")
            k = c.canonical()
            canon[k] = k
        self.ground_size = ground_size
        self.circuits: tuple[SignedSubset, ...] = tuple(sorted(canon, key=SignedSubset.sort_key))
        self._circuit_masks = [_mask(c.support) for c in self.circuits]
        if check:
            report = verify_circuit_axioms(self.all_circuits())
            if not report.passed:
                raise MatroidError("circuit axioms violated", report)
        self.rank = self._greedy_rank()
        if check and ground_size <= 16:
            self._check_equicardinal()

    @property
    def n(self) -> int:
        return self.ground_size

    @property
    def corank(self) -> int:
        return self.ground_size - self.rank

    @property
    def elements(self) -> range:
        return range(1, self.ground_size + 1)

    def all_circuits(self) -> set[SignedSubset]:
        return expand_negations(self.circuits)

    def circuit_supports(self) -> set[frozenset]:
        return {c.support for c in self.circuits}

    def __eq__(self, other):
        if not isinstance(other, OrientedMatroid):
            return NotImplemented
        return self.ground_size == other.ground_size and self.circuits == other.circuits

    def __hash__(self):
        return hash((self.ground_size, self.circuits))

    def __repr__(self):
        return f"OrientedMatroid(n={self.ground_size}, rank={self.rank}, circuits={len(self.circuits)})"

    def _indep_mask(self, mask: int) -> bool:
        return not any(cm & ~mask == 0 for cm in self._circuit_masks)

    def is_independent(self, elements: Iterable[int]) -> bool:
        return self._indep_mask(_mask(elements))

    def _greedy_rank(self) -> int:
        mask = 0
        r = 0
        for e in self.elements:
            if self._indep_mask(mask | 1 << (e - 1)):
                mask |= 1 << (e - 1)
                r += 1
        return r

    def _check_equicardinal(self):
        full = (1 << self.ground_size) - 1
        for mask in range(full + 1):
            if not self._indep_mask(mask):
                continue
            if all(mask >> (e - 1) & 1 or not self._indep_mask(mask | 1 << (e - 1)) for e in self.elements):
                if bin(mask).count("1") != self.rank:
                    raise MatroidError(f"maximal independent set {_elements(mask)} has size "
                                       f"{bin(mask).count('1')}, rank is {self.rank}")

    @cached_property
    def bases(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in combinations(self.elements, self.rank) if self.is_independent(b))

    def is_basis(self, elements: Iterable[int]) -> bool:
        b = tuple(sorted(set(elements)))
        return len(b) == self.rank and all(1 <= e <= self.ground_size for e in b) and self.is_independent(b)

    def _require_basis(self, B) -> tuple[int, ...]:
        b = tuple(sorted(set(B)))
        if not self.is_basis(b):
            raise ValueError(f"{list(b)} is not a basis")
        return b

    def fundamental_circuit(self, B: Iterable[int], e: int) -> SignedSubset:
        """C(B, e), signed so that e carries +."""
        B = frozenset(B)
        if e in B:
            raise ValueError(f"element {e} lies in the basis")
        allowed = B | {e}
        for c in self.circuits:
            if e in c.support and c.support <= allowed:
                return c if c(e) > 0 else -c
        raise ValueError(f"no circuit inside B + {e}; is {sorted(B)} a basis?")

    def fundamental_circuits(self, B: Iterable[int]) -> list[SignedSubset]:
        b = self._require_basis(B)
        return [self.fundamental_circuit(b, e) for e in self.elements if e not in b]

    @cached_property
    def cocircuits(self) -> tuple[SignedSubset, ...]:
        """Signed cocircuits, canonical representatives, sorted."""
        n = self.ground_size
        basis_masks = [_mask(b) for b in self.bases]
        supports: list[int] = []
        for k in range(1, n + 1):
            for combo in combinations(self.elements, k):
                m = _mask(combo)
                if any(s & ~m == 0 for s in supports):
                    continue
                if all(m & bm for bm in basis_masks):
                    supports.append(m)
        all_circ = list(self.circuits)
        out = []
        for m in supports:
            els = _elements(m)
            found = []
            for tail in product((1, -1), repeat=len(els) - 1):
                y = SignedSubset.from_signs(n, dict(zip(els, (1,) + tail)))
                if all(sign_orthogonal(y, c) for c in all_circ):
                    found.append(y)
            if len(found) != 1:
                raise MatroidError(f"cocircuit support {list(els)} has {len(found)} consistent signings")
            out.append(found[0])
        return tuple(sorted(out, key=SignedSubset.sort_key))

    def fundamental_cocircuit(self, B: Iterable[int], b: int) -> SignedSubset:
        """The cocircuit with support inside (E - B) + b, signed + on b."""
        B = frozenset(B)
        if b not in B:
            raise ValueError(f"element {b} is not in the basis")
        allowed = (frozenset(self.elements) - B) | {b}
        for d in self.cocircuits:
            if b in d.support and d.support <= allowed:
                return d if d(b) > 0 else -d
        raise ValueError(f"no cocircuit inside complement + {b}")

    def fundamental_cocircuits(self, B: Iterable[int]) -> list[SignedSubset]:
        b = self._require_basis(B)
        return [self.fundamental_cocircuit(b, x) for x in b]

    def dual(self) -> "OrientedMatroid":
        return OrientedMatroid(self.ground_size, self.cocircuits, check=False)

    def is_loop(self, e: int) -> bool:
        return frozenset({e}) in self.circuit_supports()

    def is_coloop(self, e: int) -> bool:
        return not any(e in s for s in self.circuit_supports())

    def _renumber_without(self, e: int) -> dict[int, int]:
        return {x: (x if x < e else x - 1) for x in self.elements if x != e}

    def _relabel(self, c: SignedSubset, renumber: dict[int, int]) -> SignedSubset:
        return SignedSubset(self.ground_size - 1,
                            frozenset(renumber[x] for x in c.positives if x in renumber),
                            frozenset(renumber[x] for x in c.negatives if x in renumber))

    def delete(self, e: int) -> "OrientedMatroid":
        self._check_element(e)
        ren = self._renumber_without(e)
        kept = [self._relabel(c, ren) for c in self.circuits if e not in c.support]
        return OrientedMatroid(self.ground_size - 1, kept, check=False)

    def contract(self, e: int) -> "OrientedMatroid":
        self._check_element(e)
        if self.is_loop(e):
            return self.delete(e)
        ren = self._renumber_without(e)
        restricted = {self._relabel(c, ren).canonical() for c in self.circuits}
        minimal = [c for c in restricted
                   if not any(d.support < c.support for d in restricted)]
        supports = {}
        for c in minimal:
            if c.support in supports and supports[c.support] != c:
                raise MatroidError(f"contraction yields two signings of support {sorted(c.support)}")
            supports[c.support] = c
        return OrientedMatroid(self.ground_size - 1, minimal, check=False)

    def _check_element(self, e: int):
        if not 1 <= e <= self.ground_size:
            raise ValueError(f"element {e} outside 1..{self.ground_size}")

    def reorient(self, elements: Iterable[int]) -> "OrientedMatroid":
        """Flip the sign of every circuit entry at the given elements."""
        flip = frozenset(elements)
        out = []
        for c in self.circuits:
            pos = (c.positives - flip) | (c.negatives & flip)
            neg = (c.negatives - flip) | (c.positives & flip)
            out.append(SignedSubset(self.ground_size, pos, neg))
        return OrientedMatroid(self.ground_size, out, check=False)


def direct_sum(m1: OrientedMatroid, m2: OrientedMatroid) -> OrientedMatroid:
    n = m1.ground_size + m2.ground_size
    shift = m1.ground_size
    circuits = [SignedSubset(n, c.positives, c.negatives) for c in m1.circuits]
    circuits += [SignedSubset(n, {x + shift for x in c.positives}, {x + shift for x in c.negatives})
                 for c in m2.circuits]
    return OrientedMatroid(n, circuits, check=False)


def is_independent(M: OrientedMatroid, S: Iterable[int]) -> bool:
    return M.is_independent(S)


def enumerate_bases(M: OrientedMatroid) -> tuple[tuple[int, ...], ...]:
    return M.bases


def fundamental_circuit(M: OrientedMatroid, B, e: int) -> SignedSubset:
    return M.fundamental_circuit(B, e)


def fundamental_circuits(M: OrientedMatroid, B) -> list[SignedSubset]:
    return M.fundamental_circuits(B)


def cocircuits(M: OrientedMatroid) -> tuple[SignedSubset, ...]:
    return M.cocircuits


def dual(M: OrientedMatroid) -> OrientedMatroid:
    return M.dual()


def delete(M: OrientedMatroid, e: int) -> OrientedMatroid:
    return M.delete(e)


def contract(M: OrientedMatroid, e: int) -> OrientedMatroid:
    return M.contract(e)
