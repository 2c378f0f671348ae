"""Candidate Jacobian groups Z^E/(L + L*), L#/L and L*#/L* of an oriented
matroid, compared against the number of bases."""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (IntegerLattice, QuotientInvariants, dual_lattice, gram_determinant,
                      lattice_from_vectors, quotient_invariants)
from .matroid import OrientedMatroid
from .regularity import basis_circuit_lattice, circuit_lattice


def basis_cocircuit_lattice(M: OrientedMatroid, B) -> IntegerLattice:
    return lattice_from_vectors(M.fundamental_cocircuits(B), M.ground_size)


def cocircuit_lattice(M: OrientedMatroid) -> IntegerLattice:
    return lattice_from_vectors(M.cocircuits, M.ground_size)


def dual_quotient(L: IntegerLattice) -> QuotientInvariants:
    """L#/L, taken inside the rational span of L. Its order is cross-checked
    against the Gram determinant."""
    q = quotient_invariants(dual_lattice(L), L)
    if L.rank and q.order != gram_determinant(L):
        raise ArithmeticError(f"order {q.order} of L#/L disagrees with Gram determinant "
                              f"{gram_determinant(L)}")
    return q


def isomorphic_invariants(a: QuotientInvariants, b: QuotientInvariants) -> bool:
    return a.free_rank == b.free_rank and a.nontrivial_factors() == b.nontrivial_factors()


@dataclass
class JacobianReport:
    basis: tuple[int, ...] | None
    circuit_lattice: IntegerLattice
    cocircuit_lattice: IntegerLattice
    quotient_zE: QuotientInvariants
    direct: bool
    quotient_circuit: QuotientInvariants
    quotient_cocircuit: QuotientInvariants
    num_bases: int

    @property
    def orders(self) -> tuple[int | None, int | None, int | None]:
        return (self.quotient_zE.order, self.quotient_circuit.order, self.quotient_cocircuit.order)

    @property
    def all_orders_equal_bases(self) -> bool:
        return all(o is not None and o == self.num_bases for o in self.orders)

    @property
    def lattices_used(self) -> str:
        return "global" if self.basis is None else f"basis {list(self.basis)}"


def jacobian(M: OrientedMatroid, B=None) -> JacobianReport:
    """With a basis B the per-basis lattices of B are used; otherwise the
    lattices spanned by all circuits and all cocircuits."""
    if B is not None:
        B = M._require_basis(B)
        lam = basis_circuit_lattice(M, B)
        lam_star = basis_cocircuit_lattice(M, B)
    else:
        lam = circuit_lattice(M)
        lam_star = cocircuit_lattice(M)
    total = lam + lam_star
    return JacobianReport(
        basis=B,
        circuit_lattice=lam,
        cocircuit_lattice=lam_star,
        quotient_zE=quotient_invariants(None, total),
        direct=lam.rank + lam_star.rank == total.rank,
        quotient_circuit=dual_quotient(lam),
        quotient_cocircuit=dual_quotient(lam_star),
        num_bases=len(M.bases),
    )
