"""Exact regularity testing for oriented matroids via circuit lattices."""

from .exact import ExactMatrix
from .ingest import DirectedGraph, from_circuit_file, from_graph, from_matrix, named
from .jacobian import JacobianReport, basis_cocircuit_lattice, isomorphic_invariants, jacobian
from .lattice import IntegerLattice, QuotientInvariants, hnf, snf
from .matroid import MatroidError, OrientedMatroid, direct_sum
from .regularity import (RegularityReport, analyze, build_candidate_matrix, circuit_lattice,
                         basis_circuit_lattice, is_totally_unimodular, minors_sweep, rho)
from .signed import AxiomReport, SignedSubset, verify_circuit_axioms

__version__ = "0.1.0"
