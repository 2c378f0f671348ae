import random
from itertools import combinations

import pytest
import sympy

from corpus import acceptance_corpus, nonregular_labels
from regmat.ingest import DirectedGraph, from_graph, from_matrix, named
from regmat.jacobian import jacobian
from regmat.matroid import OrientedMatroid, direct_sum
from regmat.regularity import (InconsistencyError, analyze, basis_circuit_lattice, binary_circuit_supports,
                               build_candidate_matrix, circuit_lattice, independent_circuit_set,
                               is_binary_and_orientable, is_regular_by_lattice_equality, is_regular_by_rank,
                               is_regular_by_tu, is_totally_unimodular, minors_sweep, rho, tu_construction)
from regmat.signed import SignedSubset

CORPUS = acceptance_corpus()
K4_INCIDENCE = DirectedGraph(4, tuple(combinations(range(1, 5), 2))).incidence_matrix()


def tu_bruteforce(rows):
    """Independent TU oracle: sympy determinants of every square submatrix."""
    A = sympy.Matrix(rows)
    m, n = A.shape
    return all(A.extract(list(R), list(C)).det() in (-1, 0, 1)
               for k in range(1, min(m, n) + 1)
               for R in combinations(range(m), k) for C in combinations(range(n), k))


def test_circuit_lattice_ranks():
    assert circuit_lattice(named("U24")).rank == 4
    assert circuit_lattice(named("K3")).rank == 1
    assert circuit_lattice(named("K4")).rank == 3 == named("K4").corank


def test_basis_lattices():
    U = named("U24")
    assert basis_circuit_lattice(U, (1, 2)) != basis_circuit_lattice(U, (3, 4))
    K4 = named("K4")
    assert len(K4.bases) == 16
    assert len({basis_circuit_lattice(K4, B) for B in K4.bases}) == 1


@pytest.mark.parametrize("label, M", CORPUS, ids=[c[0] for c in CORPUS])
def test_basis_lattice_rank_is_corank(label, M):
    for B in M.bases:
        assert basis_circuit_lattice(M, B).rank == M.corank


def test_rho_examples():
    assert rho(named("U24")) == 2
    assert rho(named("K4")) == 0
    assert rho(direct_sum(named("U24"), named("U24"))) == 4


def test_lattice_equality_decider():
    assert is_regular_by_lattice_equality(named("K3")) == (True, None)
    ok, w = is_regular_by_lattice_equality(named("U24"))
    assert not ok
    U = named("U24")
    assert not basis_circuit_lattice(U, w.basis).contains(w.circuit.vector())
    e = next(iter(w.circuit.support - set(w.other_basis)))
    assert U.fundamental_circuit(w.other_basis, e) in (w.circuit, -w.circuit)
    free = from_matrix([[1, 0], [0, 1]])
    assert is_regular_by_lattice_equality(free) == (True, None)


def test_rank_decider():
    assert not is_regular_by_rank(named("U24"))
    assert is_regular_by_rank(named("K4"))
    loop = named("loop")
    assert is_regular_by_rank(loop) and loop.corank == 1 and circuit_lattice(loop).rank == 1


def test_independent_circuit_certificate():
    U = named("U24")
    cs = independent_circuit_set(U)
    assert len(cs) == U.corank + 2
    assert sympy.Matrix([c.vector() for c in cs]).rank() == len(cs)


def test_candidate_matrix_k3():
    K3 = from_graph(DirectedGraph(3, ((1, 2), (2, 3), (1, 3))))
    A = build_candidate_matrix(K3, (1, 2))
    ker = sympy.Matrix(A.to_int_rows()).nullspace()
    assert len(ker) == 1
    assert SignedSubset.from_vector(list(ker[0])).canonical() == K3.circuits[0]


def test_candidate_matrix_u24():
    U = named("U24")
    A = build_candidate_matrix(U, (1, 2))
    rows = A.to_int_rows()
    assert rows[0][:2] == [1, 0] and rows[1][:2] == [0, 1]
    assert all(x in (-1, 0, 1) for r in rows for x in r)
    for c in U.fundamental_circuits((1, 2)):
        assert all(sum(a * x for a, x in zip(r, c.vector())) == 0 for r in rows)


def test_candidate_matrix_free():
    free = from_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert build_candidate_matrix(free, (1, 2, 3)).to_int_rows() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    with pytest.raises(ValueError):
        build_candidate_matrix(named("U24"), (1, 2, 3))


def test_tu_examples():
    assert is_totally_unimodular(K4_INCIDENCE) == (True, None)
    ok, w = is_totally_unimodular([[1, 1], [-1, 1]])
    assert not ok and (w.rows, w.cols, w.determinant) == ((1, 2), (1, 2), 2)
    ok, w = is_totally_unimodular([[2]])
    assert not ok and w.determinant == 2


def test_tu_matches_oracle_on_random_matrices():
    rng = random.Random(11)
    for _ in range(150):
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        A = [[rng.choice((-1, 0, 0, 1)) for _ in range(n)] for _ in range(m)]
        assert is_totally_unimodular(A)[0] == tu_bruteforce(A)


def test_tu_decider():
    assert is_regular_by_tu(named("K4"))
    assert is_regular_by_tu(named("K3"))
    res = tu_construction(named("U24"))
    assert not res.regular and not res.circuits_match


def test_binary_decider():
    assert is_binary_and_orientable(named("K4"))
    assert not is_binary_and_orientable(named("U24"))
    # [I2 | all ones] over GF(2): columns 3 and 4 are parallel
    assert frozenset({3, 4}) in binary_circuit_supports(named("U24"))
    assert is_binary_and_orientable(named("U12"))


def test_analyze_examples():
    rep = analyze(named("U24"))
    assert rep.verdicts == dict.fromkeys(rep.verdicts, False) and len(rep.verdicts) == 4
    assert rep.rho == 2 and rep.lattice_witness is not None
    rep = analyze(named("K4"))
    assert all(rep.verdicts.values()) and rep.rho == 0
    assert not any(analyze(named("U24").dual()).verdicts.values())


def test_analyze_single_method():
    rep = analyze(named("U24"), ["tu"])
    assert list(rep.verdicts) == ["tu_construction"]
    with pytest.raises(ValueError):
        analyze(named("U24"), ["nope"])


@pytest.mark.parametrize("label, M", CORPUS, ids=[c[0] for c in CORPUS])
def test_decider_properties(label, M):
    rep = analyze(M)  # raises InconsistencyError on disagreement
    assert rep.regular == (label not in nonregular_labels())
    assert rep.rho >= 0 and (rep.rho == 0) == rep.regular
    if not rep.regular:
        assert rep.rho >= 2
    # the verdict does not depend on the basis chosen for the candidate matrix
    if len(M.bases) > 1:
        B1 = M.bases[-1]
        assert is_regular_by_tu(M, B1) == rep.regular
        assert is_binary_and_orientable(M, B1) == rep.regular
    if rep.tu.totally_unimodular:
        A = rep.tu.matrix
        for B in combinations(range(A.cols), A.rows):
            d = sympy.Matrix(A.columns(B).to_int_rows()).det() if A.rows else 1
            assert d in (-1, 0, 1)
            # for U24 the TU candidate realizes a different matroid, so only
            # regular members have their own bases nonsingular in A
            if rep.regular and M.is_basis([b + 1 for b in B]):
                assert abs(d) == 1
    # corpus observation, not a theorem
    assert rho(M.dual()) == rep.rho


@pytest.mark.parametrize("label, M", CORPUS[:30], ids=[c[0] for c in CORPUS[:30]])
def test_reorientation_invariance(label, M):
    rng = random.Random(label)
    flip = {e for e in M.elements if rng.random() < 0.5}
    R = M.reorient(flip)
    assert rho(R) == rho(M)
    assert analyze(R).verdicts == analyze(M).verdicts
    assert jacobian(R).orders == jacobian(M).orders


def test_tu_matrices_give_regular_matroids():
    mats = [K4_INCIDENCE.to_int_rows(), [[1, 0, 1, 1], [0, 1, 1, 0]], [[1, 0, 0, 1, 1], [0, 1, 0, 1, 0], [0, 0, 1, 0, -1]],
            [[1, 1, 0, 0, 1], [0, 1, 1, 0, 1], [0, 0, 1, 1, 1]]]
    for rows in mats:
        assert tu_bruteforce(rows)
        rep = analyze(from_matrix(rows))
        assert rep.regular and rep.rho == 0


def test_minors_sweep_examples():
    sweep = minors_sweep(named("U24"))
    assert sweep.ok and all(r.rho_deleted == 0 and r.rho_contracted == 0 for r in sweep.rows)
    assert all(r.rho == 0 for r in minors_sweep(named("K4")).rows)
    UU = direct_sum(named("U24"), named("U24"))
    rows = minors_sweep(UU).rows
    assert all(r.rho_deleted in (2, 4) and r.rho_contracted in (2, 4) for r in rows)


def test_disagreement_raises(monkeypatch):
    import regmat.regularity as reg
    monkeypatch.setattr(reg, "is_binary_and_orientable", lambda M: True)
    with pytest.raises(InconsistencyError):
        analyze(named("U24"))


def test_empty_ground_set_minor():
    M = OrientedMatroid(0, [])
    assert rho(M) == 0


def test_u24_candidate_matrices_by_basis():
    U = named("U24")
    tu = {B: is_totally_unimodular(build_candidate_matrix(U, B)) for B in U.bases}
    for B in ((1, 4), (2, 3)):
        ok, w = tu[B]
        assert not ok and abs(w.determinant) == 2
        assert abs(sympy.Matrix(build_candidate_matrix(U, B).to_int_rows()).extract(
            [r - 1 for r in w.rows], [c - 1 for c in w.cols]).det()) == 2
    # the TU candidates realize a different matroid, so the decider still rejects
    for B, (ok, _) in tu.items():
        res = tu_construction(U, B)
        assert res.totally_unimodular == ok and not res.regular
        if ok:
            assert not res.circuits_match and res.missing_circuits
