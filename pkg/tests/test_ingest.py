from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from corpus import connected_multigraphs, connected_simple_graphs, cycles_bruteforce, graph_of
from regmat.ingest import (CATALOG, DirectedGraph, InputFormatError, from_circuit_file, from_graph,
                           from_matrix, load, named, parse_graph, parse_matrix)
from regmat.matroid import MatroidError
from regmat.signed import CircuitFormatError, SignedSubset, verify_circuit_axioms

U24_TEXT = "4 4\n+1 +2 -3\n+1 +2 -4\n+1 -3 +4\n+2 +3 -4\n"


def S(n, *signed):
    return SignedSubset.from_signs(n, {abs(x): (1 if x > 0 else -1) for x in signed})


def test_from_matrix_u24():
    M = from_matrix([[1, 0, 1, 1], [0, 1, 1, 2]])
    assert M.circuit_supports() == {frozenset(s) for s in combinations(range(1, 5), 3)}
    # support {1,2,3}: column1 + column2 = column3
    assert S(4, 1, 2, -3) in M.circuits
    # support {1,3,4}: 1*c1 - 2*c3 + c4 = 0
    assert S(4, 1, -3, 4) in M.circuits


def test_from_matrix_small():
    assert from_matrix([[1, 1]]).circuits == (S(2, 1, -2),)
    assert from_matrix([[1, 0], [0, 1]]).circuits == ()
    zero = from_matrix([[0, 0]])
    assert zero.rank == 0 and zero.circuits == (S(2, 1), S(2, 2))


def test_rational_entries():
    M = from_matrix([[Fraction(1, 2), Fraction(-1, 3)]])
    assert M.circuits == (S(2, 1, 2),)


def test_from_graph_examples():
    K3 = from_graph(DirectedGraph(3, ((1, 2), (2, 3), (1, 3))))
    assert K3.circuits == (S(3, 1, 2, -3),)
    assert from_graph(DirectedGraph(2, ((1, 2), (1, 2)))).circuits == (S(2, 1, -2),)
    assert from_graph(DirectedGraph(1, ((1, 1),))).circuits == (S(1, 1),)


def test_from_circuit_file():
    K3 = from_circuit_file("3 1\n+1 +2 -3")
    assert K3.circuits == (S(3, 1, 2, -3),) and K3.rank == 2
    assert from_circuit_file(U24_TEXT) == named("U24")
    with pytest.raises(CircuitFormatError):
        from_circuit_file("3 1\n+1 -1 +2")


def test_circuit_file_with_explicit_negations():
    full = "4 8\n" + "".join(f"{c}\n{-c}\n" for c in named("U24").circuits)
    assert from_circuit_file(full) == named("U24")
    lines = full.splitlines()
    missing = "4 7\n" + "\n".join(lines[1:-1]) + "\n"
    with pytest.raises(MatroidError) as info:
        from_circuit_file(missing)
    report = info.value.report
    assert 2 in report.axioms_failed()
    # the last line held the negation of the last canonical circuit
    assert dict(report.violations)[2] == (named("U24").circuits[-1],)


def test_circuit_file_axiom4_failure():
    text = "4 4\n+1 +2 +3\n+1 +2 -4\n+1 -3 +4\n+2 +3 -4\n"
    with pytest.raises(MatroidError) as info:
        from_circuit_file(text)
    assert 4 in info.value.report.axioms_failed()


def test_named_catalog():
    U = named("U24")
    assert (U.rank, U.corank, len(U.circuits)) == (2, 2, 4)
    K4 = named("K4")
    assert (K4.rank, K4.corank, len(K4.circuits)) == (3, 3, 7)
    assert sorted(len(c.support) for c in K4.circuits) == [3, 3, 3, 3, 4, 4, 4]
    loop = named("loop")
    assert loop.ground_size == 1 and loop.circuits == (S(1, 1),)
    assert named("coloop").circuits == () and named("coloop").rank == 1
    with pytest.raises(KeyError, match="catalog"):
        named("Fano")


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_passes_axioms(name):
    assert verify_circuit_axioms(named(name).all_circuits()).passed


GRAPHS = connected_simple_graphs(5)


@pytest.mark.parametrize("g", GRAPHS, ids=[str(g[1]) for g in GRAPHS])
def test_graph_circuits_are_cycles(g):
    G = graph_of(g)
    M = from_graph(G)
    assert M.circuit_supports() == cycles_bruteforce(G)
    assert M.rank == G.vertex_count - G.component_count()
    assert verify_circuit_axioms(M.all_circuits()).passed


def test_graph_rank_with_components():
    G = DirectedGraph(5, ((1, 2), (3, 4), (4, 5), (3, 5)))
    assert from_graph(G).rank == 5 - 2


small_matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_random_matrices(A):
    M = from_matrix(A)
    assert M.rank == sympy.Matrix(A).rank()
    assert verify_circuit_axioms(M.all_circuits()).passed
    # every circuit's sign vector is a kernel direction up to positive scaling of entries
    for c in M.circuits:
        cols = sorted(c.support)
        sub = sympy.Matrix(A).extract(list(range(len(A))), [e - 1 for e in cols])
        ker = sub.nullspace()
        assert len(ker) == 1
        signs = [int(sympy.sign(x)) for x in ker[0]]
        pattern = dict(zip(cols, signs))
        assert SignedSubset.from_signs(M.ground_size, pattern).canonical() == c


def test_parse_matrix_file():
    A = parse_matrix("# U24\n2 4\n1 0 1 1\n0 1 1 2\n")
    assert A.rows == 2 and A.cols == 4
    B = parse_matrix("1 2\n1/2 -3/4")
    assert B.entries == ((Fraction(1, 2), Fraction(-3, 4)),)
    with pytest.raises(InputFormatError):
        parse_matrix("2 2\n1 0\n")
    with pytest.raises(InputFormatError):
        parse_matrix("1 2\n1 x\n")


def test_parse_graph_file():
    G = parse_graph("3 3\n1 2\n2 3\n1 3")
    assert G.edges == ((1, 2), (2, 3), (1, 3))
    with pytest.raises(InputFormatError):
        parse_graph("2 1\n1 3\n")


def test_load_from_disk(tmp_path):
    p = tmp_path / "k3.graph"
    p.write_text("3 3\n1 2\n2 3\n1 3\n")
    assert load(str(p), "graph").rank == 2


def test_multigraph_enumeration_counts():
    # connected multigraphs with loops, by edge count
    from collections import Counter
    counts = Counter(len(g[1]) for g in connected_multigraphs(5))
    assert [counts[k] for k in range(1, 6)] == [2, 4, 11, 30, 95]


@pytest.mark.parametrize("g", connected_multigraphs(4), ids=[str(g[1]) for g in connected_multigraphs(4)])
def test_multigraph_circuits_are_cycles(g):
    G = graph_of(g)
    assert from_graph(G).circuit_supports() == cycles_bruteforce(G)
