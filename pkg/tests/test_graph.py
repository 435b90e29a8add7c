import math

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fixtures import dag_path, digon_dup, loop1, t3, two_triangles
from strategies import multidigraphs
from tightcut.errors import GraphDomainError
from tightcut.graph import (
    INFINITE,
    MultiDigraph,
    antiparallel_bundle,
    check_weights,
    cyclic_arcs,
    is_acyclic,
    parallel_bundle,
    reaches,
    scc_local,
    strongly_connected_components,
    topological_order,
    total_weight,
    verify_feedback,
    verify_feedback_vertices,
)


def to_nx(g: MultiDigraph) -> nx.MultiDiGraph:
    h = nx.MultiDiGraph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.arc_pairs())
    return h


# -- construction and views -------------------------------------------------


def test_parallel_arcs_keep_identity():
    g = digon_dup()
    assert g.arcs == (0, 1, 2)
    assert g.endpoints(0) == g.endpoints(1) == (0, 1)
    assert g.n_arcs == 3 and g.n_vertices == 2


def test_loops_are_ordinary_arcs():
    g = loop1()
    assert g.is_loop(0)
    assert g.loops() == (0,)
    assert g.out_arcs(1) == g.in_arcs(1) == (0,)


def test_negative_vertex_rejected():
    with pytest.raises(GraphDomainError):
        MultiDigraph([(0, -1)])


def test_unknown_ids_raise_domain_error():
    g = t3()
    with pytest.raises(GraphDomainError):
        g.tail(7)
    with pytest.raises(GraphDomainError):
        g.out_arcs(42)
    with pytest.raises(GraphDomainError):
        g.remove_arcs([9])


def test_deletion_keeps_ids_and_endpoints():
    g = t3()
    h = g.remove_arcs([1])
    assert h.arcs == (0, 2)
    assert h.endpoints(2) == g.endpoints(2) == (3, 1)
    assert not h.has_arc(1)
    assert g.has_arc(1)  # the original is untouched


def test_vertex_deletion_removes_incident_arcs():
    g = t3().remove_vertices([2])
    assert g.vertices == (1, 3)
    assert g.arcs == (2,)


def test_vertex_subgraph_and_arc_subgraph():
    g = two_triangles()
    assert g.vertex_subgraph([0, 1, 2]).arcs == (0, 1, 2)
    sub = g.arc_subgraph([3, 4])
    assert sub.arcs == (3, 4)
    assert set(sub.vertices) == {3, 4, 5}


def test_equality_is_structural():
    assert t3() == MultiDigraph([(1, 2), (2, 3), (3, 1)])
    assert t3() != MultiDigraph([(1, 2), (2, 3)])
    assert hash(t3()) == hash(MultiDigraph([(1, 2), (2, 3), (3, 1)]))


def test_degrees():
    g = digon_dup()
    assert g.out_degree(0) == 2 and g.in_degree(0) == 1
    assert g.max_degree() == 3


# -- bundles ------------------------------------------------------------------


def test_parallel_bundle_examples():
    assert parallel_bundle(t3(), 0) == {0}
    assert parallel_bundle(digon_dup(), 0) == {0, 1}
    assert parallel_bundle(loop1(), 0) == {0}


def test_antiparallel_bundle():
    assert antiparallel_bundle(digon_dup(), 0) == {2}
    assert antiparallel_bundle(digon_dup(), 2) == {0, 1}
    assert antiparallel_bundle(t3(), 0) == frozenset()


def test_parallel_bundle_unknown_arc():
    with pytest.raises(GraphDomainError):
        parallel_bundle(t3(), 5)


@given(multidigraphs())
def test_parallel_bundle_is_equivalence(g):
    for e in g.arcs:
        be = parallel_bundle(g, e)
        assert e in be
        for f in g.arcs:
            assert (f in be) == (e in parallel_bundle(g, f))


# -- acyclicity and SCC -------------------------------------------------------


def test_is_acyclic_examples():
    assert is_acyclic(MultiDigraph())
    assert not is_acyclic(t3())
    assert not is_acyclic(loop1())
    assert is_acyclic(dag_path())


def test_scc_examples():
    assert strongly_connected_components(t3()) == [frozenset({1, 2, 3})]
    assert strongly_connected_components(dag_path()) == [frozenset({1}), frozenset({2}), frozenset({3})]
    assert strongly_connected_components(two_triangles()) == [frozenset({0, 1, 2}), frozenset({3, 4, 5})]


@given(multidigraphs(max_vertices=8, max_arcs=16))
def test_scc_matches_networkx(g):
    ours = set(strongly_connected_components(g))
    ref = {frozenset(c) for c in nx.strongly_connected_components(to_nx(g))}
    assert ours == ref


@given(multidigraphs(max_vertices=8, max_arcs=16))
def test_acyclic_iff_singleton_sccs_and_no_loops(g):
    expected = all(len(c) == 1 for c in strongly_connected_components(g)) and not g.loops()
    assert is_acyclic(g) == expected
    assert is_acyclic(g) == nx.is_directed_acyclic_graph(to_nx(g))


@given(multidigraphs(max_vertices=8, max_arcs=16))
def test_topological_order_respects_arcs(g):
    order = topological_order(g)
    if order is None:
        assert not is_acyclic(g)
        return
    pos = {v: i for i, v in enumerate(order)}
    assert all(pos[g.tail(a)] < pos[g.head(a)] for a in g.arcs)


def test_scc_sparse_path_matches_small_path():
    # above the threshold the sparse-matrix implementation is used
    import numpy as np

    rng = np.random.default_rng(3)
    n = 400
    tails = rng.integers(n, size=2500).tolist()
    heads = rng.integers(n, size=2500).tolist()
    sparse = scc_local(n, tails, heads)
    ref = {frozenset(c) for c in nx.strongly_connected_components(nx.DiGraph(list(zip(tails, heads))))}
    groups: dict[int, set[int]] = {}
    for v, lab in enumerate(sparse):
        groups.setdefault(lab, set()).add(v)
    touched = set(tails) | set(heads)
    got = {frozenset(c) for c in groups.values() if c & touched}
    assert got == ref


@given(multidigraphs(max_vertices=8, max_arcs=16))
def test_cyclic_arcs_are_those_on_some_cycle(g):
    h = to_nx(g)
    on_cycle = set()
    for a in g.arcs:
        u, v = g.endpoints(a)
        if u == v or nx.has_path(h, v, u):
            on_cycle.add(a)
    assert set(cyclic_arcs(g)) == on_cycle


# -- reachability -------------------------------------------------------------


def test_reaches_examples():
    g = t3()
    assert reaches(g, 1, 3)
    assert not reaches(g, 1, 3, {1})
    assert reaches(loop1(), 1, 1)


def test_reaches_unknown_vertex():
    with pytest.raises(GraphDomainError):
        reaches(t3(), 1, 9)


@given(multidigraphs(max_vertices=6, max_arcs=12), st.data())
def test_reaches_matches_networkx_and_is_monotone(g, data):
    s = data.draw(st.sampled_from(g.vertices))
    t = data.draw(st.sampled_from(g.vertices))
    forbidden = set(data.draw(st.lists(st.sampled_from(g.arcs), max_size=4))) if g.arcs else set()
    h = to_nx(g.remove_arcs(forbidden))
    assert reaches(g, s, t, forbidden) == nx.has_path(h, s, t)
    if not reaches(g, s, t, forbidden) and g.arcs:
        extra = data.draw(st.sampled_from(g.arcs))
        assert not reaches(g, s, t, forbidden | {extra})


# -- weights and verification -------------------------------------------------


def test_total_weight_and_unit_default():
    assert total_weight(None, [0, 2]) == 2.0
    assert total_weight({0: 2.5, 1: 1.0}, [0, 1]) == 3.5


def test_check_weights_rejects_nonpositive_and_missing():
    g = t3()
    with pytest.raises(GraphDomainError):
        check_weights({0: 1.0, 1: 0.0, 2: 1.0}, g.arcs)
    with pytest.raises(GraphDomainError):
        check_weights({0: 1.0}, g.arcs)
    with pytest.raises(GraphDomainError):
        check_weights({0: 1.0, 1: math.nan, 2: 1.0}, g.arcs)
    check_weights({0: 1.0, 1: INFINITE, 2: 1.0}, g.arcs)


def test_verify_feedback_examples():
    g = t3()
    assert verify_feedback(g, {0})
    assert not verify_feedback(g, set())
    with pytest.raises(GraphDomainError):
        verify_feedback(g, {8})


def test_verify_feedback_vertices():
    assert verify_feedback_vertices(t3(), {2})
    assert not verify_feedback_vertices(two_triangles(), {0})
