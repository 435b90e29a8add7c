import math

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fixtures import digon_dup, t3
from oracles import brute_min_cut
from strategies import weighted_multidigraphs
from tightcut.errors import GraphDomainError
from tightcut.graph import INFINITE, MultiDigraph, reaches
from tightcut.maxflow import max_flow_value, min_st_cut


def _nx_flow(g, w, s, t):
    d = nx.DiGraph()
    d.add_nodes_from(g.vertices)
    for a in g.arcs:
        u, v = g.endpoints(a)
        if u == v:
            continue
        c = w[a] if w is not None else 1.0
        if d.has_edge(u, v):
            d[u][v]["capacity"] += c
        else:
            d.add_edge(u, v, capacity=c)
    return nx.maximum_flow_value(d, s, t)


def test_triangle_cut_is_source_side():
    res = min_st_cut(t3(), None, 2, 1)
    assert res.value == 1 and res.cut_arcs == {1}
    assert brute_min_cut(t3(), None, 2, 1, max_size=2) == 1


def test_digon_with_duplicate():
    res = min_st_cut(digon_dup(), None, 1, 0)
    assert res.value == 1 and res.cut_arcs == {2}
    assert min_st_cut(digon_dup(), None, 0, 1).value == 2  # parallels count separately


def test_infinite_path():
    g = MultiDigraph([(0, 1), (1, 2)])
    res = min_st_cut(g, {0: INFINITE, 1: INFINITE}, 0, 2)
    assert res.value == math.inf and not res.finite
    assert max_flow_value(g, {0: INFINITE, 1: INFINITE}, 0, 2) == math.inf


def test_infinite_arc_bypassed_by_finite_cut():
    g = MultiDigraph([(0, 1), (1, 2), (0, 2)])
    res = min_st_cut(g, {0: INFINITE, 1: 2.0, 2: 3.0}, 0, 2)
    assert res.value == 5.0 and res.cut_arcs == {1, 2}


def test_disconnected_is_zero():
    g = MultiDigraph([(1, 0)], vertices=[0, 1])
    res = min_st_cut(g, None, 0, 1)
    assert res.value == 0 and res.cut_arcs == frozenset()


def test_endpoint_errors():
    with pytest.raises(GraphDomainError):
        min_st_cut(t3(), None, 1, 1)
    with pytest.raises(GraphDomainError):
        min_st_cut(t3(), None, 1, 9)
    with pytest.raises(GraphDomainError):
        max_flow_value(t3(), None, 0, 1, arcs=[7])


def test_restricted_arcs():
    g = MultiDigraph([(0, 1), (0, 1), (0, 2), (2, 1)])
    assert min_st_cut(g, None, 0, 1).value == 3
    assert min_st_cut(g, None, 0, 1, arcs=[0, 2, 3]).value == 2


def test_limit_caps_flow():
    g = MultiDigraph([(0, 1)] * 5)
    assert max_flow_value(g, None, 0, 1) == 5
    assert max_flow_value(g, None, 0, 1, limit=2) == 2


@st.composite
def _instances(draw):
    g, w = draw(weighted_multidigraphs(max_vertices=6, max_arcs=10))
    if g.n_vertices < 2:
        g = MultiDigraph(g.arc_pairs(), vertices=list(g.vertices) + [max(g.vertices) + 1])
        w = {a: w.get(a, 1.0) for a in g.arcs}
    vs = list(g.vertices)
    s = draw(st.sampled_from(vs))
    t = draw(st.sampled_from([v for v in vs if v != s]))
    return g, w, s, t


@given(_instances())
def test_cut_matches_independent_max_flow(inst):
    g, w, s, t = inst
    res = min_st_cut(g, w, s, t)
    assert res.value == pytest.approx(_nx_flow(g, w, s, t))
    assert max_flow_value(g, w, s, t) == pytest.approx(res.value)


@given(_instances())
def test_cut_is_minimum_separator(inst):
    g, w, s, t = inst
    res = min_st_cut(g, w, s, t)
    assert not reaches(g, s, t, res.cut_arcs)
    assert res.value == pytest.approx(sum(w[a] for a in res.cut_arcs))
    if g.n_arcs <= 8:
        assert res.value == pytest.approx(brute_min_cut(g, w, s, t))
    for a in res.cut_arcs:
        assert reaches(g, s, t, res.cut_arcs - {a})


@given(_instances())
def test_cut_is_deterministic(inst):
    g, w, s, t = inst
    assert min_st_cut(g, w, s, t) == min_st_cut(g, w, s, t)
