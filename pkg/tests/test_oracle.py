import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fixtures import arcs, dag_path, g1, g2, loop1, t3, two_triangles
from oracles import brute_fas, brute_fvs
from strategies import multidigraphs, weighted_multidigraphs
from tightcut.errors import ResourceLimitError, SolverTimeout
from tightcut.generators import gen_tournament
from tightcut.graph import MultiDigraph, is_acyclic, parallel_bundle, verify_feedback
from tightcut.oracle import exact_fas, exact_fvs, greedy_removal


def test_exact_fas_examples():
    assert exact_fas(t3()).optimum == 1
    assert exact_fas(two_triangles()).optimum == 2
    assert exact_fas(g2()).optimum == 3
    assert exact_fas(dag_path()).optimum == 0


def test_g1_optimum_by_subset_enumeration():
    g = g1()
    res = exact_fas(g)
    assert res.optimum == 3 and verify_feedback(g, res.one_solution)
    assert not any(verify_feedback(g, s) for s in itertools.combinations(g.arcs, 2))
    assert verify_feedback(g, arcs("adg"))


def test_exact_fvs_examples():
    assert exact_fvs(t3()).optimum == 1
    assert exact_fvs(loop1(), {1: 4.0}).optimum == 4.0
    star = MultiDigraph([(0, v) for v in (1, 2, 3)] + [(v, 0) for v in (1, 2, 3)])
    res = exact_fvs(star)
    assert res.optimum == 1 and res.one_solution == {0}
    assert brute_fvs(star) == 1


@given(weighted_multidigraphs(max_vertices=5, max_arcs=8))
def test_exact_fas_matches_subset_enumeration(gw):
    g, w = gw
    best, sols = brute_fas(g, w)
    res = exact_fas(g, w, all_solutions=True)
    assert res.optimum == best
    assert set(res.all_solutions) == set(sols)
    assert len(res.all_solutions) == len(set(res.all_solutions))
    assert exact_fas(g, w).optimum == best
    assert verify_feedback(g, res.one_solution)


@given(weighted_multidigraphs(max_vertices=6, max_arcs=10))
def test_every_minimum_contains_whole_bundles(gw):
    g, w = gw
    res = exact_fas(g, w, all_solutions=True)
    for sol in res.all_solutions:
        assert sum(w[a] for a in sol) == res.optimum
        for a in sol:
            assert parallel_bundle(g, a) <= sol


@given(multidigraphs(max_vertices=6, max_arcs=10))
def test_exact_fvs_matches_subset_enumeration(g):
    psi = {v: float(1 + v % 3) for v in g.vertices}
    res = exact_fvs(g, psi)
    assert res.optimum == brute_fvs(g, psi)
    assert is_acyclic(g.remove_vertices(res.one_solution))


@given(weighted_multidigraphs(max_vertices=6, max_arcs=11), st.randoms(use_true_random=False))
def test_optimum_invariant_under_relabelling(gw, rnd):
    g, w = gw
    verts = list(g.vertices)
    image = verts[:]
    rnd.shuffle(image)
    vmap = dict(zip(verts, (100 + x for x in image)))
    order = list(g.arcs)
    rnd.shuffle(order)
    h = MultiDigraph([(vmap[g.tail(a)], vmap[g.head(a)]) for a in order], vertices=vmap.values())
    hw = {i: w[a] for i, a in enumerate(order)}
    assert exact_fas(h, hw).optimum == exact_fas(g, w).optimum


def test_budget_and_deadline():
    with pytest.raises(ResourceLimitError):
        exact_fas(t3(), budget=1)
    with pytest.raises(ResourceLimitError):
        exact_fvs(t3(), budget=1)
    big = gen_tournament(14, seed=3).graph
    with pytest.raises(SolverTimeout):
        exact_fas(big, time_limit=0.0)


# -- greedy removal -----------------------------------------------------------


def ref_greedy_removal(g: MultiDigraph) -> frozenset[int]:
    """Same sequence rule, one vertex at a time, recomputing degrees from scratch."""
    alive = set(g.vertices)
    front, back = [], []

    def deg(v):
        out = sum(1 for a in g.out_arcs(v) if g.head(a) in alive and g.head(a) != v)
        inn = sum(1 for a in g.in_arcs(v) if g.tail(a) in alive and g.tail(a) != v)
        return out, inn

    while alive:
        sinks = sorted(v for v in alive if deg(v)[0] == 0)
        sources = sorted(v for v in alive if deg(v)[1] == 0)
        if sinks:
            v = sinks[0]
            back.append(v)
        elif sources:
            v = sources[0]
            front.append(v)
        else:
            v = min(alive, key=lambda x: (deg(x)[1] - deg(x)[0], x))
            front.append(v)
        alive.discard(v)
    pos = {v: i for i, v in enumerate(front + back[::-1])}
    return frozenset(a for a in g.arcs if pos[g.tail(a)] >= pos[g.head(a)])


def test_greedy_removal_examples():
    assert greedy_removal(dag_path()) == frozenset()
    assert len(greedy_removal(t3())) == 1
    assert len(greedy_removal(two_triangles())) == 2
    assert greedy_removal(loop1()) == {0}


@given(multidigraphs(max_vertices=8, max_arcs=16))
def test_greedy_removal_matches_reference_and_is_sound(g):
    out = greedy_removal(g)
    assert out == ref_greedy_removal(g)
    assert verify_feedback(g, out)
    assert set(g.loops()) <= out
    assert len(out) >= exact_fas(g).optimum
