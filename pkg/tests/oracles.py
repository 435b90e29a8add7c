"""Brute-force reference implementations used only by the tests.

Everything here works from the definitions (explicit cycle lists, subset
enumeration, literal reachability probes) and shares no code path with the
library beyond the graph container and cycle enumeration.
"""

from __future__ import annotations

import itertools

import networkx as nx

from tightcut.cycles import enumerate_elementary_cycles
from tightcut.graph import MultiDigraph, is_acyclic, parallel_bundle, reaches


def cycles_as_sets(g: MultiDigraph, limit: int = 100_000) -> list[frozenset[int]]:
    return [frozenset(c.arcs) for c in enumerate_elementary_cycles(g, limit)]


def brute_cover(g: MultiDigraph, e: int) -> frozenset[int]:
    bundle = parallel_bundle(g, e)
    out: set[int] = set()
    for c in cycles_as_sets(g):
        if c & bundle:
            out |= c
    return frozenset(out)


def brute_isolated(g: MultiDigraph, e: int) -> frozenset[int]:
    """Union of cycles through the bundle sharing no arc with any bundle-avoiding cycle."""
    bundle = parallel_bundle(g, e)
    cycles = cycles_as_sets(g)
    avoiding = [c for c in cycles if not c & bundle]
    out: set[int] = set()
    for c in cycles:
        if c & bundle and all(not (c & d) for d in avoiding):
            out |= c
    return frozenset(out)


def probe_cover(g: MultiDigraph, e: int) -> frozenset[int]:
    """Cycle cover via one literal pair of reachability probes per arc."""
    s, t = g.head(e), g.tail(e)
    bundle = parallel_bundle(g, e)
    if s == t:
        return bundle
    if not reaches(g, s, t):
        return frozenset()
    keep = []
    for j in g.arcs:
        if j in bundle:
            keep.append(j)
            continue
        tj, hj = g.tail(j), g.head(j)
        if tj == hj:
            continue
        ok1 = reaches(g, s, tj, g.out_arcs(hj)) if s != hj else tj == s
        ok2 = reaches(g, hj, t, g.in_arcs(tj)) if t != tj else hj == t
        if ok1 and ok2:
            keep.append(j)
    sub = g.arc_subgraph(keep)
    dg = nx.DiGraph()
    dg.add_nodes_from(sub.vertices)
    dg.add_edges_from(sub.arc_pairs())
    comp = next(c for c in nx.strongly_connected_components(dg) if s in c)
    if t not in comp:
        return frozenset()
    return frozenset(a for a in sub.arcs if sub.tail(a) in comp and sub.head(a) in comp)


def brute_fas(g: MultiDigraph, weights=None):
    """Minimum feedback arc set weight and all minimisers, by subset enumeration."""
    w = (lambda a: 1.0) if weights is None else (lambda a: weights[a])
    arcs = list(g.arcs)
    best = None
    sols = []
    for r in range(len(arcs) + 1):
        for sub in itertools.combinations(arcs, r):
            cost = sum(w(a) for a in sub)
            if best is not None and cost > best + 1e-9:
                continue
            if is_acyclic(g.remove_arcs(sub)):
                if best is None or cost < best - 1e-9:
                    best, sols = cost, [frozenset(sub)]
                else:
                    sols.append(frozenset(sub))
        if weights is None and best is not None:
            break
    return best, sols


def brute_fvs(g: MultiDigraph, weights=None) -> float:
    w = (lambda v: 1.0) if weights is None else (lambda v: weights[v])
    best = None
    vs = list(g.vertices)
    for r in range(len(vs) + 1):
        for sub in itertools.combinations(vs, r):
            cost = sum(w(v) for v in sub)
            if best is not None and cost >= best:
                continue
            if is_acyclic(g.remove_vertices(sub)):
                best = cost
    return best


def brute_min_cut(g: MultiDigraph, weights, s: int, t: int, max_size: int | None = None) -> float:
    arcs = list(g.arcs)
    best = float("inf")
    top = len(arcs) if max_size is None else max_size
    for r in range(top + 1):
        for sub in itertools.combinations(arcs, r):
            cost = sum(1.0 if weights is None else weights[a] for a in sub)
            if cost < best and not reaches(g, s, t, sub):
                best = cost
    return best
