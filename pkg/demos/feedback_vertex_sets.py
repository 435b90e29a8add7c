"""Feedback vertex sets through the dual digraph.

Every vertex v becomes a gadget u_v -> w_v whose arc carries the vertex
weight, and all other arcs are uncuttable.  A feedback arc set of the dual
is then a feedback vertex set of the original graph.

Run:  python3 demos/feedback_vertex_sets.py
"""

from tightcut import (
    MultiDigraph,
    dual_graph,
    enumerate_elementary_cycles,
    exact_fvs,
    solve_fvsp,
    verify_feedback_vertices,
)

# a hub with three digons plus a triangle through two leaves
g = MultiDigraph([(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0), (1, 2), (2, 3), (3, 1)])
psi = {0: 5.0, 1: 1.0, 2: 1.0, 3: 1.0}

dual = dual_graph(g, psi)
print("G :", g.n_vertices, "vertices,", g.n_arcs, "arcs,", len(enumerate_elementary_cycles(g)), "cycles")
print("G*:", dual.graph.n_vertices, "vertices,", dual.graph.n_arcs, "arcs,",
      len(enumerate_elementary_cycles(dual.graph)), "cycles")

nu, weight = solve_fvsp(g, psi)
print("TIGHT-CUT* on G* picks", sorted(nu), "weight", weight, "valid", verify_feedback_vertices(g, nu))
exact = exact_fvs(g, psi)
print("exact optimum", exact.optimum, "e.g.", sorted(exact.one_solution))
