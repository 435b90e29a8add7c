"""Weight-preserving reductions between feedback arc and vertex set problems.

``line_graph`` turns arcs into vertices (FASP on ``G`` becomes FVSP on
``L(G)``).  ``dual_graph`` splits every vertex ``v`` into a gadget
``u_v -> w_v`` whose single finite arc ``f_v`` carries ``psi(v)``, so FVSP on
``G`` becomes FASP on ``G*``.  Both preserve elementary cycles one to one.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass

from .errors import TightCutError
from .graph import INFINITE, MultiDigraph, arc_weight, check_weights, total_weight
from .solver import FeedbackResult, SolverConfig, tight_cut_star


@dataclass(frozen=True)
class LineGraphResult:
    """``graph`` has one vertex per arc of the source graph (same id)."""

    graph: MultiDigraph
    vertex_of: dict[int, int]
    psi_l: dict[int, float]


@dataclass(frozen=True)
class DualGraphResult:
    """Dual digraph with gadget bookkeeping.

    ``f_arc_of[v]`` is the finite arc of ``v``'s gadget; ``gadget_of[v]`` is
    the pair ``(u_v, w_v)``.  Arc-vertices keep the original arc ids.
    """

    graph: MultiDigraph
    f_arc_of: dict[int, int]
    weights: dict[int, float]
    gadget_of: dict[int, tuple[int, int]]

    def vertex_of_arc(self) -> dict[int, int]:
        """Inverse of ``f_arc_of``."""
        return {a: v for v, a in self.f_arc_of.items()}


def line_graph(g: MultiDigraph, weights: Mapping[int, float] | None = None) -> LineGraphResult:
    """Directed line graph: arc ``(e, f)`` whenever ``head(e) == tail(f)``.

    A loop is consecutive with itself and yields a self-arc.
    """
    check_weights(weights, g.arcs)
    tail, head = g._tail, g._head
    out = g._adjacency()[0]
    pairs = [(e, f) for e in g.arcs for f in out[head[e]]]
    lg = MultiDigraph(pairs, vertices=g.arcs)
    return LineGraphResult(
        graph=lg,
        vertex_of={e: e for e in g.arcs},
        psi_l={e: arc_weight(weights, e) for e in g.arcs},
    )


def dual_graph(g: MultiDigraph, psi: Mapping[int, float] | None = None) -> DualGraphResult:
    """Dual digraph ``G*`` of a vertex-weighted multi-digraph.

    Every vertex ``v`` gets fresh vertices ``u_v`` and ``w_v`` (ids from
    ``g.id_bound`` upward) and the arc ``f_v: u_v -> w_v`` weighted
    ``psi(v)``.  An arc ``x`` entering ``v`` feeds the gadget (``x -> u_v``)
    and an arc ``y`` leaving ``v`` is fed by it (``w_v -> y``); these star
    arcs are ``INFINITE``.  A cycle ``v_1 x_1 v_2 x_2 ...`` of ``G`` thus maps
    to the cycle through ``f_{v_1}, x_1, f_{v_2}, ...`` of ``G*``.
    """
    check_weights(psi, g.vertices, what="vertex")
    out, inn = g._adjacency()
    base = g.id_bound
    pairs: list[tuple[int, int]] = []
    wts: list[float] = []
    f_arc_of: dict[int, int] = {}
    gadget_of: dict[int, tuple[int, int]] = {}
    for rank, v in enumerate(g.vertices):
        u_v, w_v = base + 2 * rank, base + 2 * rank + 1
        gadget_of[v] = (u_v, w_v)
        f_arc_of[v] = len(pairs)
        pairs.append((u_v, w_v))
        wts.append(1.0 if psi is None else float(psi[v]))
        for x in inn[v]:
            pairs.append((x, u_v))
            wts.append(INFINITE)
        for y in out[v]:
            pairs.append((w_v, y))
            wts.append(INFINITE)
    extra = list(g.arcs) + [x for uw in gadget_of.values() for x in uw]
    gs = MultiDigraph(pairs, vertices=extra)
    return DualGraphResult(gs, f_arc_of, dict(enumerate(wts)), gadget_of)


def solve_fvsp(g: MultiDigraph, psi: Mapping[int, float] | None = None,
               cfg: SolverConfig | None = None,
               solver: Callable[..., FeedbackResult] = tight_cut_star) -> tuple[frozenset[int], float]:
    """Feedback vertex set via TIGHT-CUT* (or ``solver``) on the dual digraph.

    Returns the vertex set and its total weight.
    """
    dual = dual_graph(g, psi)
    res = solver(dual.graph, dual.weights, cfg)
    back = dual.vertex_of_arc()
    stray = sorted(a for a in res.feedback_arcs if a not in back)
    if stray:
        raise TightCutError(f"solver cut auxiliary arcs {stray} of the dual digraph")
    nu = frozenset(back[a] for a in res.feedback_arcs)
    return nu, total_weight(psi, nu)


FvspSolver = Callable[[MultiDigraph, Mapping[int, float]], Iterable[int]]


def solve_fasp_via_line_graph(g: MultiDigraph, weights: Mapping[int, float] | None,
                              fvsp_solver: FvspSolver) -> frozenset[int]:
    """Feedback arc set of ``g`` from any FVSP solver run on ``L(g)``.

    ``fvsp_solver(graph, psi)`` may return a vertex collection or a
    ``(vertices, weight)`` pair.
    """
    lg = line_graph(g, weights)
    out = fvsp_solver(lg.graph, lg.psi_l)
    if isinstance(out, tuple) and len(out) == 2 and not isinstance(out[0], int):
        out = out[0]
    arc_of = {v: e for e, v in lg.vertex_of.items()}
    return frozenset(arc_of[v] for v in out)
