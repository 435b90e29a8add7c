"""Minimum s-t cuts on arc-weighted multi-digraphs (Dinic's algorithm).

Parallel arcs are independent capacities.  ``INFINITE`` capacities are
replaced by ``1 + sum of finite capacities`` for the duration of a call, so a
flow reaching that bound means no finite cut exists.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import GraphDomainError
from .graph import MultiDigraph, arc_weight


@dataclass(frozen=True)
class CutResult:
    """A minimum s-t cut.

    ``value`` is ``math.inf`` when every separating set contains an
    ``INFINITE`` arc; ``cut_arcs`` then still lists the source-side boundary.
    """

    cut_arcs: frozenset[int]
    value: float

    @property
    def finite(self) -> bool:
        return math.isfinite(self.value)


class FlowNetwork:
    """Residual network over a subset of arcs of a :class:`MultiDigraph`.

    Edge ``2k`` is the forward copy of the ``k``-th arc, ``2k + 1`` its
    reverse residual edge.
    """

    def __init__(self, g: MultiDigraph, weights: Mapping[int, float] | None,
                 arcs: Iterable[int] | None = None, extra_vertices: Iterable[int] = ()):
        arc_list = list(g.arcs if arcs is None else arcs)
        tail, head = g._tail, g._head
        index: dict[int, int] = {}
        for v in extra_vertices:
            index.setdefault(v, len(index))
        caps = []
        ends = []
        kept = []
        for a in arc_list:
            if not g.has_arc(a):
                raise GraphDomainError(f"unknown arc id {a!r}")
            u, v = tail[a], head[a]
            if u == v:
                continue
            iu = index.setdefault(u, len(index))
            iv = index.setdefault(v, len(index))
            kept.append(a)
            ends.append((iu, iv))
            caps.append(arc_weight(weights, a))
        finite_sum = sum(c for c in caps if math.isfinite(c))
        self.big = 1.0 + finite_sum
        self.eps = 1e-12 * self.big
        self.index = index
        self.arc_ids = kept
        n = len(index)
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[float] = []
        for (iu, iv), c in zip(ends, caps):
            c = c if math.isfinite(c) else self.big
            self.adj[iu].append(len(self.to))
            self.to.append(iv)
            self.cap.append(c)
            self.adj[iv].append(len(self.to))
            self.to.append(iu)
            self.cap.append(0.0)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * len(self.adj)
        level[s] = 0
        queue = deque([s])
        to, cap, eps = self.to, self.cap, self.eps
        while queue:
            v = queue.popleft()
            for e in self.adj[v]:
                w = to[e]
                if level[w] < 0 and cap[e] > eps:
                    level[w] = level[v] + 1
                    queue.append(w)
        return level if level[t] >= 0 else None

    def _blocking_flow(self, s: int, t: int, level: list[int], budget: float) -> float:
        adj, to, cap, eps = self.adj, self.to, self.cap, self.eps
        it = [0] * len(adj)
        total = 0.0
        while total < budget:
            path: list[int] = []
            v = s
            while v != t:
                edges = adj[v]
                i = it[v]
                nxt = level[v] + 1
                while i < len(edges):
                    e = edges[i]
                    if cap[e] > eps and level[to[e]] == nxt:
                        break
                    i += 1
                it[v] = i
                if i == len(edges):
                    level[v] = -1
                    if not path:
                        return total
                    e = path.pop()
                    v = to[e ^ 1]
                    it[v] += 1
                    continue
                e = edges[i]
                path.append(e)
                v = to[e]
            f = min(cap[e] for e in path)
            f = min(f, budget - total)
            for e in path:
                cap[e] -= f
                cap[e ^ 1] += f
            total += f
        return total

    def max_flow(self, s: int, t: int, limit: float | None = None) -> float:
        """Run Dinic from local ``s`` to local ``t``.

        With ``limit`` the search stops as soon as that much flow is routed,
        which is enough to certify ``mincut >= limit``.
        """
        budget = math.inf if limit is None else limit
        flow = 0.0
        while flow < budget:
            level = self._levels(s, t)
            if level is None:
                break
            flow += self._blocking_flow(s, t, level, budget - flow)
        return flow

    def source_side(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        to, cap, eps = self.to, self.cap, self.eps
        while stack:
            v = stack.pop()
            for e in self.adj[v]:
                w = to[e]
                if w not in seen and cap[e] > eps:
                    seen.add(w)
                    stack.append(w)
        return seen


def _endpoints(g: MultiDigraph, s: int, t: int) -> None:
    if not g.has_vertex(s):
        raise GraphDomainError(f"unknown vertex id {s!r}")
    if not g.has_vertex(t):
        raise GraphDomainError(f"unknown vertex id {t!r}")
    if s == t:
        raise GraphDomainError("source and sink coincide; cut loops separately")


def max_flow_value(g: MultiDigraph, weights: Mapping[int, float] | None, s: int, t: int,
                   arcs: Iterable[int] | None = None, limit: float | None = None) -> float:
    """Maximum s-t flow value, optionally restricted to ``arcs`` and capped at ``limit``."""
    _endpoints(g, s, t)
    net = FlowNetwork(g, weights, arcs, extra_vertices=(s, t))
    flow = net.max_flow(net.index[s], net.index[t], limit)
    if limit is None and flow >= net.big - net.eps:
        return math.inf
    return flow


def min_st_cut(g: MultiDigraph, weights: Mapping[int, float] | None, s: int, t: int,
               arcs: Iterable[int] | None = None) -> CutResult:
    """Minimum-weight arc set separating ``s`` from ``t``.

    Parameters
    ----------
    g : MultiDigraph
    weights : mapping or None
        Positive arc weights, ``INFINITE`` allowed; ``None`` is unit weight.
    s, t : int
        Distinct vertices of ``g``.
    arcs : iterable of int, optional
        Restrict the network to these arcs (e.g. an isolated subgraph).

    Returns
    -------
    CutResult
        The cut closest to ``s``: arcs leaving the set of vertices still
        reachable from ``s`` in the final residual network.
    """
    _endpoints(g, s, t)
    net = FlowNetwork(g, weights, arcs, extra_vertices=(s, t))
    si, ti = net.index[s], net.index[t]
    flow = net.max_flow(si, ti)
    side = net.source_side(si)
    cut = frozenset(a for k, a in enumerate(net.arc_ids)
                    if net.to[2 * k + 1] in side and net.to[2 * k] not in side)
    if flow >= net.big - net.eps:
        return CutResult(cut, math.inf)
    value = float(sum(arc_weight(weights, a) for a in cut))
    return CutResult(cut, value)
