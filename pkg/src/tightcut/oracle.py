"""Exact branch-and-bound oracles and the Greedy Removal baseline.

The exact searches branch on the arcs (or vertices) of one short cycle: branch
``i`` cuts the ``i``-th candidate and forbids the earlier ones, so every
minimal feedback set is reached exactly once.  They are exponential and meant
for desk-scale ground truth.
"""

from __future__ import annotations

import heapq
import math
import time
from collections.abc import Mapping
from dataclasses import dataclass

from .cycles import find_elementary_cycle, shortest_cycle_through
from .errors import ResourceLimitError, SolverTimeout
from .graph import MultiDigraph, check_weights, cyclic_arcs, parallel_bundle

DEFAULT_BUDGET = 1_000_000
_TOL = 1e-9


@dataclass(frozen=True)
class OracleResult:
    optimum: float
    one_solution: frozenset[int]
    all_solutions: tuple[frozenset[int], ...] | None = None
    nodes: int = 0


class _Search:
    def __init__(self, budget: int, all_solutions: bool, time_limit: float | None = None):
        self.budget = budget
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.all = all_solutions
        self.best = math.inf
        self.best_set: frozenset[int] | None = None
        self.sols: list[frozenset[int]] = []
        self.nodes = 0

    def visit(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceLimitError(f"branch-and-bound budget of {self.budget} nodes exceeded")
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise SolverTimeout("exact search deadline exceeded")

    def pruned(self, cost: float) -> bool:
        if self.all:
            return cost > self.best + _TOL
        return cost >= self.best - _TOL

    def record(self, chosen: frozenset[int], cost: float) -> None:
        if cost < self.best - _TOL:
            self.best, self.best_set = cost, chosen
            self.sols = [chosen]
        elif self.all:
            self.sols.append(chosen)

    def result(self) -> OracleResult:
        return OracleResult(
            optimum=self.best,
            one_solution=self.best_set,
            all_solutions=tuple(sorted(self.sols, key=sorted)) if self.all else None,
            nodes=self.nodes,
        )


def _cycle_avoiding(g: MultiDigraph, frozen: set[int]) -> tuple[int, ...] | None:
    """A short cycle, preferring one with few cuttable arcs."""
    c = find_elementary_cycle(g)
    if c is None:
        return None
    best = c.arcs
    best_free = sum(1 for a in best if a not in frozen)
    if best_free <= 1:
        return best
    for a in cyclic_arcs(g)[:32]:
        alt = shortest_cycle_through(g, a)
        if alt is None:
            continue
        free = sum(1 for b in alt.arcs if b not in frozen)
        if free < best_free:
            best, best_free = alt.arcs, free
            if free <= 1:
                break
    return best


def exact_fas(g: MultiDigraph, weights: Mapping[int, float] | None = None,
              budget: int = DEFAULT_BUDGET, all_solutions: bool = False,
              time_limit: float | None = None) -> OracleResult:
    """Minimum feedback arc set by exhaustive branch and bound.

    With ``all_solutions=False`` the search branches on whole parallel
    bundles (some optimum always contains full bundles).  With
    ``all_solutions=True`` it branches on single arcs, so the enumeration of
    minima does not presuppose that property.
    """
    check_weights(weights, g.arcs)
    w = (lambda a: 1.0) if weights is None else weights.__getitem__
    search = _Search(budget, all_solutions, time_limit)

    def rec(h: MultiDigraph, chosen: frozenset[int], cost: float, frozen: set[int]):
        search.visit()
        if search.pruned(cost):
            return
        cyc = _cycle_avoiding(h, frozen)
        if cyc is None:
            search.record(chosen, cost)
            return
        units = []
        seen = set()
        for a in cyc:
            if a in frozen or a in seen:
                continue
            unit = (a,) if all_solutions else tuple(sorted(parallel_bundle(h, a)))
            seen.update(unit)
            if any(b in frozen for b in unit):
                continue
            units.append(unit)
        units.sort(key=lambda u: (sum(w(b) for b in u), u))
        banned = set(frozen)
        for unit in units:
            rec(h.remove_arcs(unit), chosen | frozenset(unit), cost + sum(w(b) for b in unit), banned)
            banned = banned | set(unit)

    rec(g, frozenset(), 0.0, set())
    return search.result()


def exact_fvs(g: MultiDigraph, weights: Mapping[int, float] | None = None,
              budget: int = DEFAULT_BUDGET, all_solutions: bool = False,
              time_limit: float | None = None) -> OracleResult:
    """Minimum feedback vertex set by branch and bound on cycle vertices."""
    check_weights(weights, g.vertices, what="vertex")
    w = (lambda v: 1.0) if weights is None else weights.__getitem__
    search = _Search(budget, all_solutions, time_limit)

    def rec(h: MultiDigraph, chosen: frozenset[int], cost: float, frozen: set[int]):
        search.visit()
        if search.pruned(cost):
            return
        cyc = find_elementary_cycle(h)
        if cyc is None:
            search.record(chosen, cost)
            return
        units = sorted((v for v in cyc.vertices(h) if v not in frozen), key=lambda v: (w(v), v))
        banned = set(frozen)
        for v in units:
            rec(h.remove_vertices([v]), chosen | {v}, cost + w(v), banned)
            banned = banned | {v}

    rec(g, frozenset(), 0.0, set())
    return search.result()


def greedy_removal(g: MultiDigraph) -> frozenset[int]:
    """Greedy Removal (Eades, Lin and Smyth): backward arcs of a greedy linear order.

    Sinks are peeled to the back and sources to the front; otherwise the
    vertex maximising ``outdeg - indeg`` goes to the front.  Ties take the
    lowest vertex id.  Unweighted; loops are always returned.
    """
    tail, head = g._tail, g._head
    loops = [a for a in g.arcs if tail[a] == head[a]]
    succ: dict[int, list[int]] = {v: [] for v in g.vertices}
    pred: dict[int, list[int]] = {v: [] for v in g.vertices}
    for a in g.arcs:
        u, v = tail[a], head[a]
        if u != v:
            succ[u].append(v)
            pred[v].append(u)
    outdeg = {v: len(succ[v]) for v in g.vertices}
    indeg = {v: len(pred[v]) for v in g.vertices}
    alive = set(g.vertices)
    sinks = [v for v in g.vertices if outdeg[v] == 0]
    sources = [v for v in g.vertices if indeg[v] == 0 and outdeg[v] > 0]
    heapq.heapify(sinks)
    heapq.heapify(sources)
    front: list[int] = []
    back: list[int] = []

    def remove(v: int) -> None:
        alive.discard(v)
        for x in succ[v]:
            if x in alive:
                indeg[x] -= 1
                if indeg[x] == 0:
                    heapq.heappush(sources, x)
        for x in pred[v]:
            if x in alive:
                outdeg[x] -= 1
                if outdeg[x] == 0:
                    heapq.heappush(sinks, x)

    while alive:
        progressed = True
        while progressed:
            progressed = False
            while sinks:
                v = heapq.heappop(sinks)
                if v in alive and outdeg[v] == 0:
                    back.append(v)
                    remove(v)
                    progressed = True
            while sources:
                v = heapq.heappop(sources)
                if v in alive and indeg[v] == 0:
                    front.append(v)
                    remove(v)
                    progressed = True
        if alive:
            v = min(alive, key=lambda x: (indeg[x] - outdeg[x], x))
            front.append(v)
            remove(v)
    order = front + back[::-1]
    pos = {v: i for i, v in enumerate(order)}
    backward = [a for a in g.arcs if tail[a] != head[a] and pos[tail[a]] > pos[head[a]]]
    return frozenset(backward) | frozenset(loops)
