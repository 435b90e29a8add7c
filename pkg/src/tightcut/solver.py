"""ISO-CUT, GOOD-GUESS, TIGHT-CUT and the randomized TIGHT-CUT*.

ISO-CUT repeatedly cuts bundles ``F(e)`` whose isolated subgraph is nonempty
and whose weight does not exceed the min cut ``head(e) -> tail(e)`` inside
that subgraph; every such cut belongs to some minimum feedback arc set.
TIGHT-CUT alternates ISO-CUT with a single heuristic cut chosen by
GOOD-GUESS.  TIGHT-CUT* first probes ``N`` random deletions of ``n`` arcs for
almost isolated cycles and cuts the arc that ISO-CUT picks first most often.
"""

from __future__ import annotations

import heapq
import math
import time
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from .cycles import ElementaryCycle, _cover_arcs, find_elementary_cycle
from .dominators import immediate_dominators, tree_intervals
from .errors import GraphDomainError, SolverTimeout
from .graph import (
    _SPARSE_THRESHOLD,
    MultiDigraph,
    arc_weight,
    check_weights,
    cyclic_arcs,
    is_acyclic,
    parallel_bundle,
    scc_labels,
    scc_local,
    total_weight,
    verify_feedback,
)
from .maxflow import FlowNetwork, max_flow_value

__all__ = [
    "FeedbackResult",
    "SolverConfig",
    "iso_cut",
    "good_guess",
    "tight_cut",
    "tight_cut_star",
    "verify_feedback",
]


@dataclass(frozen=True)
class SolverConfig:
    """Parameters of TIGHT-CUT*.

    n : arcs deleted per probe.  N : probes per stall.  seed : RNG seed.
    max_iterations : cap on outer iterations (default ``|E|``).
    time_limit : wall-clock seconds before :class:`SolverTimeout`.
    """

    n: int = 3
    N: int = 20
    seed: int = 0
    max_iterations: int | None = None
    time_limit: float | None = None

    def __post_init__(self):
        if self.n < 0:
            raise GraphDomainError("n must be >= 0")
        if self.N < 1:
            raise GraphDomainError("N must be >= 1")


@dataclass(frozen=True)
class FeedbackResult:
    """Output of TIGHT-CUT / TIGHT-CUT*.

    ``optimal_sub_weight`` is the weight of the ``iso`` and ``vote`` cuts,
    ``guess_weight`` the weight of the GOOD-GUESS cuts.
    """

    feedback_arcs: frozenset[int]
    total_weight: float
    optimal_sub_weight: float
    guess_weight: float
    trace: tuple[tuple[str, int], ...] = field(default=())
    iterations: int = 0


# ---------------------------------------------------------------------------
# ISO-CUT engine


class _Component:
    """A nontrivial strongly connected component in local coordinates."""

    __slots__ = ("token", "arcs", "arc_list", "verts", "index", "tl", "hd", "tl_list", "hd_list",
                 "bundles", "_bridges", "cands", "g_tail", "g_head")

    def __init__(self, g: MultiDigraph, arcs: list[int], token: int):
        self.token = token
        self.arcs = np.asarray(arcs, dtype=np.int64)
        tail, head = g._tail, g._head
        verts = sorted({tail[a] for a in arcs} | {head[a] for a in arcs})
        self.verts = verts
        self.index = {v: i for i, v in enumerate(verts)}
        idx = self.index
        self.arc_list = list(arcs)
        self.tl_list = [idx[tail[a]] for a in arcs]
        self.hd_list = [idx[head[a]] for a in arcs]
        self.tl = np.asarray(self.tl_list, dtype=np.int64)
        self.hd = np.asarray(self.hd_list, dtype=np.int64)
        bundles: dict[tuple[int, int], list[int]] = {}
        for pos, a in enumerate(arcs):
            bundles.setdefault((tail[a], head[a]), []).append(pos)
        self.bundles = bundles
        self._bridges = None
        self.cands: list[int] | None = None
        self.g_tail, self.g_head = tail, head

    def bridges(self) -> frozenset[tuple[int, int]]:
        """Vertex pairs ``(u, v)`` whose arc bundle is a strong bridge."""
        if self._bridges is None:
            idx = self.index
            local = [(idx[u], idx[v]) for u, v in self.bundles]
            found = _strong_bridges(local, len(self.verts), 0)
            verts = self.verts
            self._bridges = frozenset((verts[u], verts[v]) for u, v in found)
        return self._bridges


def _reach(succ: list[list[int]], root: int) -> list[bool]:
    seen = [False] * len(succ)
    seen[root] = True
    stack = [root]
    while stack:
        v = stack.pop()
        for w in succ[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return seen


def _flow_bridges(pairs: list[tuple[int, int]], n: int, root: int) -> set[tuple[int, int]]:
    """Arcs ``(u, v)`` of a flowgraph rooted at ``root`` lying on every root-``v`` path.

    That holds iff ``idom(v) == u`` and every other predecessor of ``v`` is
    dominated by ``v``.
    """
    succ: list[list[int]] = [[] for _ in range(n)]
    pred: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        succ[u].append(v)
        pred[v].append(u)
    idom = immediate_dominators(succ, pred, root)
    pre, post = tree_intervals(idom, root)
    out = set()
    for u, v in pairs:
        if v == root or idom[v] != u:
            continue
        pv, qv = pre[v], post[v]
        if all(w == u or (pv <= pre[w] and post[w] <= qv) for w in pred[v]):
            out.add((u, v))
    return out


def _strong_bridges(pairs: list[tuple[int, int]], n: int, root: int) -> frozenset[tuple[int, int]]:
    fwd = _flow_bridges(pairs, n, root)
    bwd = _flow_bridges([(v, u) for u, v in pairs], n, root)
    return frozenset(fwd | {(u, v) for v, u in bwd})


class _IsoEngine:
    """ISO-CUT with memoisation keyed by strongly connected component.

    Whether an arc qualifies depends only on the arcs of its component, so a
    failed check is remembered per ``(arc, component)`` and reused across
    passes, TIGHT-CUT iterations and TIGHT-CUT* probes.
    """

    _MAX_CACHED = 256

    def __init__(self, weights: Mapping[int, float] | None, deadline: float | None = None):
        self.weights = weights
        self.deadline = deadline
        self._tokens: dict[frozenset[int], int] = {}
        self._comps: dict[int, _Component] = {}
        self._failed: set[tuple[int, int]] = set()

    def _tick(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SolverTimeout("solver deadline exceeded")

    def _component(self, g: MultiDigraph, arcs: list[int]) -> _Component:
        key = frozenset(arcs)
        token = self._tokens.get(key)
        if token is None:
            token = len(self._tokens)
            self._tokens[key] = token
        comp = self._comps.get(token)
        if comp is None:
            if len(self._comps) >= self._MAX_CACHED:
                self._comps.clear()
            comp = _Component(g, sorted(arcs), token)
            self._comps[token] = comp
        return comp

    def components(self, g: MultiDigraph, vertices=None) -> list[_Component]:
        """Nontrivial SCCs of ``g`` (or of the subgraph on ``vertices``); loops excluded."""
        sub = g if vertices is None else g.vertex_subgraph(vertices)
        labels = scc_labels(sub)
        tail, head = g._tail, g._head
        groups: dict[int, list[int]] = {}
        for a in sub.arcs:
            lt = labels[tail[a]]
            if tail[a] != head[a] and lt == labels[head[a]]:
                groups.setdefault(lt, []).append(a)
        return [self._component(g, arcs) for arcs in groups.values()]

    def qualifies(self, g: MultiDigraph, e: int, comp: _Component) -> bool:
        self._tick()
        tail, head = g._tail, g._head
        s, t = head[e], tail[e]
        if (t, s) not in comp.bridges():
            return False
        bundle_pos = comp.bundles[(t, s)]
        need = sum(arc_weight(self.weights, comp.arc_list[p]) for p in bundle_pos)
        if math.isinf(need):
            return False
        if len(comp.arc_list) > _SPARSE_THRESHOLD:
            iso_arcs = self._isolated_sparse(comp, bundle_pos, comp.index[s], comp.index[t])
        else:
            iso_arcs = self._isolated_small(comp, bundle_pos, comp.index[s], comp.index[t])
        if iso_arcs is None:
            return False
        net = FlowNetwork(g, self.weights, iso_arcs, extra_vertices=(s, t))
        flow = net.max_flow(net.index[s], net.index[t], limit=need)
        return flow >= need - 1e-9 * max(1.0, need)

    @staticmethod
    def _isolated_small(comp: _Component, bundle_pos: list[int], si: int, ti: int) -> list[int] | None:
        """Non-bundle arcs of the isolated subgraph (pure Python), ``None`` if empty."""
        n = len(comp.verts)
        tl, hd = comp.tl_list, comp.hd_list
        banned = set(bundle_pos)
        keep = [p for p in range(len(tl)) if p not in banned]
        labels = scc_local(n, [tl[p] for p in keep], [hd[p] for p in keep])
        free = [p for p in keep if labels[tl[p]] != labels[hd[p]]]
        succ: list[list[int]] = [[] for _ in range(n)]
        pred: list[list[int]] = [[] for _ in range(n)]
        for p in free:
            succ[tl[p]].append(hd[p])
            pred[hd[p]].append(tl[p])
        fwd = _reach(succ, si)
        if not fwd[ti]:
            return None
        bwd = _reach(pred, ti)
        arcs = comp.arc_list
        return [arcs[p] for p in free if fwd[tl[p]] and bwd[tl[p]] and fwd[hd[p]] and bwd[hd[p]]]

    @staticmethod
    def _isolated_sparse(comp: _Component, bundle_pos: list[int], si: int, ti: int) -> list[int] | None:
        """Vectorised twin of :meth:`_isolated_small` for large components."""
        n = len(comp.verts)
        tl, hd = comp.tl, comp.hd
        keep = np.ones(len(tl), dtype=bool)
        keep[bundle_pos] = False
        ones = np.ones(int(keep.sum()), dtype=np.int8)
        mat = csr_matrix((ones, (tl[keep], hd[keep])), shape=(n, n))
        _, labels = connected_components(mat, directed=True, connection="strong")
        free = keep & (labels[tl] != labels[hd])
        xt, xh = tl[free], hd[free]
        ones = np.ones(len(xt), dtype=np.int8)
        fmat = csr_matrix((ones, (xt, xh)), shape=(n, n))
        fwd = np.zeros(n, dtype=bool)
        fwd[breadth_first_order(fmat, si, directed=True, return_predecessors=False)] = True
        if not fwd[ti]:
            return None
        bmat = csr_matrix((ones, (xh, xt)), shape=(n, n))
        bwd = np.zeros(n, dtype=bool)
        bwd[breadth_first_order(bmat, ti, directed=True, return_predecessors=False)] = True
        inside = fwd & bwd
        sel = free & inside[tl] & inside[hd]
        return comp.arcs[sel].tolist()

    def candidates(self, comp: _Component) -> list[int]:
        """Arcs of ``comp`` whose bundle is a strong bridge and not known to fail."""
        if comp.cands is None:
            br = comp.bridges()
            tail, head = comp.g_tail, comp.g_head
            comp.cands = [a for a in comp.arc_list if (tail[a], head[a]) in br]
        failed, token = self._failed, comp.token
        return [a for a in comp.cands if (a, token) not in failed]

    def run(self, g: MultiDigraph, first_only: bool = False):
        """ISO-CUT on ``g``; returns ``(residual, cuts)``.

        Arcs are scanned in ascending id order and each pass sees the
        components left by earlier cuts.  ``cuts`` lists
        ``(first_arc, bundle)`` in cut order.  With ``first_only`` the scan
        stops after the first cut.
        """
        tail, head = g._tail, g._head
        cuts: list[tuple[int, tuple[int, ...]]] = []
        while True:
            loops = set(g.loops())
            heap = list(loops)
            arc_comp: dict[int, _Component] = {}
            for comp in self.components(g):
                for a in self.candidates(comp):
                    arc_comp[a] = comp
                    heap.append(a)
            if not heap:
                break
            heapq.heapify(heap)
            changed = False
            last = -1
            while heap:
                e = heapq.heappop(heap)
                if e == last:
                    continue
                last = e
                if e in loops:
                    if not g.has_arc(e):
                        continue
                    bundle = tuple(sorted(parallel_bundle(g, e)))
                    g = g.remove_arcs(bundle)
                    cuts.append((e, bundle))
                    changed = True
                    if first_only:
                        return g, cuts
                    continue
                comp = arc_comp.get(e)
                if comp is None:
                    continue
                if not self.qualifies(g, e, comp):
                    self._failed.add((e, comp.token))
                    continue
                s, t = head[e], tail[e]
                bundle = tuple(comp.arc_list[p] for p in comp.bundles[(t, s)])
                g = g.remove_arcs(bundle)
                cuts.append((e, bundle))
                changed = True
                if first_only:
                    return g, cuts
                for a in comp.arc_list:
                    arc_comp.pop(a, None)
                for new in self.components(g, comp.verts):
                    for a in self.candidates(new):
                        arc_comp[a] = new
                        if a > e:
                            heapq.heappush(heap, a)
            if not changed:
                break
        return g, cuts


def iso_cut(g: MultiDigraph, weights: Mapping[int, float] | None = None):
    """Cut every bundle that provably belongs to a minimum feedback arc set.

    Returns
    -------
    residual : MultiDigraph
        ``g`` with the cut bundles removed.
    eps : frozenset of int
        The cut arcs.  If ``residual`` is acyclic they form a minimum
        feedback arc set of ``g``.
    """
    check_weights(weights, g.arcs)
    residual, cuts = _IsoEngine(weights).run(g)
    return residual, frozenset(a for _, bundle in cuts for a in bundle)


# ---------------------------------------------------------------------------
# GOOD-GUESS


def _guess_score(g: MultiDigraph, weights, a: int, cover: frozenset[int]) -> float:
    bundle_w = total_weight(weights, parallel_bundle(g, a))
    if math.isinf(bundle_w):
        return -math.inf
    cut = max_flow_value(g, weights, g._head[a], g._tail[a], arcs=cover)
    return cut - bundle_w


def good_guess(g: MultiDigraph, weights: Mapping[int, float] | None, cycle) -> int:
    """Arc of ``cycle`` with the most expensive head-to-tail min cut relative to its bundle.

    Candidates are the arcs whose cycle cover strictly contains the cycle; if
    there are none, every arc of the cycle competes.  The min cut of a
    candidate is taken inside its cycle cover.  Ties go to the lowest id.
    """
    if not isinstance(cycle, ElementaryCycle):
        cycle = ElementaryCycle.checked(g, cycle)
    arcs = cycle.arcs
    if not arcs:
        raise GraphDomainError("empty cycle")
    if len(arcs) == 1:
        return arcs[0]
    c_set = frozenset(arcs)
    covers = {a: _cover_arcs(g, a) for a in arcs}
    pool = [a for a in arcs if covers[a] > c_set] or list(arcs)

    def pick(cands):
        scored = sorted(cands)
        best, best_score = scored[0], -math.inf
        for a in scored:
            sc = _guess_score(g, weights, a, covers[a])
            if sc > best_score:
                best, best_score = a, sc
        return best, best_score

    best, score = pick(pool)
    if score == -math.inf and len(pool) < len(arcs):
        # only INFINITE candidates survived the filter
        best, _ = pick(arcs)
    return best


# ---------------------------------------------------------------------------
# TIGHT-CUT / TIGHT-CUT*


def _deadline(cfg: SolverConfig | None) -> float | None:
    if cfg is None or cfg.time_limit is None:
        return None
    return time.monotonic() + cfg.time_limit


def _result(weights, eps: list[int], delta: list[int], trace, iterations) -> FeedbackResult:
    arcs = frozenset(eps) | frozenset(delta)
    return FeedbackResult(
        feedback_arcs=arcs,
        total_weight=total_weight(weights, arcs),
        optimal_sub_weight=total_weight(weights, eps),
        guess_weight=total_weight(weights, delta),
        trace=tuple(trace),
        iterations=iterations,
    )


def _solve(g: MultiDigraph, weights, cfg: SolverConfig | None, relaxed: bool) -> FeedbackResult:
    check_weights(weights, g.arcs)
    engine = _IsoEngine(weights, _deadline(cfg))
    rng = np.random.default_rng(cfg.seed if cfg is not None else 0)
    eps: list[int] = []
    delta: list[int] = []
    trace: list[tuple[str, int]] = []
    limit = g.n_arcs
    if cfg is not None and cfg.max_iterations is not None:
        limit = min(limit, cfg.max_iterations)
    it = 0
    while it < limit:
        it += 1
        g, cuts = engine.run(g)
        for _, bundle in cuts:
            eps.extend(bundle)
            trace.extend(("iso", a) for a in bundle)
        if is_acyclic(g):
            break
        if relaxed and cfg.n > 0:
            f = _vote(engine, g, cfg, rng)
            if f is not None:
                eps.append(f)
                trace.append(("vote", f))
                g = g.remove_arcs([f])
                continue
        engine._tick()
        h = good_guess(g, weights, find_elementary_cycle(g))
        delta.append(h)
        trace.append(("guess", h))
        g = g.remove_arcs([h])
    return _result(weights, eps, delta, trace, it)


def _vote(engine: _IsoEngine, g: MultiDigraph, cfg: SolverConfig, rng) -> int | None:
    pool = [a for a in cyclic_arcs(g) if not g.is_loop(a)]
    k = min(cfg.n, len(pool))
    votes: Counter[int] = Counter()
    for _ in range(cfg.N):
        picks = rng.choice(len(pool), size=k, replace=False)
        probe = g.remove_arcs(pool[int(i)] for i in picks)
        _, cuts = engine.run(probe, first_only=True)
        if cuts:
            votes[cuts[0][0]] += 1
    if not votes:
        return None
    top = max(votes.values())
    return min(a for a, c in votes.items() if c == top)


def tight_cut(g: MultiDigraph, weights: Mapping[int, float] | None = None,
              cfg: SolverConfig | None = None) -> FeedbackResult:
    """TIGHT-CUT: ISO-CUT alternated with single GOOD-GUESS cuts until acyclic.

    Only ``time_limit`` and ``max_iterations`` of ``cfg`` are used.
    """
    return _solve(g, weights, cfg, relaxed=False)


def tight_cut_star(g: MultiDigraph, weights: Mapping[int, float] | None = None,
                   cfg: SolverConfig | None = None) -> FeedbackResult:
    """TIGHT-CUT*: when ISO-CUT stalls, vote over ``N`` random ``n``-arc deletions.

    Each probe deletes ``n`` arcs drawn without replacement from the arcs of
    nontrivial SCCs and records the first arc ISO-CUT would cut.  The most
    frequent first arc (lowest id on ties) is cut; if no probe cuts anything
    GOOD-GUESS decides.  Deterministic for a fixed ``cfg.seed``.
    """
    return _solve(g, weights, cfg or SolverConfig(), relaxed=True)
