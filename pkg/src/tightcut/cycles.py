"""Cycle covers, isolated cycles and elementary-cycle utilities.

The cycle cover of an arc ``e`` is the subgraph spanned by elementary cycles
through ``e`` or one of its parallels.  Its isolated subgraph keeps only the
cycles through ``e`` whose other arcs lie on no cycle avoiding the bundle of
``e``.  Exact membership in a cover is a two-disjoint-paths question, so the
cover is computed with the usual pair of necessary reachability tests per arc
and may be a superset of the exact one; isolated subgraphs are exact.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .dominators import immediate_dominators, tree_intervals
from .errors import GraphDomainError, ResourceLimitError
from .graph import MultiDigraph, cyclic_arcs, parallel_bundle, scc_labels


@dataclass(frozen=True)
class CycleCover:
    source_arc: int
    subgraph: MultiDigraph

    @property
    def arcs(self) -> frozenset[int]:
        return frozenset(self.subgraph.arcs)

    def __bool__(self) -> bool:
        return self.subgraph.n_arcs > 0


@dataclass(frozen=True)
class IsolatedSubgraph:
    source_arc: int
    subgraph: MultiDigraph

    @property
    def arcs(self) -> frozenset[int]:
        return frozenset(self.subgraph.arcs)

    def __bool__(self) -> bool:
        return self.subgraph.n_arcs > 0


@dataclass(frozen=True)
class ElementaryCycle:
    """Consecutive arcs closing at the start vertex, no vertex repeated."""

    arcs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)

    @classmethod
    def checked(cls, g: MultiDigraph, arcs: Iterable[int]) -> ElementaryCycle:
        """Validate that ``arcs`` is an elementary cycle of ``g``."""
        arcs = tuple(arcs)
        if not arcs:
            raise GraphDomainError("an elementary cycle needs at least one arc")
        seen = set()
        for a, b in zip(arcs, arcs[1:] + arcs[:1]):
            t, h = g.endpoints(a)
            if h != g.tail(b):
                raise GraphDomainError(f"arcs {a} and {b} are not consecutive")
            if t in seen:
                raise GraphDomainError(f"vertex {t} repeated in cycle")
            seen.add(t)
        return cls(arcs)

    def vertices(self, g: MultiDigraph) -> list[int]:
        return [g.tail(a) for a in self.arcs]


def _empty(g: MultiDigraph) -> MultiDigraph:
    return g.arc_subgraph(())


def _component_arcs(g: MultiDigraph, labels: dict[int, int], vertex: int) -> list[int]:
    lab = labels[vertex]
    tail, head = g._tail, g._head
    return [a for a in g.arcs if labels[tail[a]] == lab and labels[head[a]] == lab]


def _dominator_intervals(pairs: set[tuple[int, int]], root: int) -> dict[int, tuple[int, int]]:
    """Pre/post numbers of the dominator tree rooted at ``root``.

    ``x`` dominates ``y`` iff ``pre[x] <= pre[y]`` and ``post[y] <= post[x]``.
    Only vertices reachable from ``root`` are keyed.
    """
    verts = sorted({root} | {u for u, _ in pairs} | {v for _, v in pairs})
    index = {v: i for i, v in enumerate(verts)}
    succ: list[list[int]] = [[] for _ in verts]
    pred: list[list[int]] = [[] for _ in verts]
    for u, v in pairs:
        succ[index[u]].append(index[v])
        pred[index[v]].append(index[u])
    r = index[root]
    pre, post = tree_intervals(immediate_dominators(succ, pred, r), r)
    return {v: (pre[i], post[i]) for i, v in enumerate(verts) if pre[i] >= 0}


def _dominates(iv: dict[int, tuple[int, int]], x: int, y: int) -> bool:
    px, qx = iv[x]
    py, qy = iv[y]
    return px <= py and qy <= qx


def _cover_arcs(g: MultiDigraph, e: int) -> frozenset[int]:
    tail, head = g._tail, g._head
    s, t = head[e], tail[e]
    bundle = parallel_bundle(g, e)
    if s == t:
        return bundle
    labels = scc_labels(g)
    if labels[s] != labels[t]:
        return frozenset()
    comp_arcs = _component_arcs(g, labels, s)
    pairs = {(tail[a], head[a]) for a in comp_arcs if tail[a] != head[a]}
    fwd = _dominator_intervals(pairs, s)
    bwd = _dominator_intervals({(h, t_) for t_, h in pairs}, t)
    keep = []
    for j in comp_arcs:
        if j in bundle:
            keep.append(j)
            continue
        tj, hj = tail[j], head[j]
        if tj == hj:
            # a loop never lies on an elementary cycle through another arc
            continue
        # head(e) -> tail(j) without leaving head(j)
        if hj == s or _dominates(fwd, hj, tj):
            continue
        # head(j) -> tail(e) without entering tail(j)
        if tj == t or _dominates(bwd, tj, hj):
            continue
        keep.append(j)
    sub = g.arc_subgraph(keep)
    sub_labels = scc_labels(sub)
    if sub_labels[s] != sub_labels[t]:
        return frozenset()
    return frozenset(_component_arcs(sub, sub_labels, s))


def cycle_cover(g: MultiDigraph, e: int) -> CycleCover:
    """Subgraph spanned by the elementary cycles through the bundle of ``e``.

    An arc ``j`` is discarded when ``tail(j)`` cannot be reached from
    ``head(e)`` once the out-arcs of ``head(j)`` are removed, or when
    ``tail(e)`` cannot be reached from ``head(j)`` once the in-arcs of
    ``tail(j)`` are removed.  Both probes are answered for all ``j`` at once
    from the dominator trees of the component rooted at ``head(e)`` (forward)
    and ``tail(e)`` (reverse).  The cover is the strongly connected piece of
    the surviving arcs that contains ``e``.
    """
    g._check_arc(e)
    arcs = _cover_arcs(g, e)
    return CycleCover(e, g.arc_subgraph(arcs) if arcs else _empty(g))


def _scc_piece_with(g: MultiDigraph, arcs: Iterable[int], e: int) -> frozenset[int]:
    sub = g.arc_subgraph(arcs)
    labels = scc_labels(sub)
    s, t = g._head[e], g._tail[e]
    if labels[s] != labels[t]:
        return frozenset()
    return frozenset(_component_arcs(sub, labels, s))


def isolated_arcs_direct(g: MultiDigraph, e: int) -> frozenset[int]:
    """Arc set of the isolated subgraph of ``e`` without building the cover.

    Arcs inside a strongly connected component of ``G - bundle(e)`` lie on a
    cycle avoiding the bundle; the remaining arcs plus the bundle, restricted
    to the component of ``e``, give the same set as the cover-based route.
    """
    g._check_arc(e)
    bundle = parallel_bundle(g, e)
    tail, head = g._tail, g._head
    if tail[e] == head[e]:
        return bundle
    rest = g.remove_arcs(bundle)
    labels = scc_labels(rest)
    free = [a for a in rest.arcs if labels[tail[a]] != labels[head[a]]]
    return _scc_piece_with(g, list(bundle) + free, e)


def isolated_subgraph(g: MultiDigraph, e: int, method: str = "cover") -> IsolatedSubgraph:
    """Subgraph spanned by the isolated cycles through ``e``.

    With ``method="cover"`` the arcs of the cycle cover that lie on a cycle of
    ``G - bundle(e)`` are dropped and the piece of what remains (plus the
    bundle) that is strongly connected with ``e`` is returned.
    ``method="direct"`` skips the cover and yields the same result in linear
    time.
    """
    g._check_arc(e)
    if method == "direct":
        arcs = isolated_arcs_direct(g, e)
    elif method == "cover":
        bundle = parallel_bundle(g, e)
        cover = _cover_arcs(g, e)
        if not cover or g.is_loop(e):
            arcs = cover
        else:
            labels = scc_labels(g.remove_arcs(bundle))
            tail, head = g._tail, g._head
            survivors = [a for a in cover
                         if a in bundle or labels[tail[a]] != labels[head[a]]]
            arcs = _scc_piece_with(g, survivors, e)
    else:
        raise ValueError(f"unknown method {method!r}")
    return IsolatedSubgraph(e, g.arc_subgraph(arcs) if arcs else _empty(g))


def shortest_cycle_through(g: MultiDigraph, a: int, allowed: Iterable[int] | None = None) -> ElementaryCycle | None:
    """Shortest elementary cycle containing ``a`` (BFS from head to tail)."""
    tail, head = g._tail, g._head
    if tail[a] == head[a]:
        return ElementaryCycle((a,))
    allowed_set = None if allowed is None else set(allowed)
    s, t = head[a], tail[a]
    out = g._adjacency()[0]
    parent: dict[int, int] = {s: -1}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        if v == t:
            break
        for b in out[v]:
            if allowed_set is not None and b not in allowed_set:
                continue
            w = head[b]
            if w not in parent:
                parent[w] = b
                queue.append(w)
    if t not in parent:
        return None
    path = []
    v = t
    while v != s:
        b = parent[v]
        path.append(b)
        v = tail[b]
    path.reverse()
    return ElementaryCycle((a, *path))


def find_elementary_cycle(g: MultiDigraph) -> ElementaryCycle | None:
    """One elementary cycle, or ``None`` if ``g`` is acyclic.

    Picks the lowest arc id lying on a cycle and returns a shortest cycle
    through it.
    """
    cyc = cyclic_arcs(g)
    if not cyc:
        return None
    return shortest_cycle_through(g, cyc[0], cyc)


def enumerate_elementary_cycles(g: MultiDigraph, limit: int = 10_000) -> list[ElementaryCycle]:
    """All elementary cycles as arc lists, each starting at its smallest vertex.

    Parallel arcs give distinct cycles.  Raises :class:`ResourceLimitError`
    once more than ``limit`` cycles exist.  Meant for small graphs.
    """
    if limit <= 0:
        raise GraphDomainError("limit must be positive")
    tail, head = g._tail, g._head
    out = g._adjacency()[0]
    cycles: list[ElementaryCycle] = []

    def emit(arcs):
        cycles.append(ElementaryCycle(tuple(arcs)))
        if len(cycles) > limit:
            raise ResourceLimitError(f"more than {limit} elementary cycles")

    for s in g.vertices:
        sub = g.vertex_subgraph(v for v in g.vertices if v >= s)
        labels = scc_labels(sub)
        allowed = {v for v in sub.vertices if labels[v] == labels[s]}
        path: list[int] = []
        on_path = {s}
        # iterative DFS over (vertex, out-arc iterator)
        stack = [(s, iter(out[s]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for a in it:
                w = head[a]
                if w == s:
                    emit(path + [a])
                elif w in allowed and w not in on_path and w > s:
                    path.append(a)
                    on_path.add(w)
                    stack.append((w, iter(out[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if path:
                    on_path.discard(head[path.pop()])
    return cycles
