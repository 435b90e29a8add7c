"""Multi-digraphs with identity-preserving parallel arcs.

A :class:`MultiDigraph` keeps an explicit ``tail``/``head`` map per arc, so two
arcs with the same endpoints are still two distinct objects, and loops are
ordinary arcs.  Graph values are immutable: every deletion returns a new view
that shares the endpoint tables of its parent, which keeps arc and vertex ids
stable across the whole solve.

Weights are plain mappings ``id -> float``.  ``None`` stands for unit weights
and :data:`INFINITE` (``math.inf``) is the reserved sentinel used by the dual
digraph construction.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Mapping, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import GraphDomainError

INFINITE = math.inf

ArcWeights = Mapping[int, float]
VertexWeights = Mapping[int, float]


class MultiDigraph:
    """Immutable multi-digraph ``(V, E, head, tail)``.

    Parameters
    ----------
    arcs : iterable of (tail, head)
        Arc ``i`` of the iterable receives id ``i``.  Repeated pairs create
        parallel arcs, ``(v, v)`` creates a loop.
    vertices : iterable of int, optional
        Extra (possibly isolated) vertices.  Arc endpoints are always added.
    """

    __slots__ = ("_tail", "_head", "_arcs", "_arcset", "_vertices", "_vset", "_out", "_in")

    def __init__(self, arcs: Iterable[tuple[int, int]] = (), vertices: Iterable[int] = ()):
        tails: list[int] = []
        heads: list[int] = []
        for pair in arcs:
            t, h = pair
            for v in (t, h):
                if not isinstance(v, (int, np.integer)) or v < 0:
                    raise GraphDomainError(f"vertex ids must be non-negative integers, got {v!r}")
            tails.append(int(t))
            heads.append(int(h))
        vs = {int(v) for v in vertices}
        if any(v < 0 for v in vs):
            raise GraphDomainError("vertex ids must be non-negative integers")
        vs.update(tails)
        vs.update(heads)
        self._init(tuple(tails), tuple(heads), tuple(range(len(tails))), tuple(sorted(vs)))

    def _init(self, tail, head, arcs, vertices):
        self._tail = tail
        self._head = head
        self._arcs = arcs
        self._arcset = frozenset(arcs)
        self._vertices = vertices
        self._vset = frozenset(vertices)
        self._out = None
        self._in = None

    @classmethod
    def _view(cls, parent: MultiDigraph, arcs, vertices) -> MultiDigraph:
        g = cls.__new__(cls)
        g._init(parent._tail, parent._head, tuple(sorted(arcs)), tuple(sorted(vertices)))
        return g

    # -- basic queries -------------------------------------------------

    @property
    def arcs(self) -> tuple[int, ...]:
        """Alive arc ids in ascending (canonical) order."""
        return self._arcs

    @property
    def vertices(self) -> tuple[int, ...]:
        """Vertex ids in ascending order."""
        return self._vertices

    @property
    def n_arcs(self) -> int:
        return len(self._arcs)

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def id_bound(self) -> int:
        """One past the largest arc id ever issued in this graph family."""
        return len(self._tail)

    def has_arc(self, a: int) -> bool:
        return a in self._arcset

    def has_vertex(self, v: int) -> bool:
        return v in self._vset

    def _check_arc(self, a: int) -> None:
        if a not in self._arcset:
            raise GraphDomainError(f"unknown arc id {a!r}")

    def _check_vertex(self, v: int) -> None:
        if v not in self._vset:
            raise GraphDomainError(f"unknown vertex id {v!r}")

    def tail(self, a: int) -> int:
        self._check_arc(a)
        return self._tail[a]

    def head(self, a: int) -> int:
        self._check_arc(a)
        return self._head[a]

    def endpoints(self, a: int) -> tuple[int, int]:
        """``(tail, head)`` of arc ``a``."""
        self._check_arc(a)
        return self._tail[a], self._head[a]

    def is_loop(self, a: int) -> bool:
        self._check_arc(a)
        return self._tail[a] == self._head[a]

    def _adjacency(self):
        if self._out is None:
            out: dict[int, list[int]] = {v: [] for v in self._vertices}
            inn: dict[int, list[int]] = {v: [] for v in self._vertices}
            tail, head = self._tail, self._head
            for a in self._arcs:
                out[tail[a]].append(a)
                inn[head[a]].append(a)
            self._out = {v: tuple(x) for v, x in out.items()}
            self._in = {v: tuple(x) for v, x in inn.items()}
        return self._out, self._in

    def out_arcs(self, v: int) -> tuple[int, ...]:
        """Arcs with tail ``v``, ascending."""
        self._check_vertex(v)
        return self._adjacency()[0][v]

    def in_arcs(self, v: int) -> tuple[int, ...]:
        """Arcs with head ``v``, ascending."""
        self._check_vertex(v)
        return self._adjacency()[1][v]

    def out_degree(self, v: int) -> int:
        return len(self.out_arcs(v))

    def in_degree(self, v: int) -> int:
        return len(self.in_arcs(v))

    def max_degree(self) -> int:
        out, inn = self._adjacency()
        return max((len(out[v]) + len(inn[v]) for v in self._vertices), default=0)

    def loops(self) -> tuple[int, ...]:
        tail, head = self._tail, self._head
        return tuple(a for a in self._arcs if tail[a] == head[a])

    def arc_pairs(self) -> list[tuple[int, int]]:
        """``(tail, head)`` for every alive arc, in canonical order."""
        return [(self._tail[a], self._head[a]) for a in self._arcs]

    # -- derived graphs ------------------------------------------------

    def remove_arcs(self, arcs: Iterable[int]) -> MultiDigraph:
        """Graph without ``arcs``; unknown ids raise :class:`GraphDomainError`."""
        drop = set(arcs)
        unknown = drop - self._arcset
        if unknown:
            raise GraphDomainError(f"unknown arc ids {sorted(unknown)}")
        if not drop:
            return self
        return MultiDigraph._view(self, self._arcset - drop, self._vertices)

    def remove_vertices(self, vertices: Iterable[int]) -> MultiDigraph:
        """Graph without ``vertices`` and every arc incident to them."""
        drop = set(vertices)
        unknown = drop - self._vset
        if unknown:
            raise GraphDomainError(f"unknown vertex ids {sorted(unknown)}")
        tail, head = self._tail, self._head
        keep = [a for a in self._arcs if tail[a] not in drop and head[a] not in drop]
        return MultiDigraph._view(self, keep, self._vset - drop)

    def arc_subgraph(self, arcs: Iterable[int]) -> MultiDigraph:
        """Subgraph induced by ``arcs``: those arcs and their endpoints only."""
        keep = set(arcs)
        unknown = keep - self._arcset
        if unknown:
            raise GraphDomainError(f"unknown arc ids {sorted(unknown)}")
        tail, head = self._tail, self._head
        vs = {tail[a] for a in keep} | {head[a] for a in keep}
        return MultiDigraph._view(self, keep, vs)

    def vertex_subgraph(self, vertices: Iterable[int]) -> MultiDigraph:
        """Subgraph induced by ``vertices``."""
        keep = set(vertices)
        return self.remove_vertices(self._vset - keep)

    # -- dunder --------------------------------------------------------

    def __repr__(self) -> str:
        return f"MultiDigraph(|V|={self.n_vertices}, |E|={self.n_arcs})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiDigraph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._arcs == other._arcs
            and all(
                self._tail[a] == other._tail[a] and self._head[a] == other._head[a]
                for a in self._arcs
            )
        )

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self.arc_pairs())))


# ---------------------------------------------------------------------------
# weights


def arc_weight(weights: ArcWeights | None, a: int) -> float:
    return 1.0 if weights is None else weights[a]


def total_weight(weights: Mapping[int, float] | None, ids: Iterable[int]) -> float:
    """Sum of weights over ``ids``; ``None`` means unit weights."""
    if weights is None:
        return float(sum(1 for _ in ids))
    return float(sum(weights[i] for i in ids))


def unit_weights(ids: Iterable[int]) -> dict[int, float]:
    return {i: 1.0 for i in ids}


def check_weights(weights: Mapping[int, float] | None, ids: Iterable[int], what: str = "arc") -> None:
    """Raise unless every id has a weight that is ``> 0`` (``INFINITE`` allowed)."""
    if weights is None:
        return
    for i in ids:
        if i not in weights:
            raise GraphDomainError(f"missing weight for {what} {i}")
        w = weights[i]
        if not w > 0 or math.isnan(w):
            raise GraphDomainError(f"{what} weight must be positive, got {w!r} for {what} {i}")


# ---------------------------------------------------------------------------
# elementary services


def parallel_bundle(g: MultiDigraph, e: int) -> frozenset[int]:
    """All arcs with the same tail and head as ``e`` (``e`` included)."""
    t, h = g.endpoints(e)
    return frozenset(a for a in g.out_arcs(t) if g._head[a] == h)


def antiparallel_bundle(g: MultiDigraph, e: int) -> frozenset[int]:
    """All arcs running from ``head(e)`` back to ``tail(e)``."""
    t, h = g.endpoints(e)
    return frozenset(a for a in g.out_arcs(h) if g._head[a] == t)


def topological_order(g: MultiDigraph) -> list[int] | None:
    """Kahn's algorithm; ``None`` when the graph has a cycle (loops included)."""
    out, inn = g._adjacency()
    head = g._head
    indeg = {v: len(inn[v]) for v in g.vertices}
    queue = deque(v for v in g.vertices if indeg[v] == 0)
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for a in out[v]:
            w = head[a]
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return order if len(order) == g.n_vertices else None


def is_acyclic(g: MultiDigraph) -> bool:
    """True iff ``g`` has no directed cycle; a loop counts as a cycle."""
    return topological_order(g) is not None


# below this many arcs a pure-Python Tarjan beats the sparse-matrix setup cost
_SPARSE_THRESHOLD = 1500


def _tarjan(n: int, succ: list[list[int]]) -> list[int]:
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp = [-1] * n
    count = 0
    clock = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = clock
        clock += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]
        while work:
            v, i = work[-1]
            sv = succ[v]
            if i < len(sv):
                work[-1] = (v, i + 1)
                w = sv[i]
                if index[w] == -1:
                    index[w] = low[w] = clock
                    clock += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = count
                    if w == v:
                        break
                count += 1
    return comp


def scc_local(n: int, tails: Sequence[int], heads: Sequence[int]) -> list[int]:
    """Component label per vertex of the graph ``0..n-1`` with arcs ``tails[i] -> heads[i]``."""
    if n == 0:
        return []
    if len(tails) > _SPARSE_THRESHOLD:
        mat = csr_matrix((np.ones(len(tails), dtype=np.int8), (np.asarray(tails), np.asarray(heads))),
                         shape=(n, n))
        return connected_components(mat, directed=True, connection="strong")[1].tolist()
    succ: list[list[int]] = [[] for _ in range(n)]
    for t, h in zip(tails, heads):
        succ[t].append(h)
    return _tarjan(n, succ)


def scc_labels(g: MultiDigraph) -> dict[int, int]:
    """Map vertex -> component label (labels are arbitrary but deterministic)."""
    verts = g.vertices
    if not verts:
        return {}
    index = {v: i for i, v in enumerate(verts)}
    tail, head = g._tail, g._head
    arcs = g.arcs
    labels = scc_local(len(verts), [index[tail[a]] for a in arcs], [index[head[a]] for a in arcs])
    return dict(zip(verts, labels))


def strongly_connected_components(g: MultiDigraph) -> list[frozenset[int]]:
    """Partition of the vertices into maximal mutually reachable sets.

    Components are ordered by their smallest vertex id.
    """
    groups: dict[int, list[int]] = {}
    for v, lab in scc_labels(g).items():
        groups.setdefault(lab, []).append(v)
    comps = [frozenset(vs) for vs in groups.values()]
    comps.sort(key=min)
    return comps


def cyclic_arcs(g: MultiDigraph) -> list[int]:
    """Arcs lying on at least one cycle: loops and arcs inside a nontrivial SCC."""
    labels = scc_labels(g)
    tail, head = g._tail, g._head
    return [a for a in g.arcs if labels[tail[a]] == labels[head[a]]]


def reaches(g: MultiDigraph, s: int, t: int, forbidden_arcs: Iterable[int] = ()) -> bool:
    """Is there a directed ``s``-``t`` path avoiding ``forbidden_arcs``?

    ``s == t`` is reachable through the empty path.
    """
    g._check_vertex(s)
    g._check_vertex(t)
    if s == t:
        return True
    banned = set(forbidden_arcs)
    out = g._adjacency()[0]
    head = g._head
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        for a in out[v]:
            if a in banned:
                continue
            w = head[a]
            if w == t:
                return True
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def verify_feedback(g: MultiDigraph, arcs: Iterable[int]) -> bool:
    """True iff deleting ``arcs`` leaves ``g`` acyclic."""
    return is_acyclic(g.remove_arcs(arcs))


def verify_feedback_vertices(g: MultiDigraph, vertices: Iterable[int]) -> bool:
    return is_acyclic(g.remove_vertices(vertices))
